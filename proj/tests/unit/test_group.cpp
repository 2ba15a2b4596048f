#include <set>

#include "doctest.h"

#include "asdim/generate.hpp"
#include "asdim/group.hpp"

using namespace asdim;

namespace {
  // Closure of a generator set by repeated multiplication, written
  // independently of generated_subgroup.
  std::set<Element> closure_oracle(FiniteGroup const&          g,
                                   std::vector<Element> const& gens) {
    std::set<Element> h{g.identity()};
    h.insert(gens.begin(), gens.end());
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<Element> current(h.begin(), h.end());
      for (auto a : current) {
        for (auto b : current) {
          grew = h.insert(g.mul(a, b)).second || grew;
        }
      }
    }
    return h;
  }
}  // namespace

TEST_CASE("group tables are validated") {
  CHECK(validate_group_table(2, {0, 1, 1, 0}).ok());
  CHECK(validate_group_table(2, {0, 1, 1, 1}).contains("inverse"));
  CHECK(validate_group_table(2, {0, 0, 0, 0}).contains("identity"));
  CHECK(validate_group_table(2, {0, 1, 1, 2}).contains("closure"));
  // Left-zero semigroup: a*b = a is associative but has no identity.
  CHECK(validate_group_table(2, {0, 0, 1, 1}).contains("identity"));
  CHECK_THROWS_AS(FiniteGroup({"a", "b"}, {0, 0, 0, 0}), ValidationError);
}

TEST_CASE("standard groups") {
  auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  auto d4 = FiniteGroup::dihedral(4);
  CHECK(d4.order() == 8);
  CHECK_FALSE(d4.is_abelian());
  auto z6 = FiniteGroup::cyclic(6);
  CHECK(z6.is_abelian());
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.inverse(2) == 4);
}

TEST_CASE("generated_subgroup") {
  auto z4 = FiniteGroup::cyclic(4);
  CHECK(generated_subgroup(z4, std::vector<Element>{}) == std::vector<Element>{0});
  CHECK(generated_subgroup(z4, std::vector<Element>{2}) == std::vector<Element>{0, 2});

  auto s3 = FiniteGroup::symmetric(3);
  auto t  = s3.index_of("102");  // a transposition
  auto h  = generated_subgroup(s3, std::vector<Element>{t});
  CHECK(h.size() == 2);
  auto oracle = closure_oracle(s3, {t});
  CHECK(std::vector<Element>(oracle.begin(), oracle.end()) == h);

  // Every pair of generators in every small group agrees with the oracle.
  for (auto const& g : small_groups(6)) {
    for (Element a = 0; a < g.order(); ++a) {
      for (Element b = 0; b < g.order(); ++b) {
        auto sub = generated_subgroup(g, std::vector<Element>{a, b});
        auto ref = closure_oracle(g, {a, b});
        CHECK(std::vector<Element>(ref.begin(), ref.end()) == sub);
        CHECK(is_subgroup(g, sub));
      }
    }
  }
}

TEST_CASE("coset_representatives") {
  auto z4 = FiniteGroup::cyclic(4);
  CHECK(coset_representatives(z4, z4.all_elements()) == std::vector<Element>{0});
  CHECK(coset_representatives(z4, std::vector<Element>{0}) == z4.all_elements());
  CHECK(coset_representatives(z4, std::vector<Element>{0, 2}) == std::vector<Element>{0, 1});
  CHECK_THROWS_AS(coset_representatives(z4, std::vector<Element>{0, 1}),
                  ValidationError);

  for (auto const& g : small_groups(6)) {
    for (auto const& h : all_subgroups(g)) {
      CHECK(coset_representatives(g, h).size() * h.size() == g.order());
    }
  }
}

TEST_CASE("find_isomorphism") {
  auto z4 = FiniteGroup::cyclic(4);
  // Z/4 relabelled by the permutation 0->0, 1->3, 2->1, 3->2.
  std::vector<Element> relabel{0, 3, 1, 2};
  std::vector<Element> table(16);
  std::vector<std::string> names(4);
  for (Element a = 0; a < 4; ++a) {
    names[relabel[a]] = "x" + std::to_string(a);
    for (Element b = 0; b < 4; ++b) {
      table[relabel[a] * 4 + relabel[b]] = relabel[z4.mul(a, b)];
    }
  }
  FiniteGroup other(names, table);
  auto        phi = find_isomorphism(z4, other);
  REQUIRE(phi);
  for (Element a = 0; a < 4; ++a) {
    for (Element b = 0; b < 4; ++b) {
      CHECK((*phi)[z4.mul(a, b)] == other.mul((*phi)[a], (*phi)[b]));
    }
  }

  std::vector<FiniteGroup> klein_parts{FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)};
  auto klein = direct_sum(klein_parts).group;
  CHECK_FALSE(find_isomorphism(z4, klein));
  CHECK_FALSE(find_isomorphism(FiniteGroup::symmetric(3), FiniteGroup::cyclic(6)));
  CHECK(find_isomorphism(FiniteGroup::symmetric(3), FiniteGroup::dihedral(3)));
  CHECK_THROWS_AS(find_isomorphism(FiniteGroup::symmetric(4),
                                   FiniteGroup::symmetric(4)),
                  ValidationError);
}

TEST_CASE("direct_sum") {
  std::vector<FiniteGroup> one{FiniteGroup::symmetric(3)};
  CHECK(find_isomorphism(direct_sum(one).group, FiniteGroup::symmetric(3)));

  std::vector<FiniteGroup> klein_parts{FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)};
  auto klein = direct_sum(klein_parts);
  CHECK(klein.group.order() == 4);
  for (Element a = 0; a < 4; ++a) {
    if (a != klein.group.identity()) {
      CHECK(klein.group.element_order(a) == 2);
    }
  }

  std::vector<FiniteGroup> z2z3{FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)};
  auto sum = direct_sum(z2z3);
  CHECK(sum.group.order() == 6);
  CHECK(sum.group.is_abelian());
  bool has_order_six = false;
  for (Element a = 0; a < 6; ++a) {
    has_order_six = has_order_six || sum.group.element_order(a) == 6;
  }
  CHECK(has_order_six);
  // Injections are homomorphisms and the components commute.
  for (std::size_t j = 0; j < 2; ++j) {
    auto const& inj = sum.injections[j];
    for (Element a = 0; a < z2z3[j].order(); ++a) {
      CHECK(sum.component(inj[a], j) == a);
      for (Element b = 0; b < z2z3[j].order(); ++b) {
        CHECK(inj[z2z3[j].mul(a, b)] == sum.group.mul(inj[a], inj[b]));
      }
    }
  }

  std::vector<FiniteGroup> too_big{FiniteGroup::cyclic(8), FiniteGroup::cyclic(9)};
  CHECK_THROWS_AS(direct_sum(too_big), ValidationError);
}
