#include "asdim/group.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace asdim {

  ValidationReport validate_group_table(std::size_t                 n,
                                        std::vector<Element> const& table) {
    ValidationReport report;
    if (n == 0) {
      report.add("empty-group", {});
      return report;
    }
    if (table.size() != n * n) {
      report.add("table-shape", {table.size()},
                 "expected " + std::to_string(n * n) + " entries");
      return report;
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= n) {
        report.add("closure", {i / n, i % n},
                   "product " + std::to_string(table[i]) + " out of range");
      }
    }
    if (!report.ok()) {
      return report;
    }
    auto mul = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            report.add("associativity", {a, b, c});
          }
        }
      }
    }
    std::optional<std::size_t> identity;
    for (std::size_t e = 0; e < n && !identity; ++e) {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        ok = mul(e, a) == a && mul(a, e) == a;
      }
      if (ok) {
        identity = e;
      }
    }
    if (!identity) {
      report.add("identity", {}, "no two-sided identity");
      return report;
    }
    for (std::size_t a = 0; a < n; ++a) {
      bool found = false;
      for (std::size_t b = 0; b < n && !found; ++b) {
        found = mul(a, b) == *identity && mul(b, a) == *identity;
      }
      if (!found) {
        report.add("inverse", {a});
      }
    }
    return report;
  }

  FiniteGroup::FiniteGroup(std::vector<std::string> names,
                           std::vector<Element>     table)
      : _names(std::move(names)), _table(std::move(table)) {
    validate_group_table(_names.size(), _table)
        .throw_if_failed("invalid group table");
    std::size_t const n = order();
    for (Element e = 0; e < n; ++e) {
      bool ok = true;
      for (Element a = 0; a < n && ok; ++a) {
        ok = mul(e, a) == a;
      }
      if (ok) {
        _identity = e;
        break;
      }
    }
    _inverse.resize(n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (mul(a, b) == _identity) {
          _inverse[a] = b;
          break;
        }
      }
    }
  }

  FiniteGroup FiniteGroup::trivial() {
    return cyclic(1);
  }

  FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) {
      throw ValidationError("cyclic group of order 0");
    }
    std::vector<std::string> names;
    std::vector<Element>     table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      names.push_back(std::to_string(a));
      for (std::size_t b = 0; b < n; ++b) {
        table[a * n + b] = static_cast<Element>((a + b) % n);
      }
    }
    return FiniteGroup(std::move(names), std::move(table));
  }

  FiniteGroup FiniteGroup::dihedral(std::size_t n) {
    if (n == 0) {
      throw ValidationError("dihedral group of a 0-gon");
    }
    // (s, k) acts on Z/n by x -> (-1)^s x + k.
    std::size_t const        order = 2 * n;
    std::vector<std::string> names;
    std::vector<Element>     table(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      names.push_back(a < n ? "r" + std::to_string(a)
                            : "s" + std::to_string(a - n));
    }
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        std::size_t sa = a / n, ka = a % n, sb = b / n, kb = b % n;
        // (a*b)(x) = a(b(x)) = (-1)^sa ((-1)^sb x + kb) + ka
        std::size_t s = sa ^ sb;
        std::size_t k = (sa == 0 ? kb : (n - kb) % n);
        k             = (k + ka) % n;
        table[a * order + b] = static_cast<Element>(s * n + k);
      }
    }
    return FiniteGroup(std::move(names), std::move(table));
  }

  FiniteGroup FiniteGroup::symmetric(std::size_t n) {
    if (n == 0 || n > 5) {
      throw ValidationError("symmetric group degree must be in 1..5");
    }
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t>              p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    std::vector<std::string> names;
    for (auto const& q : perms) {
      std::string name;
      for (auto i : q) {
        name += std::to_string(i);
      }
      names.push_back(name);
    }
    std::size_t const    order = perms.size();
    std::vector<Element> table(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      for (std::size_t b = 0; b < order; ++b) {
        std::vector<std::size_t> c(n);
        for (std::size_t i = 0; i < n; ++i) {
          c[i] = perms[a][perms[b][i]];
        }
        auto it = std::lower_bound(perms.begin(), perms.end(), c);
        table[a * order + b] = static_cast<Element>(it - perms.begin());
      }
    }
    return FiniteGroup(std::move(names), std::move(table));
  }

  Element FiniteGroup::index_of(std::string const& name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      throw ResolutionError("unknown group element \"" + name + "\"");
    }
    return static_cast<Element>(it - _names.begin());
  }

  std::size_t FiniteGroup::element_order(Element a) const {
    std::size_t k = 1;
    Element     x = a;
    while (x != _identity) {
      x = mul(x, a);
      ++k;
    }
    return k;
  }

  bool FiniteGroup::is_abelian() const {
    for (Element a = 0; a < order(); ++a) {
      for (Element b = a + 1; b < order(); ++b) {
        if (mul(a, b) != mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Element> FiniteGroup::all_elements() const {
    std::vector<Element> result(order());
    std::iota(result.begin(), result.end(), Element(0));
    return result;
  }

  std::vector<Element> generated_subgroup(FiniteGroup const&       g,
                                          std::span<Element const> generators) {
    std::vector<bool>    in(g.order(), false);
    std::vector<Element> frontier{g.identity()};
    in[g.identity()] = true;
    // In a finite group closure under right multiplication by the
    // generators already yields inverses.
    while (!frontier.empty()) {
      Element a = frontier.back();
      frontier.pop_back();
      for (auto s : generators) {
        Element b = g.mul(a, s);
        if (!in[b]) {
          in[b] = true;
          frontier.push_back(b);
        }
      }
    }
    std::vector<Element> result;
    for (Element a = 0; a < g.order(); ++a) {
      if (in[a]) {
        result.push_back(a);
      }
    }
    return result;
  }

  bool is_subgroup(FiniteGroup const& g, std::span<Element const> h) {
    if (h.empty()) {
      return false;
    }
    std::vector<bool> in(g.order(), false);
    for (auto a : h) {
      if (a >= g.order()) {
        return false;
      }
      in[a] = true;
    }
    if (!in[g.identity()]) {
      return false;
    }
    for (auto a : h) {
      if (!in[g.inverse(a)]) {
        return false;
      }
      for (auto b : h) {
        if (!in[g.mul(a, b)]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Element> coset_representatives(FiniteGroup const&       g,
                                             std::span<Element const> h) {
    if (!is_subgroup(g, h)) {
      throw ValidationError("coset_representatives: not a subgroup");
    }
    std::vector<bool>    seen(g.order(), false);
    std::vector<Element> reps;
    for (Element f = 0; f < g.order(); ++f) {
      if (seen[f]) {
        continue;
      }
      reps.push_back(f);
      for (auto x : h) {
        seen[g.mul(f, x)] = true;
      }
    }
    return reps;
  }

  namespace {
    std::vector<std::size_t> order_profile(FiniteGroup const& g) {
      std::vector<std::size_t> result;
      for (Element a = 0; a < g.order(); ++a) {
        result.push_back(g.element_order(a));
      }
      std::sort(result.begin(), result.end());
      return result;
    }

    // Extends generator images to a map on all of g1 by walking the Cayley
    // graph; nullopt on an inconsistency or a non-bijective result.
    std::optional<std::vector<Element>>
    extend_images(FiniteGroup const&          g1,
                  FiniteGroup const&          g2,
                  std::vector<Element> const& gens,
                  std::vector<Element> const& images) {
      constexpr Element    unset = static_cast<Element>(-1);
      std::vector<Element> phi(g1.order(), unset);
      phi[g1.identity()] = g2.identity();
      std::vector<Element> frontier{g1.identity()};
      while (!frontier.empty()) {
        Element a = frontier.back();
        frontier.pop_back();
        for (std::size_t i = 0; i < gens.size(); ++i) {
          Element b     = g1.mul(a, gens[i]);
          Element image = g2.mul(phi[a], images[i]);
          if (phi[b] == unset) {
            phi[b] = image;
            frontier.push_back(b);
          } else if (phi[b] != image) {
            return std::nullopt;
          }
        }
      }
      std::vector<bool> hit(g2.order(), false);
      for (auto y : phi) {
        if (y == unset || hit[y]) {
          return std::nullopt;
        }
        hit[y] = true;
      }
      for (Element a = 0; a < g1.order(); ++a) {
        for (Element b = 0; b < g1.order(); ++b) {
          if (phi[g1.mul(a, b)] != g2.mul(phi[a], phi[b])) {
            return std::nullopt;
          }
        }
      }
      return phi;
    }

    bool assign_images(FiniteGroup const&                   g1,
                       FiniteGroup const&                   g2,
                       std::vector<Element> const&          gens,
                       std::vector<Element>&                images,
                       std::optional<std::vector<Element>>& result) {
      if (images.size() == gens.size()) {
        result = extend_images(g1, g2, gens, images);
        return result.has_value();
      }
      std::size_t const wanted = g1.element_order(gens[images.size()]);
      for (Element y = 0; y < g2.order(); ++y) {
        if (g2.element_order(y) != wanted) {
          continue;
        }
        images.push_back(y);
        if (assign_images(g1, g2, gens, images, result)) {
          return true;
        }
        images.pop_back();
      }
      return false;
    }
  }  // namespace

  std::optional<std::vector<Element>>
  find_isomorphism(FiniteGroup const& g1,
                   FiniteGroup const& g2,
                   std::size_t        order_cap) {
    if (g1.order() > order_cap || g2.order() > order_cap) {
      throw ValidationError("find_isomorphism: group order exceeds cap "
                            + std::to_string(order_cap));
    }
    if (g1.order() != g2.order() || g1.is_abelian() != g2.is_abelian()
        || order_profile(g1) != order_profile(g2)) {
      return std::nullopt;
    }
    // Greedy generating set, largest element orders first.
    std::vector<Element> by_order = g1.all_elements();
    std::stable_sort(by_order.begin(), by_order.end(),
                     [&g1](Element a, Element b) {
                       return g1.element_order(a) > g1.element_order(b);
                     });
    std::vector<Element> gens;
    std::vector<Element> span_so_far{g1.identity()};
    for (auto a : by_order) {
      if (!std::binary_search(span_so_far.begin(), span_so_far.end(), a)) {
        gens.push_back(a);
        span_so_far = generated_subgroup(g1, gens);
      }
    }
    std::vector<Element>                images;
    std::optional<std::vector<Element>> result;
    assign_images(g1, g2, gens, images, result);
    return result;
  }

  Element DirectSum::component(Element h, std::size_t j) const {
    std::size_t value = h;
    for (std::size_t i = 0; i < j; ++i) {
      value /= radices[i];
    }
    return static_cast<Element>(value % radices[j]);
  }

  DirectSum direct_sum(std::span<FiniteGroup const> groups,
                       std::size_t                  order_cap) {
    if (groups.empty()) {
      throw ValidationError("direct_sum of an empty list");
    }
    std::size_t order = 1;
    for (auto const& g : groups) {
      order *= g.order();
      if (order > order_cap) {
        throw ValidationError("direct_sum: order exceeds cap "
                              + std::to_string(order_cap));
      }
    }
    std::vector<std::size_t> radices;
    for (auto const& g : groups) {
      radices.push_back(g.order());
    }
    auto decode = [&](std::size_t h) {
      std::vector<Element> slots;
      for (auto r : radices) {
        slots.push_back(static_cast<Element>(h % r));
        h /= r;
      }
      return slots;
    };
    auto encode = [&](std::vector<Element> const& slots) {
      std::size_t h = 0;
      for (std::size_t j = radices.size(); j-- > 0;) {
        h = h * radices[j] + slots[j];
      }
      return static_cast<Element>(h);
    };

    std::vector<std::string> names;
    std::vector<Element>     table(order * order);
    for (std::size_t a = 0; a < order; ++a) {
      auto        sa   = decode(a);
      std::string name = "(";
      for (std::size_t j = 0; j < sa.size(); ++j) {
        name += (j == 0 ? "" : ",") + groups[j].name(sa[j]);
      }
      names.push_back(name + ")");
      for (std::size_t b = 0; b < order; ++b) {
        auto                 sb = decode(b);
        std::vector<Element> sc(sa.size());
        for (std::size_t j = 0; j < sa.size(); ++j) {
          sc[j] = groups[j].mul(sa[j], sb[j]);
        }
        table[a * order + b] = encode(sc);
      }
    }

    std::vector<std::vector<Element>> injections;
    for (std::size_t j = 0; j < groups.size(); ++j) {
      std::vector<Element> inj;
      for (Element a = 0; a < groups[j].order(); ++a) {
        std::vector<Element> slots;
        for (auto const& g : groups) {
          slots.push_back(g.identity());
        }
        slots[j] = a;
        inj.push_back(encode(slots));
      }
      injections.push_back(std::move(inj));
    }
    return DirectSum{FiniteGroup(std::move(names), std::move(table)),
                     std::move(radices), std::move(injections)};
  }

}  // namespace asdim
