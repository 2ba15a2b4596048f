#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asdim/errors.hpp"

namespace asdim {

  using Element = std::uint32_t;

  // Lists violations of closure (entries out of range), associativity,
  // existence of a two-sided identity and of inverses.
  ValidationReport validate_group_table(std::size_t                 order,
                                        std::vector<Element> const& table);

  // A finite group given by its full multiplication table. Elements are the
  // indices 0..order-1; mul(a, b) is the product "a then b" in the usual
  // left-to-right reading of a*b.
  class FiniteGroup {
   public:
    // Throws ValidationError unless the table defines a group.
    FiniteGroup(std::vector<std::string> names, std::vector<Element> table);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::size_t n);
    // Symmetries of the regular n-gon, order 2n. Element k < n is rotation
    // by k, element n + k is reflection composed with rotation by k.
    static FiniteGroup dihedral(std::size_t n);
    // Permutations of {0..n-1} in lexicographic order, composition
    // (a*b)(i) = a(b(i)). Requires n <= 5.
    static FiniteGroup symmetric(std::size_t n);

    std::size_t order() const noexcept { return _names.size(); }

    Element mul(Element a, Element b) const {
      return _table[static_cast<std::size_t>(a) * order() + b];
    }

    Element identity() const noexcept { return _identity; }
    Element inverse(Element a) const { return _inverse.at(a); }

    std::string const&              name(Element a) const { return _names.at(a); }
    std::vector<std::string> const& names() const noexcept { return _names; }
    std::vector<Element> const&     table() const noexcept { return _table; }

    // Throws ResolutionError for unknown names.
    Element index_of(std::string const& name) const;

    std::size_t element_order(Element a) const;
    bool        is_abelian() const;

    std::vector<Element> all_elements() const;

    friend bool operator==(FiniteGroup const& a, FiniteGroup const& b) {
      return a._names == b._names && a._table == b._table;
    }

   private:
    std::vector<std::string> _names;
    std::vector<Element>     _table;
    std::vector<Element>     _inverse;
    Element                  _identity = 0;
  };

  // Smallest subgroup containing `generators`, sorted.
  std::vector<Element> generated_subgroup(FiniteGroup const&        g,
                                          std::span<Element const> generators);

  bool is_subgroup(FiniteGroup const& g, std::span<Element const> h);

  // One representative per left coset fH, the smallest element index of each
  // coset, in increasing order. Throws ValidationError if h is not a
  // subgroup.
  std::vector<Element> coset_representatives(FiniteGroup const&        g,
                                             std::span<Element const> h);

  // A bijection phi: g1 -> g2 (phi[a] is the image of a) with
  // phi(ab) = phi(a)phi(b), or nullopt. Throws ValidationError if an order
  // exceeds `order_cap`.
  std::optional<std::vector<Element>>
  find_isomorphism(FiniteGroup const& g1,
                   FiniteGroup const& g2,
                   std::size_t        order_cap = 12);

  struct DirectSum {
    FiniteGroup group;
    // Component orders; elements are encoded in mixed radix with component 0
    // least significant.
    std::vector<std::size_t> radices;
    // injections[j][a] is the element of `group` with a in slot j and the
    // identity elsewhere.
    std::vector<std::vector<Element>> injections;

    // Slot j of element h.
    Element component(Element h, std::size_t j) const;
  };

  // Throws ValidationError if the product order exceeds `order_cap` or the
  // list is empty.
  DirectSum direct_sum(std::span<FiniteGroup const> groups,
                       std::size_t                  order_cap = 64);

}  // namespace asdim
