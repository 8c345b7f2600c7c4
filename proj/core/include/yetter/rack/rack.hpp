#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "yetter/grp/group.hpp"
#include "yetter/grp/subgroup.hpp"

namespace yetter::rack {

using grp::Element;
using grp::GroupPtr;

/// A finite rack on positions 0..size-1. When built from a group, position i
/// stands for the group element elements()[i] and x ▷ y = x y x^-1.
class Rack {
 public:
  /// table[x * n + y] = x ▷ y. Throws PreconditionError if the rack axioms fail.
  static Rack from_table(std::size_t n, std::vector<std::uint32_t> table);
  /// The conjugation rack on a conjugation-stable subset of a group.
  static Rack conjugation(const GroupPtr& g, std::vector<Element> subset);
  static Rack conjugation(const grp::ConjugacyClass& cls);

  std::size_t size() const { return size_; }
  std::uint32_t op(std::uint32_t x, std::uint32_t y) const { return table_[x * size_ + y]; }
  const std::vector<std::uint32_t>& table() const { return table_; }

  bool has_parent() const { return parent_ != nullptr; }
  const GroupPtr& parent() const { return parent_; }
  /// Parent elements by position; empty for abstract racks.
  const std::vector<Element>& elements() const { return elements_; }
  std::optional<std::uint32_t> position(Element g) const;

  /// Self-distributivity and bijectivity of every left translation;
  /// exhaustive for size <= 200, fixed-seed sampled above.
  bool satisfies_axioms() const;

 private:
  Rack() = default;

  std::size_t size_ = 0;
  std::vector<std::uint32_t> table_;
  GroupPtr parent_;
  std::vector<Element> elements_;
};

Rack conjugation_rack(const grp::ConjugacyClass& cls);
bool is_abelian_rack(const Rack& r);

/// Inn X: the permutation group generated by the left translations.
/// Group element i acts on rack positions by perms[i]; phi[x] is the element
/// for the translation by x. Multiplication is composition (a*b applies b first).
struct InnerGroup {
  GroupPtr group;
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<Element> phi;
};
/// Throws CapExceeded above the inner-group cap.
InnerGroup inner_group(const Rack& r);

/// Checks f(x ▷ y) = f(x) ▷ f(y).
bool is_rack_morphism(const Rack& from, const Rack& to, std::span<const std::uint32_t> f);

/// Result of extending a surjective rack morphism f: X -> Y to the map
/// Inn X -> Inn Y sending phi_x to phi_f(x).
struct InnerExtension {
  bool well_defined = false;
  bool surjective = false;
  std::vector<Element> map;  // Inn X element -> Inn Y element, when well defined
  InnerGroup source, target;
};
InnerExtension extend_to_inner(const Rack& from, const Rack& to, std::span<const std::uint32_t> f);

}  // namespace yetter::rack
