#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace yetter::grp {

using Element = std::uint32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

enum class Validation {
  Auto,        // exhaustive associativity for order <= 1000, sampled above
  Exhaustive,
  Sampled,     // fixed-seed sample of triples; used by catalog constructors
};

/// A finite group stored as its full multiplication table. Elements are the
/// indices 0..order-1. Immutable once built.
class FiniteGroup {
 public:
  /// table is row-major: table[a * order + b] = a*b. An empty generator list
  /// asks for a greedy generating set (smallest indices first).
  static GroupPtr from_table(std::size_t order, std::span<const Element> table, Element identity,
                             std::vector<Element> generators, std::vector<std::string> labels = {},
                             Validation validation = Validation::Auto);

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }
  const std::vector<Element>& generators() const { return generators_; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }
  /// x ▷ y = x y x^-1
  Element conj(Element x, Element y) const { return mul(mul(x, y), inv(x)); }
  /// [x, y] = x y x^-1 y^-1
  Element commutator(Element x, Element y) const { return mul(mul(x, y), mul(inv(x), inv(y))); }
  Element pow(Element a, std::int64_t k) const;
  std::size_t element_order(Element a) const;
  bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
  bool is_abelian() const;

  bool has_labels() const { return !labels_.empty(); }
  /// The catalog label, or "#i" for unlabeled groups.
  std::string label(Element a) const;
  /// Accepts a label or "#i".
  std::optional<Element> find_label(std::string_view text) const;
  const std::vector<std::string>& labels() const { return labels_; }

  /// The same group with element i renamed perm[i]; generators and labels follow.
  GroupPtr relabeled(std::span<const Element> perm) const;

  /// Row-major table, expanded to Element.
  std::vector<Element> table() const;

 private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inverse_;
  std::vector<Element> generators_;
  std::vector<std::string> labels_;
};

/// Elements reachable from the seeds by right multiplication with the seeds.
std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> seeds);

}  // namespace yetter::grp
