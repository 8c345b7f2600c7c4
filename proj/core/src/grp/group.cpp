#include "yetter/grp/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <random>
#include <stdexcept>

#include "yetter/limits.hpp"

namespace yetter::grp {

GroupPtr FiniteGroup::from_table(std::size_t order, std::span<const Element> table, Element identity,
                                 std::vector<Element> generators, std::vector<std::string> labels,
                                 Validation validation) {
  if (order == 0) throw PreconditionError("group order must be positive");
  if (order > limits().group_order_cap) {
    throw CapExceeded("group order " + std::to_string(order) + " exceeds cap " +
                      std::to_string(limits().group_order_cap));
  }
  if (table.size() != order * order) throw PreconditionError("multiplication table has wrong size");
  if (identity >= order) throw PreconditionError("identity index out of range");
  if (!labels.empty() && labels.size() != order) throw PreconditionError("label count differs from order");

  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->order_ = order;
  g->identity_ = identity;
  g->table_.resize(order * order);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= order) throw PreconditionError("multiplication table entry out of range");
    g->table_[i] = static_cast<std::uint16_t>(table[i]);
  }
  for (Element a = 0; a < order; ++a) {
    if (g->mul(identity, a) != a || g->mul(a, identity) != a) {
      throw PreconditionError("declared identity is not neutral for element " + std::to_string(a));
    }
  }
  // Each row of a group table is a permutation; the inverse is where the identity lands.
  g->inverse_.assign(order, static_cast<Element>(order));
  for (Element a = 0; a < order; ++a) {
    std::vector<bool> seen(order, false);
    for (Element b = 0; b < order; ++b) {
      const Element p = g->mul(a, b);
      if (seen[p]) throw PreconditionError("row " + std::to_string(a) + " is not a permutation");
      seen[p] = true;
      if (p == identity) g->inverse_[a] = b;
    }
  }
  for (Element a = 0; a < order; ++a) {
    if (g->mul(g->inverse_[a], a) != identity) {
      throw PreconditionError("element " + std::to_string(a) + " has no two-sided inverse");
    }
  }

  const bool exhaustive = validation == Validation::Exhaustive ||
                          (validation == Validation::Auto && order <= 1000);
  auto assoc_fail = [&](Element a, Element b, Element c) {
    return g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c));
  };
  if (exhaustive) {
    for (Element a = 0; a < order; ++a)
      for (Element b = 0; b < order; ++b)
        for (Element c = 0; c < order; ++c)
          if (assoc_fail(a, b, c)) throw PreconditionError("multiplication is not associative");
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(order - 1));
    for (int t = 0; t < 20000; ++t) {
      if (assoc_fail(pick(rng), pick(rng), pick(rng))) {
        throw PreconditionError("multiplication is not associative");
      }
    }
  }

  if (generators.empty()) {
    std::vector<bool> reached(order, false);
    reached[identity] = true;
    std::size_t count = 1;
    for (Element a = 0; a < order && count < order; ++a) {
      if (reached[a]) continue;
      generators.push_back(a);
      const auto sub = closure(*g, generators);
      std::fill(reached.begin(), reached.end(), false);
      for (Element s : sub) reached[s] = true;
      count = sub.size();
    }
  }
  for (Element s : generators) {
    if (s >= order) throw PreconditionError("generator index out of range");
  }
  g->generators_ = std::move(generators);
  if (closure(*g, g->generators_).size() != order) {
    throw PreconditionError("generators do not generate the group");
  }
  g->labels_ = std::move(labels);
  return g;
}

Element FiniteGroup::pow(Element a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element result = identity_;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t n = 1;
  for (Element p = a; p != identity_; p = mul(p, a)) ++n;
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (Element a : generators_)
    for (Element b : generators_)
      if (!commute(a, b)) return false;
  return true;
}

std::string FiniteGroup::label(Element a) const {
  if (a >= order_) throw std::out_of_range("element index out of range");
  if (labels_.empty()) return "#" + std::to_string(a);
  return labels_[a];
}

std::optional<Element> FiniteGroup::find_label(std::string_view text) const {
  if (!text.empty() && text.front() == '#') {
    Element v = 0;
    const auto* first = text.data() + 1;
    const auto* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc() && ptr == last && v < order_) return v;
    return std::nullopt;
  }
  for (Element a = 0; a < labels_.size(); ++a) {
    if (labels_[a] == text) return a;
  }
  return std::nullopt;
}

GroupPtr FiniteGroup::relabeled(std::span<const Element> perm) const {
  if (perm.size() != order_) throw PreconditionError("relabeling permutation has wrong size");
  std::vector<Element> table(order_ * order_);
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) table[perm[a] * order_ + perm[b]] = perm[mul(a, b)];
  std::vector<Element> gens;
  for (Element s : generators_) gens.push_back(perm[s]);
  std::vector<std::string> labels;
  if (!labels_.empty()) {
    labels.resize(order_);
    for (Element a = 0; a < order_; ++a) labels[perm[a]] = labels_[a];
  }
  return from_table(order_, table, perm[identity_], std::move(gens), std::move(labels),
                    Validation::Sampled);
}

std::vector<Element> FiniteGroup::table() const { return {table_.begin(), table_.end()}; }

std::vector<Element> closure(const FiniteGroup& g, std::span<const Element> seeds) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Element> out{g.identity()};
  seen[g.identity()] = true;
  std::deque<Element> queue{g.identity()};
  while (!queue.empty()) {
    const Element a = queue.front();
    queue.pop_front();
    for (Element s : seeds) {
      const Element p = g.mul(a, s);
      if (!seen[p]) {
        seen[p] = true;
        out.push_back(p);
        queue.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace yetter::grp
