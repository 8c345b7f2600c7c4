#pragma once

#include <optional>
#include <span>
#include <vector>

#include "yetter/grp/group.hpp"

namespace yetter::grp {

/// A subgroup, held as a sorted member list plus a membership mask.
class Subgroup {
 public:
  static Subgroup generated_by(GroupPtr g, std::span<const Element> gens);
  /// Checks closure; throws PreconditionError if members do not form a subgroup.
  static Subgroup from_members(GroupPtr g, std::vector<Element> members);
  static Subgroup whole(GroupPtr g);
  static Subgroup trivial(GroupPtr g);

  const GroupPtr& group() const { return group_; }
  const std::vector<Element>& members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  std::size_t index() const { return group_->order() / members_.size(); }
  bool contains(Element a) const { return mask_[a]; }
  bool is_normal() const { return normal_; }
  bool is_abelian() const;
  bool is_whole() const { return members_.size() == group_->order(); }

  /// Smallest-index generating set of this subgroup.
  std::vector<Element> generators() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.members_ == b.members_;
  }

 private:
  Subgroup(GroupPtr g, std::vector<Element> members);

  GroupPtr group_;
  std::vector<Element> members_;
  std::vector<bool> mask_;
  bool normal_ = false;
};

struct ConjugacyClass {
  GroupPtr group;
  Element representative;        // smallest member index
  std::vector<Element> members;  // sorted
  Subgroup centralizer;          // of the representative

  std::size_t size() const { return members.size(); }
  bool contains(Element a) const;
  bool is_central() const { return members.size() == 1; }
};

Subgroup center(const GroupPtr& g);
Subgroup centralizer(const GroupPtr& g, Element x);
/// Subgroup generated by all commutators of the whole group.
Subgroup commutator_subgroup(const GroupPtr& g);
/// [K, K] for a subgroup K.
Subgroup derived_subgroup(const Subgroup& k);
/// Smallest normal subgroup containing the given elements.
Subgroup normal_closure(const GroupPtr& g, std::span<const Element> elems);

struct CentralSeries {
  std::vector<Subgroup> terms;           // Z_0 = e, Z_1 = Z(G), ... until it stabilizes
  std::optional<std::size_t> nilpotency_class;  // empty when not nilpotent
};
CentralSeries upper_central_series(const GroupPtr& g);
bool is_nilpotent(const GroupPtr& g);

/// All classes ordered by representative index.
std::vector<ConjugacyClass> conjugacy_classes(const GroupPtr& g);
/// The class containing x, with representative = smallest member.
ConjugacyClass class_of(const GroupPtr& g, Element x);

}  // namespace yetter::grp
