#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yetter/rack/rack.hpp"

namespace yetter::rack {

/// A decomposable subrack Y = R ⊔ S of a conjugation rack with r ∈ R, s ∈ S
/// witnessing type C. Members are parent group elements.
struct TypeCWitness {
  GroupPtr group;
  Element r = 0;
  Element s = 0;
  std::size_t subgroup_order = 0;  // |<r, s>|
  std::vector<Element> part_r;     // sorted
  std::vector<Element> part_s;     // sorted
  // Certification data recomputed from the fields above.
  bool r_moves_s = false;          // r ▷ s != s
  bool parts_are_inner_orbits = false;  // R and S are the Inn(Y)-orbits of r and s
  bool size_bound = false;         // min(|R|,|S|) > 2 or max(|R|,|S|) > 4
  std::size_t inner_group_order = 0;  // |Inn Y|

  bool valid() const { return r_moves_s && parts_are_inner_orbits && size_bound; }
};

/// Recomputes every certification field from group, r, s, part_r and part_s.
/// Also checks that Y is a subrack with disjoint parts. Returns the refreshed witness.
TypeCWitness revalidate(const TypeCWitness& w);

enum class TypeCOutcome { TypeC, NotTypeC, Undetermined };
std::string to_string(TypeCOutcome o);

struct TypeCResult {
  TypeCOutcome outcome = TypeCOutcome::Undetermined;
  std::optional<TypeCWitness> witness;
  std::size_t pairs_examined = 0;
  std::string note;
};

constexpr std::size_t kDefaultTypeCBudget = 100000;

/// Tries pairs (r, s) with r ▷ s != s in lexicographic position order,
/// taking R, S to be the orbits of r and s under H = <r, s>. NotTypeC is only
/// reported for abelian racks. budget = nullopt searches every pair.
TypeCResult type_c_search(const Rack& x, std::optional<std::size_t> budget = kDefaultTypeCBudget);

enum class ClassStatus { Abelian, TypeC, Violation };
std::string to_string(ClassStatus s);

struct ClassAuditEntry {
  Element representative = 0;
  std::size_t size = 0;
  ClassStatus status = ClassStatus::Violation;
  std::optional<TypeCWitness> witness;
  std::size_t pairs_examined = 0;
  bool escalated = false;
  std::string note;
};

struct AuditReport {
  GroupPtr group;
  std::vector<ClassAuditEntry> classes;
  std::size_t violations() const;
};

/// For a nilpotent group of odd order, classifies every conjugacy class as an
/// abelian rack or type C. A non-abelian class whose bounded search fails is
/// searched again without a budget before it is reported as a violation.
AuditReport abelian_or_type_c_audit(const GroupPtr& g, std::size_t budget = kDefaultTypeCBudget);

}  // namespace yetter::rack
