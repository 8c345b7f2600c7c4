#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yetter/grp/character.hpp"
#include "yetter/grp/subgroup.hpp"
#include "yetter/nichols/verdict.hpp"
#include "yetter/yd/diagonal.hpp"
#include "yetter/yd/module.hpp"

namespace yetter::classify {

using cyclo::RootOfUnity;
using grp::Character;
using grp::ConjugacyClass;
using grp::Element;
using nichols::Verdict;

/// chi((g^-1 ▷ x)(g ▷ x)) = 1 for every g outside G^x: the braiding of
/// M(O, chi) then has a totally disconnected diagram with all vertices chi(x).
struct TotalDisconnection {
  bool holds = true;
  std::optional<Element> witness;  // first g, by index, where the product is not 1
  RootOfUnity value;               // chi((g^-1 ▷ x)(g ▷ x)) at the witness
};
/// Exhaustive scan in element order. Throws unless the class is an abelian rack
/// and chi is defined on the centralizer of x.
TotalDisconnection total_disconnection_check(const ConjugacyClass& cls, Element x, const Character& chi);

/// A pair (O, chi) with O abelian and non-central, chi a character of G^x.
struct ClassCharPair {
  ConjugacyClass cls;
  Element x = 0;
  Character chi;
  RootOfUnity q;  // chi(x)
  bool totally_disconnected = false;
  std::int64_t order() const { return q.order(); }
  /// chi(x) != 1 and the total disconnection condition: dim B(O, chi) = N^|O|.
  bool admissible() const { return totally_disconnected && !q.is_one(); }
};
ClassCharPair make_class_char_pair(const ConjugacyClass& cls, Element x, const Character& chi);

/// A YD pair (g, chi) with g central and chi a character of G.
struct CentralPair {
  Element g = 0;
  Character chi;
  RootOfUnity q;  // chi(g)
};
CentralPair make_central_pair(const grp::GroupPtr& g, Element z, const Character& chi);

enum class YZCase { NoObstruction, Rank2Special, ThreeCycleSpecial, InfiniteGK };
std::string to_string(YZCase c);

/// The orbit z_i = g^i ▷ x of a single element g and the braided subspace it spans.
struct YZReport {
  Element g = 0;
  std::vector<Element> orbit;  // z_0 = x, z_1, ..., z_{n-1}
  RootOfUnity q;               // chi(x)
  RootOfUnity zeta;            // chi(z_{-1} z_1)
  YZCase yz_case = YZCase::NoObstruction;
  /// q_ij = chi(z_{i-j}) on the span of g^i . 1.
  yd::DiagonalBraiding cycle;
  Verdict local;  // diagonal_verdict(cycle)

  std::size_t n() const { return orbit.size(); }
};
/// Throws when g centralizes x or the orbit is not an abelian subrack.
YZReport yz_analysis(const grp::GroupPtr& g, Element x, const Character& chi, Element h);

/// [O, O'] = e and chi'((g'_z)^-1 ▷ y) chi((g_y)^-1 ▷ z) = 1 for all y in O, z in O'.
/// The result is checked against c^2 = id on M(O, chi) (x) M(O', chi'); a
/// disagreement throws std::logic_error.
bool pair_compatibility(const ClassCharPair& a, const ClassCharPair& b);
/// chi'(y) chi(g') = 1 for all y in O, checked the same way.
bool pair_compatibility(const ClassCharPair& a, const CentralPair& b);
/// q_ij q_ji = 1.
bool pair_compatibility(const CentralPair& a, const CentralPair& b);

/// Simple module M(g, W) with g central and W an irreducible representation of G.
struct CentralMember {
  Element g = 0;
  yd::Representation rho;
};

struct ConditionFinding {
  std::string name;
  std::optional<bool> holds;  // nullopt: undecided by the recognized fragment
  std::string detail;
};

struct CentralSupportResult {
  Verdict verdict;
  std::vector<ConditionFinding> findings;
};

/// Finite GK-dimension test for a direct sum of simple modules with central
/// support. One-dimensional members form the point sector with
/// q_ij = chi_j(g_i); members of dimension >= 2 act on g_k through their central
/// character eta. Conditions, in order:
///   point-sector-diagram        the point sector's verdict is not infinite
///   block-self-braiding-order   eta_i(g_i) has order 1, 2 or 3
///   trivial-block-decoupled     eta_i(g_i) = 1 forces every coupling with i to be 1
///   nontrivial-blocks-decoupled eta_i(g_j) eta_j(g_i) = 1 between blocks with eta != 1
///   cube-root-block-coupling    eta_i(g_i) of order 3 couples to a point only
///                               as omega^2 with an isolated -1 point
///   minus-one-block-coupling    eta_i(g_i) = -1 couples trivially to points,
///                               except for shapes from the rank two to four
///                               tables of the classification (Unknown)
/// Throws PreconditionError when some g_i is not central or W_i is reducible.
CentralSupportResult central_support_check(const grp::GroupPtr& g, const std::vector<CentralMember>& family);

}  // namespace yetter::classify
