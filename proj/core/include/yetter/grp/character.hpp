#pragma once

#include <vector>

#include "yetter/cyclo/cyclo_number.hpp"
#include "yetter/cyclo/root_of_unity.hpp"
#include "yetter/grp/subgroup.hpp"

namespace yetter::grp {

using cyclo::RootOfUnity;

/// A one-dimensional character of a subgroup K. Values are stored by parent
/// element index and are meaningful only on K.
class Character {
 public:
  Character(Subgroup domain, std::vector<RootOfUnity> values);
  static Character trivial(Subgroup domain);

  const Subgroup& domain() const { return domain_; }
  /// Throws PreconditionError outside the domain.
  const RootOfUnity& operator()(Element g) const;
  /// lcm of the orders of all values.
  std::int64_t order() const;
  bool is_trivial() const;
  /// Checks multiplicativity on the domain.
  bool is_homomorphism() const;

  friend bool operator==(const Character& a, const Character& b);

 private:
  Subgroup domain_;
  std::vector<RootOfUnity> values_;
};

/// All characters of an abelian subgroup; throws PreconditionError otherwise.
std::vector<Character> characters_of_abelian(const Subgroup& a);
/// All one-dimensional characters of K, i.e. characters of K / [K, K].
/// The order is deterministic.
std::vector<Character> characters_of_group(const Subgroup& k);

/// A representation by monomial matrices: rho(g) e_i = scale[i] * e_{perm[i]}.
class MonomialRep {
 public:
  struct Matrix {
    std::vector<std::uint32_t> perm;
    std::vector<RootOfUnity> scale;
  };

  MonomialRep(Subgroup domain, std::size_t dim, std::vector<Matrix> matrices);
  static MonomialRep from_character(const Character& chi);

  const Subgroup& domain() const { return domain_; }
  std::size_t dim() const { return dim_; }
  const Matrix& operator()(Element g) const;
  /// Trace of rho(g) in the cyclotomic field.
  cyclo::CycloNumber trace(Element g) const;
  /// The root r with rho(g) = r * id, if rho(g) is scalar.
  std::optional<RootOfUnity> scalar_value(Element g) const;
  bool is_homomorphism() const;

 private:
  Subgroup domain_;
  std::size_t dim_;
  std::vector<Matrix> matrices_;  // by parent index; empty outside the domain
};

/// Ind_H^K chi on the left cosets of H in K, using smallest-index coset
/// representatives. H must be a subgroup of K.
MonomialRep induce_character(const Subgroup& k, const Subgroup& h, const Character& chi);

/// (1/|K|) sum_g |tr rho(g)|^2, exactly.
cyclo::Rational rep_character_norm(const MonomialRep& rho);

}  // namespace yetter::grp
