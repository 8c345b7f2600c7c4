#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "yetter/cyclo/root_of_unity.hpp"

namespace yetter::cyclo {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Static data of Q(zeta_N): the N-th cyclotomic polynomial and the reduction
/// of every power zeta^j (0 <= j < N) to the power basis 1, zeta, ..., zeta^(phi-1).
class CycloField {
 public:
  /// Shared instance for conductor N; throws CapExceeded above the conductor cap.
  static const CycloField& get(int conductor);

  int conductor() const { return conductor_; }
  int degree() const { return degree_; }
  std::span<const std::int64_t> cyclotomic_polynomial() const { return phi_poly_; }
  /// Coefficients of zeta^j in the power basis; j is taken mod N.
  std::span<const std::int64_t> power(std::int64_t j) const;

  explicit CycloField(int conductor);

 private:
  int conductor_;
  int degree_;
  std::vector<std::int64_t> phi_poly_;             // low degree first, monic
  std::vector<std::vector<std::int64_t>> powers_;  // N rows of length degree_
};

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

/// An element of Q(zeta_N) in the power basis modulo Phi_N.
class CycloNumber {
 public:
  CycloNumber();  // zero in Q
  CycloNumber(long value);  // NOLINT(google-explicit-constructor)
  explicit CycloNumber(Rational value, int conductor = 1);
  /// Takes coefficients on 1, zeta_N, zeta_N^2, ...; any length, reduced mod Phi_N.
  CycloNumber(int conductor, std::span<const Rational> coeffs);

  static CycloNumber from_root(const RootOfUnity& root, int conductor);
  static CycloNumber from_root(const RootOfUnity& root) {
    return from_root(root, static_cast<int>(root.order()));
  }

  int conductor() const { return conductor_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; equals the value when is_rational().
  const Rational& rational_part() const { return coeffs_.front(); }

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& other);
  CycloNumber& operator-=(const CycloNumber& other);
  CycloNumber& operator*=(const CycloNumber& other);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }

  /// Adds scale * root in place; the hot path of symmetrizer accumulation.
  void add_root(const RootOfUnity& root, long scale = 1);

  /// Multiplicative inverse; throws std::domain_error on zero.
  CycloNumber inverse() const;
  /// Complex conjugate (zeta -> zeta^-1).
  CycloNumber conj() const;

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  friend CycloNumber lift_conductor(const CycloNumber& x, int target);
  void align_with(const CycloNumber& other, CycloNumber& other_lifted);

  int conductor_ = 1;
  std::vector<Rational> coeffs_;  // exactly CycloField::degree() entries
};

/// Re-expresses x in Q(zeta_M); M must be a multiple of x's conductor.
CycloNumber lift_conductor(const CycloNumber& x, int target);

}  // namespace yetter::cyclo
