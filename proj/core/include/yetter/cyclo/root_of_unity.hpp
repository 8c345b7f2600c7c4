#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace yetter::cyclo {

/// A root of unity exp(2*pi*i * num/den), kept as a reduced fraction in [0, 1).
/// The trivial root is 0/1. Multiplication is addition of fractions mod 1.
class RootOfUnity {
 public:
  constexpr RootOfUnity() = default;
  RootOfUnity(std::int64_t num, std::int64_t den);

  static RootOfUnity one() { return {}; }
  static RootOfUnity minus_one() { return {1, 2}; }
  /// exp(2*pi*i/n), a primitive n-th root.
  static RootOfUnity primitive(std::int64_t n) { return {1, n}; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  /// Multiplicative order; equals the reduced denominator.
  std::int64_t order() const { return den_; }
  bool is_one() const { return num_ == 0; }

  RootOfUnity operator*(const RootOfUnity& other) const;
  RootOfUnity& operator*=(const RootOfUnity& other) { return *this = *this * other; }
  RootOfUnity inverse() const;
  RootOfUnity pow(std::int64_t k) const;

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity& a, const RootOfUnity& b) {
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.num_ <=> b.num_;
  }

  std::complex<double> to_complex() const;

  /// "a/n"; the trivial root prints as "0/1".
  std::string to_string() const;
  /// Accepts "a/n", "1", "-1", "i", "w" (a primitive cube root, 1/3) and "w2" (2/3).
  static RootOfUnity parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline RootOfUnity root_mul(const RootOfUnity& a, const RootOfUnity& b) { return a * b; }
inline RootOfUnity root_pow(const RootOfUnity& a, std::int64_t k) { return a.pow(k); }
inline std::int64_t root_order(const RootOfUnity& a) { return a.order(); }

/// True when r lies in the set of primitive n-th roots.
inline bool is_primitive(const RootOfUnity& r, std::int64_t n) { return r.order() == n; }

}  // namespace yetter::cyclo
