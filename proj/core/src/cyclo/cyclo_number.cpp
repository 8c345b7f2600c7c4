#include "yetter/cyclo/cyclo_number.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "yetter/limits.hpp"

namespace yetter::cyclo {

std::vector<std::int64_t> cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic polynomial needs n >= 1");
  static std::mutex memo_mu;
  static std::map<int, std::vector<std::int64_t>> memo;
  {
    std::lock_guard lock(memo_mu);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> num(static_cast<std::size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto div = cyclotomic_polynomial(d);
    // Exact division by a monic polynomial.
    const std::size_t dd = div.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const std::int64_t c = num[i];
      quot[i - dd] = c;
      if (c == 0) continue;
      for (std::size_t k = 0; k <= dd; ++k) num[i - dd + k] -= c * div[k];
    }
    num = std::move(quot);
  }
  std::lock_guard lock(memo_mu);
  memo.emplace(n, num);
  return num;
}

CycloField::CycloField(int conductor) : conductor_(conductor) {
  phi_poly_ = yetter::cyclo::cyclotomic_polynomial(conductor);
  degree_ = static_cast<int>(phi_poly_.size()) - 1;
  powers_.assign(static_cast<std::size_t>(conductor), std::vector<std::int64_t>(degree_, 0));
  // x^0 .. x^(deg-1) are basis vectors; x^(j+1) = x * x^j reduced with the monic relation.
  std::vector<std::int64_t> cur(degree_, 0);
  cur[0] = 1;
  for (int j = 0; j < conductor; ++j) {
    powers_[static_cast<std::size_t>(j)] = cur;
    std::vector<std::int64_t> next(degree_, 0);
    const std::int64_t top = cur[degree_ - 1];
    for (int k = degree_ - 1; k > 0; --k) next[k] = cur[k - 1];
    next[0] = 0;
    if (top != 0) {
      for (int k = 0; k < degree_; ++k) next[k] -= top * phi_poly_[k];
    }
    cur = std::move(next);
  }
}

std::span<const std::int64_t> CycloField::power(std::int64_t j) const {
  j %= conductor_;
  if (j < 0) j += conductor_;
  return powers_[static_cast<std::size_t>(j)];
}

const CycloField& CycloField::get(int conductor) {
  if (conductor < 1) throw std::invalid_argument("conductor must be positive");
  if (conductor > limits().conductor_cap) {
    throw CapExceeded("conductor " + std::to_string(conductor) + " exceeds cap " +
                      std::to_string(limits().conductor_cap));
  }
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[conductor];
  if (!slot) slot = std::make_unique<CycloField>(conductor);
  return *slot;
}

CycloNumber::CycloNumber() : coeffs_(1) {}

CycloNumber::CycloNumber(long value) : coeffs_(1, Rational(value)) {}

CycloNumber::CycloNumber(Rational value, int conductor) : conductor_(conductor) {
  const auto& field = CycloField::get(conductor);
  coeffs_.assign(static_cast<std::size_t>(field.degree()), Rational(0));
  coeffs_[0] = std::move(value);
}

CycloNumber::CycloNumber(int conductor, std::span<const Rational> coeffs) : conductor_(conductor) {
  const auto& field = CycloField::get(conductor);
  const auto deg = static_cast<std::size_t>(field.degree());
  coeffs_.assign(deg, Rational(0));
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] == 0) continue;
    if (j < deg) {
      coeffs_[j] += coeffs[j];
    } else {
      const auto p = field.power(static_cast<std::int64_t>(j));
      for (std::size_t k = 0; k < deg; ++k) {
        if (p[k] != 0) coeffs_[k] += coeffs[j] * p[k];
      }
    }
  }
}

CycloNumber CycloNumber::from_root(const RootOfUnity& root, int conductor) {
  if (conductor % root.order() != 0) {
    throw std::invalid_argument("conductor " + std::to_string(conductor) +
                                " is not a multiple of root order " + std::to_string(root.order()));
  }
  CycloNumber out(Rational(0), conductor);
  out.add_root(root);
  return out;
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

void CycloNumber::align_with(const CycloNumber& other, CycloNumber& other_lifted) {
  if (other.conductor_ == conductor_) {
    other_lifted = other;
    return;
  }
  const int l = std::lcm(conductor_, other.conductor_);
  if (l != conductor_) *this = lift_conductor(*this, l);
  other_lifted = lift_conductor(other, l);
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& other) {
  if (other.conductor_ == conductor_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
  }
  CycloNumber rhs;
  align_with(other, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& other) {
  if (other.conductor_ == conductor_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
    return *this;
  }
  CycloNumber rhs;
  align_with(other, rhs);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& other) {
  CycloNumber rhs;
  const CycloNumber* r = &other;
  if (other.conductor_ != conductor_) {
    align_with(other, rhs);
    r = &rhs;
  }
  const auto deg = coeffs_.size();
  if (deg == 1) {
    coeffs_[0] *= r->coeffs_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * deg - 1);
  for (std::size_t i = 0; i < deg; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (r->coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * r->coeffs_[j];
    }
  }
  *this = CycloNumber(conductor_, prod);
  return *this;
}

void CycloNumber::add_root(const RootOfUnity& root, long scale) {
  if (conductor_ % root.order() != 0) {
    *this += CycloNumber(Rational(0), static_cast<int>(root.order()));
  }
  const auto& field = CycloField::get(conductor_);
  const std::int64_t exponent = root.num() * (conductor_ / root.den());
  const auto p = field.power(exponent);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (p[k] != 0) coeffs_[k] += scale * p[k];
  }
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero cyclotomic number");
  const auto deg = coeffs_.size();
  if (deg == 1) return CycloNumber(1 / coeffs_[0], conductor_);
  // Solve (multiplication-by-this) * y = e_0 over Q.
  std::vector<std::vector<Rational>> m(deg, std::vector<Rational>(deg + 1));
  for (std::size_t j = 0; j < deg; ++j) {
    std::vector<Rational> basis(deg);
    basis[j] = 1;
    CycloNumber col = *this * CycloNumber(conductor_, basis);
    for (std::size_t i = 0; i < deg; ++i) m[i][j] = col.coeffs_[i];
  }
  m[0][deg] = 1;
  for (std::size_t c = 0; c < deg; ++c) {
    std::size_t piv = c;
    while (piv < deg && m[piv][c] == 0) ++piv;
    if (piv == deg) throw std::logic_error("singular multiplication matrix in cyclotomic field");
    std::swap(m[piv], m[c]);
    const Rational inv = 1 / m[c][c];
    for (std::size_t k = c; k <= deg; ++k) m[c][k] *= inv;
    for (std::size_t i = 0; i < deg; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t k = c; k <= deg; ++k) m[i][k] -= f * m[c][k];
    }
  }
  std::vector<Rational> y(deg);
  for (std::size_t i = 0; i < deg; ++i) y[i] = m[i][deg];
  return CycloNumber(conductor_, y);
}

CycloNumber CycloNumber::conj() const {
  const auto& field = CycloField::get(conductor_);
  CycloNumber out(Rational(0), conductor_);
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const auto p = field.power(-static_cast<std::int64_t>(j));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (p[k] != 0) out.coeffs_[k] += coeffs_[j] * p[k];
    }
  }
  return out;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const int l = std::lcm(a.conductor_, b.conductor_);
  return lift_conductor(a, l).coeffs_ == lift_conductor(b, l).coeffs_;
}

std::complex<double> CycloNumber::to_complex() const {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / conductor_;
    acc += coeffs_[j].get_d() * std::polar(1.0, angle);
  }
  return acc;
}

std::string CycloNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[j].get_str();
    if (j == 1) os << "*z" << conductor_;
    if (j > 1) os << "*z" << conductor_ << "^" << j;
  }
  if (first) os << "0";
  return os.str();
}

CycloNumber lift_conductor(const CycloNumber& x, int target) {
  if (target % x.conductor_ != 0) {
    throw std::invalid_argument("cannot lift conductor " + std::to_string(x.conductor_) + " to " +
                                std::to_string(target));
  }
  if (target == x.conductor_) return x;
  const auto& field = CycloField::get(target);
  const std::int64_t step = target / x.conductor_;
  CycloNumber out(Rational(0), target);
  for (std::size_t j = 0; j < x.coeffs_.size(); ++j) {
    if (x.coeffs_[j] == 0) continue;
    const auto p = field.power(static_cast<std::int64_t>(j) * step);
    for (std::size_t k = 0; k < out.coeffs_.size(); ++k) {
      if (p[k] != 0) out.coeffs_[k] += x.coeffs_[j] * p[k];
    }
  }
  return out;
}

}  // namespace yetter::cyclo
