#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>

#include "yetter/cyclo/cyclo_matrix.hpp"
#include "yetter/cyclo/cyclo_number.hpp"
#include "yetter/cyclo/root_of_unity.hpp"
#include "yetter/limits.hpp"

using namespace yetter::cyclo;

TEST_CASE("root arithmetic is fraction addition mod 1") {
  const RootOfUnity w(1, 3);
  CHECK(w * w == RootOfUnity(2, 3));
  CHECK(root_order(RootOfUnity(1, 12)) == 12);
  CHECK(RootOfUnity(1, 2) * RootOfUnity(1, 3) == RootOfUnity(5, 6));
  CHECK(RootOfUnity(4, 6) == RootOfUnity(2, 3));
  CHECK(RootOfUnity(3, 3).is_one());
  CHECK(RootOfUnity(-1, 4) == RootOfUnity(3, 4));
  CHECK(w.pow(3).is_one());
  CHECK(w.inverse() == RootOfUnity(2, 3));
  CHECK(RootOfUnity::parse("w") == w);
  CHECK(RootOfUnity::parse("w2") == RootOfUnity(2, 3));
  CHECK(RootOfUnity::parse("-1") == RootOfUnity::minus_one());
  CHECK(RootOfUnity::parse("5/12").to_string() == "5/12");
  CHECK(RootOfUnity().to_string() == "0/1");
  const auto z = RootOfUnity(1, 2) * RootOfUnity(1, 3);
  const auto numeric = std::polar(1.0, 2 * M_PI / 2) * std::polar(1.0, 2 * M_PI / 3);
  CHECK(std::abs(z.to_complex() - numeric) < 1e-12);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(CycloField::get(9).degree() == 6);
  CHECK(CycloField::get(360).degree() == 96);
  CHECK_THROWS_AS(CycloField::get(361), yetter::CapExceeded);
}

TEST_CASE("lift_conductor") {
  CHECK(lift_conductor(CycloNumber(1), 12) == CycloNumber(1));
  const auto z3 = CycloNumber::from_root(RootOfUnity(1, 3));
  const auto lifted = lift_conductor(z3, 6);
  CHECK(lifted.conductor() == 6);
  CHECK(lifted == CycloNumber::from_root(RootOfUnity(2, 6), 6));
  // Squaring back gives zeta_3^2.
  CHECK(lifted * lifted == CycloNumber::from_root(RootOfUnity(2, 3), 6));
  const auto minus_one = lift_conductor(CycloNumber::from_root(RootOfUnity::minus_one()), 8);
  CHECK(minus_one.is_rational());
  CHECK(minus_one.rational_part() == -1);
  CHECK_THROWS(lift_conductor(z3, 4));
}

TEST_CASE("field identities") {
  // 1 + w + w^2 = 0
  CycloNumber s(Rational(0), 3);
  for (int k = 0; k < 3; ++k) s.add_root(RootOfUnity(k, 3));
  CHECK(s.is_zero());
  // i^2 = -1 and (1+i)^{-1} = (1-i)/2
  const auto i = CycloNumber::from_root(RootOfUnity(1, 4));
  CHECK(i * i == CycloNumber(-1));
  const auto a = CycloNumber(1) + i;
  CHECK(a * a.inverse() == CycloNumber(1));
  CHECK(a.inverse() == (CycloNumber(1) - i) * CycloNumber(Rational(1, 2)));
  CHECK(i.conj() == -i);
  CHECK_THROWS_AS(CycloNumber().inverse(), std::domain_error);
  // Mixed conductors combine at the lcm.
  const auto w = CycloNumber::from_root(RootOfUnity(1, 3));
  const auto prod = w * i;
  CHECK(prod.conductor() == 12);
  CHECK(prod == CycloNumber::from_root(RootOfUnity(7, 12)));
}

TEST_CASE("root embedding is multiplicative on random pairs") {
  std::mt19937 rng(7);
  const int dens[] = {1, 2, 3, 4, 6, 9, 12};
  for (int t = 0; t < 1000; ++t) {
    const int n1 = dens[rng() % 7];
    const int n2 = dens[rng() % 7];
    const RootOfUnity a(static_cast<int>(rng() % n1), n1);
    const RootOfUnity b(static_cast<int>(rng() % n2), n2);
    const auto lhs = CycloNumber::from_root(a * b, 36);
    const auto rhs = CycloNumber::from_root(a, 36) * CycloNumber::from_root(b, 36);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("lifted values agree with 50-digit numeric evaluation") {
  using Big = boost::multiprecision::cpp_bin_float_50;
  const Big pi = boost::math::constants::pi<Big>();
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int m = n * (1 + static_cast<int>(rng() % 4));
    std::vector<Rational> coeffs;
    for (int k = 0; k < n; ++k) coeffs.emplace_back(static_cast<long>(rng() % 7) - 3, 1 + rng() % 5);
    const CycloNumber x(n, coeffs);
    const auto y = lift_conductor(x, m);
    auto eval = [&](const CycloNumber& v) {
      Big re = 0, im = 0;
      const auto c = v.coeffs();
      for (std::size_t k = 0; k < c.size(); ++k) {
        const Big angle = 2 * pi * static_cast<long>(k) / v.conductor();
        const Big q = Big(c[k].get_num().get_str()) / Big(c[k].get_den().get_str());
        re += q * cos(angle);
        im += q * sin(angle);
      }
      return std::pair{re, im};
    };
    // Direct evaluation of the unreduced input.
    Big re = 0, im = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const Big angle = 2 * pi * static_cast<long>(k) / n;
      const Big q = Big(coeffs[k].get_num().get_str()) / Big(coeffs[k].get_den().get_str());
      re += q * cos(angle);
      im += q * sin(angle);
    }
    const auto [lr, li] = eval(y);
    CHECK(abs(lr - re) < Big("1e-40"));
    CHECK(abs(li - im) < Big("1e-40"));
  }
}

namespace {

CycloMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int conductor) {
  CycloMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (rng() % 3 == 0) {
        CycloNumber v(Rational(0), conductor);
        v.add_root(RootOfUnity(static_cast<int>(rng() % conductor), conductor), 1 + rng() % 2);
        m.set(i, j, v);
      }
  return m;
}

}  // namespace

TEST_CASE("matrix rank") {
  CHECK(matrix_rank(CycloMatrix::identity(5)) == 5);
  CHECK(matrix_rank(CycloMatrix(4, 6)) == 0);
  // id + c with c(e_i (x) e_j) = -e_j (x) e_i on k^2: the degree-two symmetrizer of an exterior algebra.
  CycloMatrix m = CycloMatrix::identity(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m.add(j * 2 + i, i * 2 + j, CycloNumber(-1));
  CHECK(matrix_rank(m) == 1);
  // Over Q(w): rows (1, w) and (w^2, 1) are dependent.
  const auto w = CycloNumber::from_root(RootOfUnity(1, 3));
  CycloMatrix d(2, 2);
  d.set(0, 0, CycloNumber(1));
  d.set(0, 1, w);
  d.set(1, 0, w * w);
  d.set(1, 1, CycloNumber(1));
  CHECK(matrix_rank(d) == 1);
}

TEST_CASE("rank properties on random instances") {
  std::mt19937 rng(3);
  for (int t = 0; t < 60; ++t) {
    const int n = (t % 3 == 0) ? 3 : (t % 3 == 1 ? 4 : 12);
    const auto a = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, n);
    const auto b = random_matrix(rng, a.cols(), 1 + rng() % 6, n);
    const auto ra = matrix_rank(a);
    CHECK(ra == matrix_rank(a.transpose()));
    CHECK(matrix_rank(a * b) <= std::min(ra, matrix_rank(b)));
  }
}
