#include "yetter/cyclo/root_of_unity.hpp"

#include <charconv>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace yetter::cyclo {

RootOfUnity::RootOfUnity(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw std::invalid_argument("root of unity needs a positive denominator");
  num %= den;
  if (num < 0) num += den;
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  if (num_ == 0) den_ = 1;
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& other) const {
  const std::int64_t l = std::lcm(den_, other.den_);
  return {num_ * (l / den_) + other.num_ * (l / other.den_), l};
}

RootOfUnity RootOfUnity::inverse() const { return {den_ - num_, den_}; }

RootOfUnity RootOfUnity::pow(std::int64_t k) const {
  k %= den_;
  if (k < 0) k += den_;
  // num_ * k < den_^2, fine for conductors far below 2^31.
  return {(num_ * k) % den_, den_};
}

std::complex<double> RootOfUnity::to_complex() const {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(num_) / static_cast<double>(den_);
  return std::polar(1.0, angle);
}

std::string RootOfUnity::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

RootOfUnity RootOfUnity::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "1") return one();
  if (text == "-1") return minus_one();
  if (text == "i") return {1, 4};
  if (text == "w") return {1, 3};
  if (text == "w2") return {2, 3};
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("cannot parse root of unity '" + std::string(text) + "'");
  }
  return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

}  // namespace yetter::cyclo
