#include "yetter/nichols/verdict.hpp"

namespace yetter::nichols {

std::string Axis::to_string() const {
  switch (kind) {
    case AxisKind::Finite:
      return value ? "Finite(" + value->get_str() + ")" : "Finite";
    case AxisKind::Infinite:
      return "Infinite";
    case AxisKind::Unknown:
      break;
  }
  return "Unknown";
}

std::string to_string(Assumption a) {
  switch (a) {
    case Assumption::FiniteGkImpliesFiniteRootSystem:
      return "finite-gk-root-system";
    case Assumption::TypeCForcesInfiniteGk:
      break;
  }
  return "type-c-infinite-gk";
}

std::optional<Assumption> assumption_from_string(const std::string& s) {
  for (auto a : {Assumption::FiniteGkImpliesFiniteRootSystem, Assumption::TypeCForcesInfiniteGk}) {
    if (to_string(a) == s) return a;
  }
  return std::nullopt;
}

Verdict Verdict::finite_dim(std::optional<mpz_class> v, std::string rule, std::string detail) {
  return {Axis::finite(std::move(v)), Axis::finite(mpz_class(0)), {}, std::move(rule), std::move(detail)};
}

Verdict Verdict::infinite_dim(Axis gk, std::string rule, std::string detail) {
  return {Axis::infinite(), std::move(gk), {}, std::move(rule), std::move(detail)};
}

Verdict Verdict::unknown(std::string rule, std::string detail) {
  return {Axis::unknown(), Axis::unknown(), {}, std::move(rule), std::move(detail)};
}

bool Verdict::consistent() const {
  if (!dim.is_finite()) return true;
  return gk.is_finite() && gk.value && *gk.value == 0;
}

std::string Verdict::to_string() const {
  std::string s = "dim " + dim.to_string() + ", gk " + gk.to_string();
  if (!assumptions.empty()) {
    s += " assuming";
    for (auto a : assumptions) s += " " + nichols::to_string(a);
  }
  s += " [" + rule + "]";
  return s;
}

Verdict combine(const std::vector<Verdict>& parts, std::string rule) {
  Verdict out;
  out.rule = std::move(rule);
  bool dim_infinite = false, dim_unknown = false, dim_valued = true;
  bool gk_infinite = false, gk_unknown = false, gk_valued = true;
  mpz_class dim = 1, gk = 0;
  for (const auto& p : parts) {
    out.assumptions.insert(p.assumptions.begin(), p.assumptions.end());
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += p.rule;
    if (p.dim.is_infinite()) dim_infinite = true;
    else if (p.dim.is_unknown()) dim_unknown = true;
    else if (p.dim.value) dim *= *p.dim.value;
    else dim_valued = false;
    if (p.gk.is_infinite()) gk_infinite = true;
    else if (p.gk.is_unknown()) gk_unknown = true;
    else if (p.gk.value) gk += *p.gk.value;
    else gk_valued = false;
  }
  if (dim_infinite) out.dim = Axis::infinite();
  else if (dim_unknown) out.dim = Axis::unknown();
  else out.dim = Axis::finite(dim_valued ? std::optional<mpz_class>(dim) : std::nullopt);
  if (gk_infinite) out.gk = Axis::infinite();
  else if (gk_unknown) out.gk = Axis::unknown();
  else out.gk = Axis::finite(gk_valued ? std::optional<mpz_class>(gk) : std::nullopt);
  return out;
}

}  // namespace yetter::nichols
