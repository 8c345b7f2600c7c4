#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace yetter::nichols {

enum class AxisKind { Finite, Infinite, Unknown };

/// One axis of a verdict. A finite value is optional: some rules only know finiteness.
struct Axis {
  AxisKind kind = AxisKind::Unknown;
  std::optional<mpz_class> value;

  static Axis finite(std::optional<mpz_class> v = std::nullopt) { return {AxisKind::Finite, std::move(v)}; }
  static Axis infinite() { return {AxisKind::Infinite, std::nullopt}; }
  static Axis unknown() { return {AxisKind::Unknown, std::nullopt}; }

  bool is_finite() const { return kind == AxisKind::Finite; }
  bool is_infinite() const { return kind == AxisKind::Infinite; }
  bool is_unknown() const { return kind == AxisKind::Unknown; }
  /// "Finite(27)", "Finite", "Infinite" or "Unknown".
  std::string to_string() const;
  friend bool operator==(const Axis&, const Axis&) = default;
};

/// Unproven statements a verdict relies on.
enum class Assumption {
  // Finite GK-dimension of a diagonal Nichols algebra forces an arithmetic root system.
  FiniteGkImpliesFiniteRootSystem,
  // Type C racks give infinite GK-dimension for every faithful cocycle.
  TypeCForcesInfiniteGk,
};
std::string to_string(Assumption a);
std::optional<Assumption> assumption_from_string(const std::string& s);

/// Dimension and GK-dimension of a Nichols algebra, each Finite, Infinite or Unknown.
struct Verdict {
  Axis dim;
  Axis gk;
  std::set<Assumption> assumptions;
  std::string rule;    // rule that produced the verdict
  std::string detail;  // human readable context

  /// dim Finite(v); gk is then Finite(0).
  static Verdict finite_dim(std::optional<mpz_class> v, std::string rule, std::string detail = {});
  /// dim Infinite, gk as given.
  static Verdict infinite_dim(Axis gk, std::string rule, std::string detail = {});
  static Verdict unknown(std::string rule, std::string detail = {});

  Verdict& assuming(Assumption a) {
    assumptions.insert(a);
    return *this;
  }
  /// dim Finite implies gk Finite(0).
  bool consistent() const;
  std::string to_string() const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// Verdict for a tensor product B(V_1) (x) ... (x) B(V_k): dimensions multiply,
/// GK-dimensions add, any infinite factor makes the product infinite.
Verdict combine(const std::vector<Verdict>& parts, std::string rule);

}  // namespace yetter::nichols
