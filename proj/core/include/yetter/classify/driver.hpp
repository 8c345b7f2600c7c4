#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "yetter/classify/conditions.hpp"
#include "yetter/rack/type_c.hpp"

namespace yetter::classify {

struct DriverOptions {
  std::string group_name;
  std::optional<std::size_t> type_c_budget = rack::kDefaultTypeCBudget;
  bool assume_conjecture = false;
  /// Connected rank-two central realizations are enumerated only when the
  /// number of central points with q != 1 is at most this.
  std::size_t central_point_limit = 400;
  std::size_t max_families = 10000;
};

struct CentralEntry {
  CentralPair pair;
  std::size_t chi_index = 0;  // position in characters_of_group(G)
  Verdict verdict;            // of the one-dimensional module
};

/// Two central points (possibly equal) whose 2x2 matrix is connected and finite.
struct CentralBlock {
  std::size_t a = 0, b = 0;  // indices into central
  yd::DiagonalBraiding q;
  Verdict verdict;
};

struct ClassFinding {
  Element representative = 0;
  std::size_t size = 0;
  bool central = false;
  bool abelian = false;
  std::optional<rack::TypeCResult> type_c;  // non-abelian classes
  std::optional<Verdict> verdict;           // from the type C witness
  std::size_t characters_scanned = 0;       // abelian classes
  std::size_t nontrivial_failing = 0;       // chi(x) != 1 but not totally disconnected
  std::size_t admissible = 0;
};

struct Family {
  std::vector<std::size_t> members;  // indices into abelian_pairs
  mpz_class total_dim;               // product of N_j^|O_j|
  Verdict verdict;
  std::vector<std::size_t> compatible_central;  // central points compatible with every member
};

struct ClassificationReport {
  grp::GroupPtr parent;
  std::string group;
  std::size_t order = 0;
  std::vector<Element> center;
  std::size_t commutator_order = 0;
  std::size_t abelianization_order = 0;

  std::vector<CentralEntry> central;
  std::vector<CentralBlock> central_blocks;
  bool central_blocks_skipped = false;

  std::vector<ClassFinding> classes;  // non-central classes, by representative
  std::vector<ClassCharPair> abelian_pairs;  // admissible pairs only
  std::vector<std::pair<std::size_t, std::size_t>> compat_edges;
  std::vector<std::vector<std::size_t>> central_compat;  // per abelian pair

  std::vector<Family> families;  // maximal cliques of the compatibility graph
  bool families_truncated = false;

  std::size_t violations() const;  // non-abelian classes without a type C witness
};

/// Classification of the finite-dimensional Nichols algebras over a finite
/// nilpotent group of odd order: central YD pairs, abelian non-central classes
/// with their admissible characters, type C findings for the other classes,
/// pairwise compatibility and the maximal compatible families.
/// Throws PreconditionError for even order or non-nilpotent groups.
ClassificationReport classify_group(const grp::GroupPtr& g, const DriverOptions& opts = {});

/// Plain-text rendering mirroring the JSON report.
std::string render_text(const ClassificationReport& r);

}  // namespace yetter::classify
