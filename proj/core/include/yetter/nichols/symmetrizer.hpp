#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "yetter/yd/braided.hpp"

namespace yetter::nichols {

using cyclo::CycloMatrix;
using cyclo::SparseVector;
using yd::BraidedVectorSpace;

/// A permutation of {0, ..., n-1} in one-line notation: perm[i] is the image of i.
using Permutation = std::vector<std::size_t>;

/// Reduced word for perm found by bubble sort. Letter i stands for the
/// adjacent transposition of positions i and i+1 (0-based); perm equals the
/// product of the letters read left to right.
std::vector<std::size_t> bubble_sort_word(const Permutation& perm);

/// c_{i_1} c_{i_2} ... c_{i_k} on V^(x n), with c_i acting on factors i, i+1.
CycloMatrix lift_of_word(const std::vector<std::size_t>& word, std::size_t n, const BraidedVectorSpace& c);

/// The Matsumoto lift T_perm along the bubble-sort word.
CycloMatrix matsumoto_lift(const Permutation& perm, const BraidedVectorSpace& c);

/// The quantum symmetrizer: sum of T_sigma over all sigma in S_n. Built from
/// the coset factorization S_n = (1 + c_{n-1} + c_{n-2}c_{n-1} + ... + c_1...c_{n-1}) (S_{n-1} (x) id),
/// so each permutation costs one braid application. Throws CapExceeded when
/// D^n or n is over the configured limits.
CycloMatrix quantum_symmetrizer(const BraidedVectorSpace& c, std::size_t n);

struct DimProfile {
  std::string braiding;              // provenance of the braided vector space
  std::size_t dim = 0;               // D
  std::vector<std::size_t> dims;     // dims[n] = dim B^n(V), n = 0..n_max
  std::optional<std::size_t> first_zero;
  /// Top degree predicted by a recognizer for the braiding, when one applies.
  std::optional<std::size_t> predicted_top_degree;
  /// dims vanish at some degree n and the predicted top degree is below n.
  bool certified = false;

  mpz_class sum() const;
  /// Sum of dims when certified.
  std::optional<mpz_class> total() const;
};

/// dims[n] = rank of the degree-n symmetrizer for n <= n_max.
DimProfile dim_profile(const BraidedVectorSpace& c, std::size_t n_max);

/// Records a predicted top degree and sets the certification flag.
void certify(DimProfile& p, std::optional<std::size_t> predicted_top_degree);

}  // namespace yetter::nichols
