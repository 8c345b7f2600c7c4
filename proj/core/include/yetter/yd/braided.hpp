#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "yetter/cyclo/cyclo_matrix.hpp"

namespace yetter::yd {

using cyclo::CycloMatrix;
using cyclo::CycloNumber;
using cyclo::RootOfUnity;
using cyclo::SparseVector;

/// A braided vector space of dimension D. The braiding acts on the tensor
/// square with basis e_i (x) e_j at index i*D + j; column i*D + j of the matrix
/// holds c(e_i (x) e_j).
class BraidedVectorSpace {
 public:
  BraidedVectorSpace(std::size_t dim, CycloMatrix braiding, std::string provenance = {});

  std::size_t dim() const { return dim_; }
  const CycloMatrix& braiding() const { return braiding_; }
  const std::string& provenance() const { return provenance_; }
  int conductor() const { return braiding_.conductor(); }

  /// Image of e_i (x) e_j as a list of (k*D + l, coefficient).
  const std::vector<std::pair<std::uint32_t, CycloNumber>>& image(std::size_t i, std::size_t j) const {
    return images_[i * dim_ + j];
  }

  /// Applies id^(p) (x) c (x) id^(n-p-2) to a vector in V^(x n). Words are
  /// base-D integers with the first tensor factor most significant.
  SparseVector apply_at(std::size_t n, std::size_t p, const SparseVector& v) const;

 private:
  std::size_t dim_;
  CycloMatrix braiding_;
  std::string provenance_;
  std::vector<std::vector<std::pair<std::uint32_t, CycloNumber>>> images_;
};

/// (c (x) id)(id (x) c)(c (x) id) = (id (x) c)(c (x) id)(id (x) c), checked on
/// every basis triple when D^3 <= 20000, else on a fixed-seed sample.
bool satisfies_braid_equation(const BraidedVectorSpace& v);
bool is_invertible(const BraidedVectorSpace& v);

/// D^n, throwing CapExceeded beyond the symmetrizer dimension cap.
std::size_t tensor_power_dim(std::size_t d, std::size_t n);

}  // namespace yetter::yd
