#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "yetter/yd/braided.hpp"
#include "yetter/yd/module.hpp"

namespace yetter::yd {

/// c(x_i (x) x_j) = q_ij x_j (x) x_i.
class DiagonalBraiding {
 public:
  DiagonalBraiding() = default;
  explicit DiagonalBraiding(std::size_t rank, RootOfUnity fill = {});
  /// Row-major entries; throws unless the list is square.
  explicit DiagonalBraiding(const std::vector<std::vector<RootOfUnity>>& rows);

  std::size_t rank() const { return rank_; }
  const RootOfUnity& operator()(std::size_t i, std::size_t j) const { return q_[i * rank_ + j]; }
  RootOfUnity& operator()(std::size_t i, std::size_t j) { return q_[i * rank_ + j]; }
  /// q_ij q_ji
  RootOfUnity edge(std::size_t i, std::size_t j) const { return (*this)(i, j) * (*this)(j, i); }
  /// The principal submatrix on the given indices.
  DiagonalBraiding restrict_to(const std::vector<std::size_t>& idx) const;

  friend bool operator==(const DiagonalBraiding&, const DiagonalBraiding&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<RootOfUnity> q_;
};

BraidedVectorSpace braiding_from_diagonal(const DiagonalBraiding& q);

struct NotDiagonal {
  std::string reason;
  std::size_t basis_i = 0;
  std::size_t basis_j = 0;
};

/// The coefficient matrix when every c(v_i (x) v_j) is a multiple of v_j (x) v_i:
/// the class must be an abelian rack and each t_{z,y} must act diagonally.
std::variant<DiagonalBraiding, NotDiagonal> diagonal_form(const YDModule& m);
/// Same, for a direct sum of modules over one group.
std::variant<DiagonalBraiding, NotDiagonal> diagonal_form(const std::vector<const YDModule*>& ms);

struct DynkinDiagram {
  std::vector<RootOfUnity> vertices;                           // q_ii
  std::map<std::pair<std::size_t, std::size_t>, RootOfUnity> edges;  // i < j, label q_ij q_ji != 1
  std::vector<std::vector<std::size_t>> components;            // sorted, ordered by smallest vertex

  std::vector<std::size_t> neighbours(std::size_t v) const;
  /// Adjacency-list rendering with "a/n" labels, one vertex per line.
  std::string to_text() const;
  friend bool operator==(const DynkinDiagram&, const DynkinDiagram&) = default;
};

DynkinDiagram dynkin(const DiagonalBraiding& q);

/// Equal vertex labels and equal q_ij q_ji for all i != j. Throws on rank mismatch.
bool twist_equivalent(const DiagonalBraiding& p, const DiagonalBraiding& q);

}  // namespace yetter::yd
