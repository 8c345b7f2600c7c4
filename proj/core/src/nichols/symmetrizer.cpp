#include "yetter/nichols/symmetrizer.hpp"

#include <algorithm>
#include <numeric>

#include "yetter/limits.hpp"

namespace yetter::nichols {

namespace {

void check_degree(std::size_t d, std::size_t n) {
  if (n > limits().symmetrizer_max_degree) {
    throw CapExceeded("degree " + std::to_string(n) + " exceeds the symmetrizer degree cap " +
                      std::to_string(limits().symmetrizer_max_degree));
  }
  yd::tensor_power_dim(d, n);
}

void accumulate(SparseVector& acc, const SparseVector& v) {
  for (const auto& [k, x] : v) {
    auto [it, inserted] = acc.try_emplace(k, x);
    if (!inserted) {
      it->second += x;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

// Columns of the degree-(n+1) symmetrizer from those of degree n.
std::vector<SparseVector> next_degree(const BraidedVectorSpace& c, std::size_t n,
                                      const std::vector<SparseVector>& prev) {
  const std::size_t d = c.dim();
  std::vector<SparseVector> out(prev.size() * d);
  for (std::size_t w = 0; w < prev.size(); ++w) {
    if (prev[w].empty()) continue;
    for (std::size_t a = 0; a < d; ++a) {
      SparseVector u;
      for (const auto& [k, x] : prev[w]) u.emplace_hint(u.end(), k * d + a, x);
      SparseVector sum = u;
      for (std::size_t p = n; p-- > 0;) {
        u = c.apply_at(n + 1, p, u);
        if (u.empty()) break;
        accumulate(sum, u);
      }
      out[w * d + a] = std::move(sum);
    }
  }
  return out;
}

std::vector<SparseVector> identity_columns(std::size_t size) {
  std::vector<SparseVector> cols(size);
  for (std::size_t i = 0; i < size; ++i) cols[i].emplace(i, cyclo::CycloNumber(1));
  return cols;
}

}  // namespace

std::vector<std::size_t> bubble_sort_word(const Permutation& perm) {
  Permutation p = perm;
  std::vector<std::size_t> letters;
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1]) {
        std::swap(p[i], p[i + 1]);
        letters.push_back(i);
        moved = true;
      }
    }
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

CycloMatrix lift_of_word(const std::vector<std::size_t>& word, std::size_t n, const BraidedVectorSpace& c) {
  const std::size_t size = yd::tensor_power_dim(c.dim(), n);
  for (std::size_t i : word) {
    if (i + 1 >= n) throw PreconditionError("letter out of range for the tensor degree");
  }
  auto cols = identity_columns(size);
  for (auto& col : cols) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) col = c.apply_at(n, *it, col);
  }
  return CycloMatrix::from_columns(size, std::move(cols));
}

CycloMatrix matsumoto_lift(const Permutation& perm, const BraidedVectorSpace& c) {
  Permutation sorted(perm.size());
  std::iota(sorted.begin(), sorted.end(), std::size_t{0});
  if (!std::is_permutation(perm.begin(), perm.end(), sorted.begin())) {
    throw PreconditionError("not a permutation of 0..n-1");
  }
  return lift_of_word(bubble_sort_word(perm), perm.size(), c);
}

CycloMatrix quantum_symmetrizer(const BraidedVectorSpace& c, std::size_t n) {
  check_degree(c.dim(), n);
  auto cols = identity_columns(n == 0 ? 1 : c.dim());
  for (std::size_t k = 1; k < n; ++k) cols = next_degree(c, k, cols);
  const std::size_t size = cols.size();
  return CycloMatrix::from_columns(size, std::move(cols));
}

mpz_class DimProfile::sum() const {
  mpz_class s = 0;
  for (std::size_t v : dims) s += static_cast<unsigned long>(v);
  return s;
}

std::optional<mpz_class> DimProfile::total() const {
  if (!certified) return std::nullopt;
  return sum();
}

DimProfile dim_profile(const BraidedVectorSpace& c, std::size_t n_max) {
  check_degree(c.dim(), n_max);
  DimProfile p;
  p.braiding = c.provenance();
  p.dim = c.dim();
  p.dims.push_back(1);
  if (n_max >= 1) p.dims.push_back(c.dim());
  if (c.dim() == 0 && n_max >= 1) p.first_zero = 1;
  std::vector<SparseVector> cols = identity_columns(c.dim());
  bool vanished = c.dim() == 0;
  for (std::size_t n = 2; n <= n_max; ++n) {
    // S_n = T'_n (S_{n-1} (x) id), so a zero symmetrizer stays zero.
    if (!vanished) {
      cols = next_degree(c, n - 1, cols);
      p.dims.push_back(cyclo::rank_of_columns(cols));
    } else {
      p.dims.push_back(0);
    }
    if (p.dims.back() == 0) {
      vanished = true;
      if (!p.first_zero) p.first_zero = n;
    }
  }
  return p;
}

void certify(DimProfile& p, std::optional<std::size_t> predicted_top_degree) {
  p.predicted_top_degree = predicted_top_degree;
  p.certified = p.first_zero && predicted_top_degree && *predicted_top_degree < *p.first_zero;
}

}  // namespace yetter::nichols
