#include "yetter/yd/braided.hpp"

#include <random>

#include "yetter/limits.hpp"

namespace yetter::yd {

BraidedVectorSpace::BraidedVectorSpace(std::size_t dim, CycloMatrix braiding, std::string provenance)
    : dim_(dim), braiding_(std::move(braiding)), provenance_(std::move(provenance)) {
  if (braiding_.rows() != dim * dim || braiding_.cols() != dim * dim) {
    throw PreconditionError("braiding must act on the tensor square");
  }
  images_.resize(dim * dim);
  for (std::size_t c = 0; c < dim * dim; ++c) {
    for (const auto& [r, v] : braiding_.column(c)) images_[c].emplace_back(static_cast<std::uint32_t>(r), v);
  }
}

std::size_t tensor_power_dim(std::size_t d, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) {
    total *= d;
    if (total > limits().symmetrizer_dim_cap) {
      throw CapExceeded("tensor power dimension " + std::to_string(d) + "^" + std::to_string(n) +
                        " exceeds cap " + std::to_string(limits().symmetrizer_dim_cap));
    }
  }
  return total;
}

SparseVector BraidedVectorSpace::apply_at(std::size_t n, std::size_t p, const SparseVector& v) const {
  // Word w = prefix * D^(n-p) + (i*D + j) * D^(n-p-2) + suffix.
  std::size_t low = 1;
  for (std::size_t k = 0; k + p + 2 < n; ++k) low *= dim_;
  const std::size_t mid = dim_ * dim_;
  SparseVector out;
  for (const auto& [w, x] : v) {
    const std::size_t suffix = w % low;
    const std::size_t pair = (w / low) % mid;
    const std::size_t prefix = w / (low * mid);
    for (const auto& [kl, a] : images_[pair]) {
      const std::size_t target = (prefix * mid + kl) * low + suffix;
      auto [it, inserted] = out.try_emplace(target, a * x);
      if (!inserted) {
        it->second += a * x;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

bool satisfies_braid_equation(const BraidedVectorSpace& v) {
  const std::size_t d = v.dim();
  const std::size_t total = d * d * d;
  auto check = [&](std::size_t w) {
    SparseVector e{{w, CycloNumber(1)}};
    // Rightmost operator first.
    const auto lhs = v.apply_at(3, 0, v.apply_at(3, 1, v.apply_at(3, 0, e)));
    const auto rhs = v.apply_at(3, 1, v.apply_at(3, 0, v.apply_at(3, 1, e)));
    if (lhs.size() != rhs.size()) return false;
    for (auto a = lhs.begin(), b = rhs.begin(); a != lhs.end(); ++a, ++b) {
      if (a->first != b->first || !(a->second == b->second)) return false;
    }
    return true;
  };
  if (total <= 20000) {
    for (std::size_t w = 0; w < total; ++w)
      if (!check(w)) return false;
    return true;
  }
  std::mt19937_64 rng(0xb4a1d);
  std::uniform_int_distribution<std::size_t> pick(0, total - 1);
  for (int t = 0; t < 4000; ++t)
    if (!check(pick(rng))) return false;
  return true;
}

bool is_invertible(const BraidedVectorSpace& v) {
  return cyclo::matrix_rank(v.braiding()) == v.dim() * v.dim();
}

}  // namespace yetter::yd
