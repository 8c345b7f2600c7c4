#pragma once

// Reference computations written directly from definitions, independent of the
// library's algorithms. Only intended for small inputs.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline Matrix mat_mul(const Matrix& a, const Matrix& b, int m) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] = (c[i][j] + a[i][k] * b[k][j]) % m;
  return c;
}

/// A group given by an explicit element list and a multiplication closure.
struct ExplicitGroup {
  std::vector<Matrix> elems;
  int modulus;
  std::size_t index(const Matrix& x) const {
    return static_cast<std::size_t>(std::find(elems.begin(), elems.end(), x) - elems.begin());
  }
};

/// All upper unitriangular n x n matrices over Z/m.
inline ExplicitGroup unitriangular_matrices(int n, int m) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  ExplicitGroup g{{}, m};
  std::vector<int> digits(slots.size(), 0);
  for (;;) {
    Matrix x(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) x[i][i] = 1;
    for (std::size_t s = 0; s < slots.size(); ++s) x[slots[s].first][slots[s].second] = digits[s];
    g.elems.push_back(x);
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == m) digits[k++] = 0;
    if (k == digits.size()) break;
  }
  return g;
}

/// Heisenberg matrices [[1,a,c],[0,I_n,b],[0,0,1]] over Z/m, with c read mod N.
struct HeisElement {
  std::vector<int> a, b;
  int c;
  bool operator==(const HeisElement&) const = default;
  auto operator<=>(const HeisElement&) const = default;
};

inline std::vector<HeisElement> heisenberg_elements(int n, int m, int big_n) {
  std::vector<HeisElement> out;
  const int total = 2 * n;
  std::vector<int> d(total, 0);
  for (;;) {
    for (int c = 0; c < big_n; ++c) {
      out.push_back({{d.begin(), d.begin() + n}, {d.begin() + n, d.end()}, c});
    }
    int k = 0;
    while (k < total && ++d[k] == m) d[k++] = 0;
    if (k == total) break;
  }
  return out;
}

inline HeisElement heis_mul(const HeisElement& x, const HeisElement& y, int m, int big_n) {
  HeisElement z{x.a, x.b, 0};
  int dot = 0;
  for (std::size_t k = 0; k < x.a.size(); ++k) {
    z.a[k] = (x.a[k] + y.a[k]) % m;
    z.b[k] = (x.b[k] + y.b[k]) % m;
    dot += x.a[k] * y.b[k];
  }
  z.c = (x.c + y.c + dot) % big_n;
  return z;
}

/// Center, classes and commutator subgroup from a raw multiplication callback.
struct BruteGroupData {
  std::size_t center_size = 0;
  std::vector<std::size_t> class_sizes;  // sorted
  std::size_t commutator_size = 0;
};

inline BruteGroupData brute_group_data(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  std::size_t e = 0;
  for (std::size_t a = 0; a < n; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = mul(a, b) == b;
    if (ok) e = a;
  }
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (mul(a, b) == e) inv[a] = b;
  BruteGroupData out;
  for (std::size_t a = 0; a < n; ++a) {
    bool central = true;
    for (std::size_t b = 0; b < n && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) ++out.center_size;
  }
  std::vector<bool> seen(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    if (seen[a]) continue;
    std::set<std::size_t> cls;
    for (std::size_t g = 0; g < n; ++g) cls.insert(mul(mul(g, a), inv[g]));
    for (auto c : cls) seen[c] = true;
    out.class_sizes.push_back(cls.size());
  }
  std::sort(out.class_sizes.begin(), out.class_sizes.end());
  std::set<std::size_t> comm;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) comm.insert(mul(mul(a, b), mul(inv[a], inv[b])));
  // Close under multiplication.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::size_t> cur(comm.begin(), comm.end());
    for (auto x : cur)
      for (auto y : cur)
        if (comm.insert(mul(x, y)).second) grew = true;
  }
  out.commutator_size = comm.size();
  return out;
}

/// Counts homomorphisms from a finite group to the circle group by trying
/// every assignment of exponent-th roots to the generators.
inline std::size_t count_characters(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul,
                                    const std::vector<std::size_t>& gens, std::size_t identity, int exponent) {
  // Express every element as a word in gens by BFS.
  std::vector<std::vector<int>> word_counts(n);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> queue{identity};
  seen[identity] = true;
  word_counts[identity] = std::vector<int>(gens.size(), 0);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const auto y = mul(queue[i], gens[k]);
      if (!seen[y]) {
        seen[y] = true;
        word_counts[y] = word_counts[queue[i]];
        ++word_counts[y][k];
        queue.push_back(y);
      }
    }
  }
  std::size_t count = 0;
  std::vector<int> img(gens.size(), 0);
  for (;;) {
    auto value = [&](std::size_t x) {
      long s = 0;
      for (std::size_t k = 0; k < gens.size(); ++k) s += static_cast<long>(word_counts[x][k]) * img[k];
      return static_cast<int>(s % exponent);
    };
    bool hom = true;
    for (std::size_t a = 0; a < n && hom; ++a)
      for (std::size_t b = 0; b < n && hom; ++b) hom = value(mul(a, b)) == (value(a) + value(b)) % exponent;
    if (hom) ++count;
    std::size_t k = 0;
    while (k < img.size() && ++img[k] == exponent) img[k++] = 0;
    if (k == img.size()) break;
  }
  return count;
}

}  // namespace oracle
