#include "yetter/cyclo/cyclo_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace yetter::cyclo {

CycloMatrix::CycloMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

CycloMatrix CycloMatrix::identity(std::size_t n) {
  CycloMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i].emplace(i, CycloNumber(1));
  return m;
}

CycloMatrix CycloMatrix::from_columns(std::size_t rows, std::vector<SparseVector> cols) {
  CycloMatrix m;
  m.rows_ = rows;
  m.cols_ = std::move(cols);
  for (auto& col : m.cols_) {
    std::erase_if(col, [&](const auto& kv) { return kv.second.is_zero(); });
    if (!col.empty() && col.rbegin()->first >= rows) {
      throw std::out_of_range("sparse column entry beyond row count");
    }
  }
  return m;
}

int CycloMatrix::conductor() const {
  int n = 1;
  for (const auto& col : cols_) {
    for (const auto& [r, v] : col) n = std::lcm(n, v.conductor());
  }
  return n;
}

std::size_t CycloMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& col : cols_) n += col.size();
  return n;
}

CycloNumber CycloMatrix::at(std::size_t row, std::size_t col) const {
  const auto& c = cols_.at(col);
  auto it = c.find(row);
  return it == c.end() ? CycloNumber() : it->second;
}

void CycloMatrix::set(std::size_t row, std::size_t col, CycloNumber value) {
  if (row >= rows_) throw std::out_of_range("row index out of range");
  auto& c = cols_.at(col);
  if (value.is_zero()) {
    c.erase(row);
  } else {
    c[row] = std::move(value);
  }
}

void CycloMatrix::add(std::size_t row, std::size_t col, const CycloNumber& value) {
  if (row >= rows_) throw std::out_of_range("row index out of range");
  auto& c = cols_.at(col);
  auto [it, inserted] = c.try_emplace(row, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) c.erase(it);
  }
}

CycloMatrix CycloMatrix::transpose() const {
  CycloMatrix t(cols(), rows_);
  for (std::size_t c = 0; c < cols_.size(); ++c) {
    for (const auto& [r, v] : cols_[c]) t.cols_[r].emplace(c, v);
  }
  return t;
}

SparseVector CycloMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& [c, x] : v) {
    for (const auto& [r, a] : cols_.at(c)) {
      auto [it, inserted] = out.try_emplace(r, a * x);
      if (!inserted) it->second += a * x;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

CycloMatrix operator*(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  CycloMatrix out(a.rows(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) out.cols_[c] = a.apply(b.cols_[c]);
  return out;
}

CycloMatrix operator+(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("matrix sum dimension mismatch");
  }
  CycloMatrix out = a;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    for (const auto& [r, v] : b.cols_[c]) out.add(r, c, v);
  }
  return out;
}

bool operator==(const CycloMatrix& a, const CycloMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_.size() != b.cols_.size()) return false;
  for (std::size_t c = 0; c < a.cols_.size(); ++c) {
    const auto& x = a.cols_[c];
    const auto& y = b.cols_[c];
    if (x.size() != y.size()) return false;
    for (auto ix = x.begin(), iy = y.begin(); ix != x.end(); ++ix, ++iy) {
      if (ix->first != iy->first || !(ix->second == iy->second)) return false;
    }
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Rank of a set of sparse rows that share one conductor. Rows are reduced in
// place; each step picks the shortest remaining row as pivot and clears its
// leading column from the others.
std::size_t rank_of_block(std::vector<SparseVector> rows) {
  std::size_t rank = 0;
  std::vector<bool> used(rows.size(), false);
  for (;;) {
    std::size_t best = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i] || rows[i].empty()) continue;
      if (best == rows.size() || rows[i].size() < rows[best].size()) best = i;
    }
    if (best == rows.size()) break;
    used[best] = true;
    ++rank;
    SparseVector& piv = rows[best];
    const std::size_t lead = piv.begin()->first;
    const CycloNumber inv = piv.begin()->second.inverse();
    for (auto& [c, v] : piv) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (used[i]) continue;
      auto hit = rows[i].find(lead);
      if (hit == rows[i].end()) continue;
      const CycloNumber f = hit->second;
      for (const auto& [c, v] : piv) {
        auto [it, inserted] = rows[i].try_emplace(c, -(f * v));
        if (!inserted) {
          it->second -= f * v;
          if (it->second.is_zero()) rows[i].erase(it);
        }
      }
    }
  }
  return rank;
}

}  // namespace

std::size_t rank_of_columns(const std::vector<SparseVector>& cols) {
  // Treat the columns as rows of the transpose; rank is unchanged.
  std::size_t max_index = 0;
  int conductor = 1;
  for (const auto& col : cols) {
    if (!col.empty()) max_index = std::max(max_index, col.rbegin()->first + 1);
    for (const auto& [r, v] : col) conductor = std::lcm(conductor, v.conductor());
  }
  UnionFind uf(max_index);
  for (const auto& col : cols) {
    for (auto it = col.begin(); it != col.end(); ++it) uf.unite(col.begin()->first, it->first);
  }
  std::unordered_map<std::size_t, std::vector<SparseVector>> blocks;
  for (const auto& col : cols) {
    if (col.empty()) continue;
    SparseVector row;
    for (const auto& [r, v] : col) {
      if (v.is_zero()) continue;
      row.emplace(r, v.conductor() == conductor ? v : lift_conductor(v, conductor));
    }
    if (!row.empty()) blocks[uf.find(row.begin()->first)].push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (auto& [root, rows] : blocks) rank += rank_of_block(std::move(rows));
  return rank;
}

std::size_t matrix_rank(const CycloMatrix& m) { return rank_of_columns(m.columns()); }

}  // namespace yetter::cyclo
