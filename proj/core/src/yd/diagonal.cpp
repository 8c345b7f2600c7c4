#include "yetter/yd/diagonal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "yetter/limits.hpp"
#include "yetter/rack/rack.hpp"

namespace yetter::yd {

DiagonalBraiding::DiagonalBraiding(std::size_t rank, RootOfUnity fill) : rank_(rank), q_(rank * rank, fill) {}

DiagonalBraiding::DiagonalBraiding(const std::vector<std::vector<RootOfUnity>>& rows) : rank_(rows.size()) {
  for (const auto& r : rows) {
    if (r.size() != rank_) throw PreconditionError("diagonal braiding matrix must be square");
    q_.insert(q_.end(), r.begin(), r.end());
  }
}

DiagonalBraiding DiagonalBraiding::restrict_to(const std::vector<std::size_t>& idx) const {
  DiagonalBraiding out(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b < idx.size(); ++b) out(a, b) = (*this)(idx[a], idx[b]);
  return out;
}

BraidedVectorSpace braiding_from_diagonal(const DiagonalBraiding& q) {
  const std::size_t d = q.rank();
  CycloMatrix c(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c.set(j * d + i, i * d + j, CycloNumber::from_root(q(i, j)));
  return BraidedVectorSpace(d, std::move(c), "diagonal");
}

std::variant<DiagonalBraiding, NotDiagonal> diagonal_form(const YDModule& m) { return diagonal_form({&m}); }

std::variant<DiagonalBraiding, NotDiagonal> diagonal_form(const std::vector<const YDModule*>& ms) {
  if (ms.empty()) throw PreconditionError("empty direct sum");
  for (const auto* m : ms) {
    if (!rack::is_abelian_rack(rack::conjugation_rack(m->conjugacy_class()))) {
      return NotDiagonal{"class of " + m->group()->label(m->basepoint()) + " is not an abelian rack", 0, 0};
    }
  }
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (const auto* m : ms) {
    offset.push_back(total);
    total += m->dim();
  }
  DiagonalBraiding q(total);
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (std::size_t i = 0; i < ms[a]->dim(); ++i) {
      const Element z = ms[a]->degree(i);
      for (std::size_t b = 0; b < ms.size(); ++b) {
        for (std::size_t j = 0; j < ms[b]->dim(); ++j) {
          const auto [target, coeff] = ms[b]->act(z, j);
          if (target != j) {
            return NotDiagonal{"t_{z,y} does not act diagonally", offset[a] + i, offset[b] + j};
          }
          q(offset[a] + i, offset[b] + j) = coeff;
        }
      }
    }
  }
  return q;
}

std::vector<std::size_t> DynkinDiagram::neighbours(std::size_t v) const {
  std::vector<std::size_t> out;
  for (const auto& [e, label] : edges) {
    if (e.first == v) out.push_back(e.second);
    if (e.second == v) out.push_back(e.first);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string DynkinDiagram::to_text() const {
  std::ostringstream os;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    os << v << " [" << vertices[v].to_string() << "]:";
    for (std::size_t w : neighbours(v)) {
      const auto key = std::minmax(v, w);
      os << " " << w << "(" << edges.at({key.first, key.second}).to_string() << ")";
    }
    os << "\n";
  }
  return os.str();
}

DynkinDiagram dynkin(const DiagonalBraiding& q) {
  DynkinDiagram d;
  const std::size_t n = q.rank();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) d.vertices.push_back(q(i, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto e = q.edge(i, j);
      if (e.is_one()) continue;
      d.edges.emplace(std::pair{i, j}, e);
      const auto a = find(i), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> comps;
  for (std::size_t i = 0; i < n; ++i) comps[find(i)].push_back(i);
  for (auto& [root, members] : comps) d.components.push_back(std::move(members));
  return d;
}

bool twist_equivalent(const DiagonalBraiding& p, const DiagonalBraiding& q) {
  if (p.rank() != q.rank()) throw PreconditionError("twist equivalence needs equal ranks");
  for (std::size_t i = 0; i < p.rank(); ++i) {
    if (p(i, i) != q(i, i)) return false;
    for (std::size_t j = i + 1; j < p.rank(); ++j)
      if (p.edge(i, j) != q.edge(i, j)) return false;
  }
  return true;
}

}  // namespace yetter::yd
