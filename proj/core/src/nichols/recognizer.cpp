#include "yetter/nichols/recognizer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "yetter/limits.hpp"

namespace yetter::nichols {

namespace {

Verdict vertex_verdict(const RootOfUnity& q) {
  if (q.is_one()) return Verdict::infinite_dim(Axis::finite(mpz_class(1)), "polynomial-line", "k[T]");
  return Verdict::finite_dim(mpz_class(q.order()), "truncated-line",
                             "k[T]/T^" + std::to_string(q.order()));
}

std::string edge_text(std::size_t i, std::size_t j) {
  return std::to_string(i) + "-" + std::to_string(j);
}

bool has_edge(const DynkinDiagram& g, std::size_t i, std::size_t j) {
  return g.edges.count({std::min(i, j), std::max(i, j)}) > 0;
}

struct SuperA {
  std::int64_t dim;
  std::size_t top;
};

// Connected rank two with both vertices -1, or q -q^-1- -1: super type A(1|1).
// PBW roots a1, a2, a1 + a2; the non-simple one has q_beta = edge (resp. -1).
std::optional<SuperA> super_a_rank_two(const DiagonalBraiding& q) {
  const RootOfUnity m1 = RootOfUnity::minus_one();
  const RootOfUnity a = q(0, 0), b = q(1, 1), e = q.edge(0, 1);
  if (e.is_one()) return std::nullopt;
  if (a == m1 && b == m1) {
    const auto n = static_cast<std::size_t>(e.order());
    return SuperA{4 * e.order(), 2 + 2 * (n - 1)};
  }
  for (int flip = 0; flip < 2; ++flip) {
    const RootOfUnity p = flip ? b : a, other = flip ? a : b;
    if (other == m1 && !p.is_one() && e == p.inverse()) {
      const auto n = static_cast<std::size_t>(p.order());
      return SuperA{4 * p.order(), (n - 1) + 1 + 2};
    }
  }
  return std::nullopt;
}

std::optional<Verdict> match_rank_two(const DiagonalBraiding& q) {
  const RootOfUnity a = q(0, 0), b = q(1, 1), e = q.edge(0, 1);
  if (auto s = super_a_rank_two(q)) {
    return Verdict::finite_dim(mpz_class(std::to_string(s->dim)), "super-a-rank-two",
                               "vertices " + a.to_string() + ", " + b.to_string() + ", edge " + e.to_string());
  }
  if (a == b && !a.is_one()) {
    if (e == a.inverse()) {
      std::optional<mpz_class> v;
      if (a.order() == 3) v = 27;
      return Verdict::finite_dim(v, "a2-constant-q", "vertices " + a.to_string() + ", edge q^-1");
    }
    if (e.order() == 12 && a == RootOfUnity::minus_one() * e * e) {
      return Verdict::finite_dim(std::nullopt, "ufo8", "edge of order 12, vertices -zeta^2");
    }
    // With equal vertices q != -1, A2 and ufo(8) are the only finite rank-two diagrams.
    return Verdict::infinite_dim(Axis::infinite(), "equal-vertices-outside-list",
                                 "vertices " + a.to_string() + ", edge " + e.to_string())
        .assuming(Assumption::FiniteGkImpliesFiniteRootSystem);
  }
  for (int flip = 0; flip < 2; ++flip) {
    const RootOfUnity w = flip ? b : a, other = flip ? a : b;
    if (w.order() != 3) continue;
    if (other.order() > 3 && e == other.inverse()) {
      return Verdict::finite_dim(std::nullopt, "br2", "omega -q^-1- q");
    }
    const RootOfUnity p = e * w;  // e = w^2 p
    if (p.order() > 3 && other == w * p.inverse()) {
      return Verdict::finite_dim(std::nullopt, "br2", "omega -omega^2 q- omega q^-1");
    }
  }
  return std::nullopt;
}

std::optional<Verdict> match_rank_three(const DiagonalBraiding& q, const DynkinDiagram& g) {
  const auto m1 = RootOfUnity::minus_one();
  if (g.edges.size() == 3) {
    if (q(0, 0) == m1 && q(1, 1) == m1 && q(2, 2) == m1) {
      const RootOfUnity x = q.edge(0, 1), y = q.edge(1, 2), z = q.edge(0, 2);
      if ((x * y * z).is_one()) {
        std::optional<mpz_class> v;
        if (x == y && y == z && x.order() == 3) v = 432;
        return Verdict::finite_dim(v, "d21alpha", "triangle of -1 vertices with edge product 1");
      }
    }
    return std::nullopt;
  }
  if (g.edges.size() != 2) return std::nullopt;
  std::size_t mid = 0;
  while (g.neighbours(mid).size() != 2) ++mid;
  std::vector<std::size_t> ends;
  for (std::size_t v = 0; v < 3; ++v)
    if (v != mid) ends.push_back(v);
  for (int flip = 0; flip < 2; ++flip) {
    const std::size_t u = flip ? ends[1] : ends[0], v = flip ? ends[0] : ends[1];
    const RootOfUnity z = q(u, u);
    if (z.order() != 9) continue;
    const RootOfUnity zi = z.inverse();
    if (q.edge(u, mid) != zi || q(v, v) != z.pow(-3)) continue;
    if (q(mid, mid) == z && q.edge(mid, v) == zi) {
      return Verdict::finite_dim(std::nullopt, "br3", "zeta -zeta^-1- zeta -zeta^-1- zeta^-3");
    }
    if (q(mid, mid) == z.pow(-4) && q.edge(mid, v) == z.pow(4)) {
      return Verdict::finite_dim(std::nullopt, "br3", "zeta -zeta^-1- zeta^-4 -zeta^4- zeta^-3");
    }
  }
  return std::nullopt;
}

Verdict component_verdict(const DiagonalBraiding& q) {
  if (q.rank() == 1) return vertex_verdict(q(0, 0));
  const DynkinDiagram g = yd::dynkin(q);
  std::optional<Verdict> v;
  if (q.rank() == 2) v = match_rank_two(q);
  if (!v && q.rank() == 3) v = match_rank_three(q, g);
  if (v) return *v;
  if (auto top = predicted_top_degree(q)) {
    return Verdict::finite_dim(std::nullopt, "finite-cartan-type", "PBW top degree " + std::to_string(*top));
  }
  return Verdict::unknown("unrecognized", "connected diagram outside the recognized patterns");
}

// Leading pivots of Gaussian elimination without row swaps; all positive iff
// the symmetric matrix is positive definite.
bool positive_definite(std::vector<std::vector<mpq_class>> m) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const mpq_class f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

std::optional<std::vector<mpq_class>> symmetrizer_weights(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  std::vector<std::optional<mpq_class>> d(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (d[s]) continue;
    d[s] = mpq_class(1);
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        if (a[j][i] == 0) return std::nullopt;
        const mpq_class dj = *d[i] * a[i][j] / a[j][i];
        if (!d[j]) {
          d[j] = dj;
          stack.push_back(j);
        } else if (*d[j] != dj) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<mpq_class> out;
  for (auto& x : d) out.push_back(*x);
  return out;
}

std::vector<std::vector<int>> positive_roots(const std::vector<std::vector<int>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> roots;
  std::set<std::vector<int>> known;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> r(n, 0);
    r[i] = 1;
    roots.push_back(r);
    known.insert(r);
  }
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (roots.size() > 2000) throw std::logic_error("root generation did not terminate");
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> beta = roots[k];
      int p = 0;
      for (;;) {
        beta[i] -= 1;
        if (!known.count(beta)) break;
        ++p;
      }
      int pairing = 0;  // <beta, alpha_i^vee>
      for (std::size_t j = 0; j < n; ++j) pairing += roots[k][j] * a[i][j];
      if (p - pairing > 0) {
        std::vector<int> up = roots[k];
        up[i] += 1;
        if (known.insert(up).second) roots.push_back(up);
      }
    }
  }
  return roots;
}

}  // namespace

Verdict constant_q_verdict(RootOfUnity q, std::size_t d) {
  if (d == 0) throw PreconditionError("dimension must be positive");
  if (d == 1) return vertex_verdict(q);
  const std::string dim = "D=" + std::to_string(d);
  if (q.is_one()) {
    return Verdict::infinite_dim(Axis::finite(mpz_class(static_cast<unsigned long>(d))), "symmetric-algebra", dim);
  }
  if (q == RootOfUnity::minus_one()) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), 2, d);
    return Verdict::finite_dim(v, "exterior-algebra", dim);
  }
  if (q.order() == 3 && d == 2) return Verdict::finite_dim(mpz_class(27), "a2-constant-q", dim);
  return Verdict::infinite_dim(Axis::infinite(), "constant-q-other", dim + ", q=" + q.to_string());
}

std::vector<std::vector<std::size_t>> biconnected_blocks(const DynkinDiagram& g) {
  const std::size_t n = g.vertices.size();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  std::vector<std::vector<std::size_t>> blocks;
  int time = 0;
  std::function<void(std::size_t, std::optional<std::size_t>)> dfs = [&](std::size_t u,
                                                                       std::optional<std::size_t> parent) {
    disc[u] = low[u] = time++;
    for (std::size_t v : g.neighbours(u)) {
      if (parent && v == *parent) continue;
      if (disc[v] < 0) {
        stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::set<std::size_t> block;
          for (;;) {
            auto [a, b] = stack.back();
            stack.pop_back();
            block.insert(a);
            block.insert(b);
            if (a == u && b == v) break;
          }
          blocks.emplace_back(block.begin(), block.end());
        }
      } else if (disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s)
    if (disc[s] < 0) dfs(s, std::nullopt);
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::optional<CartanData> cartan_type(const DiagonalBraiding& q) {
  const std::size_t n = q.rank();
  CartanData out;
  out.a.assign(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    const RootOfUnity qi = q(i, i);
    if (qi.is_one()) return std::nullopt;
    out.a[i][i] = 2;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const RootOfUnity e = q.edge(i, j);
      bool found = false;
      for (std::int64_t m = 0; m < qi.order(); ++m) {
        if (qi.pow(-m) == e) {
          out.a[i][j] = static_cast<int>(-m);
          found = true;
          break;
        }
      }
      if (!found) return std::nullopt;
    }
  }
  if (auto d = symmetrizer_weights(out.a)) {
    std::vector<std::vector<mpq_class>> b(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b[i][j] = (*d)[i] * out.a[i][j];
    out.finite_type = positive_definite(std::move(b));
  }
  if (out.finite_type) out.positive_roots = positive_roots(out.a);
  return out;
}

std::optional<std::size_t> predicted_top_degree(const DiagonalBraiding& q) {
  if (q.rank() == 2) {
    if (auto s = super_a_rank_two(q)) return s->top;
  }
  const auto cartan = cartan_type(q);
  if (!cartan || !cartan->finite_type) return std::nullopt;
  std::size_t top = 0;
  for (const auto& beta : cartan->positive_roots) {
    RootOfUnity qb;
    std::size_t height = 0;
    for (std::size_t i = 0; i < q.rank(); ++i) {
      height += static_cast<std::size_t>(beta[i]);
      for (std::size_t j = 0; j < q.rank(); ++j) qb *= q(i, j).pow(static_cast<std::int64_t>(beta[i]) * beta[j]);
    }
    if (qb.is_one()) return std::nullopt;
    top += static_cast<std::size_t>(qb.order() - 1) * height;
  }
  return top;
}

Verdict diagonal_verdict(const DiagonalBraiding& q) {
  if (q.rank() == 0) return Verdict::finite_dim(mpz_class(1), "rank-zero");
  const DynkinDiagram g = yd::dynkin(q);

  if (g.edges.empty()) {
    std::vector<Verdict> parts;
    for (const auto& v : g.vertices) parts.push_back(vertex_verdict(v));
    Verdict out = combine(parts, "totally-disconnected");
    out.detail = std::to_string(q.rank()) + " vertices";
    return out;
  }

  for (const auto& [ij, label] : g.edges) {
    const auto [i, j] = ij;
    if (g.vertices[i].is_one() || g.vertices[j].is_one()) {
      return Verdict::infinite_dim(Axis::infinite(), "edge-at-vertex-one",
                                   "edge " + edge_text(i, j) + " labelled " + label.to_string());
    }
  }
  for (const auto& block : biconnected_blocks(g)) {
    if (block.size() >= 4) {
      return Verdict::infinite_dim(Axis::infinite(), "cycle-longer-than-three",
                                   "biconnected block of " + std::to_string(block.size()) + " vertices")
          .assuming(Assumption::FiniteGkImpliesFiniteRootSystem);
    }
  }
  const auto m1 = RootOfUnity::minus_one();
  const std::size_t n = q.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        if (!has_edge(g, i, j) || !has_edge(g, j, k) || !has_edge(g, i, k)) continue;
        if (g.vertices[i] == m1 || g.vertices[j] == m1 || g.vertices[k] == m1) continue;
        return Verdict::infinite_dim(Axis::infinite(), "triangle-without-minus-one",
                                     "triangle " + std::to_string(i) + "-" + std::to_string(j) + "-" +
                                         std::to_string(k))
            .assuming(Assumption::FiniteGkImpliesFiniteRootSystem);
      }

  // A triangle of -1 vertices is finite only as D(2,1;alpha), which does not
  // extend to a larger connected diagram with finite root system.
  for (const auto& comp : g.components) {
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = a + 1; b < comp.size(); ++b)
        for (std::size_t c = b + 1; c < comp.size(); ++c) {
          const std::size_t i = comp[a], j = comp[b], k = comp[c];
          if (!has_edge(g, i, j) || !has_edge(g, j, k) || !has_edge(g, i, k)) continue;
          if (g.vertices[i] != m1 || g.vertices[j] != m1 || g.vertices[k] != m1) continue;
          const bool d21 = (q.edge(i, j) * q.edge(j, k) * q.edge(i, k)).is_one();
          if (d21 && comp.size() == 3) continue;
          return Verdict::infinite_dim(Axis::infinite(), "minus-one-triangle-outside-list",
                                       d21 ? "D(2,1;alpha) triangle inside a larger component"
                                           : "triangle of -1 vertices with edge product " +
                                                 (q.edge(i, j) * q.edge(j, k) * q.edge(i, k)).to_string())
              .assuming(Assumption::FiniteGkImpliesFiniteRootSystem);
        }
  }

  std::vector<Verdict> parts;
  for (const auto& comp : g.components) parts.push_back(component_verdict(q.restrict_to(comp)));
  if (parts.size() == 1) return parts.front();
  return combine(parts, "product-of-components");
}

DimProfile dim_profile(const DiagonalBraiding& q, std::size_t n_max) {
  DimProfile p = dim_profile(yd::braiding_from_diagonal(q), n_max);
  certify(p, predicted_top_degree(q));
  return p;
}

HvResult hv_dimension_rule(std::size_t d1, std::size_t d2, bool three_dim_summand_diagonal) {
  const std::size_t a = std::min(d1, d2), b = std::max(d1, d2);
  static const std::set<std::pair<std::size_t, std::size_t>> allowed{{1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}};
  const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  if (!allowed.count({a, b})) return {true, "dimension pair " + pair + " is not allowed"};
  if (b == 3 && three_dim_summand_diagonal) {
    return {true, "dimension pair " + pair + " with a 3-dimensional summand of diagonal type"};
  }
  return {false, "dimension pair " + pair + " is allowed"};
}

HvResult hv_exclusion(const yd::YDModule& m1, const yd::YDModule& m2) {
  if (m1.group() != m2.group()) throw PreconditionError("modules over different groups");
  for (const auto* m : {&m1, &m2}) {
    if (!m->from_character() && grp::rep_character_norm(m->rep()) != 1) {
      throw PreconditionError("fiber representation is reducible");
    }
  }
  const auto& g = *m1.group();
  std::vector<grp::Element> support = m1.conjugacy_class().members;
  support.insert(support.end(), m2.conjugacy_class().members.begin(), m2.conjugacy_class().members.end());
  bool abelian = true;
  for (std::size_t i = 0; i < support.size() && abelian; ++i)
    for (std::size_t j = i + 1; j < support.size(); ++j)
      if (!g.commute(support[i], support[j])) {
        abelian = false;
        break;
      }
  if (abelian) return {false, "joint support generates an abelian group; no obstruction"};
  if (grp::closure(g, support).size() != g.order()) {
    return {false, "joint support generates a proper subgroup; no obstruction"};
  }
  if (yd::c_squared_is_identity(m1, m2)) return {false, "c^2 is the identity on M1 (x) M2"};

  bool diagonal_three = false;
  for (const auto* m : {&m1, &m2}) {
    if (m->dim() == 3 && std::holds_alternative<DiagonalBraiding>(yd::diagonal_form(*m))) diagonal_three = true;
  }
  return hv_dimension_rule(m1.dim(), m2.dim(), diagonal_three);
}

Verdict type_c_verdict(const rack::TypeCWitness& w, bool assume_conjecture) {
  const auto checked = rack::revalidate(w);
  if (!checked.valid()) throw PreconditionError("type C witness does not revalidate");
  Verdict v = Verdict::infinite_dim(assume_conjecture ? Axis::infinite() : Axis::unknown(), "type-c-rack",
                                    "r=" + w.group->label(w.r) + ", s=" + w.group->label(w.s));
  if (assume_conjecture) v.assuming(Assumption::TypeCForcesInfiniteGk);
  return v;
}

}  // namespace yetter::nichols
