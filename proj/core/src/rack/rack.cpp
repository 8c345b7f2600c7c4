#include "yetter/rack/rack.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "yetter/limits.hpp"

namespace yetter::rack {

Rack Rack::from_table(std::size_t n, std::vector<std::uint32_t> table) {
  if (table.size() != n * n) throw PreconditionError("rack table has wrong size");
  for (auto v : table) {
    if (v >= n) throw PreconditionError("rack table entry out of range");
  }
  Rack r;
  r.size_ = n;
  r.table_ = std::move(table);
  if (!r.satisfies_axioms()) throw PreconditionError("table does not satisfy the rack axioms");
  return r;
}

Rack Rack::conjugation(const GroupPtr& g, std::vector<Element> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  Rack r;
  r.size_ = subset.size();
  r.parent_ = g;
  r.elements_ = std::move(subset);
  r.table_.resize(r.size_ * r.size_);
  for (std::uint32_t x = 0; x < r.size_; ++x) {
    for (std::uint32_t y = 0; y < r.size_; ++y) {
      const auto pos = r.position(g->conj(r.elements_[x], r.elements_[y]));
      if (!pos) throw PreconditionError("subset is not stable under conjugation by its members");
      r.table_[x * r.size_ + y] = *pos;
    }
  }
  if (!r.satisfies_axioms()) throw std::logic_error("conjugation rack violates the rack axioms");
  return r;
}

Rack Rack::conjugation(const grp::ConjugacyClass& cls) { return conjugation(cls.group, cls.members); }

Rack conjugation_rack(const grp::ConjugacyClass& cls) { return Rack::conjugation(cls); }

std::optional<std::uint32_t> Rack::position(Element g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || *it != g) return std::nullopt;
  return static_cast<std::uint32_t>(it - elements_.begin());
}

bool Rack::satisfies_axioms() const {
  const auto n = static_cast<std::uint32_t>(size_);
  for (std::uint32_t x = 0; x < n; ++x) {
    std::vector<bool> hit(n, false);
    for (std::uint32_t y = 0; y < n; ++y) hit[op(x, y)] = true;
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) return false;
  }
  auto distributes = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    return op(x, op(y, z)) == op(op(x, y), op(x, z));
  };
  if (n <= 200) {
    for (std::uint32_t x = 0; x < n; ++x)
      for (std::uint32_t y = 0; y < n; ++y)
        for (std::uint32_t z = 0; z < n; ++z)
          if (!distributes(x, y, z)) return false;
    return true;
  }
  std::mt19937 rng(0x7ac);
  std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
  for (int t = 0; t < 200000; ++t) {
    if (!distributes(pick(rng), pick(rng), pick(rng))) return false;
  }
  return true;
}

bool is_abelian_rack(const Rack& r) {
  for (std::uint32_t x = 0; x < r.size(); ++x)
    for (std::uint32_t y = 0; y < r.size(); ++y)
      if (r.op(x, y) != y) return false;
  return true;
}

namespace {

using Perm = std::vector<std::uint32_t>;

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

// Closure of the given permutations; element 0 is the identity.
std::vector<Perm> perm_closure(std::size_t n, const std::vector<Perm>& gens) {
  Perm id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::vector<Perm> elems{id};
  std::map<Perm, std::size_t> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) {
      Perm p = compose(s, elems[i]);
      if (index.count(p)) continue;
      if (elems.size() >= limits().inner_group_cap) {
        throw CapExceeded("inner group exceeds " + std::to_string(limits().inner_group_cap) + " elements");
      }
      index.emplace(p, elems.size());
      elems.push_back(std::move(p));
    }
  }
  return elems;
}

}  // namespace

InnerGroup inner_group(const Rack& r) {
  const auto n = r.size();
  std::vector<Perm> gens(n, Perm(n));
  for (std::uint32_t x = 0; x < n; ++x)
    for (std::uint32_t y = 0; y < n; ++y) gens[x][y] = r.op(x, y);
  auto elems = perm_closure(n, gens);
  std::map<Perm, Element> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], static_cast<Element>(i));
  const auto m = elems.size();
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = index.at(compose(elems[a], elems[b]));
  InnerGroup out;
  for (const auto& g : gens) out.phi.push_back(index.at(g));
  std::vector<Element> gen_idx = out.phi;
  std::sort(gen_idx.begin(), gen_idx.end());
  gen_idx.erase(std::unique(gen_idx.begin(), gen_idx.end()), gen_idx.end());
  if (gen_idx.size() == 1 && gen_idx.front() == 0) gen_idx.clear();
  out.group = grp::FiniteGroup::from_table(m, table, 0, gen_idx, {}, grp::Validation::Sampled);
  out.perms = std::move(elems);
  return out;
}

bool is_rack_morphism(const Rack& from, const Rack& to, std::span<const std::uint32_t> f) {
  if (f.size() != from.size()) return false;
  for (std::uint32_t x = 0; x < from.size(); ++x)
    for (std::uint32_t y = 0; y < from.size(); ++y)
      if (f[from.op(x, y)] != to.op(f[x], f[y])) return false;
  return true;
}

InnerExtension extend_to_inner(const Rack& from, const Rack& to, std::span<const std::uint32_t> f) {
  if (!is_rack_morphism(from, to, f)) throw PreconditionError("map is not a rack morphism");
  InnerExtension out;
  out.source = inner_group(from);
  out.target = inner_group(to);
  const auto& gx = *out.source.group;
  const auto& gy = *out.target.group;
  // Walk Inn X from the identity along the generators phi_x, carrying the
  // image word in Inn Y; a second arrival must agree with the first.
  constexpr Element unset = ~Element{0};
  out.map.assign(gx.order(), unset);
  out.map[gx.identity()] = gy.identity();
  std::vector<Element> queue{gx.identity()};
  out.well_defined = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element a = queue[i];
    for (std::uint32_t x = 0; x < from.size(); ++x) {
      const Element next = gx.mul(out.source.phi[x], a);
      const Element image = gy.mul(out.target.phi[f[x]], out.map[a]);
      if (out.map[next] == unset) {
        out.map[next] = image;
        queue.push_back(next);
      } else if (out.map[next] != image) {
        out.well_defined = false;
      }
    }
  }
  std::vector<bool> hit(gy.order(), false);
  for (Element v : out.map) {
    if (v != unset) hit[v] = true;
  }
  out.surjective = std::find(hit.begin(), hit.end(), false) == hit.end();
  if (!out.well_defined) out.map.clear();
  return out;
}

}  // namespace yetter::rack
