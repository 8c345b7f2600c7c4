#include "yetter/grp/character.hpp"

#include <algorithm>
#include <numeric>

#include "yetter/limits.hpp"

namespace yetter::grp {

Character::Character(Subgroup domain, std::vector<RootOfUnity> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.group()->order()) {
    throw PreconditionError("character value table must be indexed by parent elements");
  }
}

Character Character::trivial(Subgroup domain) {
  const auto n = domain.group()->order();
  return Character(std::move(domain), std::vector<RootOfUnity>(n));
}

const RootOfUnity& Character::operator()(Element g) const {
  if (g >= values_.size() || !domain_.contains(g)) {
    throw PreconditionError("character evaluated outside its domain");
  }
  return values_[g];
}

std::int64_t Character::order() const {
  std::int64_t n = 1;
  for (Element g : domain_.members()) n = std::lcm(n, values_[g].order());
  return n;
}

bool Character::is_trivial() const {
  return std::all_of(domain_.members().begin(), domain_.members().end(),
                     [&](Element g) { return values_[g].is_one(); });
}

bool Character::is_homomorphism() const {
  const auto& g = *domain_.group();
  for (Element a : domain_.members())
    for (Element b : domain_.members())
      if (values_[g.mul(a, b)] != values_[a] * values_[b]) return false;
  return true;
}

bool operator==(const Character& a, const Character& b) {
  if (!(a.domain_ == b.domain_)) return false;
  for (Element g : a.domain_.members()) {
    if (a.values_[g] != b.values_[g]) return false;
  }
  return true;
}

std::vector<Character> characters_of_group(const Subgroup& k) {
  const auto& gp = k.group();
  const auto& g = *gp;
  // Grow B from [K, K] to K one cyclic step at a time, extending every
  // character of B to <B, h> by choosing an m-th root of psi(h^m).
  const Subgroup derived = derived_subgroup(k);
  std::vector<bool> in_b(g.order(), false);
  std::vector<Element> b_members = derived.members();
  for (Element a : b_members) in_b[a] = true;

  struct Partial {
    std::vector<RootOfUnity> values;  // valid on B
  };
  std::vector<Partial> chars{Partial{std::vector<RootOfUnity>(g.order())}};

  while (b_members.size() < k.order()) {
    Element best = 0;
    std::size_t best_m = 0;
    for (Element h : k.members()) {
      if (in_b[h]) continue;
      std::size_t m = 1;
      for (Element p = h; !in_b[p]; p = g.mul(p, h)) ++m;
      if (m > best_m) {
        best_m = m;
        best = h;
      }
    }
    const Element h = best;
    const auto m = static_cast<std::int64_t>(best_m);
    const Element hm = g.pow(h, m);
    std::vector<Element> new_members;
    std::vector<std::pair<std::int64_t, Element>> decomposition;  // element -> (i, b) with h^i b
    for (std::int64_t i = 0; i < m; ++i) {
      const Element hi = g.pow(h, i);
      for (Element b : b_members) {
        const Element x = g.mul(hi, b);
        new_members.push_back(x);
        decomposition.emplace_back(i, b);
      }
    }
    std::vector<Partial> next;
    next.reserve(chars.size() * best_m);
    for (const auto& psi : chars) {
      const RootOfUnity target = psi.values[hm];
      // The m-th roots of target: r0 * (j/m) for j = 0..m-1, r0 = target^(1/m).
      const RootOfUnity r0(target.num(), target.den() * m);
      for (std::int64_t j = 0; j < m; ++j) {
        const RootOfUnity hv = r0 * RootOfUnity(j, m);
        Partial ext{psi.values};
        for (std::size_t t = 0; t < new_members.size(); ++t) {
          const auto& [i, b] = decomposition[t];
          ext.values[new_members[t]] = hv.pow(i) * psi.values[b];
        }
        next.push_back(std::move(ext));
      }
    }
    chars = std::move(next);
    b_members = std::move(new_members);
    std::sort(b_members.begin(), b_members.end());
    for (Element a : b_members) in_b[a] = true;
  }

  std::vector<Character> out;
  out.reserve(chars.size());
  for (auto& p : chars) {
    for (Element a = 0; a < g.order(); ++a) {
      if (!k.contains(a)) p.values[a] = RootOfUnity();
    }
    out.emplace_back(k, std::move(p.values));
  }
  return out;
}

std::vector<Character> characters_of_abelian(const Subgroup& a) {
  if (!a.is_abelian()) throw PreconditionError("characters_of_abelian needs an abelian subgroup");
  return characters_of_group(a);
}

MonomialRep::MonomialRep(Subgroup domain, std::size_t dim, std::vector<Matrix> matrices)
    : domain_(std::move(domain)), dim_(dim), matrices_(std::move(matrices)) {
  if (matrices_.size() != domain_.group()->order()) {
    throw PreconditionError("monomial matrices must be indexed by parent elements");
  }
  for (Element g : domain_.members()) {
    const auto& m = matrices_[g];
    if (m.perm.size() != dim_ || m.scale.size() != dim_) {
      throw PreconditionError("monomial matrix has wrong dimension");
    }
  }
}

MonomialRep MonomialRep::from_character(const Character& chi) {
  const auto& dom = chi.domain();
  std::vector<Matrix> mats(dom.group()->order());
  for (Element g : dom.members()) mats[g] = Matrix{{0}, {chi(g)}};
  return MonomialRep(dom, 1, std::move(mats));
}

const MonomialRep::Matrix& MonomialRep::operator()(Element g) const {
  if (g >= matrices_.size() || !domain_.contains(g)) {
    throw PreconditionError("representation evaluated outside its domain");
  }
  return matrices_[g];
}

cyclo::CycloNumber MonomialRep::trace(Element g) const {
  const auto& m = (*this)(g);
  cyclo::CycloNumber t;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (m.perm[i] == i) t.add_root(m.scale[i]);
  }
  return t;
}

std::optional<RootOfUnity> MonomialRep::scalar_value(Element g) const {
  const auto& m = (*this)(g);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (m.perm[i] != i || m.scale[i] != m.scale[0]) return std::nullopt;
  }
  return m.scale[0];
}

bool MonomialRep::is_homomorphism() const {
  const auto& g = *domain_.group();
  for (Element a : domain_.members()) {
    for (Element b : domain_.members()) {
      const auto& ma = matrices_[a];
      const auto& mb = matrices_[b];
      const auto& mab = matrices_[g.mul(a, b)];
      for (std::size_t i = 0; i < dim_; ++i) {
        // rho(a) rho(b) e_i = scale_b[i] scale_a[perm_b[i]] e_{perm_a[perm_b[i]]}
        const auto j = mb.perm[i];
        if (mab.perm[i] != ma.perm[j] || mab.scale[i] != mb.scale[i] * ma.scale[j]) return false;
      }
    }
  }
  return true;
}

MonomialRep induce_character(const Subgroup& k, const Subgroup& h, const Character& chi) {
  const auto& g = *k.group();
  if (k.group() != h.group()) throw PreconditionError("induction needs subgroups of one group");
  for (Element a : h.members()) {
    if (!k.contains(a)) throw PreconditionError("inducing subgroup is not contained in K");
  }
  if (!(chi.domain() == h)) throw PreconditionError("character domain differs from H");

  std::vector<Element> reps;
  std::vector<std::int64_t> coset_of(g.order(), -1);
  for (Element a : k.members()) {
    if (coset_of[a] >= 0) continue;
    const auto idx = static_cast<std::int64_t>(reps.size());
    reps.push_back(a);
    for (Element b : h.members()) coset_of[g.mul(a, b)] = idx;
  }
  const std::size_t dim = reps.size();
  std::vector<MonomialRep::Matrix> mats(g.order());
  for (Element a : k.members()) {
    auto& m = mats[a];
    m.perm.resize(dim);
    m.scale.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const Element at = g.mul(a, reps[i]);
      const auto j = static_cast<std::size_t>(coset_of[at]);
      m.perm[i] = static_cast<std::uint32_t>(j);
      m.scale[i] = chi(g.mul(g.inv(reps[j]), at));
    }
  }
  return MonomialRep(k, dim, std::move(mats));
}

cyclo::Rational rep_character_norm(const MonomialRep& rho) {
  cyclo::Rational total = 0;
  for (Element a : rho.domain().members()) {
    const auto t = rho.trace(a);
    total += (t * t.conj()).rational_part();
  }
  return total / static_cast<long>(rho.domain().order());
}

}  // namespace yetter::grp
