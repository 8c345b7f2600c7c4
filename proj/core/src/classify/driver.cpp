#include "yetter/classify/driver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "yetter/limits.hpp"
#include "yetter/nichols/recognizer.hpp"

namespace yetter::classify {

namespace {

// Bron-Kerbosch with pivoting over vertices in index order.
void maximal_cliques(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t> r, std::vector<std::size_t> p,
                     std::vector<std::size_t> x, std::vector<std::vector<std::size_t>>& out, std::size_t cap,
                     bool& truncated) {
  if (out.size() >= cap) {
    truncated = true;
    return;
  }
  if (p.empty() && x.empty()) {
    std::sort(r.begin(), r.end());
    out.push_back(r);
    return;
  }
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* set : {&p, &x})
    for (std::size_t u : *set) {
      std::size_t deg = 0;
      for (std::size_t v : p) deg += adj[u][v];
      if (deg > best) best = deg, pivot = u;
    }
  const std::vector<std::size_t> candidates = p;
  for (std::size_t v : candidates) {
    if (adj[pivot][v]) continue;
    std::vector<std::size_t> r2 = r, p2, x2;
    r2.push_back(v);
    for (std::size_t u : p)
      if (adj[v][u]) p2.push_back(u);
    for (std::size_t u : x)
      if (adj[v][u]) x2.push_back(u);
    maximal_cliques(adj, r2, p2, x2, out, cap, truncated);
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

bool is_abelian_class(const grp::FiniteGroup& g, const ConjugacyClass& cls) {
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i + 1; j < cls.size(); ++j)
      if (!g.commute(cls.members[i], cls.members[j])) return false;
  return true;
}

}  // namespace

std::size_t ClassificationReport::violations() const {
  std::size_t n = 0;
  for (const auto& c : classes)
    if (!c.abelian && (!c.type_c || c.type_c->outcome != rack::TypeCOutcome::TypeC)) ++n;
  return n;
}

ClassificationReport classify_group(const grp::GroupPtr& gp, const DriverOptions& opts) {
  const auto& g = *gp;
  if (g.order() % 2 == 0) throw PreconditionError("group order must be odd");
  if (!grp::is_nilpotent(gp)) throw PreconditionError("group must be nilpotent");

  ClassificationReport r;
  r.parent = gp;
  r.group = opts.group_name;
  r.order = g.order();
  const auto z = grp::center(gp);
  r.center = z.members();
  r.commutator_order = grp::commutator_subgroup(gp).order();
  const auto whole = grp::Subgroup::whole(gp);
  const auto hat = grp::characters_of_group(whole);
  r.abelianization_order = hat.size();

  // Central YD pairs.
  std::vector<std::size_t> points;
  for (Element c : r.center) {
    for (std::size_t k = 0; k < hat.size(); ++k) {
      auto pair = make_central_pair(gp, c, hat[k]);
      auto v = nichols::constant_q_verdict(pair.q, 1);
      if (!pair.q.is_one()) points.push_back(r.central.size());
      r.central.push_back({std::move(pair), k, std::move(v)});
    }
  }
  if (points.size() <= opts.central_point_limit) {
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i; j < points.size(); ++j) {
        const auto& a = r.central[points[i]].pair;
        const auto& b = r.central[points[j]].pair;
        yd::DiagonalBraiding q(std::vector<std::vector<RootOfUnity>>{{a.q, b.chi(a.g)}, {a.chi(b.g), b.q}});
        if (q.edge(0, 1).is_one()) continue;
        auto v = nichols::diagonal_verdict(q);
        if (v.dim.is_finite()) r.central_blocks.push_back({points[i], points[j], q, std::move(v)});
      }
  } else {
    r.central_blocks_skipped = true;
  }

  // Non-central classes.
  for (const auto& cls : grp::conjugacy_classes(gp)) {
    if (cls.is_central()) continue;
    ClassFinding f;
    f.representative = cls.representative;
    f.size = cls.size();
    f.abelian = is_abelian_class(g, cls);
    if (!f.abelian) {
      const auto x = rack::conjugation_rack(cls);
      auto res = rack::type_c_search(x, opts.type_c_budget);
      if (res.outcome == rack::TypeCOutcome::Undetermined && opts.type_c_budget) res = rack::type_c_search(x, std::nullopt);
      if (res.witness) f.verdict = nichols::type_c_verdict(*res.witness, opts.assume_conjecture);
      f.type_c = std::move(res);
    } else {
      const auto cx = grp::centralizer(gp, cls.representative);
      for (const auto& chi : grp::characters_of_group(cx)) {
        auto pair = make_class_char_pair(cls, cls.representative, chi);
        ++f.characters_scanned;
        if (!pair.q.is_one() && !pair.totally_disconnected) ++f.nontrivial_failing;
        if (!pair.admissible()) continue;
        if (pair.order() <= 2) throw std::logic_error("admissible pair with chi(x) of order <= 2 in odd order");
        ++f.admissible;
        r.abelian_pairs.push_back(std::move(pair));
      }
    }
    r.classes.push_back(std::move(f));
  }

  // Compatibility.
  const std::size_t n = r.abelian_pairs.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (pair_compatibility(r.abelian_pairs[i], r.abelian_pairs[j])) {
        adj[i][j] = adj[j][i] = true;
        r.compat_edges.emplace_back(i, j);
      }
  r.central_compat.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c : points)
      if (pair_compatibility(r.abelian_pairs[i], r.central[c].pair)) r.central_compat[i].push_back(c);

  // Families.
  std::vector<std::vector<std::size_t>> cliques;
  if (n > 0) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    maximal_cliques(adj, {}, all, {}, cliques, opts.max_families, r.families_truncated);
  }
  std::sort(cliques.begin(), cliques.end());
  for (auto& members : cliques) {
    Family fam;
    fam.total_dim = 1;
    for (std::size_t m : members) {
      mpz_class p;
      mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(r.abelian_pairs[m].order()),
                    static_cast<unsigned long>(r.abelian_pairs[m].cls.size()));
      fam.total_dim *= p;
    }
    fam.verdict = nichols::Verdict::finite_dim(fam.total_dim, "abelian-class-family",
                                               std::to_string(members.size()) + " class-character pairs");
    fam.compatible_central = r.central_compat[members.front()];
    for (std::size_t m : members) {
      std::vector<std::size_t> keep;
      std::set_intersection(fam.compatible_central.begin(), fam.compatible_central.end(), r.central_compat[m].begin(),
                            r.central_compat[m].end(), std::back_inserter(keep));
      fam.compatible_central = std::move(keep);
    }
    fam.members = std::move(members);
    r.families.push_back(std::move(fam));
  }
  return r;
}

std::string render_text(const ClassificationReport& r) {
  std::ostringstream os;
  const grp::FiniteGroup* g = r.parent.get();
  auto label = [&](Element e) { return g ? g->label(e) : "#" + std::to_string(e); };

  os << "group " << (r.group.empty() ? "<unnamed>" : r.group) << " order " << r.order << "\n";
  os << "center:";
  for (Element c : r.center) os << " " << label(c);
  os << "\ncommutator subgroup order " << r.commutator_order << ", abelianization order " << r.abelianization_order
     << "\n";
  std::size_t nontrivial = 0;
  for (const auto& c : r.central) nontrivial += !c.pair.q.is_one();
  os << "central pairs " << r.central.size() << ", with q != 1: " << nontrivial << "\n";
  for (const auto& c : r.central) {
    if (c.pair.q.is_one()) continue;
    os << "  (" << label(c.pair.g) << ", chi" << c.chi_index << ") q=" << c.pair.q.to_string() << " "
       << c.verdict.to_string() << "\n";
  }
  if (r.central_blocks_skipped) os << "central rank-two blocks: skipped (too many points)\n";
  else os << "central rank-two blocks " << r.central_blocks.size() << "\n";
  for (const auto& b : r.central_blocks) os << "  " << b.a << "+" << b.b << " " << b.verdict.to_string() << "\n";

  os << "non-central classes " << r.classes.size() << "\n";
  for (const auto& c : r.classes) {
    os << "  " << label(c.representative) << " size " << c.size << " ";
    if (c.abelian) {
      os << "abelian, characters " << c.characters_scanned << ", failing " << c.nontrivial_failing << ", admissible "
         << c.admissible << "\n";
    } else {
      os << "type " << (c.type_c ? rack::to_string(c.type_c->outcome) : "?");
      if (c.verdict) os << " " << c.verdict->to_string();
      os << "\n";
    }
  }
  os << "abelian pairs " << r.abelian_pairs.size() << "\n";
  for (std::size_t i = 0; i < r.abelian_pairs.size(); ++i) {
    const auto& p = r.abelian_pairs[i];
    os << "  " << i << ": class of " << label(p.x) << " size " << p.cls.size() << " q=" << p.q.to_string()
       << " N=" << p.order() << "\n";
  }
  os << "compatibility edges " << r.compat_edges.size() << "\n";
  for (const auto& [a, b] : r.compat_edges) os << "  " << a << "-" << b << "\n";
  os << "families " << r.families.size() << (r.families_truncated ? " (truncated)" : "") << "\n";
  for (const auto& f : r.families) {
    os << "  {";
    for (std::size_t i = 0; i < f.members.size(); ++i) os << (i ? "," : "") << f.members[i];
    os << "} dim " << f.total_dim.get_str() << ", compatible central points " << f.compatible_central.size() << "\n";
  }
  return os.str();
}

}  // namespace yetter::classify
