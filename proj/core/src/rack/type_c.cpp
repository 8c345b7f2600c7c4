#include "yetter/rack/type_c.hpp"

#include <algorithm>

#include "yetter/limits.hpp"

namespace yetter::rack {

namespace {

std::vector<Element> orbit_under(const grp::FiniteGroup& g, const std::vector<Element>& h, Element x) {
  std::vector<Element> out;
  for (Element a : h) out.push_back(g.conj(a, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Orbit of y under the group generated by the translations z ▷ - for z in Y,
// computed inside Y.
std::vector<Element> inner_orbit(const grp::FiniteGroup& g, const std::vector<Element>& y, Element start) {
  std::vector<Element> out{start};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element z : y) {
      const Element w = g.conj(z, out[i]);
      if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool disjoint(const std::vector<Element>& a, const std::vector<Element>& b) {
  std::vector<Element> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.empty();
}

}  // namespace

TypeCWitness revalidate(const TypeCWitness& w) {
  if (!w.group) throw PreconditionError("witness has no group");
  const auto& g = *w.group;
  TypeCWitness out = w;
  out.r_moves_s = false;
  out.parts_are_inner_orbits = false;
  out.size_bound = false;
  const auto& rp = w.part_r;
  const auto& sp = w.part_s;
  if (!std::is_sorted(rp.begin(), rp.end()) || !std::is_sorted(sp.begin(), sp.end())) return out;
  if (!std::binary_search(rp.begin(), rp.end(), w.r) || !std::binary_search(sp.begin(), sp.end(), w.s)) return out;
  if (!disjoint(rp, sp)) return out;
  std::vector<Element> y;
  std::merge(rp.begin(), rp.end(), sp.begin(), sp.end(), std::back_inserter(y));
  // Y must be a subrack.
  for (Element a : y)
    for (Element b : y)
      if (!std::binary_search(y.begin(), y.end(), g.conj(a, b))) return out;

  out.r_moves_s = g.conj(w.r, w.s) != w.s;
  out.parts_are_inner_orbits = inner_orbit(g, y, w.r) == rp && inner_orbit(g, y, w.s) == sp;
  const auto lo = std::min(rp.size(), sp.size());
  const auto hi = std::max(rp.size(), sp.size());
  out.size_bound = lo > 2 || hi > 4;
  const auto sub = Rack::conjugation(w.group, y);
  out.inner_group_order = inner_group(sub).group->order();
  out.subgroup_order = grp::Subgroup::generated_by(w.group, std::vector<Element>{w.r, w.s}).order();
  return out;
}

std::string to_string(TypeCOutcome o) {
  switch (o) {
    case TypeCOutcome::TypeC: return "TypeC";
    case TypeCOutcome::NotTypeC: return "NotTypeC";
    case TypeCOutcome::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string to_string(ClassStatus s) {
  switch (s) {
    case ClassStatus::Abelian: return "Abelian";
    case ClassStatus::TypeC: return "TypeC";
    case ClassStatus::Violation: return "VIOLATION";
  }
  return "?";
}

TypeCResult type_c_search(const Rack& x, std::optional<std::size_t> budget) {
  TypeCResult res;
  if (is_abelian_rack(x)) {
    res.outcome = TypeCOutcome::NotTypeC;
    res.note = "abelian rack: no pair with r ▷ s != s";
    return res;
  }
  if (!x.has_parent()) throw PreconditionError("type C search needs a rack built from a group");
  const auto& gp = x.parent();
  const auto& g = *gp;
  const auto n = static_cast<std::uint32_t>(x.size());
  for (std::uint32_t ri = 0; ri < n; ++ri) {
    for (std::uint32_t si = 0; si < n; ++si) {
      if (x.op(ri, si) == si) continue;
      if (budget && res.pairs_examined >= *budget) {
        res.outcome = TypeCOutcome::Undetermined;
        res.note = "pair budget exhausted; only two-generator subracks were tried";
        return res;
      }
      ++res.pairs_examined;
      const Element r = x.elements()[ri];
      const Element s = x.elements()[si];
      const std::vector<Element> gens{r, s};
      const auto h = grp::Subgroup::generated_by(gp, gens);
      auto part_r = orbit_under(g, h.members(), r);
      auto part_s = orbit_under(g, h.members(), s);
      if (!disjoint(part_r, part_s)) continue;
      TypeCWitness w;
      w.group = gp;
      w.r = r;
      w.s = s;
      w.subgroup_order = h.order();
      w.part_r = std::move(part_r);
      w.part_s = std::move(part_s);
      w = revalidate(w);
      if (w.valid()) {
        res.outcome = TypeCOutcome::TypeC;
        res.witness = std::move(w);
        return res;
      }
    }
  }
  res.outcome = TypeCOutcome::Undetermined;
  res.note = "no two-generator subrack satisfies the type C conditions; larger subracks were not searched";
  return res;
}

std::size_t AuditReport::violations() const {
  return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), [](const ClassAuditEntry& e) {
    return e.status == ClassStatus::Violation;
  }));
}

AuditReport abelian_or_type_c_audit(const GroupPtr& g, std::size_t budget) {
  if (g->order() % 2 == 0) throw PreconditionError("audit needs a group of odd order");
  if (!grp::is_nilpotent(g)) throw PreconditionError("audit needs a nilpotent group");
  AuditReport report;
  report.group = g;
  for (const auto& cls : grp::conjugacy_classes(g)) {
    ClassAuditEntry e;
    e.representative = cls.representative;
    e.size = cls.size();
    const auto x = conjugation_rack(cls);
    if (is_abelian_rack(x)) {
      e.status = ClassStatus::Abelian;
      report.classes.push_back(std::move(e));
      continue;
    }
    auto res = type_c_search(x, budget);
    e.pairs_examined = res.pairs_examined;
    if (res.outcome == TypeCOutcome::Undetermined) {
      e.escalated = true;
      res = type_c_search(x, std::nullopt);
      e.pairs_examined = res.pairs_examined;
    }
    if (res.outcome == TypeCOutcome::TypeC) {
      e.status = ClassStatus::TypeC;
      e.witness = std::move(res.witness);
    } else {
      e.status = ClassStatus::Violation;
      e.note = res.note;
    }
    report.classes.push_back(std::move(e));
  }
  return report;
}

}  // namespace yetter::rack
