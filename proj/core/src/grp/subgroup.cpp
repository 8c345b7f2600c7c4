#include "yetter/grp/subgroup.hpp"

#include <algorithm>
#include <deque>

#include "yetter/limits.hpp"

namespace yetter::grp {

Subgroup::Subgroup(GroupPtr g, std::vector<Element> members)
    : group_(std::move(g)), members_(std::move(members)), mask_(group_->order(), false) {
  std::sort(members_.begin(), members_.end());
  for (Element a : members_) mask_[a] = true;
  normal_ = true;
  for (Element s : group_->generators()) {
    for (Element h : members_) {
      if (!mask_[group_->conj(s, h)]) {
        normal_ = false;
        return;
      }
    }
  }
}

Subgroup Subgroup::generated_by(GroupPtr g, std::span<const Element> gens) {
  auto members = closure(*g, gens);
  return Subgroup(std::move(g), std::move(members));
}

Subgroup Subgroup::from_members(GroupPtr g, std::vector<Element> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<bool> mask(g->order(), false);
  for (Element a : members) {
    if (a >= g->order()) throw PreconditionError("subgroup member out of range");
    mask[a] = true;
  }
  if (members.empty() || !mask[g->identity()]) throw PreconditionError("subgroup lacks identity");
  for (Element a : members)
    for (Element b : members)
      if (!mask[g->mul(a, b)]) throw PreconditionError("member set is not closed under multiplication");
  return Subgroup(std::move(g), std::move(members));
}

Subgroup Subgroup::whole(GroupPtr g) {
  std::vector<Element> all(g->order());
  for (Element a = 0; a < all.size(); ++a) all[a] = a;
  return Subgroup(std::move(g), std::move(all));
}

Subgroup Subgroup::trivial(GroupPtr g) {
  const Element e = g->identity();
  return Subgroup(std::move(g), {e});
}

bool Subgroup::is_abelian() const {
  const auto gens = generators();
  for (Element a : gens)
    for (Element b : gens)
      if (!group_->commute(a, b)) return false;
  return true;
}

std::vector<Element> Subgroup::generators() const {
  std::vector<Element> gens;
  std::vector<bool> reached(group_->order(), false);
  reached[group_->identity()] = true;
  std::size_t count = 1;
  for (Element a : members_) {
    if (count == members_.size()) break;
    if (reached[a]) continue;
    gens.push_back(a);
    const auto sub = closure(*group_, gens);
    for (Element s : sub) reached[s] = true;
    count = sub.size();
  }
  return gens;
}

bool ConjugacyClass::contains(Element a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

Subgroup center(const GroupPtr& g) {
  std::vector<Element> z;
  for (Element a = 0; a < g->order(); ++a) {
    bool central = true;
    for (Element s : g->generators()) {
      if (!g->commute(a, s)) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(a);
  }
  return Subgroup::from_members(g, std::move(z));
}

Subgroup centralizer(const GroupPtr& g, Element x) {
  std::vector<Element> c;
  for (Element a = 0; a < g->order(); ++a) {
    if (g->commute(a, x)) c.push_back(a);
  }
  return Subgroup::from_members(g, std::move(c));
}

Subgroup normal_closure(const GroupPtr& g, std::span<const Element> elems) {
  std::vector<bool> seen(g->order(), false);
  std::vector<Element> seeds;
  std::deque<Element> queue(elems.begin(), elems.end());
  while (!queue.empty()) {
    const Element a = queue.front();
    queue.pop_front();
    if (seen[a]) continue;
    seen[a] = true;
    seeds.push_back(a);
    for (Element s : g->generators()) queue.push_back(g->conj(s, a));
  }
  return Subgroup::generated_by(g, seeds);
}

Subgroup derived_subgroup(const Subgroup& k) {
  const auto& g = k.group();
  std::vector<bool> seen(g->order(), false);
  std::vector<Element> comms;
  // Commutators of generators, closed under conjugation by K, generate [K, K].
  const auto gens = k.generators();
  for (Element a : gens) {
    for (Element b : gens) {
      const Element c = g->commutator(a, b);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  }
  std::deque<Element> queue(comms.begin(), comms.end());
  while (!queue.empty()) {
    const Element a = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      const Element c = g->conj(s, a);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
        queue.push_back(c);
      }
    }
  }
  return Subgroup::generated_by(g, comms);
}

Subgroup commutator_subgroup(const GroupPtr& g) { return derived_subgroup(Subgroup::whole(g)); }

CentralSeries upper_central_series(const GroupPtr& g) {
  CentralSeries out;
  out.terms.push_back(Subgroup::trivial(g));
  for (;;) {
    const Subgroup& prev = out.terms.back();
    if (prev.is_whole()) {
      out.nilpotency_class = out.terms.size() - 1;
      return out;
    }
    std::vector<Element> next;
    for (Element a = 0; a < g->order(); ++a) {
      bool ok = true;
      for (Element s : g->generators()) {
        if (!prev.contains(g->commutator(a, s))) {
          ok = false;
          break;
        }
      }
      if (ok) next.push_back(a);
    }
    if (next.size() == prev.order()) return out;
    out.terms.push_back(Subgroup::from_members(g, std::move(next)));
  }
}

bool is_nilpotent(const GroupPtr& g) { return upper_central_series(g).nilpotency_class.has_value(); }

namespace {

std::vector<Element> orbit(const GroupPtr& g, Element x) {
  std::vector<bool> seen(g->order(), false);
  std::vector<Element> out{x};
  seen[x] = true;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (Element s : g->generators()) {
      const Element y = g->conj(s, out[i]);
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<ConjugacyClass> conjugacy_classes(const GroupPtr& g) {
  std::vector<ConjugacyClass> out;
  std::vector<bool> done(g->order(), false);
  for (Element a = 0; a < g->order(); ++a) {
    if (done[a]) continue;
    auto members = orbit(g, a);
    for (Element m : members) done[m] = true;
    out.push_back(ConjugacyClass{g, a, std::move(members), centralizer(g, a)});
  }
  return out;
}

ConjugacyClass class_of(const GroupPtr& g, Element x) {
  if (x >= g->order()) throw PreconditionError("element index out of range");
  auto members = orbit(g, x);
  const Element rep = members.front();
  return ConjugacyClass{g, rep, std::move(members), centralizer(g, rep)};
}

}  // namespace yetter::grp
