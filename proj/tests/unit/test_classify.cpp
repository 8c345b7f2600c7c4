#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "yetter/classify/driver.hpp"
#include "yetter/grp/catalog.hpp"
#include "yetter/limits.hpp"
#include "yetter/nichols/recognizer.hpp"
#include "yetter/nichols/symmetrizer.hpp"

using namespace yetter;
using namespace yetter::classify;
using cyclo::RootOfUnity;
using grp::Element;
using grp::GroupPtr;

namespace {

// Every g outside G^x with chi(x_{g^-1} x_g) != 1, computed from the table with
// explicit inverses rather than through conj().
std::vector<Element> violators(const GroupPtr& gp, Element x, const Character& chi) {
  const auto& g = *gp;
  std::vector<Element> out;
  for (Element h = 0; h < g.order(); ++h) {
    const Element hi = g.inv(h);
    if (g.mul(h, x) == g.mul(x, h)) continue;
    const Element left = g.mul(g.mul(hi, x), h);   // h^-1 x h
    const Element right = g.mul(g.mul(h, x), hi);  // h x h^-1
    if (!chi(g.mul(left, right)).is_one()) out.push_back(h);
  }
  return out;
}

std::vector<grp::ConjugacyClass> abelian_noncentral(const GroupPtr& g) {
  std::vector<grp::ConjugacyClass> out;
  for (auto& cls : grp::conjugacy_classes(g)) {
    if (cls.is_central()) continue;
    bool ab = true;
    for (Element a : cls.members)
      for (Element b : cls.members) ab = ab && g->commute(a, b);
    if (ab) out.push_back(cls);
  }
  return out;
}

std::vector<std::size_t> truncated_power(std::size_t n_vars, std::int64_t order, std::size_t n_max) {
  std::vector<std::size_t> p(n_max + 1, 0);
  p[0] = 1;
  for (std::size_t v = 0; v < n_vars; ++v) {
    std::vector<std::size_t> q(n_max + 1, 0);
    for (std::size_t i = 0; i <= n_max; ++i)
      for (std::size_t k = 0; k < static_cast<std::size_t>(order) && i + k <= n_max; ++k) q[i + k] += p[i];
    p = q;
  }
  return p;
}

Element lab(const GroupPtr& g, const char* text) {
  auto e = g->find_label(text);
  REQUIRE(e.has_value());
  return *e;
}

// Summary of a report that does not depend on element indices.
std::multiset<std::string> fingerprint(const ClassificationReport& r) {
  std::multiset<std::string> out;
  for (const auto& c : r.classes) {
    out.insert("class " + std::to_string(c.size) + (c.abelian ? " ab " : " nab ") +
               std::to_string(c.characters_scanned) + "/" + std::to_string(c.nontrivial_failing) + "/" +
               std::to_string(c.admissible) + (c.verdict ? c.verdict->to_string() : ""));
  }
  for (const auto& p : r.abelian_pairs) out.insert("pair " + std::to_string(p.cls.size()) + " " + p.q.to_string());
  for (const auto& f : r.families) {
    out.insert("family " + std::to_string(f.members.size()) + " " + f.total_dim.get_str() + " " +
               std::to_string(f.compatible_central.size()));
  }
  std::size_t nontrivial_central = 0;
  for (const auto& c : r.central) nontrivial_central += c.pair.q.is_one() ? 0 : 1;
  out.insert("central " + std::to_string(r.central.size()) + " " + std::to_string(nontrivial_central));
  out.insert("edges " + std::to_string(r.compat_edges.size()));
  return out;
}

}  // namespace

TEST_CASE("total disconnection check agrees with a direct scan") {
  for (const char* name : {"heisenberg:n=1,m=3", "wreath:m=3,k=3", "heisenberg:n=1,m=6", "unitriangular4:m=3"}) {
    const auto g = grp::construct_named(name);
    std::size_t checked = 0;
    for (const auto& cls : abelian_noncentral(g)) {
      const Element x = cls.members.front();
      for (const auto& chi : grp::characters_of_group(grp::centralizer(g, x))) {
        const auto r = total_disconnection_check(cls, x, chi);
        const auto bad = violators(g, x, chi);
        CHECK(r.holds == bad.empty());
        if (!bad.empty()) {
          REQUIRE(r.witness.has_value());
          CHECK(*r.witness == bad.front());
          CHECK(!r.value.is_one());
        }
        if (++checked > 600) break;
      }
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("total disconnection on the Heisenberg examples") {
  const auto g = grp::heisenberg(1, 3);
  const Element x = lab(g, "(1,0,0)");
  const auto cls = grp::class_of(g, x);
  const auto k = grp::centralizer(g, x);
  std::size_t failing = 0, kernel = 0;
  for (const auto& chi : grp::characters_of_group(k)) {
    const auto r = total_disconnection_check(cls, x, chi);
    bool in_kernel = true;
    for (Element y : cls.members) in_kernel = in_kernel && chi(y).is_one();
    if (in_kernel) {
      CHECK(r.holds);
      ++kernel;
    }
    if (!chi(x).is_one()) {
      CHECK_FALSE(r.holds);
      CHECK(r.witness.has_value());
      CHECK_FALSE(g->commute(*r.witness, x));
      ++failing;
    }
  }
  CHECK(kernel > 0);
  CHECK(failing == 6);

  // Class of (3, 0, 2) in Heis(3, Z/6): some character with chi(x) = -1 is totally disconnected.
  const auto h = grp::construct_named("heisenberg_quotient:n=1,m=6,N=6");
  const Element y = lab(h, "(3,0,2)");
  const auto hcls = grp::class_of(h, y);
  CHECK(hcls.size() == 2);
  bool found = false;
  for (const auto& chi : grp::characters_of_group(grp::centralizer(h, y))) {
    if (chi(y) != RootOfUnity::minus_one()) continue;
    if (total_disconnection_check(hcls, y, chi).holds) {
      found = true;
      const auto p = make_class_char_pair(hcls, y, chi);
      CHECK(p.admissible());
      const auto prof = nichols::dim_profile(yd::braiding_of(yd::build_yd_module(hcls, chi)), 3);
      CHECK(prof.dims == std::vector<std::size_t>{1, 2, 1, 0});
    }
  }
  CHECK(found);

  const auto d4 = grp::dihedral4();
  const auto xy = lab(d4, "xy");
  CHECK_THROWS_AS(total_disconnection_check(grp::class_of(d4, lab(d4, "y")), lab(d4, "y"),
                                            Character::trivial(grp::centralizer(d4, xy))),
                  PreconditionError);
}

TEST_CASE("YZ analysis cases") {
  // Heis(3, Z/6) with the centre read mod 2, x = (1, 0, 0): the orbit has two
  // points and a character with chi(x) = omega gives the A2 pattern.
  const auto h = grp::construct_named("heisenberg_quotient:n=1,m=6,N=2");
  const Element x = lab(h, "(1,0,0)");
  const Element z = lab(h, "(0,0,1)");
  const auto k = grp::centralizer(h, x);
  CHECK(k.is_abelian());
  std::optional<Character> chi;
  for (const auto& c : grp::characters_of_group(k)) {
    if (c(x) == RootOfUnity(1, 3) && c(z).is_one() && c(lab(h, "(0,2,0)")).is_one()) chi = c;
  }
  REQUIRE(chi.has_value());
  const auto r = yz_analysis(h, x, *chi, lab(h, "(0,1,0)"));
  CHECK(r.n() == 2);
  CHECK(r.q == RootOfUnity(1, 3));
  CHECK(r.zeta == r.q.inverse());
  CHECK(r.yz_case == YZCase::Rank2Special);
  CHECK(r.local.dim == nichols::Axis::finite(mpz_class(27)));
  CHECK(yd::twist_equivalent(r.cycle, yd::DiagonalBraiding(2, RootOfUnity(1, 3))));
  CHECK_THROWS_AS(yz_analysis(h, x, *chi, z), PreconditionError);

  // Every orbit of every size-two class: the case agrees with the recognizer.
  std::map<YZCase, std::size_t> seen_cases;
  for (const auto& cls : abelian_noncentral(h)) {
    const Element y = cls.members.front();
    for (const auto& c : grp::characters_of_group(grp::centralizer(h, y))) {
      for (Element g = 0; g < h->order(); g += 5) {
        if (h->commute(g, y)) continue;
        const auto ry = yz_analysis(h, y, c, g);
        ++seen_cases[ry.yz_case];
        if (ry.yz_case == YZCase::Rank2Special) CHECK(ry.local.dim.is_finite());
        if (ry.yz_case == YZCase::InfiniteGK) CHECK(ry.local.gk.is_infinite());
        if (ry.q == RootOfUnity::minus_one() && !ry.zeta.is_one()) CHECK(ry.yz_case == YZCase::Rank2Special);
      }
    }
  }
  CHECK(seen_cases[YZCase::Rank2Special] > 0);
  CHECK(seen_cases[YZCase::InfiniteGK] > 0);
  CHECK(seen_cases[YZCase::NoObstruction] > 0);

  // Heis(3, Z/4): orbits of length 4 with zeta != 1.
  const auto h4 = grp::heisenberg(1, 4);
  const Element x4 = lab(h4, "(1,0,0)");
  bool seen = false;
  for (const auto& c : grp::characters_of_group(grp::centralizer(h4, x4))) {
    const auto r4 = yz_analysis(h4, x4, c, lab(h4, "(0,1,0)"));
    CHECK(r4.n() == 4);
    if (!r4.zeta.is_one()) {
      CHECK(r4.yz_case == YZCase::InfiniteGK);
      seen = true;
    } else {
      CHECK(r4.yz_case == YZCase::NoObstruction);
    }
  }
  CHECK(seen);
}

TEST_CASE("failing total disconnection always has an infinite orbit on odd groups") {
  for (const char* name : {"heisenberg:n=1,m=3", "heisenberg:n=1,m=5", "wreath:m=3,k=3", "unitriangular4:m=3"}) {
    const auto g = grp::construct_named(name);
    for (const auto& cls : abelian_noncentral(g)) {
      const Element x = cls.members.front();
      for (const auto& chi : grp::characters_of_group(grp::centralizer(g, x))) {
        if (total_disconnection_check(cls, x, chi).holds) continue;
        bool infinite = false;
        for (Element h = 0; h < g->order() && !infinite; ++h) {
          if (g->commute(h, x)) continue;
          const auto r = yz_analysis(g, x, chi, h);
          CHECK(r.n() % 2 == 1);
          CHECK(g->element_order(h) % r.n() == 0);
          CHECK(r.yz_case != YZCase::Rank2Special);
          CHECK(r.yz_case != YZCase::ThreeCycleSpecial);
          if (r.yz_case == YZCase::InfiniteGK) {
            CHECK(r.local.gk.is_infinite());
            infinite = true;
          }
        }
        CHECK(infinite);
      }
    }
  }
}

TEST_CASE("pair compatibility matches c^2 = id") {
  // pair_compatibility throws std::logic_error on any disagreement with c^2 = id.
  std::size_t true_count = 0, false_count = 0;
  for (const char* name : {"wreath:m=3,k=3", "heisenberg:n=1,m=3", "heisenberg_quotient:n=1,m=6,N=6"}) {
    const auto g = grp::construct_named(name);
    std::vector<ClassCharPair> pairs;
    for (const auto& cls : abelian_noncentral(g)) {
      const Element x = cls.members.front();
      std::size_t taken = 0;
      for (const auto& chi : grp::characters_of_group(grp::centralizer(g, x))) {
        pairs.push_back(make_class_char_pair(cls, x, chi));
        if (++taken == 6) break;
      }
    }
    std::vector<CentralPair> central;
    const auto whole = grp::Subgroup::whole(g);
    const auto chars = grp::characters_of_group(whole);
    const auto zg = grp::center(g);
    for (Element z : zg.members())
      for (std::size_t i = 0; i < chars.size(); i += 3) central.push_back(make_central_pair(g, z, chars[i]));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size() && j < i + 20; ++j) {
        bool ok = false;
        REQUIRE_NOTHROW(ok = pair_compatibility(pairs[i], pairs[j]));
        (ok ? true_count : false_count)++;
      }
      for (std::size_t c = 0; c < central.size(); c += 5) REQUIRE_NOTHROW(pair_compatibility(pairs[i], central[c]));
    }
    for (std::size_t a = 0; a < central.size(); ++a)
      for (std::size_t b = a; b < central.size(); b += 7) {
        const bool ok = pair_compatibility(central[a], central[b]);
        CHECK(ok == (central[a].chi(central[b].g) * central[b].chi(central[a].g)).is_one());
      }
  }
  CHECK(true_count > 0);
  CHECK(false_count > 0);

  // Non-commuting classes are never compatible.
  const auto g = grp::heisenberg(1, 3);
  const Element x = lab(g, "(1,0,0)"), y = lab(g, "(0,1,0)");
  const auto px = make_class_char_pair(grp::class_of(g, x), x, Character::trivial(grp::centralizer(g, x)));
  const auto py = make_class_char_pair(grp::class_of(g, y), y, Character::trivial(grp::centralizer(g, y)));
  CHECK_FALSE(pair_compatibility(px, py));
}

TEST_CASE("central support conditions") {
  SUBCASE("a single pair supported in the commutator subgroup is a polynomial line") {
    const auto g = grp::heisenberg(1, 3);
    const Element z = lab(g, "(0,0,1)");
    const auto whole = grp::Subgroup::whole(g);
    for (const auto& chi : grp::characters_of_group(whole)) {
      const auto r = central_support_check(g, {{z, chi}});
      CHECK(r.verdict.gk == nichols::Axis::finite(mpz_class(1)));
      CHECK(r.verdict.dim.is_infinite());
      CHECK(r.findings.size() == 6);
    }
  }
  SUBCASE("two blocks with trivial self-braiding and nontrivial coupling") {
    const auto h = grp::heisenberg(1, 3);
    const auto g = grp::direct_product({h, h});
    const Element z1 = lab(g, "((0,0,1),(0,0,0))");
    const Element z2 = lab(g, "((0,0,0),(0,0,1))");
    auto block = [&](int side) {
      // Induce from G_1 x {(0, b, c)} or {(0, b, c)} x G_2.
      std::vector<Element> gens;
      for (const char* l : side == 1 ? std::vector<const char*>{"((0,1,0),(0,0,0))", "((0,0,1),(0,0,0))",
                                                                 "((0,0,0),(1,0,0))", "((0,0,0),(0,1,0))"}
                                     : std::vector<const char*>{"((0,0,0),(0,1,0))", "((0,0,0),(0,0,1))",
                                                                 "((1,0,0),(0,0,0))", "((0,1,0),(0,0,0))"})
        gens.push_back(lab(g, l));
      const auto k = grp::Subgroup::generated_by(g, gens);
      const Element central = side == 1 ? z1 : z2;
      for (const auto& chi : grp::characters_of_group(k))
        if (chi(central) == RootOfUnity(1, 3)) return grp::induce_character(grp::Subgroup::whole(g), k, chi);
      throw std::runtime_error("no character");
    };
    const auto rho1 = block(1), rho2 = block(2);
    REQUIRE(rho1.dim() == 3);
    REQUIRE(*rho1.scalar_value(z2) == RootOfUnity::one());
    // Member at z2 with rho1 (trivial on z2), member at z1 with rho2.
    const auto r = central_support_check(g, {{z2, rho1}, {z1, rho2}});
    CHECK(r.verdict.gk.is_infinite());
    CHECK(r.verdict.assumptions.empty());
    CHECK(r.verdict.rule == "central-support:trivial-block-decoupled");
    // Each block alone: symmetric algebra of a 3-dimensional space.
    const auto single = central_support_check(g, {{z2, rho1}});
    CHECK(single.verdict.gk == nichols::Axis::finite(mpz_class(3)));
  }
  SUBCASE("a -1 block coupled to a point is outside the recognized fragment") {
    const auto g = grp::dihedral4();
    const Element y = lab(g, "y"), y2 = lab(g, "y2");
    const auto c4 = grp::Subgroup::generated_by(g, std::vector<Element>{y});
    std::optional<grp::MonomialRep> rho;
    for (const auto& chi : grp::characters_of_group(c4))
      if (chi(y).order() == 4) rho = grp::induce_character(grp::Subgroup::whole(g), c4, chi);
    REQUIRE(rho.has_value());
    REQUIRE(*rho->scalar_value(y2) == RootOfUnity::minus_one());
    const auto whole = grp::Subgroup::whole(g);
    const auto chars = grp::characters_of_group(whole);
    const auto r = central_support_check(g, {{y2, *rho}, {y2, chars.front()}});
    CHECK(r.verdict.dim.is_unknown());
    CHECK(r.verdict.gk.is_unknown());
    bool cited = false;
    for (const auto& f : r.findings)
      if (f.name == "minus-one-block-coupling") cited = !f.holds && f.detail.find("rows 1, 8, 15") != std::string::npos;
    CHECK(cited);
    // Alone the block is an exterior algebra.
    CHECK(central_support_check(g, {{y2, *rho}}).verdict.dim == nichols::Axis::finite(mpz_class(4)));
    CHECK_THROWS_AS(central_support_check(g, {{y, chars.front()}}), PreconditionError);
  }
}

TEST_CASE("driver: Heisenberg groups have no admissible pairs") {
  for (int p : {3, 5}) {
    const auto g = grp::heisenberg(1, p);
    const auto r = classify_group(g, {.group_name = "heisenberg"});
    CHECK(r.abelian_pairs.empty());
    CHECK(r.families.empty());
    CHECK(r.violations() == 0);
    CHECK(r.center.size() == static_cast<std::size_t>(p));
    for (const auto& c : r.classes) {
      CHECK(c.abelian);
      CHECK(c.admissible == 0);
      CHECK(c.nontrivial_failing == c.characters_scanned - c.characters_scanned / static_cast<std::size_t>(p));
    }
  }
  CHECK_THROWS_AS(classify_group(grp::dihedral4()), PreconditionError);
}

TEST_CASE("driver: wreath product families") {
  const auto g = grp::construct_named("wreath:m=3,k=3");
  const auto r = classify_group(g, {.group_name = "wreath"});
  CHECK(r.violations() == 0);
  CHECK(r.abelian_pairs.size() == 36);
  CHECK(!r.families.empty());
  for (const auto& p : r.abelian_pairs) {
    CHECK(p.admissible());
    CHECK(p.order() > 2);
    CHECK(violators(g, p.x, p.chi).empty());
    // Low degrees of B(O, chi) follow the truncated product N^|O|.
    const auto m = yd::build_yd_module(p.cls, p.chi);
    const auto prof = nichols::dim_profile(yd::braiding_of(m), 4);
    CHECK(prof.dims == truncated_power(p.cls.size(), p.order(), 4));
  }
  for (const auto& f : r.families) {
    mpz_class expect = 1;
    for (std::size_t i : f.members) {
      const auto& p = r.abelian_pairs[i];
      mpz_class n;
      mpz_ui_pow_ui(n.get_mpz_t(), static_cast<unsigned long>(p.order()), p.cls.size());
      expect *= n;
    }
    CHECK(f.total_dim == expect);
    for (std::size_t i = 0; i < f.members.size(); ++i)
      for (std::size_t j = i + 1; j < f.members.size(); ++j) {
        const auto& a = r.abelian_pairs[f.members[i]];
        const auto& b = r.abelian_pairs[f.members[j]];
        CHECK(yd::c_squared_is_identity(yd::build_yd_module(a.cls, a.chi), yd::build_yd_module(b.cls, b.chi)));
      }
  }
  // Families are maximal: no outside pair is compatible with every member.
  std::set<std::pair<std::size_t, std::size_t>> edges(r.compat_edges.begin(), r.compat_edges.end());
  auto adjacent = [&](std::size_t a, std::size_t b) { return edges.count({std::min(a, b), std::max(a, b)}) > 0; };
  for (const auto& f : r.families) {
    for (std::size_t v = 0; v < r.abelian_pairs.size(); ++v) {
      if (std::find(f.members.begin(), f.members.end(), v) != f.members.end()) continue;
      bool all = true;
      for (std::size_t m : f.members) all = all && adjacent(v, m);
      CHECK_FALSE(all);
    }
  }
}

TEST_CASE("driver output does not depend on element labels") {
  for (const char* name : {"wreath:m=3,k=3", "heisenberg:n=1,m=3"}) {
    const auto g = grp::construct_named(name);
    std::vector<Element> perm(g->order());
    std::iota(perm.begin(), perm.end(), Element{0});
    std::mt19937 rng(11);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = g->relabeled(perm);
    const auto a = classify_group(g, {.group_name = name});
    const auto b = classify_group(h, {.group_name = name});
    CHECK(fingerprint(a) == fingerprint(b));
    CHECK(render_text(a) == render_text(classify_group(g, {.group_name = name})));
  }
}

TEST_CASE("driver on UT(4, Z/3)") {
  const auto g = grp::unitriangular4(3);
  const auto r = classify_group(g, {.group_name = "unitriangular4:m=3"});
  CHECK(r.violations() == 0);
  CHECK(r.order == 729);
  CHECK(r.abelian_pairs.empty());
  std::size_t type_c = 0;
  for (const auto& c : r.classes) {
    if (!c.abelian) {
      REQUIRE(c.type_c.has_value());
      CHECK(c.verdict.has_value());
      ++type_c;
    }
  }
  CHECK(type_c > 0);
  // Sample abelian classes against the direct scan.
  std::size_t sampled = 0;
  for (const auto& c : r.classes) {
    if (!c.abelian || sampled >= 4) continue;
    ++sampled;
    const auto cls = grp::class_of(g, c.representative);
    std::size_t failing = 0;
    for (const auto& chi : grp::characters_of_group(grp::centralizer(g, c.representative)))
      if (!chi(c.representative).is_one() && !violators(g, c.representative, chi).empty()) ++failing;
    CHECK(failing == c.nontrivial_failing);
  }
}
