#include <doctest.h>

#include "yetter/grp/catalog.hpp"
#include "yetter/limits.hpp"
#include "yetter/rack/rack.hpp"
#include "yetter/rack/type_c.hpp"

using namespace yetter::rack;
using namespace yetter::grp;

namespace {

// x ▷ y = y evaluated directly on group elements, for every pair in the class.
bool brute_abelian_class(const ConjugacyClass& c) {
  const auto& g = *c.group;
  for (Element x : c.members)
    for (Element y : c.members)
      if (g.mul(g.mul(x, y), g.inv(x)) != y) return false;
  return true;
}

}  // namespace

TEST_CASE("conjugation racks of heisenberg(1,3)") {
  const auto g = heisenberg(1, 3);
  for (const auto& cls : conjugacy_classes(g)) {
    const auto x = conjugation_rack(cls);
    CHECK(x.satisfies_axioms());
    CHECK(x.size() == cls.size());
    CHECK(is_abelian_rack(x) == brute_abelian_class(cls));
    CHECK(is_abelian_rack(x));
    CHECK(inner_group(x).group->order() == 1);
    CHECK(type_c_search(x).outcome == TypeCOutcome::NotTypeC);
  }
}

TEST_CASE("abstract racks") {
  // Two points swapped by both translations: Inn = Z/2.
  const auto swap = Rack::from_table(2, {1, 0, 1, 0});
  CHECK_FALSE(is_abelian_rack(swap));
  CHECK(inner_group(swap).group->order() == 2);
  const auto single = Rack::from_table(1, {0});
  CHECK(is_abelian_rack(single));
  CHECK(inner_group(single).group->order() == 1);
  // Not self-distributive: 0 ▷ - swaps, 1 ▷ - is identity, 2 fixed points.
  CHECK_THROWS_AS(Rack::from_table(3, {1, 0, 2, 0, 2, 1, 0, 1, 2}), yetter::PreconditionError);
  CHECK_THROWS_AS(type_c_search(swap), yetter::PreconditionError);
}

TEST_CASE("unitriangular class with unit superdiagonal is of type C") {
  const auto g = unitriangular4(3);
  const auto r = *g->find_label("(1,1,1,0,0,0)");
  const auto cls = class_of(g, r);
  const auto x = conjugation_rack(cls);
  CHECK(x.size() == 27);
  CHECK_FALSE(is_abelian_rack(x));
  CHECK_FALSE(brute_abelian_class(cls));
  const auto inn = inner_group(x);
  // Inn of a class in a 3-group is a 3-group.
  auto n = inn.group->order();
  while (n % 3 == 0) n /= 3;
  CHECK(n == 1);
  CHECK(inn.group->order() > 1);

  const auto res = type_c_search(x);
  REQUIRE(res.outcome == TypeCOutcome::TypeC);
  const auto& w = *res.witness;
  CHECK(w.r == r);
  CHECK(w.subgroup_order == 27);
  CHECK(w.part_r.size() == 3);
  CHECK(w.part_s.size() == 3);
  CHECK(w.valid());
  const auto again = revalidate(w);
  CHECK(again.valid());
  CHECK(again.inner_group_order == w.inner_group_order);
  // <r, s> is non-abelian of order 27 with center of order 3.
  const auto h = Subgroup::generated_by(g, std::vector<Element>{w.r, w.s});
  CHECK_FALSE(h.is_abelian());
  std::size_t central = 0;
  for (Element a : h.members()) {
    bool c = true;
    for (Element b : h.members()) c = c && g->commute(a, b);
    central += c;
  }
  CHECK(central == 3);

  // A tampered witness fails revalidation.
  auto bad = w;
  bad.part_s = bad.part_r;
  CHECK_FALSE(revalidate(bad).valid());
  auto small = w;
  small.part_r.pop_back();
  CHECK_FALSE(revalidate(small).valid());
}

TEST_CASE("budget exhaustion is undetermined") {
  const auto g = unitriangular4(3);
  const auto x = conjugation_rack(class_of(g, *g->find_label("(1,1,1,0,0,0)")));
  const auto res = type_c_search(x, 0);
  CHECK(res.outcome == TypeCOutcome::Undetermined);
}

TEST_CASE("D4 x| Z4 class of x is neither abelian nor found of type C") {
  const auto g = d4_semidirect_z4();
  const auto cls = class_of(g, *g->find_label("x"));
  CHECK(cls.size() == 4);
  const auto x = conjugation_rack(cls);
  CHECK_FALSE(is_abelian_rack(x));
  const auto res = type_c_search(x, std::nullopt);
  CHECK(res.outcome == TypeCOutcome::Undetermined);
  CHECK_THROWS_AS(abelian_or_type_c_audit(g), yetter::PreconditionError);
}

TEST_CASE("type C passes to products with a type C factor") {
  const auto g = construct_named("unitriangular4:m=3*cyclic:m=3");
  const auto e = *g->find_label("((1,1,1,0,0,0),1)");
  const auto x = conjugation_rack(class_of(g, e));
  CHECK(x.size() == 27);
  const auto res = type_c_search(x);
  REQUIRE(res.outcome == TypeCOutcome::TypeC);
  CHECK(res.witness->valid());
}

TEST_CASE("abelian-or-type-C audit on odd nilpotent catalog groups") {
  for (const char* spec : {"heisenberg:n=1,m=3", "heisenberg:n=1,m=5", "unitriangular4:m=3"}) {
    CAPTURE(spec);
    const auto g = construct_named(spec);
    const auto report = abelian_or_type_c_audit(g);
    CHECK(report.violations() == 0);
    for (const auto& e : report.classes) {
      if (e.status == ClassStatus::TypeC) {
        REQUIRE(e.witness.has_value());
        CHECK(revalidate(*e.witness).valid());
      }
      const auto cls = class_of(g, e.representative);
      CHECK((e.status == ClassStatus::Abelian) == brute_abelian_class(cls));
    }
  }
}

TEST_CASE("quotient maps extend to surjections of inner groups") {
  const auto big = heisenberg(1, 9);
  const auto small = heisenberg_quotient(1, 9, 3);
  // (a, b, c) -> (a, b, c mod 3) is a surjective homomorphism.
  auto project = [&](Element a) {
    auto label = big->label(a);
    const auto last = label.rfind(',');
    const int c = std::stoi(label.substr(last + 1, label.size() - last - 2));
    return *small->find_label(label.substr(0, last + 1) + std::to_string(c % 3) + ")");
  };
  for (const char* rep : {"(1,0,0)", "(1,2,0)", "(3,1,0)"}) {
    CAPTURE(rep);
    const auto cls = class_of(big, *big->find_label(rep));
    const auto image = class_of(small, project(cls.representative));
    const auto x = conjugation_rack(cls);
    const auto y = conjugation_rack(image);
    std::vector<std::uint32_t> f;
    for (Element m : x.elements()) f.push_back(*y.position(project(m)));
    REQUIRE(is_rack_morphism(x, y, f));
    const auto ext = extend_to_inner(x, y, f);
    CHECK(ext.well_defined);
    CHECK(ext.surjective);
  }
}

TEST_CASE("projection of a product extends to a surjection of non-trivial inner groups") {
  const auto ut = unitriangular4(3);
  const auto g = construct_named("unitriangular4:m=3*cyclic:m=3");
  auto project = [&](Element a) {
    const auto label = g->label(a);
    return *ut->find_label(label.substr(1, label.rfind(',') - 1));
  };
  const auto cls = class_of(g, *g->find_label("((1,1,1,0,0,0),2)"));
  const auto image = class_of(ut, project(cls.representative));
  const auto x = conjugation_rack(cls);
  const auto y = conjugation_rack(image);
  std::vector<std::uint32_t> f;
  for (Element m : x.elements()) f.push_back(*y.position(project(m)));
  REQUIRE(is_rack_morphism(x, y, f));
  const auto ext = extend_to_inner(x, y, f);
  CHECK(ext.target.group->order() > 1);
  CHECK(ext.well_defined);
  CHECK(ext.surjective);
}
