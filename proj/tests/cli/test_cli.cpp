#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "yetter/grp/catalog.hpp"
#include "yetter/grp/character.hpp"
#include "yetter/grp/subgroup.hpp"
#include "yetter/io/json.hpp"
#include "yetter/nichols/recognizer.hpp"
#include "yetter/limits.hpp"
#include "yetter/rack/type_c.hpp"
#include "yetter/yd/module.hpp"

using namespace yetter;
using io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("yetter_cli_" + name);
}

// Set YETTER_UPDATE_GOLDEN=1 to rewrite the files after an intended change.
void check_golden(const std::string& file, const std::vector<std::string>& args) {
  const auto path = std::filesystem::path(YETTER_GOLDEN_DIR) / file;
  const auto r = run(args);
  REQUIRE(r.code == 0);
  if (std::getenv("YETTER_UPDATE_GOLDEN")) {
    std::ofstream(path, std::ios::binary) << r.out;
    return;
  }
  REQUIRE(std::filesystem::exists(path));
  CHECK(r.out == slurp(path));
}

}  // namespace

TEST_CASE("golden outputs") {
  const std::string h3 = "heisenberg:n=1,m=3";
  check_golden("group_info_heis3.txt", {"group-info", "--group", h3});
  check_golden("classes_heis3.txt", {"classes", "--group", h3});
  check_golden("audit21_heis3.txt", {"audit21", "--group", h3});
  check_golden("diagonal_verdict_a2.txt", {"diagonal-verdict", "--diagonal", "[[w,w],[w,w]]"});
  check_golden("diagonal_verdict_mixed.txt", {"diagonal-verdict", "--diagonal", "[[w,1],[w2,-1]]"});
  check_golden("nichols_dim_a2.txt", {"nichols-dim", "--diagonal", "[[w,w],[w,w]]", "--max-degree", "9"});
  check_golden("nichols_dim_a2.json",
               {"nichols-dim", "--diagonal", "[[w,w],[w,w]]", "--max-degree", "9", "--format", "json"});
  check_golden("algorithm38_heis3.txt", {"algorithm38", "--group", h3});
  check_golden("algorithm38_wreath33.txt", {"algorithm38", "--group", "wreath:m=3,k=3"});
  check_golden("typec_ut4.json",
               {"typec", "--group", "unitriangular4:m=3", "--class-rep", "(1,1,1,0,0,0)", "--format", "json"});
  check_golden("yz_quotient6.txt", {"yz", "--group", "heisenberg_quotient:n=1,m=6,N=2", "--class-rep", "(1,0,0)",
                                    "--char", "2", "--g", "(0,1,0)"});
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::vector<std::string>> cmds = {
      {"algorithm38", "--group", "wreath:m=3,k=3", "--format", "json"},
      {"typec", "--group", "unitriangular4:m=3", "--format", "json"},
      {"classes", "--group", "heisenberg:n=1,m=5", "--format", "json"},
  };
  for (const auto& c : cmds) {
    const auto a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("documented invocations") {
  SUBCASE("typec on UT(4, Z/3)") {
    const auto r = run({"typec", "--group", "unitriangular4:m=3", "--class-rep", "(1,1,1,0,0,0)", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["result"]["outcome"] == "TypeC");
    const auto& w = j["result"]["witness"];
    CHECK(w["H_order"] == 27);
    CHECK(w["conditions"]["r_moves_s"] == true);
    CHECK(w["conditions"]["parts_are_inner_orbits"] == true);
    CHECK(w["conditions"]["size_bound"] == true);
  }
  SUBCASE("nichols-dim of A2 at omega") {
    const auto r = run({"nichols-dim", "--diagonal", "[[w,w],[w,w]]", "--max-degree", "9", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto p = json::parse(r.out)["profile"];
    CHECK(p["total"] == 27);
    CHECK(p["certified"] == true);
    CHECK(p["dims"].back() == 0);
  }
  SUBCASE("algorithm38 on Heis(3, Z/3)") {
    const auto r = run({"algorithm38", "--group", "heisenberg:n=1,m=3", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["abelian_pairs"].empty());
    CHECK(j["families"].empty());
    CHECK(j["violations"] == 0);
  }
  SUBCASE("audit21 is clean") {
    for (const char* g : {"heisenberg:n=1,m=3", "unitriangular4:m=3"}) {
      const auto r = run({"audit21", "--group", g});
      CHECK(r.code == 0);
      CHECK(r.out.find("VIOLATION") == std::string::npos);
    }
  }
}

TEST_CASE("usage errors exit 1 on stderr") {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate"},
      {"group-info"},
      {"group-info", "--group", "heisenberg:n=1,m=3", "--format", "xml"},
      {"group-info", "--group", "nosuchgroup:n=1"},
      {"typec", "--group", "heisenberg:n=1,m=3", "--class-rep", "(9,9,9)"},
      {"nichols-dim"},
      {"nichols-dim", "--diagonal", "[[w,w],[w]]"},
      {"algorithm38", "--group", "dihedral4"},
      {"yd-build", "--group", "heisenberg:n=1,m=3", "--class-rep", "(1,0,0)", "--char", "99"},
  };
  for (const auto& args : bad) {
    CAPTURE(args.size());
    const auto r = run(args);
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
  }
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("algorithm38") != std::string::npos);
}

TEST_CASE("group JSON round trip") {
  for (const char* name : {"heisenberg:n=1,m=3", "unitriangular4:m=3", "wreath:m=3,k=3", "dihedral4"}) {
    const auto g = grp::construct_named(name);
    const auto j = io::to_json(*g);
    const auto back = io::group_from_json(json::parse(j.dump()));
    CHECK(back->order() == g->order());
    CHECK(back->identity() == g->identity());
    CHECK(back->table() == g->table());
    CHECK(back->generators() == g->generators());
    CHECK(back->labels() == g->labels());
    CHECK(io::to_json(*back) == j);
  }
  const auto file = scratch("group.json");
  REQUIRE(run({"group-info", "--group", "heisenberg:n=1,m=3", "--out", file.string()}).code == 0);
  const auto a = run({"classes", "--group", "heisenberg:n=1,m=3"});
  const auto b = run({"classes", "--group-json", file.string()});
  REQUIRE(b.code == 0);
  // Only the header names the source; the class lines must match.
  CHECK(a.out.substr(a.out.find('\n')) == b.out.substr(b.out.find('\n')));
  std::filesystem::remove(file);
}

TEST_CASE("scalar and diagonal JSON round trip") {
  for (const auto& r : {cyclo::RootOfUnity(0, 1), cyclo::RootOfUnity(1, 2), cyclo::RootOfUnity(2, 3),
                        cyclo::RootOfUnity(5, 12)}) {
    CHECK(io::root_from_json(io::to_json(r)) == r);
    CHECK(io::scalar_from_json(io::to_json(r)) == cyclo::CycloNumber::from_root(r));
  }
  const cyclo::Rational big(mpz_class("123456789012345678901234567891"), mpz_class(7));
  const std::vector<cyclo::Rational> cs = {big, cyclo::Rational(-3, 4), cyclo::Rational(0)};
  const cyclo::CycloNumber x(9, cs);
  const auto jx = io::to_json(x);
  CHECK(io::scalar_from_json(json::parse(jx.dump())) == x);
  CHECK(io::to_json(io::scalar_from_json(jx)) == jx);

  const yd::DiagonalBraiding q({{cyclo::RootOfUnity(1, 3), cyclo::RootOfUnity(1, 3), cyclo::RootOfUnity(0, 1)},
                                {cyclo::RootOfUnity(0, 1), cyclo::RootOfUnity(1, 2), cyclo::RootOfUnity(1, 5)},
                                {cyclo::RootOfUnity(2, 7), cyclo::RootOfUnity(0, 1), cyclo::RootOfUnity(1, 4)}});
  CHECK(io::diagonal_from_json(json::parse(io::to_json(q).dump())) == q);
}

TEST_CASE("braiding JSON round trip and CLI import") {
  const auto g = grp::construct_named("heisenberg_quotient:n=1,m=6,N=2");
  const auto x = *g->find_label("(1,0,0)");
  const auto cls = grp::class_of(g, x);
  const auto chars = grp::characters_of_group(grp::centralizer(g, x));
  for (const auto& chi : chars) {
    const auto c = yd::braiding_of(yd::build_yd_module(cls, chi));
    const auto j = io::to_json(c);
    const auto back = io::braiding_from_json(json::parse(j.dump()));
    CHECK(back.dim() == c.dim());
    CHECK(back.braiding() == c.braiding());
    CHECK(io::to_json(back) == j);
  }

  const auto file = scratch("braiding.json");
  REQUIRE(run({"braiding-export", "--group", "heisenberg_quotient:n=1,m=6,N=2", "--class-rep", "(1,0,0)", "--char",
               "2", "--out", file.string()})
              .code == 0);
  const auto r = run({"nichols-dim", "--braiding-json", file.string(), "--max-degree", "9", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto p = json::parse(r.out)["profile"];
  CHECK(p["sum"] == 27);
  CHECK(p["dims"][9] == 0);
  std::filesystem::remove(file);
}

TEST_CASE("verdict and profile JSON round trip") {
  using cyclo::RootOfUnity;
  const std::vector<yd::DiagonalBraiding> cases = {
      yd::DiagonalBraiding(2, RootOfUnity(1, 3)),
      yd::DiagonalBraiding(3, RootOfUnity(1, 2)),
      yd::DiagonalBraiding(1, RootOfUnity(0, 1)),
      yd::DiagonalBraiding(2, RootOfUnity(1, 5)),
  };
  for (const auto& q : cases) {
    const auto v = nichols::diagonal_verdict(q);
    CHECK(io::verdict_from_json(json::parse(io::to_json(v).dump())) == v);
    const auto prof = nichols::dim_profile(q, 5);
    const auto jp = io::to_json(prof);
    const auto back = io::profile_from_json(json::parse(jp.dump()));
    CHECK(back.dims == prof.dims);
    CHECK(back.first_zero == prof.first_zero);
    CHECK(back.certified == prof.certified);
    CHECK(io::to_json(back) == jp);
  }
}

TEST_CASE("witness JSON round trip revalidates") {
  const auto g = grp::construct_named("unitriangular4:m=3");
  const auto x = *g->find_label("(1,1,1,0,0,0)");
  const auto res = rack::type_c_search(rack::conjugation_rack(grp::class_of(g, x)));
  REQUIRE(res.witness);
  const auto j = io::to_json(*res.witness);
  const auto w = io::witness_from_json(json::parse(j.dump()), g);
  CHECK(w.valid());
  CHECK(w.r == res.witness->r);
  CHECK(w.s == res.witness->s);
  CHECK(w.part_r == res.witness->part_r);
  CHECK(w.part_s == res.witness->part_s);
  CHECK(w.subgroup_order == 27);
  CHECK(io::to_json(w) == j);

  // A tampered witness must not come back valid.
  auto bad = j;
  bad["S_members"] = bad["R_members"];
  bool rejected = false;
  try {
    rejected = !io::witness_from_json(bad, g).valid();
  } catch (const PreconditionError&) {
    rejected = true;
  }
  CHECK(rejected);
}

TEST_CASE("report JSON is stable under parse and dump") {
  for (const char* name : {"heisenberg:n=1,m=3", "wreath:m=3,k=3"}) {
    const auto r = run({"algorithm38", "--group", name, "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.dump(2) + "\n" == r.out);
  }
}
