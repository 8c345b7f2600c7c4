#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "yetter/classify/driver.hpp"
#include "yetter/grp/catalog.hpp"
#include "yetter/io/json.hpp"
#include "yetter/limits.hpp"
#include "yetter/nichols/recognizer.hpp"
#include "yetter/nichols/symmetrizer.hpp"
#include "yetter/rack/type_c.hpp"
#include "yetter/yd/diagonal.hpp"
#include "yetter/yd/module.hpp"

namespace yetter::cli {

namespace {

using cyclo::RootOfUnity;
using grp::Element;
using grp::GroupPtr;
using io::json;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kViolation = 2;

struct Options {
  std::string group;
  std::string group_json;
  std::string format = "text";
  std::string class_rep;
  std::optional<std::size_t> char_index;
  std::string diagonal;
  std::string braiding_json;
  std::size_t max_degree = 4;
  std::optional<std::size_t> budget;
  bool assume_conjecture = false;
  std::string g;
  std::string out;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw PreconditionError("invalid JSON in " + path + ": " + e.what());
  }
}

GroupPtr load_group(const Options& o) {
  if (!o.group.empty() && !o.group_json.empty()) throw UsageError("use either --group or --group-json");
  if (!o.group.empty()) return grp::construct_named(o.group);
  if (!o.group_json.empty()) return io::group_from_json(read_json_file(o.group_json));
  throw UsageError("this command needs --group or --group-json");
}

std::string group_name(const Options& o) { return o.group.empty() ? o.group_json : o.group; }

/// Accepts a label or "#index".
Element find_element(const grp::FiniteGroup& g, const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError(std::string("this command needs ") + flag);
  if (auto e = g.find_label(text)) return *e;
  if (text.front() == '#') {
    std::size_t idx = 0;
    try {
      idx = std::stoul(text.substr(1));
    } catch (const std::exception&) {
      throw UsageError(std::string("bad element index for ") + flag + ": " + text);
    }
    if (idx < g.order()) return static_cast<Element>(idx);
  }
  throw UsageError(std::string("no element '") + text + "' for " + flag);
}

grp::Character pick_character(const grp::Subgroup& k, const Options& o) {
  if (!o.char_index) throw UsageError("this command needs --char");
  auto chars = grp::characters_of_group(k);
  if (*o.char_index >= chars.size()) {
    throw UsageError("--char " + std::to_string(*o.char_index) + " out of range; the centralizer has " +
                     std::to_string(chars.size()) + " characters");
  }
  return chars[*o.char_index];
}

/// "[[w,w],[w,w]]" with entries accepted by RootOfUnity::parse.
yd::DiagonalBraiding parse_diagonal(const std::string& text) {
  std::vector<std::vector<RootOfUnity>> rows;
  std::vector<RootOfUnity> row;
  std::string token;
  int depth = 0;
  auto flush = [&] {
    std::string t;
    for (char c : token)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    token.clear();
    if (!t.empty()) row.push_back(RootOfUnity::parse(t));
  };
  for (char c : text) {
    if (c == '[') {
      if (++depth > 2) throw UsageError("--diagonal nests too deeply");
    } else if (c == ']') {
      if (depth == 2) {
        flush();
        rows.push_back(std::move(row));
        row.clear();
      }
      if (--depth < 0) throw UsageError("unbalanced brackets in --diagonal");
    } else if (c == ',') {
      if (depth == 2) flush();
    } else if (depth == 2) {
      token += c;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw UsageError(std::string("unexpected '") + c + "' in --diagonal");
    }
  }
  if (depth != 0) throw UsageError("unbalanced brackets in --diagonal");
  if (rows.empty()) throw UsageError("--diagonal is empty");
  for (const auto& r : rows)
    if (r.size() != rows.size()) throw UsageError("--diagonal must be square");
  return yd::DiagonalBraiding(rows);
}

struct Selected {
  grp::ConjugacyClass cls;
  Element x;
  grp::Character chi;
};

Selected select_module(const GroupPtr& g, const Options& o) {
  const Element x = find_element(*g, o.class_rep, "--class-rep");
  auto cls = grp::class_of(g, x);
  auto chi = pick_character(grp::centralizer(g, x), o);
  return {std::move(cls), x, std::move(chi)};
}

std::string labels(const grp::FiniteGroup& g, const std::vector<Element>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + g.label(xs[i]);
  return s;
}

std::string dims_text(const std::vector<std::size_t>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? " " : "") + std::to_string(d[i]);
  return s;
}

void emit(const Options& o, std::ostream& out, const json& j, const std::string& text) {
  if (o.format == "json") out << j.dump(2) << "\n";
  else out << text;
}

void write_out(const Options& o, const json& j) {
  if (o.out.empty()) return;
  std::ofstream f(o.out);
  if (!f) throw UsageError("cannot write " + o.out);
  f << j.dump(2) << "\n";
}

// ---- verbs ----

int group_info(const Options& o, std::ostream& out) {
  const auto g = load_group(o);
  const auto z = grp::center(g);
  const auto d = grp::commutator_subgroup(g);
  const auto series = grp::upper_central_series(g);
  const auto classes = grp::conjugacy_classes(g);
  std::size_t exponent = 1;
  for (Element e = 0; e < g->order(); ++e) exponent = std::lcm(exponent, g->element_order(e));
  json j{{"group", group_name(o)},
         {"order", g->order()},
         {"abelian", g->is_abelian()},
         {"exponent", exponent},
         {"generators", labels(*g, g->generators())},
         {"center", labels(*g, z.members())},
         {"center_order", z.order()},
         {"commutator_order", d.order()},
         {"abelianization_order", g->order() / d.order()},
         {"classes", classes.size()}};
  if (series.nilpotency_class) j["nilpotency_class"] = *series.nilpotency_class;
  else j["nilpotency_class"] = nullptr;
  std::ostringstream os;
  os << "group " << group_name(o) << "\n"
     << "order " << g->order() << ", exponent " << exponent << (g->is_abelian() ? ", abelian" : "") << "\n"
     << "generators: " << labels(*g, g->generators()) << "\n"
     << "center (order " << z.order() << "): " << labels(*g, z.members()) << "\n"
     << "commutator subgroup order " << d.order() << ", abelianization order " << g->order() / d.order() << "\n"
     << "nilpotency class "
     << (series.nilpotency_class ? std::to_string(*series.nilpotency_class) : std::string("none (not nilpotent)"))
     << "\n"
     << "conjugacy classes " << classes.size() << "\n";
  emit(o, out, j, os.str());
  write_out(o, io::to_json(*g));
  return kOk;
}

int classes_verb(const Options& o, std::ostream& out) {
  const auto g = load_group(o);
  json arr = json::array();
  std::ostringstream os;
  os << "classes of " << group_name(o) << " (order " << g->order() << ")\n";
  for (const auto& cls : grp::conjugacy_classes(g)) {
    const bool ab = rack::is_abelian_rack(rack::conjugation_rack(cls));
    const auto nchars = grp::characters_of_group(cls.centralizer).size();
    arr.push_back({{"representative", cls.representative},
                   {"label", g->label(cls.representative)},
                   {"size", cls.size()},
                   {"central", cls.is_central()},
                   {"abelian_rack", ab},
                   {"centralizer_order", cls.centralizer.order()},
                   {"centralizer_characters", nchars},
                   {"members", labels(*g, cls.members)}});
    os << "  " << g->label(cls.representative) << " size " << cls.size() << (cls.is_central() ? " central" : "")
       << (ab ? " abelian" : " non-abelian") << ", centralizer order " << cls.centralizer.order() << ", "
       << nchars << " characters\n";
  }
  emit(o, out, json{{"group", group_name(o)}, {"classes", arr}}, os.str());
  return kOk;
}

int typec(const Options& o, std::ostream& out) {
  const auto g = load_group(o);
  std::vector<grp::ConjugacyClass> targets;
  if (!o.class_rep.empty()) {
    targets.push_back(grp::class_of(g, find_element(*g, o.class_rep, "--class-rep")));
  } else {
    for (auto& c : grp::conjugacy_classes(g))
      if (!c.is_central()) targets.push_back(std::move(c));
  }
  const std::optional<std::size_t> budget = o.budget ? o.budget : std::optional<std::size_t>(rack::kDefaultTypeCBudget);
  json arr = json::array();
  std::ostringstream os;
  for (const auto& cls : targets) {
    auto res = rack::type_c_search(rack::conjugation_rack(cls), budget);
    json e{{"class", g->label(cls.representative)}, {"size", cls.size()}, {"result", io::to_json(res)}};
    os << "class " << g->label(cls.representative) << " size " << cls.size() << ": " << rack::to_string(res.outcome)
       << " after " << res.pairs_examined << " pairs";
    if (!res.note.empty()) os << " (" << res.note << ")";
    os << "\n";
    if (res.witness) {
      const auto& w = *res.witness;
      const auto v = nichols::type_c_verdict(w, o.assume_conjecture);
      e["verdict"] = io::to_json(v);
      os << "  r = " << g->label(w.r) << ", s = " << g->label(w.s) << ", |<r,s>| = " << w.subgroup_order
         << ", |Inn Y| = " << w.inner_group_order << "\n"
         << "  R = {" << labels(*g, w.part_r) << "}\n"
         << "  S = {" << labels(*g, w.part_s) << "}\n"
         << "  r moves s: " << (w.r_moves_s ? "yes" : "no")
         << ", parts are inner orbits: " << (w.parts_are_inner_orbits ? "yes" : "no")
         << ", size bound: " << (w.size_bound ? "yes" : "no") << "\n"
         << "  " << v.to_string() << "\n";
    }
    arr.push_back(e);
  }
  json j = o.class_rep.empty() ? json{{"group", group_name(o)}, {"classes", arr}} : arr.front();
  emit(o, out, j, os.str());
  write_out(o, j);
  return kOk;
}

int audit(const Options& o, std::ostream& out) {
  const auto g = load_group(o);
  const auto rep = rack::abelian_or_type_c_audit(g, o.budget.value_or(rack::kDefaultTypeCBudget));
  json arr = json::array();
  std::ostringstream os;
  os << "audit of " << group_name(o) << " (order " << g->order() << ")\n";
  for (const auto& e : rep.classes) {
    json je{{"class", g->label(e.representative)},
            {"size", e.size},
            {"status", rack::to_string(e.status)},
            {"pairs_examined", e.pairs_examined},
            {"escalated", e.escalated},
            {"note", e.note}};
    if (e.witness) je["witness"] = io::to_json(*e.witness);
    arr.push_back(je);
    os << "  " << g->label(e.representative) << " size " << e.size << ": " << rack::to_string(e.status);
    if (e.witness) os << " (r = " << g->label(e.witness->r) << ", s = " << g->label(e.witness->s) << ")";
    if (e.escalated) os << " [escalated]";
    os << "\n";
  }
  os << "violations " << rep.violations() << "\n";
  if (rep.violations()) os << "VIOLATION\n";
  emit(o, out, json{{"group", group_name(o)}, {"classes", arr}, {"violations", rep.violations()}}, os.str());
  return rep.violations() ? kViolation : kOk;
}

int yd_build(const Options& o, std::ostream& out) {
  const auto g = load_group(o);
  const auto s = select_module(g, o);
  const auto m = yd::build_yd_module(s.cls, s.chi, yd::TransversalOrder::Forward, s.x);
  const auto c = yd::braiding_of(m);
  const auto form = yd::diagonal_form(m);
  std::vector<Element> transversal;
  for (std::size_t p = 0; p < s.cls.size(); ++p) transversal.push_back(m.transversal(p));
  json j{{"group", group_name(o)},
         {"basepoint", g->label(s.x)},
         {"class", labels(*g, s.cls.members)},
         {"transversal", labels(*g, transversal)},
         {"chi_at_basepoint", io::to_json(s.chi(s.x))},
         {"dim", m.dim()},
         {"braid_equation", yd::satisfies_braid_equation(c)}};
  std::ostringstream os;
  os << "M(O, chi) over " << group_name(o) << ", basepoint " << g->label(s.x) << ", chi(x) = "
     << s.chi(s.x).to_string() << "\n"
     << "class: " << labels(*g, s.cls.members) << "\n"
     << "transversal: " << labels(*g, transversal) << "\n"
     << "dim " << m.dim() << ", braid equation " << (j["braid_equation"].get<bool>() ? "holds" : "FAILS") << "\n";
  if (const auto* q = std::get_if<yd::DiagonalBraiding>(&form)) {
    const auto d = yd::dynkin(*q);
    const auto v = nichols::diagonal_verdict(*q);
    j["diagonal"] = io::to_json(*q);
    j["diagram"] = io::to_json(d);
    j["verdict"] = io::to_json(v);
    os << "diagonal type; Dynkin diagram:\n" << d.to_text() << v.to_string() << "\n";
  } else {
    const auto& nd = std::get<yd::NotDiagonal>(form);
    j["diagonal"] = nullptr;
    j["not_diagonal"] = nd.reason;
    os << "not diagonal: " << nd.reason << "\n";
  }
  emit(o, out, j, os.str());
  write_out(o, j);
  return kOk;
}

int braiding_export(const Options& o, std::ostream& out) {
  const auto g = load_group(o);
  const auto s = select_module(g, o);
  const auto m = yd::build_yd_module(s.cls, s.chi, yd::TransversalOrder::Forward, s.x);
  const auto j = io::to_json(yd::braiding_of(m));
  if (!o.out.empty()) {
    write_out(o, j);
    out << "wrote braiding of dimension " << m.dim() << " to " << o.out << "\n";
  } else {
    out << j.dump(2) << "\n";
  }
  return kOk;
}

std::string profile_text(const nichols::DimProfile& p) {
  std::ostringstream os;
  os << "braiding: " << p.braiding << " (dim " << p.dim << ")\n"
     << "dims: " << dims_text(p.dims) << "\n"
     << "partial sum " << p.sum().get_str() << "\n";
  if (p.first_zero) os << "first zero at degree " << *p.first_zero << "\n";
  if (p.predicted_top_degree) os << "predicted top degree " << *p.predicted_top_degree << "\n";
  if (auto t = p.total()) os << "certified total " << t->get_str() << "\n";
  else os << "not certified\n";
  return os.str();
}

int nichols_dim(const Options& o, std::ostream& out) {
  const int sources = !o.diagonal.empty() + !o.braiding_json.empty() + (!o.group.empty() || !o.group_json.empty());
  if (sources != 1) throw UsageError("nichols-dim needs exactly one of --diagonal, --braiding-json, --group");
  json j;
  std::string text;
  if (!o.diagonal.empty()) {
    const auto q = parse_diagonal(o.diagonal);
    const auto p = nichols::dim_profile(q, o.max_degree);
    const auto v = nichols::diagonal_verdict(q);
    j = {{"profile", io::to_json(p)}, {"verdict", io::to_json(v)}, {"diagonal", io::to_json(q)}};
    text = profile_text(p) + v.to_string() + "\n";
  } else if (!o.braiding_json.empty()) {
    const auto c = io::braiding_from_json(read_json_file(o.braiding_json));
    const auto p = nichols::dim_profile(c, o.max_degree);
    j = {{"profile", io::to_json(p)}};
    text = profile_text(p);
  } else {
    const auto g = load_group(o);
    const auto s = select_module(g, o);
    const auto m = yd::build_yd_module(s.cls, s.chi, yd::TransversalOrder::Forward, s.x);
    auto p = nichols::dim_profile(yd::braiding_of(m), o.max_degree);
    const auto form = yd::diagonal_form(m);
    if (const auto* q = std::get_if<yd::DiagonalBraiding>(&form)) {
      nichols::certify(p, nichols::predicted_top_degree(*q));
      const auto v = nichols::diagonal_verdict(*q);
      j = {{"profile", io::to_json(p)}, {"verdict", io::to_json(v)}};
      text = profile_text(p) + v.to_string() + "\n";
    } else {
      j = {{"profile", io::to_json(p)}};
      text = profile_text(p);
    }
  }
  emit(o, out, j, text);
  write_out(o, j);
  return kOk;
}

int diagonal_verdict_verb(const Options& o, std::ostream& out) {
  if (o.diagonal.empty()) throw UsageError("diagonal-verdict needs --diagonal");
  const auto q = parse_diagonal(o.diagonal);
  const auto d = yd::dynkin(q);
  const auto v = nichols::diagonal_verdict(q);
  const auto top = nichols::predicted_top_degree(q);
  json j{{"diagonal", io::to_json(q)}, {"diagram", io::to_json(d)}, {"verdict", io::to_json(v)}};
  if (top) j["predicted_top_degree"] = *top;
  std::ostringstream os;
  os << "Dynkin diagram:\n" << d.to_text() << v.to_string() << "\n";
  if (top) os << "predicted top degree " << *top << "\n";
  emit(o, out, j, os.str());
  return kOk;
}

int algorithm(const Options& o, std::ostream& out) {
  const auto g = load_group(o);
  classify::DriverOptions d;
  d.group_name = group_name(o);
  if (o.budget) d.type_c_budget = o.budget;
  d.assume_conjecture = o.assume_conjecture;
  const auto r = classify::classify_group(g, d);
  const auto j = io::to_json(r);
  std::string text = classify::render_text(r);
  if (r.violations()) text += "VIOLATION: " + std::to_string(r.violations()) + " non-abelian classes without a type C witness\n";
  emit(o, out, j, text);
  write_out(o, j);
  return r.violations() ? kViolation : kOk;
}

int yz(const Options& o, std::ostream& out) {
  const auto g = load_group(o);
  const auto s = select_module(g, o);
  const Element h = find_element(*g, o.g, "--g");
  const auto r = classify::yz_analysis(g, s.x, s.chi, h);
  const auto j = io::to_json(r, *g);
  std::ostringstream os;
  os << "orbit of " << g->label(s.x) << " under " << g->label(h) << ": " << labels(*g, r.orbit) << "\n"
     << "n = " << r.n() << ", q = " << r.q.to_string() << ", zeta = " << r.zeta.to_string() << "\n"
     << "case " << classify::to_string(r.yz_case) << "\n"
     << "cycle diagram:\n"
     << yd::dynkin(r.cycle).to_text() << r.local.to_string() << "\n";
  emit(o, out, j, os.str());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nichols algebras over finite groups: racks, Yetter-Drinfeld modules, verdicts", "yetter"};
  app.require_subcommand(1);
  Options o;

  auto group_opts = [&](CLI::App* sc) {
    sc->add_option("--group", o.group, "catalog group, e.g. heisenberg:n=1,m=3");
    sc->add_option("--group-json", o.group_json, "group JSON file {order, mul_table, generators, labels?}");
  };
  auto common = [&](CLI::App* sc) {
    sc->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sc->add_option("--out", o.out, "also write the JSON result to this path");
  };
  auto module_opts = [&](CLI::App* sc) {
    sc->add_option("--class-rep", o.class_rep, "class element, by label or #index");
    sc->add_option("--char", o.char_index, "character index on the centralizer (see `classes`)");
  };

  auto* gi = app.add_subcommand("group-info", "order, center, commutator subgroup, nilpotency");
  group_opts(gi);
  common(gi);
  auto* cl = app.add_subcommand("classes", "conjugacy classes and their rack type");
  group_opts(cl);
  common(cl);
  auto* tc = app.add_subcommand("typec", "type C witness search");
  group_opts(tc);
  common(tc);
  tc->add_option("--class-rep", o.class_rep, "class element, by label or #index (default: all non-central)");
  tc->add_option("--budget", o.budget, "candidate pair budget");
  tc->add_flag("--assume-conjecture", o.assume_conjecture, "type C forces infinite GK-dimension");
  auto* au = app.add_subcommand("audit21", "every class abelian or type C");
  group_opts(au);
  common(au);
  au->add_option("--budget", o.budget, "candidate pair budget before escalation");
  auto* yb = app.add_subcommand("yd-build", "build M(O, chi) and describe its braiding");
  group_opts(yb);
  common(yb);
  module_opts(yb);
  auto* be = app.add_subcommand("braiding-export", "export the braiding of M(O, chi) as JSON");
  group_opts(be);
  module_opts(be);
  be->add_option("--out", o.out, "output path (default stdout)");
  auto* nd = app.add_subcommand("nichols-dim", "graded dimensions of a Nichols algebra");
  group_opts(nd);
  common(nd);
  module_opts(nd);
  nd->add_option("--diagonal", o.diagonal, "diagonal matrix, e.g. \"[[w,w],[w,w]]\"");
  nd->add_option("--braiding-json", o.braiding_json, "braiding JSON file");
  nd->add_option("--max-degree", o.max_degree, "highest degree computed");
  auto* dv = app.add_subcommand("diagonal-verdict", "recognizer verdict for a diagonal braiding");
  common(dv);
  dv->add_option("--diagonal", o.diagonal, "diagonal matrix, e.g. \"[[w,1],[1,-1]]\"")->required();
  auto* al = app.add_subcommand("algorithm38", "classification report over an odd-order nilpotent group");
  group_opts(al);
  common(al);
  al->add_option("--budget", o.budget, "type C candidate pair budget");
  al->add_flag("--assume-conjecture", o.assume_conjecture, "type C forces infinite GK-dimension");
  auto* y = app.add_subcommand("yz", "orbit analysis of x under a single element");
  group_opts(y);
  common(y);
  module_opts(y);
  y->add_option("--g", o.g, "acting element, by label or #index");

  std::vector<const char*> argv{"yetter"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }

  try {
    if (gi->parsed()) return group_info(o, out);
    if (cl->parsed()) return classes_verb(o, out);
    if (tc->parsed()) return typec(o, out);
    if (au->parsed()) return audit(o, out);
    if (yb->parsed()) return yd_build(o, out);
    if (be->parsed()) return braiding_export(o, out);
    if (nd->parsed()) return nichols_dim(o, out);
    if (dv->parsed()) return diagonal_verdict_verb(o, out);
    if (al->parsed()) return algorithm(o, out);
    if (y->parsed()) return yz(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  err << "error: no command\n";
  return kError;
}

}  // namespace yetter::cli
