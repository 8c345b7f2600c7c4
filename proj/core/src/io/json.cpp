#include "yetter/io/json.hpp"

#include "yetter/limits.hpp"

namespace yetter::io {

using cyclo::CycloNumber;
using cyclo::RootOfUnity;
using grp::Element;

namespace {

template <class T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("missing JSON key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("bad JSON value for '") + key + "': " + e.what());
  }
}

json big(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class big_from(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw PreconditionError("bad integer string in JSON");
    return z;
  }
  throw PreconditionError("expected an integer in JSON");
}

json axis_json(const nichols::Axis& a) {
  json j;
  switch (a.kind) {
    case nichols::AxisKind::Finite:
      j["kind"] = "finite";
      break;
    case nichols::AxisKind::Infinite:
      j["kind"] = "infinite";
      break;
    case nichols::AxisKind::Unknown:
      j["kind"] = "unknown";
      break;
  }
  if (a.value) j["value"] = big(*a.value);
  return j;
}

nichols::Axis axis_from(const json& j) {
  const auto kind = get<std::string>(j, "kind");
  if (kind == "infinite") return nichols::Axis::infinite();
  if (kind == "unknown") return nichols::Axis::unknown();
  if (kind != "finite") throw PreconditionError("unknown axis kind '" + kind + "'");
  if (j.contains("value")) return nichols::Axis::finite(big_from(j.at("value")));
  return nichols::Axis::finite();
}

json character_json(const grp::Character& chi, const grp::FiniteGroup& g) {
  json vals = json::array();
  for (Element e : chi.domain().generators()) {
    vals.push_back({{"element", e}, {"label", g.label(e)}, {"value", to_json(chi(e))}});
  }
  return {{"domain_order", chi.domain().order()}, {"on_generators", vals}};
}

}  // namespace

json to_json(const grp::FiniteGroup& g) {
  json j;
  j["order"] = g.order();
  j["identity"] = g.identity();
  j["mul_table"] = g.table();
  j["generators"] = g.generators();
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

grp::GroupPtr group_from_json(const json& j) {
  const auto n = get<std::size_t>(j, "order");
  const auto table = get<std::vector<Element>>(j, "mul_table");
  if (table.size() != n * n) throw PreconditionError("mul_table must have order^2 entries");
  const Element id = j.contains("identity") ? get<Element>(j, "identity") : Element{0};
  auto gens = get<std::vector<Element>>(j, "generators");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = get<std::vector<std::string>>(j, "labels");
  return grp::FiniteGroup::from_table(n, table, id, std::move(gens), std::move(labels));
}

json to_json(const RootOfUnity& r) { return {{"root", {{"a", r.num()}, {"n", r.den()}}}}; }

RootOfUnity root_from_json(const json& j) {
  if (!j.is_object() || !j.contains("root")) throw PreconditionError("expected {\"root\": {a, n}}");
  const auto& r = j.at("root");
  return RootOfUnity(get<std::int64_t>(r, "a"), get<std::int64_t>(r, "n"));
}

json to_json(const CycloNumber& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back({big(c.get_num()), big(c.get_den())});
  return {{"cyclo", {{"N", x.conductor()}, {"coeffs", coeffs}}}};
}

CycloNumber scalar_from_json(const json& j) {
  if (j.is_object() && j.contains("root")) return CycloNumber::from_root(root_from_json(j));
  if (!j.is_object() || !j.contains("cyclo")) throw PreconditionError("expected a root or cyclo scalar");
  const auto& c = j.at("cyclo");
  const int n = get<int>(c, "N");
  if (n < 1 || n > limits().conductor_cap) throw CapExceeded("conductor " + std::to_string(n) + " outside the cap");
  std::vector<cyclo::Rational> coeffs;
  for (const auto& pq : get<json>(c, "coeffs")) {
    if (!pq.is_array() || pq.size() != 2) throw PreconditionError("coefficient must be [p, q]");
    const mpz_class den = big_from(pq[1]);
    if (den == 0) throw PreconditionError("zero denominator");
    cyclo::Rational r(big_from(pq[0]), den);
    r.canonicalize();
    coeffs.push_back(r);
  }
  return CycloNumber(n, coeffs);
}

json to_json(const yd::BraidedVectorSpace& c) {
  const std::size_t d = c.dim();
  json entries = json::array();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [kl, coeff] : c.image(i, j)) {
        entries.push_back({{"i", i}, {"j", j}, {"k", kl / d}, {"l", kl % d}, {"coeff", to_json(coeff)}});
      }
  return {{"dim", d}, {"conductor", c.conductor()}, {"provenance", c.provenance()}, {"entries", entries}};
}

yd::BraidedVectorSpace braiding_from_json(const json& j) {
  const auto d = get<std::size_t>(j, "dim");
  if (d == 0 || d * d > limits().symmetrizer_dim_cap) throw CapExceeded("braiding dimension outside the cap");
  cyclo::CycloMatrix m(d * d, d * d);
  for (const auto& e : get<json>(j, "entries")) {
    const auto i = get<std::size_t>(e, "i"), jj = get<std::size_t>(e, "j");
    const auto k = get<std::size_t>(e, "k"), l = get<std::size_t>(e, "l");
    if (i >= d || jj >= d || k >= d || l >= d) throw PreconditionError("braiding entry index out of range");
    m.add(k * d + l, i * d + jj, scalar_from_json(get<json>(e, "coeff")));
  }
  std::string prov = j.contains("provenance") ? get<std::string>(j, "provenance") : std::string("imported");
  return yd::BraidedVectorSpace(d, std::move(m), std::move(prov));
}

json to_json(const yd::DiagonalBraiding& q) {
  json rows = json::array();
  for (std::size_t i = 0; i < q.rank(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < q.rank(); ++j) row.push_back(to_json(q(i, j)));
    rows.push_back(row);
  }
  return {{"rank", q.rank()}, {"q", rows}};
}

yd::DiagonalBraiding diagonal_from_json(const json& j) {
  const auto rank = get<std::size_t>(j, "rank");
  const auto rows = get<json>(j, "q");
  if (!rows.is_array() || rows.size() != rank) throw PreconditionError("q must have rank rows");
  yd::DiagonalBraiding q(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    if (!rows[i].is_array() || rows[i].size() != rank) throw PreconditionError("q must be square");
    for (std::size_t k = 0; k < rank; ++k) q(i, k) = root_from_json(rows[i][k]);
  }
  return q;
}

json to_json(const yd::DynkinDiagram& d) {
  json verts = json::array();
  for (const auto& v : d.vertices) verts.push_back(v.to_string());
  json edges = json::array();
  for (const auto& [ij, label] : d.edges) edges.push_back({{"i", ij.first}, {"j", ij.second}, {"label", label.to_string()}});
  return {{"vertices", verts}, {"edges", edges}, {"components", d.components}};
}

json to_json(const rack::TypeCWitness& w) {
  const auto& g = *w.group;
  auto labels = [&](const std::vector<Element>& xs) {
    std::vector<std::string> out;
    for (Element x : xs) out.push_back(g.label(x));
    return out;
  };
  return {{"r", w.r},
          {"s", w.s},
          {"r_label", g.label(w.r)},
          {"s_label", g.label(w.s)},
          {"H_order", w.subgroup_order},
          {"R_members", w.part_r},
          {"S_members", w.part_s},
          {"R_labels", labels(w.part_r)},
          {"S_labels", labels(w.part_s)},
          {"sizes", {w.part_r.size(), w.part_s.size()}},
          {"inner_group_order", w.inner_group_order},
          {"conditions",
           {{"r_moves_s", w.r_moves_s}, {"parts_are_inner_orbits", w.parts_are_inner_orbits}, {"size_bound", w.size_bound}}}};
}

rack::TypeCWitness witness_from_json(const json& j, const grp::GroupPtr& g) {
  rack::TypeCWitness w;
  w.group = g;
  w.r = get<Element>(j, "r");
  w.s = get<Element>(j, "s");
  w.part_r = get<std::vector<Element>>(j, "R_members");
  w.part_s = get<std::vector<Element>>(j, "S_members");
  for (Element e : w.part_r)
    if (e >= g->order()) throw PreconditionError("witness member outside the group");
  for (Element e : w.part_s)
    if (e >= g->order()) throw PreconditionError("witness member outside the group");
  if (w.r >= g->order() || w.s >= g->order()) throw PreconditionError("witness element outside the group");
  return rack::revalidate(w);
}

json to_json(const rack::TypeCResult& r) {
  json j{{"outcome", rack::to_string(r.outcome)}, {"pairs_examined", r.pairs_examined}, {"note", r.note}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

json to_json(const nichols::Verdict& v) {
  std::vector<std::string> as;
  for (auto a : v.assumptions) as.push_back(nichols::to_string(a));
  return {{"dim", axis_json(v.dim)},
          {"gk", axis_json(v.gk)},
          {"assumptions", as},
          {"rule", v.rule},
          {"detail", v.detail},
          {"text", v.to_string()}};
}

nichols::Verdict verdict_from_json(const json& j) {
  nichols::Verdict v;
  v.dim = axis_from(get<json>(j, "dim"));
  v.gk = axis_from(get<json>(j, "gk"));
  for (const auto& s : get<std::vector<std::string>>(j, "assumptions")) {
    auto a = nichols::assumption_from_string(s);
    if (!a) throw PreconditionError("unknown assumption '" + s + "'");
    v.assumptions.insert(*a);
  }
  v.rule = get<std::string>(j, "rule");
  v.detail = j.contains("detail") ? get<std::string>(j, "detail") : std::string();
  return v;
}

json to_json(const nichols::DimProfile& p) {
  json j{{"braiding", p.braiding}, {"dim", p.dim}, {"dims", p.dims}, {"certified", p.certified}, {"sum", big(p.sum())}};
  if (p.first_zero) j["first_zero"] = *p.first_zero;
  if (p.predicted_top_degree) j["predicted_top_degree"] = *p.predicted_top_degree;
  if (auto t = p.total()) j["total"] = big(*t);
  return j;
}

nichols::DimProfile profile_from_json(const json& j) {
  nichols::DimProfile p;
  p.braiding = get<std::string>(j, "braiding");
  p.dim = get<std::size_t>(j, "dim");
  p.dims = get<std::vector<std::size_t>>(j, "dims");
  if (j.contains("first_zero")) p.first_zero = get<std::size_t>(j, "first_zero");
  if (j.contains("predicted_top_degree")) p.predicted_top_degree = get<std::size_t>(j, "predicted_top_degree");
  p.certified = get<bool>(j, "certified");
  return p;
}

json to_json(const classify::YZReport& r, const grp::FiniteGroup& g) {
  std::vector<std::string> orbit;
  for (Element z : r.orbit) orbit.push_back(g.label(z));
  return {{"g", r.g},
          {"g_label", g.label(r.g)},
          {"orbit", r.orbit},
          {"orbit_labels", orbit},
          {"n", r.n()},
          {"q", to_json(r.q)},
          {"zeta", to_json(r.zeta)},
          {"case", classify::to_string(r.yz_case)},
          {"cycle", to_json(r.cycle)},
          {"diagram", to_json(yd::dynkin(r.cycle))},
          {"verdict", to_json(r.local)}};
}

json to_json(const classify::ClassificationReport& r) {
  const grp::FiniteGroup& g = *r.parent;
  json central = json::array();
  for (const auto& c : r.central) {
    central.push_back({{"g", c.pair.g},
                       {"g_label", g.label(c.pair.g)},
                       {"chi_index", c.chi_index},
                       {"q", to_json(c.pair.q)},
                       {"verdict", to_json(c.verdict)}});
  }
  json blocks = json::array();
  for (const auto& b : r.central_blocks) {
    blocks.push_back({{"a", b.a}, {"b", b.b}, {"q", to_json(b.q)}, {"verdict", to_json(b.verdict)}});
  }
  json classes = json::array();
  for (const auto& c : r.classes) {
    json e{{"representative", c.representative},
           {"label", g.label(c.representative)},
           {"size", c.size},
           {"abelian", c.abelian}};
    if (c.abelian) {
      e["characters_scanned"] = c.characters_scanned;
      e["nontrivial_failing"] = c.nontrivial_failing;
      e["admissible"] = c.admissible;
    }
    if (c.type_c) e["type_c"] = to_json(*c.type_c);
    if (c.verdict) e["verdict"] = to_json(*c.verdict);
    classes.push_back(e);
  }
  json pairs = json::array();
  for (const auto& p : r.abelian_pairs) {
    pairs.push_back({{"representative", p.x},
                     {"label", g.label(p.x)},
                     {"class_size", p.cls.size()},
                     {"class_members", p.cls.members},
                     {"q", to_json(p.q)},
                     {"N", p.order()},
                     {"chi", character_json(p.chi, g)}});
  }
  json edges = json::array();
  for (const auto& [a, b] : r.compat_edges) edges.push_back({a, b});
  json families = json::array();
  for (const auto& f : r.families) {
    json e{{"members", f.members}, {"verdict", to_json(f.verdict)}, {"compatible_central", f.compatible_central}};
    if (f.verdict.dim.is_finite()) e["total_dim"] = big(f.total_dim);
    families.push_back(e);
  }
  return {{"group", r.group},
          {"order", r.order},
          {"center", r.center},
          {"commutator_order", r.commutator_order},
          {"abelianization_order", r.abelianization_order},
          {"central", central},
          {"central_blocks", blocks},
          {"central_blocks_skipped", r.central_blocks_skipped},
          {"classes", classes},
          {"abelian_pairs", pairs},
          {"compat_edges", edges},
          {"central_compat", r.central_compat},
          {"families", families},
          {"families_truncated", r.families_truncated},
          {"violations", r.violations()}};
}

}  // namespace yetter::io
