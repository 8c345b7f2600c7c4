#pragma once

#include <nlohmann/json.hpp>

#include "yetter/classify/driver.hpp"
#include "yetter/nichols/symmetrizer.hpp"
#include "yetter/rack/type_c.hpp"
#include "yetter/yd/diagonal.hpp"

// JSON import and export. Keys are sorted by nlohmann::json, so dumps are
// byte-stable. Every *_from_json throws PreconditionError on malformed input.

namespace yetter::io {

using nlohmann::json;

/// {order, identity, mul_table (row-major), generators, labels?}
json to_json(const grp::FiniteGroup& g);
grp::GroupPtr group_from_json(const json& j);

/// {"root": {"a", "n"}} for exp(2 pi i a/n).
json to_json(const cyclo::RootOfUnity& r);
cyclo::RootOfUnity root_from_json(const json& j);
/// {"cyclo": {"N", "coeffs": [[p, q], ...]}} in the power basis of Q(zeta_N).
/// Numerators and denominators outside int64 are written as decimal strings.
json to_json(const cyclo::CycloNumber& x);
/// Accepts both the "root" and the "cyclo" forms.
cyclo::CycloNumber scalar_from_json(const json& j);

/// {dim, conductor, provenance, entries: [{i, j, k, l, coeff}]}: c(e_i (x) e_j)
/// has coefficient coeff on e_k (x) e_l.
json to_json(const yd::BraidedVectorSpace& c);
yd::BraidedVectorSpace braiding_from_json(const json& j);

/// {rank, q: [[root]]}
json to_json(const yd::DiagonalBraiding& q);
yd::DiagonalBraiding diagonal_from_json(const json& j);

/// {vertices: [root], edges: [{i, j, label}], components}
json to_json(const yd::DynkinDiagram& d);

/// {r, s, r_label, s_label, H_order, R_members, S_members, sizes,
///  inner_group_order, conditions: {r_moves_s, parts_are_inner_orbits, size_bound}}
json to_json(const rack::TypeCWitness& w);
/// Rebuilds the witness over g and recomputes the certification fields.
rack::TypeCWitness witness_from_json(const json& j, const grp::GroupPtr& g);
json to_json(const rack::TypeCResult& r);

/// {dim: {kind, value?}, gk: {kind, value?}, assumptions, rule, detail}
json to_json(const nichols::Verdict& v);
nichols::Verdict verdict_from_json(const json& j);

/// {braiding, dim, dims, first_zero?, predicted_top_degree?, certified, total?}
json to_json(const nichols::DimProfile& p);
nichols::DimProfile profile_from_json(const json& j);

json to_json(const classify::YZReport& r, const grp::FiniteGroup& g);

/// {group, order, center, commutator_order, abelianization_order, central,
///  central_blocks, central_blocks_skipped, classes, abelian_pairs, compat_edges,
///  central_compat, families: [{members, total_dim?, verdict, compatible_central}],
///  families_truncated, violations}
json to_json(const classify::ClassificationReport& r);

}  // namespace yetter::io
