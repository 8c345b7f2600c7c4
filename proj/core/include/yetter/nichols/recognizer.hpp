#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "yetter/nichols/symmetrizer.hpp"
#include "yetter/nichols/verdict.hpp"
#include "yetter/rack/type_c.hpp"
#include "yetter/yd/diagonal.hpp"
#include "yetter/yd/module.hpp"

namespace yetter::nichols {

using cyclo::RootOfUnity;
using yd::DiagonalBraiding;
using yd::DynkinDiagram;

/// V of dimension D with c(x (x) y) = q y (x) x. D = 1 gives k[T] for q = 1
/// and k[T]/T^N for q of order N.
Verdict constant_q_verdict(RootOfUnity q, std::size_t d);

/// Vertex sets of the biconnected blocks of the diagram (bridges included),
/// each sorted, in order of smallest vertex.
std::vector<std::vector<std::size_t>> biconnected_blocks(const DynkinDiagram& g);

/// Cartan matrix with q_ij q_ji = q_ii^{a_ij} and -ord(q_ii) < a_ij <= 0.
struct CartanData {
  std::vector<std::vector<int>> a;
  bool finite_type = false;               // symmetrizable and positive definite
  std::vector<std::vector<int>> positive_roots;  // coordinates in the simple roots, by height
};
/// nullopt when some q_ii = 1 or an edge label is not a power of q_ii.
std::optional<CartanData> cartan_type(const DiagonalBraiding& q);

/// Top degree of the PBW basis, sum over positive roots beta of (ord q_beta - 1) ht(beta),
/// for components of finite Cartan type with every q_beta != 1, and for the
/// rank-two super type A diagrams. nullopt otherwise.
std::optional<std::size_t> predicted_top_degree(const DiagonalBraiding& q);

/// Rule cascade on the Dynkin diagram: totally disconnected diagrams, then the
/// infinite-GK exclusions (an edge at a vertex labelled 1, long cycles,
/// triangles without a -1 vertex, triangles of -1 vertices other than an
/// isolated D(2,1;alpha)), then per-component finite patterns (A2 with
/// constant q, super type A in rank two, ufo(8), D(2,1;alpha), br(2), br(3),
/// finite Cartan type). A rank-two component with equal vertices q != -1 that
/// is neither A2 nor ufo(8) has infinite GK-dimension. Anything else is Unknown.
Verdict diagonal_verdict(const DiagonalBraiding& q);

/// Profile of the diagonal braiding, certified against predicted_top_degree.
DimProfile dim_profile(const DiagonalBraiding& q, std::size_t n_max);

struct HvResult {
  bool excluded = false;
  std::string reason;
};

/// The dimension part of the obstruction below: dims (a, b) of the two summands
/// and whether a 3-dimensional summand is of diagonal type.
HvResult hv_dimension_rule(std::size_t a, std::size_t b, bool three_dim_summand_diagonal);

/// Dimension obstruction for B(M1 (+) M2) with M1, M2 simple, c^2 != id on
/// M1 (x) M2 and the joint support generating a non-abelian group: the sorted
/// dimension pair must be one of (1,3), (1,4), (2,2), (2,3), (2,4), and a
/// 3-dimensional member may not be of diagonal type. Passes, with a note, when
/// the support generates an abelian group. Throws on reducible inputs.
HvResult hv_exclusion(const yd::YDModule& m1, const yd::YDModule& m2);

/// dim Infinite; gk Infinite under the type C assumption, Unknown otherwise.
/// Throws PreconditionError when the witness does not revalidate.
Verdict type_c_verdict(const rack::TypeCWitness& w, bool assume_conjecture);

}  // namespace yetter::nichols
