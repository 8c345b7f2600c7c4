#pragma once

#include <string_view>
#include <vector>

#include "yetter/grp/group.hpp"

namespace yetter::grp {

// Named groups. Elements are coordinate tuples ordered lexicographically, so
// the identity is always element 0.

GroupPtr cyclic(int m);
GroupPtr abelian(const std::vector<int>& moduli);
/// Heis(2n+1, Z/m): triples (a, b, c) with a, b in (Z/m)^n, c in Z/m and
/// (a, b, c)(a', b', c') = (a + a', b + b', c + c' + a.b').
GroupPtr heisenberg(int n, int m);
/// Heis(2n+1, Z/m) with c read modulo N; N must divide m.
GroupPtr heisenberg_quotient(int n, int m, int modulus);
/// Upper unitriangular 4x4 matrices over Z/m, coordinates (a12, a23, a34, a13, a24, a14).
GroupPtr unitriangular4(int m);
/// Z/m wr Z/k: tuples (v_0, ..., v_{k-1}, s) where s in Z/k permutes the
/// base coordinates cyclically. Nilpotent when m and k are powers of one prime.
GroupPtr wreath(int m, int k);
/// <x, y | x^2 = y^4 = e, xyx = y^3>, elements x^a y^b.
GroupPtr dihedral4();
/// D4 x| Z/4 where the generator t acts by x -> xy, y -> y.
GroupPtr d4_semidirect_z4();
GroupPtr direct_product(const std::vector<GroupPtr>& factors);

/// Parses "family[:key=value,...]" with factors of a direct product joined by '*'.
/// Examples: "cyclic:m=5", "abelian:m=3x9", "heisenberg:n=1,m=3",
/// "heisenberg_quotient:n=1,m=6,N=6", "unitriangular4:m=3", "wreath:m=3,k=3", "dihedral4",
/// "heisenberg:n=1,m=3*cyclic:m=3".
GroupPtr construct_named(std::string_view spec);

}  // namespace yetter::grp
