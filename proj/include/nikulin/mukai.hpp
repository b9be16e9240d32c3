#pragma once

#include "nikulin/catalog.hpp"
#include "nikulin/disc_form.hpp"

#include <string>
#include <vector>

namespace nikulin {

// Mukai pairing on (r, l, s): l.l' + r s' + r' s.
// Untwisted coordinates: (r, s, l); the (r, s) plane is U.
// Twisted coordinates: (c0, c1, l) on g0 = (0,0,1), g1 = (2, B-part, 0), a U(2) plane.
struct ExtendedLattice {
    Lattice base;
    Lattice lattice;
    bool twisted = false;
};

ExtendedLattice extended(const Lattice& base, bool twisted);

struct MukaiVector {
    Integer r, s;
    IntVector l;  // base coordinates
};

// coordinates in ext.lattice; twisted vectors become v_B = s g0 + (r/2) g1 + l (r must be even)
IntVector mukai_coordinates(const ExtendedLattice& ext, const MukaiVector& v);
Integer mukai_pairing(const MukaiVector& a, const MukaiVector& b, const Lattice& base);

Sublattice mukai_orthogonal_sublattice(const ExtendedLattice& ext, const MukaiVector& v);
Lattice mukai_orthogonal(const ExtendedLattice& ext, const MukaiVector& v);

// First primitive vector of square 2 in L1-shells of growing radius; lexicographic within a shell.
IntVector find_square_two_vector(const Lattice& base, long radius_cap = 0);

// t, n_i + f1, 2 f1 - f2 in untwisted coordinates over S_d: a copy of <2d> + N orthogonal to w
IntMatrix model_embedding_gens(long d);

// sum of the n_i in base coordinates of S_d or Z_d
IntVector sum_n(const Lattice& base);

// U(2) + W where the transcendental lattice of the K3 is U + W
Lattice twisted_transcendental_S(long d);  // S_d, d odd: W = U + D4(-1) + <-2d> + <-2>^5
Lattice twisted_transcendental_Z(long d);  // Z_d, d = 3 mod 4: W = U + N + K_d

// expected discriminant form of the orthogonal of H' in S_d, d odd
FiniteQuadraticForm square_two_complement_form(long d);

}  // namespace nikulin
