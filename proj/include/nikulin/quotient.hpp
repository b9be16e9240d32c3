#pragma once

#include "nikulin/embeddings.hpp"

#include <string>
#include <vector>

namespace nikulin {

// coordinates in H2Y = U(2)^3 + E8(-1) + <-2> + <-2>
namespace ycoord {
constexpr std::size_t rank = 16;
constexpr std::size_t e(int i) { return 5 + i; }
constexpr std::size_t plus = 14;   // (D+S)/2
constexpr std::size_t minus = 15;  // (D-S)/2
}  // namespace ycoord

// (u, w, v, x, y, k) -> (u, w, v, x + y, k, k)
IntVector pushforward(const IntVector& v);

struct QuotientInput {
    IntMatrix ns_gens;  // rows in L coordinates
    bool include_delta = false;
};

QuotientInput quotient_input(const Variant& v, bool include_delta = false);
// lambda_-(E8(-2)) and delta only
QuotientInput nonprojective_input();

struct OrbifoldPicard {
    Sublattice ns;
    Sublattice t;
};

OrbifoldPicard orbifold_picard(const QuotientInput& in);

// saturation of pi_*(invariant part of L)
Sublattice invariant_image_saturation();

IntMatrix table3_ns_gram(const Variant& v);
// genus representative of T_Y, corrected for (j2, d = 3 mod 4)
Lattice table3_t_target(const Variant& v);
// the lattice as listed in the table, without the correction
Lattice table3_t_stated(const Variant& v);
std::string table3_ns_name(const Variant& v);
std::string table3_t_name(const Variant& v);

enum class HilbertCase { NonProjective, Lambda, LambdaTilde };
Variant hilbert_variant(HilbertCase c, long d);
IntMatrix hilbert_ns_gram(HilbertCase c, long d);  // diagonal target
Lattice hilbert_t_target(HilbertCase c, long d);
// explicit diagonal basis: primitive part of pi_*(h) (if any), (D+S)/2, (D-S)/2
IntMatrix hilbert_ns_basis(HilbertCase c, long d);

// Lattices expected to be Q-isometric to T_Y.
struct Partner {
    std::string name;
    Lattice lattice;
};
std::vector<Partner> rational_partners(const Variant& v);
std::vector<Partner> hilbert_partners(HilbertCase c, long d);

// Fixed K3 of the symmetric cubic fourfold family: basis h1, (h2 + sum l)/3, l1..l6.
Lattice fano_ns_S();
Lattice fano_T_S();
// the two sides of the 2-elementary comparison for (Lambda_2, j2)
Lattice two_elementary_T_S1();
Lattice two_elementary_T_Y();

}  // namespace nikulin
