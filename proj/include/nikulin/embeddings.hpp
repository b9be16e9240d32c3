#pragma once

#include "nikulin/catalog.hpp"

#include <string>
#include <vector>

namespace nikulin {

enum class Kind { j1, j2, j3, jtilde };

struct Variant {
    Kind kind = Kind::j1;
    long d = 1;
    bool operator==(const Variant&) const = default;
};

std::string to_string(Kind k);
Kind parse_kind(const std::string& s);
bool is_valid(const Variant& v);
void validate(const Variant& v);  // throws catalog::ParameterError
// all valid variants with d in [lo, hi], ordered by (kind, d)
std::vector<Variant> variants_in(long lo, long hi);

// coordinates in L = U^3 + E8(-1) e + E8(-1) f + <-2>
namespace lcoord {
constexpr std::size_t rank = 23;
constexpr std::size_t u(int copy, int which) { return 2 * (copy - 1) + (which - 1); }
constexpr std::size_t e(int i) { return 5 + i; }
constexpr std::size_t f(int i) { return 13 + i; }
constexpr std::size_t delta = 22;
}  // namespace lcoord

// lambda_{+/-}(b_i) = e_i +/- f_i inside E8(-1) + E8(-1)
Sublattice lambda(int sign);
IntVector lambda_in_L(int sign, int i);

IntVector h_vector(const Variant& v);

struct RealizedEmbedding {
    Variant variant;
    IntMatrix given;  // rows h, lambda_-(b_1..b_8)
    Sublattice image;  // saturation of the given rows in L
    IntVector h_image;
    bool primitive_as_given = true;
};

RealizedEmbedding realize(const Variant& v);
Sublattice transcendental_sublattice_of_X(const Variant& v);
Lattice transcendental_of_X(const Variant& v);

Lattice table1_target(const Variant& v);
std::string table1_target_name(const Variant& v);
std::string table1_ns_name(const Variant& v);

// the spanning set listed for the j2 complement, with U2, U3 added
IntMatrix j2_complement_generators(long d);

}  // namespace nikulin
