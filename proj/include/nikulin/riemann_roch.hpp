#pragma once

#include "nikulin/embeddings.hpp"

#include <array>
#include <utility>
#include <vector>

namespace nikulin {

// chi of a Cartier divisor on the orbifold, from its BBF square
Integer chi_cartier(const Integer& q);
Rational chi_cartier_rational(const Rational& q);

// D = (m/2) L, non-Cartier at N of the singular points
Rational chi_weil(const Integer& qL, const Integer& m, const Integer& n_noncartier);

// constants on X of K3^[2]-type
Rational h4_on_X(const Rational& q);        // 3 q^2
Rational h2c2_on_X(const Rational& q);      // 30 q
Rational restricted_square(const Rational& q);  // (H|W)^2 = 2 q
Rational h4_on_Y(const Rational& q);        // 6 q^2

// general formula in terms of the intersection numbers on X
Rational chi_orbifold_general(const Rational& h4, const Rational& h2c2, const Rational& hw2, long k, long n_noncartier);
// with q(H) = 2d on X
Rational chi_orbifold(long d, long k, long n_noncartier);
Rational chi_orbifold_closed(long d, long k, long n_noncartier);

struct NK {
    long n = 0, k = 0;
    bool operator==(const NK&) const = default;
};
using AdmissiblePair = std::pair<NK, NK>;

std::vector<AdmissiblePair> admissible_pairs(long d);
std::vector<AdmissiblePair> admissible_pairs_listed(long d);

struct ProjectionReport {
    Variant variant;
    AdmissiblePair pairs;
    std::array<Integer, 2> h0;
    std::array<Integer, 2> dims;
};

ProjectionReport projection_report(const Variant& v);
// the two row formulas for m_1, m_2
std::array<Rational, 2> table4_formulas(const Variant& v);

}  // namespace nikulin
