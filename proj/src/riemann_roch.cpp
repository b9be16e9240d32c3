#include "nikulin/riemann_roch.hpp"

#include <algorithm>
#include <tuple>

namespace nikulin {

Rational chi_cartier_rational(const Rational& q) {
    return (q * q + 6 * q + 12) / 4;
}

Integer chi_cartier(const Integer& q) {
    if (q % 2 != 0) throw DomainError("chi_cartier needs an even BBF square");
    Rational c = chi_cartier_rational(q);
    return c.get_num();
}

Rational chi_weil(const Integer& qL, const Integer& m, const Integer& n) {
    if (m % 2 == 0) throw DomainError("chi_weil needs odd m");
    Rational m2 = m * m;
    Rational q = qL;
    return Rational(3, 8) * (m2 * m2 * q * q / 24 + m2 * q + 8) - Rational(n) / 16;
}

Rational h4_on_X(const Rational& q) {
    return 3 * q * q;
}

Rational h2c2_on_X(const Rational& q) {
    return 30 * q;
}

Rational restricted_square(const Rational& q) {
    return 2 * q;
}

Rational h4_on_Y(const Rational& q) {
    return 6 * q * q;
}

Rational chi_orbifold_general(const Rational& h4, const Rational& h2c2, const Rational& hw2, long k, long n) {
    Rational kk = k * k;
    return h4 / 48 + h2c2 / 48 + (Rational(1, 16) - kk / 8) * hw2 + 3 - ratio(n, 16) + kk * kk / 4 -
           3 * kk / 2;
}

namespace {
void check_k(long k) {
    if (k != 0 && k != -1) throw DomainError("k must be 0 or -1");
}
}  // namespace

Rational chi_orbifold(long d, long k, long n) {
    check_k(k);
    Rational q = 2 * d;
    return chi_orbifold_general(h4_on_X(q), h2c2_on_X(q), restricted_square(q), k, n);
}

Rational chi_orbifold_closed(long d, long k, long n) {
    check_k(k);
    long ak = -k;
    Rational dd = d;
    return dd * dd / 4 + 3 * dd / 2 - ak * dd / 2 - ratio(n, 16) - ratio(5 * ak, 4) + 3;
}

std::vector<AdmissiblePair> admissible_pairs(long d) {
    if (d < 1) throw DomainError("d must be positive");
    std::vector<AdmissiblePair> out;
    for (long n1 = 0; n1 <= 28; ++n1)
        for (long k1 : {0L, -1L})
            for (long k2 : {0L, -1L}) {
                long n2 = 28 - n1;
                if (chi_orbifold(d, k1, n1).get_den() != 1 || chi_orbifold(d, k2, n2).get_den() != 1) continue;
                AdmissiblePair p{{n1, k1}, {n2, k2}};
                if (k1 != 0) std::swap(p.first, p.second);
                if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
            }
    std::sort(out.begin(), out.end(), [](const AdmissiblePair& a, const AdmissiblePair& b) {
        return std::tie(a.first.n, a.first.k, a.second.n, a.second.k) <
               std::tie(b.first.n, b.first.k, b.second.n, b.second.k);
    });
    return out;
}

std::vector<AdmissiblePair> admissible_pairs_listed(long d) {
    if (d % 2 == 0) return {{{0, 0}, {28, -1}}, {{16, 0}, {12, -1}}};
    return {{{12, 0}, {16, -1}}, {{28, 0}, {0, -1}}};
}

ProjectionReport projection_report(const Variant& v) {
    validate(v);
    long n1 = 0;
    switch (v.kind) {
        case Kind::j1: n1 = v.d % 2 ? 12 : 16; break;
        case Kind::j2:
        case Kind::j3: n1 = 28; break;
        case Kind::jtilde: n1 = 0; break;
    }
    ProjectionReport r;
    r.variant = v;
    r.pairs = {{n1, 0}, {28 - n1, -1}};
    Rational c1 = chi_orbifold(v.d, 0, n1), c2 = chi_orbifold(v.d, -1, 28 - n1);
    if (c1.get_den() != 1 || c2.get_den() != 1) throw std::logic_error("non-integral h0 in projection report");
    r.h0 = {c1.get_num(), c2.get_num()};
    r.dims = {r.h0[0] - 1, r.h0[1] - 1};
    return r;
}

std::array<Rational, 2> table4_formulas(const Variant& v) {
    validate(v);
    Rational d = v.d;
    Rational a = d * d / 4 + 3 * d / 2, b = d * d / 4 + d;
    switch (v.kind) {
        case Kind::j1:
            if (v.d % 2) return {a + Rational(5, 4), b - Rational(1, 4)};
            return {a + 1, b};
        case Kind::j2:
        case Kind::j3: return {a + Rational(1, 4), b + Rational(3, 4)};
        case Kind::jtilde: return {a + 2, b - 1};
    }
    throw std::logic_error("unreachable");
}

}  // namespace nikulin
