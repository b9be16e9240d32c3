#include "nikulin/mukai.hpp"

#include <functional>

namespace nikulin {

ExtendedLattice extended(const Lattice& base, bool twisted) {
    Lattice plane = twisted ? Lattice(IntMatrix{{0, 2}, {2, 0}}, {"g0", "g1"})
                            : Lattice(IntMatrix{{0, 1}, {1, 0}}, {"r", "s"});
    return {base, direct_sum(plane, base), twisted};
}

IntVector mukai_coordinates(const ExtendedLattice& ext, const MukaiVector& v) {
    if (v.l.size() != ext.base.rank()) throw DomainError("Mukai vector does not match the base rank");
    IntVector c;
    if (ext.twisted) {
        if (v.r % 2 != 0) throw DomainError("twisted Mukai vector needs even rank");
        c = {v.s, v.r / 2};
    } else {
        c = {v.r, v.s};
    }
    c.insert(c.end(), v.l.begin(), v.l.end());
    return c;
}

Integer mukai_pairing(const MukaiVector& a, const MukaiVector& b, const Lattice& base) {
    return base.pair(a.l, b.l) + a.r * b.s + b.r * a.s;
}

Sublattice mukai_orthogonal_sublattice(const ExtendedLattice& ext, const MukaiVector& v) {
    IntVector c = mukai_coordinates(ext, v);
    if (vector_gcd(c) != 1) throw DomainError("Mukai vector is not primitive");
    IntMatrix g(0, c.size());
    g.append_row(c);
    return orthogonal_complement(ext.lattice, g);
}

Lattice mukai_orthogonal(const ExtendedLattice& ext, const MukaiVector& v) {
    return mukai_orthogonal_sublattice(ext, v).induced();
}

IntVector find_square_two_vector(const Lattice& base, long radius_cap) {
    const std::size_t n = base.rank();
    if (n == 0) throw DomainError("empty lattice");
    if (radius_cap <= 0) {
        long d = Integer(abs(base.gram()(0, 0))).get_si() / 2;
        radius_cap = 8 * std::max(1L, d);
    }
    IntVector cur(n), found;
    // values ascend -rem..rem; the last coordinate takes what is left
    std::function<bool(std::size_t, long, bool)> rec = [&](std::size_t i, long rem, bool lead) -> bool {
        if (i + 1 == n) {
            for (long val : {-rem, rem}) {
                if (lead && val < 0) continue;
                if (val == 0 && lead) continue;  // zero vector
                cur[i] = val;
                if (vector_gcd(cur) == 1 && base.norm(cur) == 2) {
                    found = cur;
                    return true;
                }
                if (rem == 0) break;
            }
            return false;
        }
        for (long val = -rem; val <= rem; ++val) {
            if (lead && val < 0) continue;
            cur[i] = val;
            if (rec(i + 1, rem - std::labs(val), lead && val == 0)) return true;
        }
        cur[i] = 0;
        return false;
    };
    for (long r = 1; r <= radius_cap; ++r)
        if (rec(0, r, true)) return found;
    throw std::runtime_error("no primitive vector of square 2 within radius " + std::to_string(radius_cap));
}

IntVector sum_n(const Lattice& base) {
    IntVector v(base.rank());
    for (int i = 1; i <= 7; ++i) v[base.index_of("n" + std::to_string(i))] = 1;
    return v;
}

IntMatrix model_embedding_gens(long d) {
    ExtendedLattice ext = extended(catalog::S_NS(d), false);
    const std::size_t n = ext.lattice.rank();
    // f1 = (0,0,1) is the s-direction, f2 = (1,0,0) the r-direction
    const std::size_t f1 = 1, f2 = 0, t = 2;
    IntMatrix g(0, n);
    IntVector v(n);
    v[t] = 1;
    g.append_row(v);
    for (int i = 1; i <= 7; ++i) {
        v.assign(n, 0);
        v[t + i] = 1;
        v[f1] = 1;
        g.append_row(v);
    }
    v.assign(n, 0);
    v[f1] = 2;
    v[f2] = -1;
    g.append_row(v);
    return g;
}

Lattice twisted_transcendental_S(long d) {
    using namespace catalog;
    if (d <= 0 || d % 2 == 0) throw ParameterError("twisted model over S_d needs d = 1 mod 2");
    return direct_sum({U_scaled(2), U(), D4m1(), diag(-2 * d), diag(-2), diag(-2), diag(-2), diag(-2), diag(-2)});
}

Lattice twisted_transcendental_Z(long d) {
    using namespace catalog;
    return direct_sum({U_scaled(2), U(), nikulin_N(), K(d)});
}

FiniteQuadraticForm square_two_complement_form(long d) {
    if (d <= 0 || d % 2 == 0) throw catalog::ParameterError("needs d = 1 mod 2");
    Rational h(-1, 2);
    return direct_sum({cyclic_form(2 * d, ratio(1, 2 * d)), v_form(2), cyclic_form(2, h), cyclic_form(2, h),
                       cyclic_form(2, h), cyclic_form(2, h)});
}

}  // namespace nikulin
