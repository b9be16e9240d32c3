#include "nikulin/embeddings.hpp"

namespace nikulin {

using catalog::ParameterError;

std::string to_string(Kind k) {
    switch (k) {
        case Kind::j1: return "j1";
        case Kind::j2: return "j2";
        case Kind::j3: return "j3";
        case Kind::jtilde: return "jtilde";
    }
    return "?";
}

Kind parse_kind(const std::string& s) {
    if (s == "j1") return Kind::j1;
    if (s == "j2") return Kind::j2;
    if (s == "j3") return Kind::j3;
    if (s == "jtilde") return Kind::jtilde;
    throw ParameterError("unknown embedding variant " + s);
}

bool is_valid(const Variant& v) {
    if (v.d <= 0) return false;
    switch (v.kind) {
        case Kind::j1: return true;
        case Kind::j2: return v.d % 2 == 1;
        case Kind::j3: return v.d % 4 == 3;
        case Kind::jtilde: return v.d % 2 == 0;
    }
    return false;
}

void validate(const Variant& v) {
    if (v.d <= 0) throw ParameterError("d must be positive");
    if (is_valid(v)) return;
    switch (v.kind) {
        case Kind::j2: throw ParameterError("j2 needs d = 1 mod 2");
        case Kind::j3: throw ParameterError("j3 needs d = 3 mod 4");
        case Kind::jtilde: throw ParameterError("jtilde needs d = 0 mod 2");
        default: throw ParameterError("invalid variant");
    }
}

std::vector<Variant> variants_in(long lo, long hi) {
    std::vector<Variant> out;
    for (Kind k : {Kind::j1, Kind::j2, Kind::j3, Kind::jtilde})
        for (long d = lo; d <= hi; ++d)
            if (is_valid({k, d})) out.push_back({k, d});
    return out;
}

Sublattice lambda(int sign) {
    Lattice amb = direct_sum(catalog::E8m1(), catalog::E8m1());
    IntMatrix g(8, 16);
    for (int i = 0; i < 8; ++i) {
        g(i, i) = 1;
        g(i, 8 + i) = sign;
    }
    return Sublattice(amb, g);
}

IntVector lambda_in_L(int sign, int i) {
    IntVector v(lcoord::rank);
    v[lcoord::e(i)] = 1;
    v[lcoord::f(i)] = sign;
    return v;
}

IntVector h_vector(const Variant& var) {
    validate(var);
    const long d = var.d;
    IntVector v(lcoord::rank);
    auto put_x = [&](bool with_e3) {
        v[lcoord::e(1)] = v[lcoord::f(1)] = 1;
        if (with_e3) v[lcoord::e(3)] = v[lcoord::f(3)] = 1;
    };
    switch (var.kind) {
        case Kind::j1:
            v[lcoord::u(1, 1)] = 1;
            v[lcoord::u(1, 2)] = d;
            break;
        case Kind::j2: {
            // d = 4k+1 or d = 4k-1
            long k = d % 4 == 1 ? (d - 1) / 4 : (d + 1) / 4;
            if (d != 4 * k + 1 && d != 4 * k - 1) throw std::logic_error("j2 branch");
            v[lcoord::u(1, 1)] = 2;
            v[lcoord::u(1, 2)] = 2 * k + 2;
            put_x(d % 4 == 3);
            v[lcoord::delta] = 1;
            break;
        }
        case Kind::j3:
            v[lcoord::u(1, 1)] = 2;
            v[lcoord::u(1, 2)] = (d + 1) / 2;
            v[lcoord::delta] = 1;
            break;
        case Kind::jtilde: {
            // d = 4k-2 or d = 4k-4
            long k = d % 4 == 2 ? (d + 2) / 4 : (d + 4) / 4;
            if (d != 4 * k - 2 && d != 4 * k - 4) throw std::logic_error("jtilde branch");
            v[lcoord::u(1, 1)] = 2;
            v[lcoord::u(1, 2)] = 2 * k;
            put_x(d % 4 == 0);
            break;
        }
    }
    return v;
}

RealizedEmbedding realize(const Variant& var) {
    IntMatrix given(0, lcoord::rank);
    IntVector h = h_vector(var);
    given.append_row(h);
    for (int i = 1; i <= 8; ++i) given.append_row(lambda_in_L(-1, i));
    Lattice l = catalog::L();
    Sublattice raw(l, given);
    return {var, given, raw.saturated(), h, raw.is_primitive()};
}

Sublattice transcendental_sublattice_of_X(const Variant& v) {
    return orthogonal_complement(realize(v).image);
}

Lattice transcendental_of_X(const Variant& v) {
    return transcendental_sublattice_of_X(v).induced();
}

Lattice table1_target(const Variant& v) {
    validate(v);
    using namespace catalog;
    switch (v.kind) {
        case Kind::j1:
            return direct_sum({U(), U(), E8m2(), diag(-2 * v.d), diag(-2)});
        case Kind::j2:
        case Kind::jtilde:
            return direct_sum({U(), U(), D4m1(), diag(-2 * v.d), diag(-2), diag(-2), diag(-2), diag(-2), diag(-2)});
        case Kind::j3:
            return direct_sum({U(), U(), E8m2(), K(v.d)});
    }
    throw std::logic_error("unreachable");
}

std::string table1_target_name(const Variant& v) {
    std::string m = "<-" + std::to_string(2 * v.d) + ">";
    switch (v.kind) {
        case Kind::j1: return "U^2+E8(-2)+" + m + "+<-2>";
        case Kind::j2:
        case Kind::jtilde: return "U^2+D4(-1)+" + m + "+<-2>^5";
        case Kind::j3: return "U^2+E8(-2)+K_" + std::to_string(v.d);
    }
    return "?";
}

std::string table1_ns_name(const Variant& v) {
    return (v.kind == Kind::jtilde ? "LambdaTilde_" : "Lambda_") + std::to_string(2 * v.d);
}

IntMatrix j2_complement_generators(long d) {
    validate({Kind::j2, d});
    long k = d % 4 == 1 ? (d - 1) / 4 : (d + 1) / 4;
    IntMatrix g(0, lcoord::rank);
    IntVector v(lcoord::rank);
    v[lcoord::u(1, 1)] = -1;
    v[lcoord::u(1, 2)] = k + 1;
    g.append_row(v);
    v.assign(lcoord::rank, 0);
    v[lcoord::u(1, 2)] = 1;
    v[lcoord::delta] = 1;
    g.append_row(v);
    for (int c = 2; c <= 3; ++c)
        for (int w = 1; w <= 2; ++w) {
            v.assign(lcoord::rank, 0);
            v[lcoord::u(c, w)] = 1;
            g.append_row(v);
        }
    Lattice e8 = catalog::E8m1();
    IntMatrix x(1, 8);
    x(0, 0) = 1;
    if (d % 4 == 3) x(0, 2) = 1;
    Sublattice xperp = orthogonal_complement(e8, x);
    for (std::size_t r = 0; r < xperp.rank(); ++r) {
        v.assign(lcoord::rank, 0);
        for (int i = 1; i <= 8; ++i) v[lcoord::e(i)] = v[lcoord::f(i)] = xperp.gens()(r, i - 1);
        g.append_row(v);
    }
    v.assign(lcoord::rank, 0);
    int y = d % 4 == 1 ? 2 : 4;
    v[lcoord::e(y)] = v[lcoord::f(y)] = 1;
    v[lcoord::delta] = 1;
    g.append_row(v);
    return g;
}

}  // namespace nikulin
