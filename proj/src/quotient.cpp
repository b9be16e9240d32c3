#include "nikulin/quotient.hpp"

namespace nikulin {

using namespace catalog;

IntVector pushforward(const IntVector& v) {
    if (v.size() != lcoord::rank) throw DomainError("pushforward needs a vector of length 23");
    IntVector w(ycoord::rank);
    for (std::size_t i = 0; i < 6; ++i) w[i] = v[i];
    for (int i = 1; i <= 8; ++i) w[ycoord::e(i)] = v[lcoord::e(i)] + v[lcoord::f(i)];
    w[ycoord::plus] = v[lcoord::delta];
    w[ycoord::minus] = v[lcoord::delta];
    return w;
}

QuotientInput quotient_input(const Variant& v, bool include_delta) {
    return {realize(v).image.gens(), include_delta};
}

QuotientInput nonprojective_input() {
    IntMatrix g(0, lcoord::rank);
    for (int i = 1; i <= 8; ++i) g.append_row(lambda_in_L(-1, i));
    return {g, true};
}

OrbifoldPicard orbifold_picard(const QuotientInput& in) {
    IntMatrix img(0, ycoord::rank);
    for (std::size_t r = 0; r < in.ns_gens.rows(); ++r) img.append_row(pushforward(in.ns_gens.row(r)));
    if (in.include_delta) {
        IntVector delta(lcoord::rank);
        delta[lcoord::delta] = 1;
        img.append_row(pushforward(delta));
    }
    img.append_row(sigma_delta_classes().sigma);
    Lattice y = H2Y();
    Sublattice ns(y, saturate(ycoord::rank, img));
    return {ns, orthogonal_complement(ns)};
}

Sublattice invariant_image_saturation() {
    IntMatrix img(0, ycoord::rank);
    for (std::size_t i = 0; i < 6; ++i) {
        IntVector u(lcoord::rank);
        u[i] = 1;
        img.append_row(pushforward(u));
    }
    for (int i = 1; i <= 8; ++i) img.append_row(pushforward(lambda_in_L(+1, i)));
    IntVector delta(lcoord::rank);
    delta[lcoord::delta] = 1;
    img.append_row(pushforward(delta));
    return Sublattice(H2Y(), saturate(ycoord::rank, img));
}

IntMatrix table3_ns_gram(const Variant& v) {
    validate(v);
    const long d = v.d;
    switch (v.kind) {
        case Kind::j1: return IntMatrix{{4 * d, 0}, {0, -4}};
        case Kind::j2: return IntMatrix{{d - 1, 2}, {2, -4}};
        case Kind::j3: return rescale(H(d), 2).gram();
        case Kind::jtilde: return IntMatrix{{d, 0}, {0, -4}};
    }
    throw std::logic_error("unreachable");
}

Lattice table3_t_target(const Variant& v) {
    validate(v);
    const long d = v.d;
    switch (v.kind) {
        case Kind::j2:
            // for d = 3 mod 4 the stated E7(-1) + <-2> form is in the wrong genus; D8(-1) works for every odd d
            if (d % 4 == 3) return direct_sum({U_scaled(2), U_scaled(2), Dm1(8), rescale(K(d), 2)});
            return table3_t_stated(v);
        default: return table3_t_stated(v);
    }
}

Lattice table3_t_stated(const Variant& v) {
    validate(v);
    const long d = v.d;
    switch (v.kind) {
        case Kind::j1: return direct_sum({U_scaled(2), U_scaled(2), E8m1(), diag(-4 * d), diag(-4)});
        case Kind::j2: return direct_sum({U_scaled(2), U_scaled(2), E7m1(), rescale(K(d), 2), diag(-2)});
        case Kind::j3: return direct_sum({U_scaled(2), U_scaled(2), rescale(K(d), 2), E8m1()});
        case Kind::jtilde: return direct_sum({U(), U(), diag(-d), nikulin_N(), diag(-4)});
    }
    throw std::logic_error("unreachable");
}

std::string table3_ns_name(const Variant& v) {
    const std::string d = std::to_string(v.d);
    switch (v.kind) {
        case Kind::j1: return "<" + std::to_string(4 * v.d) + ">+<-4>";
        case Kind::j2: return "[[" + std::to_string(v.d - 1) + ",2],[2,-4]]";
        case Kind::j3: return "H_" + d + "(2)";
        case Kind::jtilde: return "<" + d + ">+<-4>";
    }
    return "?";
}

std::string table3_t_name(const Variant& v) {
    const std::string d = std::to_string(v.d);
    switch (v.kind) {
        case Kind::j1: return "U(2)^2+E8(-1)+<-" + std::to_string(4 * v.d) + ">+<-4>";
        case Kind::j2:
            if (v.d % 4 == 3) return "U(2)^2+D8(-1)+K_" + d + "(2)";
            return "U(2)^2+E7(-1)+K_" + d + "(2)+<-2>";
        case Kind::j3: return "U(2)^2+K_" + d + "(2)+E8(-1)";
        case Kind::jtilde: return "U^2+<-" + d + ">+N+<-4>";
    }
    return "?";
}

Variant hilbert_variant(HilbertCase c, long d) {
    if (c == HilbertCase::Lambda) return {Kind::j1, d};
    if (c == HilbertCase::LambdaTilde) return {Kind::jtilde, d};
    throw DomainError("the non-projective case has no polarization");
}

IntMatrix hilbert_ns_gram(HilbertCase c, long d) {
    switch (c) {
        case HilbertCase::NonProjective: return IntMatrix{{-2, 0}, {0, -2}};
        case HilbertCase::Lambda: return IntMatrix{{4 * d, 0, 0}, {0, -2, 0}, {0, 0, -2}};
        case HilbertCase::LambdaTilde:
            validate({Kind::jtilde, d});
            return IntMatrix{{d, 0, 0}, {0, -2, 0}, {0, 0, -2}};
    }
    throw std::logic_error("unreachable");
}

Lattice hilbert_t_target(HilbertCase c, long d) {
    switch (c) {
        case HilbertCase::NonProjective: return direct_sum({U_scaled(2), U_scaled(2), U_scaled(2), E8m1()});
        case HilbertCase::Lambda: return direct_sum({diag(-4 * d), U_scaled(2), U_scaled(2), E8m1()});
        case HilbertCase::LambdaTilde:
            validate({Kind::jtilde, d});
            return direct_sum({diag(-d), U(), U(), nikulin_N()});
    }
    throw std::logic_error("unreachable");
}

IntMatrix hilbert_ns_basis(HilbertCase c, long d) {
    IntMatrix b(0, ycoord::rank);
    if (c != HilbertCase::NonProjective) {
        IntVector p = pushforward(h_vector(hilbert_variant(c, d)));
        Integer g = vector_gcd(p);
        for (auto& x : p) x /= g;
        b.append_row(p);
    }
    IntVector a(ycoord::rank), m(ycoord::rank);
    a[ycoord::plus] = 1;
    m[ycoord::minus] = 1;
    b.append_row(a);
    b.append_row(m);
    return b;
}

std::vector<Partner> rational_partners(const Variant& v) {
    std::vector<Partner> out;
    out.push_back({"T_X(2)", rescale(transcendental_of_X(v), 2)});
    if (v.kind == Kind::j2 && v.d == 1) out.push_back({"T_S1", two_elementary_T_S1()});
    if (v.kind == Kind::j3 && v.d == 3) out.push_back({"T_S (cubic)", fano_T_S()});
    return out;
}

std::vector<Partner> hilbert_partners(HilbertCase c, long d) {
    switch (c) {
        case HilbertCase::NonProjective:
            return {{"T_Z = U^3+N", direct_sum({U(), U(), U(), nikulin_N()})}};
        case HilbertCase::Lambda:
            return {{"T_Z", direct_sum({diag(-4 * d), U_scaled(2), U_scaled(2), E8m1()})}};
        case HilbertCase::LambdaTilde:
            return {{"T_Z", direct_sum({diag(-d), U(), U(), nikulin_N()})}};
    }
    return {};
}

Lattice fano_ns_S() {
    // h1, h2, l1..l6
    IntMatrix g(8, 8);
    g(0, 1) = g(1, 0) = 3;
    g(1, 1) = 6;
    for (int i = 2; i < 8; ++i) {
        g(0, i) = g(i, 0) = 1;
        g(1, i) = g(i, 1) = 2;
        g(i, i) = -2;
    }
    RatMatrix basis = RatMatrix::identity(8);
    for (int j = 1; j < 8; ++j) basis(1, j) = Rational(1, 3);
    RatMatrix rg = to_rational(g);
    return Lattice(to_integer(basis * rg * basis.transpose()), {"h1", "m", "l1", "l2", "l3", "l4", "l5", "l6"});
}

Lattice fano_T_S() {
    return direct_sum({U_scaled(2), U_scaled(2), rescale(A2m1(), 2), E8m1()});
}

Lattice two_elementary_T_S1() {
    return direct_sum({U(), U(), D4m1(), diag(-2), diag(-2), diag(-2), diag(-2), diag(-2), diag(-2)});
}

Lattice two_elementary_T_Y() {
    return direct_sum({U_scaled(2), U_scaled(2), E7m1(), rescale(K(1), 2), diag(-2)});
}

}  // namespace nikulin
