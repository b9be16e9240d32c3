#include "nikulin/catalog.hpp"

#include <map>

namespace nikulin::catalog {

namespace {

std::vector<std::string> numbered(const std::string& stem, int n) {
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i) v.push_back(stem + std::to_string(i));
    return v;
}

Lattice relabel(const Lattice& l, std::vector<std::string> labels) {
    return Lattice(l.gram(), std::move(labels), l.is_even() ? Parity::Even : Parity::Integral);
}

Lattice u_copy(int i, long scale) {
    std::string p = "U" + std::to_string(i) + ".";
    return relabel(U_scaled(scale), {p + "u1", p + "u2"});
}

void require_positive(long d) {
    if (d <= 0) throw ParameterError("d must be positive");
}

void require_odd(long d, const char* what) {
    require_positive(d);
    if (d % 2 == 0) throw ParameterError(std::string(what) + " needs d = 1 mod 2");
}

}  // namespace

Lattice U() {
    return Lattice(IntMatrix{{0, 1}, {1, 0}}, {"u1", "u2"});
}

Lattice U_scaled(long n) {
    if (n == 0) throw ParameterError("U(n) needs n != 0");
    return Lattice(IntMatrix{{0, n}, {n, 0}}, {"u1", "u2"});
}

Lattice diag(long n) {
    if (n == 0) throw ParameterError("<n> needs n != 0");
    return Lattice(IntMatrix{{n}}, {"x"}, Parity::Integral);
}

IntMatrix e8_minus2_gram() {
    IntMatrix g(8, 8);
    for (int i = 0; i < 8; ++i) g(i, i) = -4;
    for (int i = 0; i + 1 < 7; ++i) g(i, i + 1) = g(i + 1, i) = 2;
    g(2, 7) = g(7, 2) = 2;
    return g;
}

Lattice E8m2() {
    return Lattice(e8_minus2_gram(), numbered("b", 8));
}

Lattice E8m1() {
    IntMatrix g = e8_minus2_gram();
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) g(i, j) /= 2;
    return Lattice(g, numbered("e", 8));
}

Lattice E7m1() {
    std::vector<std::size_t> keep{0, 1, 2, 3, 4, 5, 7};
    return Lattice(E8m1().gram().submatrix(keep, keep), numbered("e", 7));
}

Lattice Dm1(int n) {
    if (n < 4) throw ParameterError("D_n needs n >= 4");
    // chain d1..d(n-1), with dn attached to d(n-2)
    IntMatrix g(n, n);
    for (int i = 0; i < n; ++i) g(i, i) = -2;
    for (int i = 0; i + 2 < n; ++i) g(i, i + 1) = g(i + 1, i) = 1;
    g(n - 3, n - 1) = g(n - 1, n - 3) = 1;
    return Lattice(g, numbered("d", n));
}

Lattice D4m1() {
    return Dm1(4);
}

Lattice A2m1() {
    return Lattice(IntMatrix{{-2, 1}, {1, -2}}, {"a1", "a2"});
}

Lattice nikulin_N() {
    IntMatrix g(8, 8);
    for (int i = 0; i < 7; ++i) {
        g(i, i) = -2;
        g(i, 7) = g(7, i) = -1;
    }
    g(7, 7) = -4;
    auto labels = numbered("r", 7);
    labels.push_back("n");
    return Lattice(g, labels);
}

Lattice K(long d) {
    require_odd(d, "K_d");
    Parity p = d % 4 == 3 ? Parity::Even : Parity::Integral;
    return Lattice(IntMatrix{{-(d + 1) / 2, 1}, {1, -2}}, {"k1", "k2"}, p);
}

Lattice H(long d) {
    require_odd(d, "H_d");
    Parity p = d % 4 == 1 ? Parity::Even : Parity::Integral;
    return Lattice(IntMatrix{{(d - 1) / 2, 1}, {1, -2}}, {"k1", "k2"}, p);
}

Lattice Lambda(long d) {
    require_positive(d);
    auto labels = numbered("b", 8);
    labels.insert(labels.begin(), "h");
    return Lattice(block_diagonal(IntMatrix{{2 * d}}, e8_minus2_gram()), labels);
}

RatVector lambda_tilde_glue(long d) {
    require_positive(d);
    if (d % 2 != 0) throw ParameterError("LambdaTilde needs d = 0 mod 2");
    RatVector g(9);
    g[0] = Rational(1, 2);
    g[1] = Rational(1, 2);
    if (d % 4 == 0) g[3] = Rational(1, 2);
    return g;
}

Lattice LambdaTilde(long d) {
    RatVector glue = lambda_tilde_glue(d);
    RatMatrix basis = RatMatrix::identity(9);
    basis.set_row(0, glue);
    RatMatrix g = to_rational(Lambda(d).gram());
    auto labels = numbered("b", 8);
    labels.insert(labels.begin(), "g");
    return Lattice(to_integer(basis * g * basis.transpose()), labels);
}

Lattice LK3() {
    return direct_sum({u_copy(1, 1), u_copy(2, 1), u_copy(3, 1), E8m1(), relabel(E8m1(), numbered("f", 8))});
}

Lattice L() {
    return direct_sum(LK3(), Lattice(IntMatrix{{-2}}, {"delta"}));
}

Lattice H2Y() {
    return direct_sum({u_copy(1, 2), u_copy(2, 2), u_copy(3, 2), E8m1(),
                       Lattice(IntMatrix{{-2, 0}, {0, -2}}, {"(D+S)/2", "(D-S)/2"})});
}

Lattice S_NS(long d) {
    require_positive(d);
    IntMatrix g(8, 8);
    g(0, 0) = 2 * d;
    for (int i = 1; i < 8; ++i) g(i, i) = -2;
    auto labels = numbered("n", 7);
    labels.insert(labels.begin(), "t");
    return Lattice(g, labels);
}

Lattice Z_NS(long d) {
    require_positive(d);
    if (d % 4 != 3) throw ParameterError("Z_d needs d = 3 mod 4");
    RatMatrix basis = RatMatrix::identity(8);
    for (int j = 0; j < 8; ++j) basis(0, j) = Rational(1, 2);
    RatMatrix g = to_rational(S_NS(d).gram());
    auto labels = numbered("n", 7);
    labels.insert(labels.begin(), "z");
    return Lattice(to_integer(basis * g * basis.transpose()), labels);
}

SigmaDelta sigma_delta_classes() {
    IntVector s(16), d(16);
    s[14] = 1;
    s[15] = -1;
    d[14] = 1;
    d[15] = 1;
    return {s, d};
}

std::vector<std::string> names() {
    return {"U",  "U(n)", "diag", "E8m1", "E8m2", "E7m1", "D4m1", "Dm1", "A2m1", "N",   "K",
            "H",  "Lambda", "LambdaTilde", "LK3", "L", "H2Y", "S_NS", "Z_NS"};
}

bool takes_parameter(const std::string& name) {
    static const std::map<std::string, bool> t{
        {"U", false},     {"U(n)", true},        {"diag", true}, {"E8m1", false}, {"E8m2", false},
        {"E7m1", false},  {"D4m1", false},       {"Dm1", true}, {"A2m1", false}, {"N", false},   {"K", true},
        {"H", true},      {"Lambda", true},      {"LambdaTilde", true}, {"LK3", false},
        {"L", false},     {"H2Y", false},        {"S_NS", true}, {"Z_NS", true}};
    auto it = t.find(name);
    if (it == t.end()) throw ParameterError("unknown lattice name " + name);
    return it->second;
}

Lattice make(const std::string& name, long p) {
    takes_parameter(name);
    if (name == "U") return U();
    if (name == "U(n)") return U_scaled(p);
    if (name == "diag") return diag(p);
    if (name == "E8m1") return E8m1();
    if (name == "E8m2") return E8m2();
    if (name == "E7m1") return E7m1();
    if (name == "D4m1") return D4m1();
    if (name == "Dm1") return Dm1(static_cast<int>(p));
    if (name == "A2m1") return A2m1();
    if (name == "N") return nikulin_N();
    if (name == "K") return K(p);
    if (name == "H") return H(p);
    if (name == "Lambda") return Lambda(p);
    if (name == "LambdaTilde") return LambdaTilde(p);
    if (name == "LK3") return LK3();
    if (name == "L") return L();
    if (name == "H2Y") return H2Y();
    if (name == "S_NS") return S_NS(p);
    return Z_NS(p);
}

}  // namespace nikulin::catalog
