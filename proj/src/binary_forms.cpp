#include "nikulin/lattice.hpp"

#include <array>
#include <set>

namespace nikulin {

namespace {

// (A, B, C) stands for A x^2 + B xy + C y^2
using Form = std::array<Integer, 3>;

Form from_gram(const IntMatrix& g) {
    if (g.rows() != 2 || g.cols() != 2 || !g.is_symmetric()) throw DomainError("not a symmetric 2x2 Gram matrix");
    return {g(0, 0), 2 * g(0, 1), g(1, 1)};
}

IntMatrix to_gram(const Form& f) {
    return IntMatrix{{f[0], f[1] / 2}, {f[1] / 2, f[2]}};
}

Form reduce_definite_positive(Form f) {
    auto& [a, b, c] = f;
    for (;;) {
        if (b > a || b <= -a) {
            // b <- b mod 2a into (-a, a]
            Integer t;
            Integer num = a - b;
            mpz_fdiv_q(t.get_mpz_t(), num.get_mpz_t(), Integer(2 * a).get_mpz_t());
            c = a * t * t + b * t + c;
            b = b + 2 * a * t;
        }
        if (a > c) {
            std::swap(a, c);
            b = -b;
            continue;
        }
        break;
    }
    if (b < 0) b = -b;
    return f;
}

bool less_than_sqrt(const Integer& x, const Integer& D) {
    return x < 0 || x * x < D;
}

bool greater_than_sqrt(const Integer& x, const Integer& D) {
    return x > 0 && x * x > D;
}

bool is_reduced_indefinite(const Form& f, const Integer& D) {
    const Integer& a = f[0];
    const Integer& b = f[1];
    Integer aa = abs(a);
    // |sqrt(D) - 2|a|| < b < sqrt(D)
    return b > 0 && less_than_sqrt(b, D) && greater_than_sqrt(b + 2 * aa, D) && less_than_sqrt(2 * aa - b, D);
}

Form rho(const Form& f, const Integer& D) {
    const Integer& b = f[1];
    const Integer& c = f[2];
    Integer cc = abs(c), m = 2 * cc;
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), Integer(-b).get_mpz_t(), m.get_mpz_t());
    if (c * c > D) {
        // -|c| < r <= |c|
        if (r > cc) r -= m;
    } else {
        // sqrt(D) - 2|c| < r < sqrt(D): largest r below sqrt(D) in the class
        while (!less_than_sqrt(r, D)) r -= m;
        while (less_than_sqrt(r + m, D)) r += m;
    }
    return {c, r, (r * r - D) / (4 * c)};
}

std::vector<Form> indefinite_cycle(Form f, const Integer& D) {
    int guard = 0;
    while (!is_reduced_indefinite(f, D)) {
        f = rho(f, D);
        if (++guard > 100000) throw std::runtime_error("indefinite reduction did not terminate");
    }
    std::vector<Form> cyc{f};
    for (Form g = rho(f, D); g != f; g = rho(g, D)) cyc.push_back(g);
    return cyc;
}

Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
    Integer g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Square discriminant: for a primitive isotropic v, complete to a basis (v, w)
// and normalize to (0, n, C mod n).
Form isotropic_normal_form(const IntMatrix& g, IntVector v, const Integer& n) {
    Integer gv = gcd(v[0], v[1]);
    v[0] /= gv;
    v[1] /= gv;
    Integer s, t;
    ext_gcd(v[0], v[1], t, s);  // t*v0 + s*v1 = 1
    IntVector w{-s, t};          // det [v; w] = v0*t + v1*s = 1
    Lattice l(g, {}, Parity::Integral);
    Integer b = l.pair(v, w);
    Integer c = l.norm(w);
    if (b < 0) b = -b;
    Integer nn = 2 * b;
    if (nn != n) throw std::logic_error("isotropic completion mismatch");
    Integer cm;
    mpz_fdiv_r(cm.get_mpz_t(), c.get_mpz_t(), nn.get_mpz_t());
    return {0, nn, cm};
}

}  // namespace

IntMatrix reduce_binary(const IntMatrix& gram) {
    Form f = from_gram(gram);
    Integer D = f[1] * f[1] - 4 * f[0] * f[2];
    if (D == 0) throw DomainError("degenerate binary form");
    if (D < 0) {
        if (f[0] > 0) return to_gram(reduce_definite_positive(f));
        Form neg{-f[0], -f[1], -f[2]};
        Form r = reduce_definite_positive(neg);
        return to_gram({-r[0], -r[1], -r[2]});
    }
    if (mpz_perfect_square_p(D.get_mpz_t())) {
        Integer n = sqrt(D);
        std::vector<IntVector> lines;
        if (f[0] == 0) {
            lines.push_back({1, 0});
            lines.push_back({-f[2], f[1]});
        } else {
            lines.push_back({-f[1] + n, 2 * f[0]});
            lines.push_back({-f[1] - n, 2 * f[0]});
        }
        Form best;
        bool first = true;
        for (auto& v : lines) {
            Form c = isotropic_normal_form(gram, v, n);
            if (first || c < best) best = c;
            first = false;
        }
        return to_gram(best);
    }
    Form best;
    bool first = true;
    for (const Form& start : {f, Form{f[0], -f[1], f[2]}})
        for (auto& c : indefinite_cycle(start, D))
            if (first || c < best) {
                best = c;
                first = false;
            }
    return to_gram(best);
}

bool binary_isometric(const IntMatrix& a, const IntMatrix& b) {
    return reduce_binary(a) == reduce_binary(b);
}

}  // namespace nikulin
