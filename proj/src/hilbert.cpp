#include "nikulin/lattice.hpp"

#include <algorithm>
#include <set>

namespace nikulin {

namespace {

// a = p^alpha * u with p not dividing u
std::pair<unsigned long, Integer> split_prime(Integer a, const Integer& p) {
    unsigned long alpha = 0;
    while (a % p == 0) {
        a /= p;
        ++alpha;
    }
    return {alpha, a};
}

// integer in the same square class
Integer square_class_rep(const Rational& a) {
    return a.get_num() * a.get_den();
}

int eps_mod2(const Integer& u) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 4);
    return r == 3 ? 1 : 0;
}

int omega_mod2(const Integer& u) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
    return (r == 3 || r == 5) ? 1 : 0;
}

void add_primes(std::set<Integer>& out, Integer n) {
    n = abs(n);
    for (Integer p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.insert(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.insert(n);
}

}  // namespace

int hilbert_symbol(const Rational& ra, const Rational& rb, const Integer& p) {
    if (ra == 0 || rb == 0) throw DomainError("Hilbert symbol of zero");
    if (p == 0) return (ra < 0 && rb < 0) ? -1 : 1;
    Integer a = square_class_rep(ra), b = square_class_rep(rb);
    auto [alpha, u] = split_prime(a, p);
    auto [beta, v] = split_prime(b, p);
    if (p == 2) {
        int e = eps_mod2(u) * eps_mod2(v) + (alpha % 2) * omega_mod2(v) + (beta % 2) * omega_mod2(u);
        return e % 2 ? -1 : 1;
    }
    int sign = 1;
    Integer eps = (p - 1) / 2;
    if ((alpha % 2) && (beta % 2) && eps % 2 != 0) sign = -sign;
    if (beta % 2) sign *= mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
    if (alpha % 2) sign *= mpz_legendre(v.get_mpz_t(), p.get_mpz_t());
    return sign;
}

int hasse_invariant(const RatVector& diag, const Integer& p) {
    int s = 1;
    for (std::size_t i = 0; i < diag.size(); ++i)
        for (std::size_t j = i + 1; j < diag.size(); ++j) s *= hilbert_symbol(diag[i], diag[j], p);
    return s;
}

RationalInvariants rational_invariants(const RatVector& diag, const std::vector<Integer>& primes) {
    RationalInvariants inv;
    inv.rank = diag.size();
    inv.det = 1;
    for (auto& x : diag) {
        if (x == 0) throw DomainError("rational invariants of a degenerate form");
        (x > 0 ? inv.sig.plus : inv.sig.minus)++;
        inv.det *= x;
    }
    inv.primes = primes;
    for (auto& p : primes) inv.hasse.push_back(hasse_invariant(diag, p));
    return inv;
}

bool rational_equivalence(const RatMatrix& a, const RatMatrix& b) {
    auto da = rational_diagonalization(a);
    auto db = rational_diagonalization(b);
    if (da.size() != db.size()) return false;
    std::set<Integer> ps{2};
    for (auto* d : {&da, &db})
        for (auto& x : *d) {
            if (x == 0) throw DomainError("rational equivalence of a degenerate form");
            add_primes(ps, x.get_num());
            add_primes(ps, x.get_den());
        }
    std::vector<Integer> primes(ps.begin(), ps.end());
    auto ia = rational_invariants(da, primes);
    auto ib = rational_invariants(db, primes);
    if (!(ia.sig == ib.sig)) return false;
    // determinants must agree up to a rational square
    Rational ratio = ia.det / ib.det;
    if (mpz_perfect_square_p(ratio.get_num().get_mpz_t()) == 0 ||
        mpz_perfect_square_p(ratio.get_den().get_mpz_t()) == 0)
        return false;
    return ia.hasse == ib.hasse;
}

bool rational_equivalence(const Lattice& a, const Lattice& b) {
    return rational_equivalence(to_rational(a.gram()), to_rational(b.gram()));
}

}  // namespace nikulin
