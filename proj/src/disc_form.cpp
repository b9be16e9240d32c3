#include "nikulin/disc_form.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace nikulin {

Rational mod2(const Rational& x) {
    Integer f;
    Integer num = x.get_num(), den = 2 * x.get_den();
    mpz_fdiv_q(f.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Rational r = x - 2 * Rational(f);
    r.canonicalize();
    return r;
}

Rational mod1(const Rational& x) {
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    Rational r = x - Rational(f);
    r.canonicalize();
    return r;
}

FiniteQuadraticForm::FiniteQuadraticForm(IntVector orders, RatMatrix values)
    : orders_(std::move(orders)), values_(std::move(values)) {
    const std::size_t k = orders_.size();
    if (values_.rows() != k || values_.cols() != k) throw DomainError("value matrix does not match generator count");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) values_(i, j).canonicalize();
    if (!values_.is_symmetric()) throw DomainError("bilinear values are not symmetric");
    for (std::size_t i = 0; i < k; ++i) {
        if (orders_[i] < 2) throw DomainError("cyclic orders must be at least 2");
        values_(i, i) = mod2(values_(i, i));
        for (std::size_t j = 0; j < k; ++j)
            if (i != j) values_(i, j) = mod1(values_(i, j));
    }
    for (std::size_t i = 0; i < k; ++i) {
        Rational qi = values_(i, i);
        if (Rational(orders_[i] * qi).get_den() != 1) throw DomainError("q-value not compatible with generator order");
        Rational nq = orders_[i] * orders_[i] * qi;
        if (nq.get_den() != 1 || nq.get_num() % 2 != 0) throw DomainError("q(n g) is not 0 mod 2");
        for (std::size_t j = 0; j < k; ++j)
            if (i != j && Rational(orders_[i] * values_(i, j)).get_den() != 1)
                throw DomainError("b-value not compatible with generator order");
    }
}

Rational FiniteQuadraticForm::b_value(std::size_t i, std::size_t j) const {
    return i == j ? mod1(values_(i, i)) : values_(i, j);
}

Integer FiniteQuadraticForm::order() const {
    Integer n = 1;
    for (auto& o : orders_) n *= o;
    return n;
}

Integer FiniteQuadraticForm::exponent() const {
    Integer e = 1;
    for (auto& o : orders_) e = lcm(e, o);
    return e;
}

IntVector FiniteQuadraticForm::invariant_factors() const {
    IntMatrix d(size(), size());
    for (std::size_t i = 0; i < size(); ++i) d(i, i) = orders_[i];
    IntVector f;
    for (auto& x : nikulin::invariant_factors(d))
        if (x != 1) f.push_back(x);
    return f;
}

Rational FiniteQuadraticForm::q(const IntVector& x) const {
    if (x.size() != size()) throw DomainError("element length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < size(); ++i) {
        s += x[i] * x[i] * values_(i, i);
        for (std::size_t j = i + 1; j < size(); ++j) s += 2 * x[i] * x[j] * values_(i, j);
    }
    return mod2(s);
}

Rational FiniteQuadraticForm::b(const IntVector& x, const IntVector& y) const {
    if (x.size() != size() || y.size() != size()) throw DomainError("element length mismatch");
    Rational s = 0;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) s += x[i] * y[j] * values_(i, j);
    return mod1(s);
}

FiniteQuadraticForm FiniteQuadraticForm::negated() const {
    RatMatrix v = values_;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j) v(i, j) = -v(i, j);
    return FiniteQuadraticForm(orders_, v);
}

std::vector<Integer> FiniteQuadraticForm::primes() const {
    std::vector<Integer> ps;
    for (auto n : orders_) {
        for (Integer p = 2; p * p <= n; ++p) {
            if (n % p != 0) continue;
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
        if (n > 1) ps.push_back(n);
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

FiniteQuadraticForm FiniteQuadraticForm::p_part(const Integer& p) const {
    IntVector ords, mult;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < size(); ++i) {
        Integer n = orders_[i], pe = 1;
        while (n % p == 0) {
            n /= p;
            pe *= p;
        }
        if (pe == 1) continue;
        ords.push_back(pe);
        mult.push_back(n);
        idx.push_back(i);
    }
    RatMatrix v(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t c = 0; c < idx.size(); ++c)
            v(a, c) = mult[a] * mult[c] * values_(idx[a], idx[c]);
    return FiniteQuadraticForm(ords, v);
}

FiniteQuadraticForm discriminant_form(const Lattice& l) {
    if (!l.is_even()) throw DomainError("discriminant quadratic form needs an even lattice");
    if (!l.is_nondegenerate()) throw DomainError("discriminant form of a degenerate lattice");
    auto s = smith_normal_form(l.gram());
    RatMatrix g = to_rational(l.gram());
    // dual generators: columns of V D^{-1}
    IntVector ords;
    RatMatrix gens(0, l.rank());
    for (std::size_t i = 0; i < l.rank(); ++i) {
        if (s.D(i, i) == 1) continue;
        RatVector x(l.rank());
        for (std::size_t r = 0; r < l.rank(); ++r) x[r] = ratio(s.V(r, i), s.D(i, i));
        for (auto& c : x) c.canonicalize();
        ords.push_back(s.D(i, i));
        gens.append_row(x);
    }
    RatMatrix vals = gens * g * gens.transpose();
    FiniteQuadraticForm f(ords, vals);
    f.generators_ = gens;
    return f;
}

FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
    IntVector ords = a.orders();
    ords.insert(ords.end(), b.orders().begin(), b.orders().end());
    RatMatrix v(ords.size(), ords.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) v(i, j) = a.values()(i, j);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) v(a.size() + i, a.size() + j) = b.values()(i, j);
    return FiniteQuadraticForm(ords, v);
}

FiniteQuadraticForm direct_sum(const std::vector<FiniteQuadraticForm>& parts) {
    FiniteQuadraticForm acc;
    for (auto& p : parts) acc = direct_sum(acc, p);
    return acc;
}

FiniteQuadraticForm u_form(const Integer& n) {
    return FiniteQuadraticForm({n, n}, RatMatrix{{0, ratio(1, n)}, {ratio(1, n), 0}});
}

FiniteQuadraticForm v_form(const Integer& n) {
    Rational h(2, n), b(1, n);
    h.canonicalize();
    b.canonicalize();
    return FiniteQuadraticForm({n, n}, RatMatrix{{h, b}, {b, h}});
}

FiniteQuadraticForm cyclic_form(const Integer& m, const Rational& alpha) {
    return FiniteQuadraticForm({m}, RatMatrix{{alpha}});
}

namespace {

// Explicit enumeration of a small finite quadratic form. Values scaled by the exponent E:
// q in Z/2E, b in Z/E.
struct Enumerated {
    std::vector<long> ord;
    long E = 1;
    long N = 1;
    std::vector<long> qv;
    std::vector<std::vector<long>> bv;
    std::vector<long> q_all, ord_all;

    explicit Enumerated(const FiniteQuadraticForm& f) {
        const std::size_t k = f.size();
        E = f.exponent().get_si();
        for (auto& o : f.orders()) {
            ord.push_back(o.get_si());
            N *= o.get_si();
        }
        qv.resize(k);
        bv.assign(k, std::vector<long>(k));
        for (std::size_t i = 0; i < k; ++i) {
            qv[i] = Rational(f.q_value(i) * E).get_num().get_si();
            for (std::size_t j = 0; j < k; ++j) bv[i][j] = Rational(f.b_value(i, j) * E).get_num().get_si();
        }
        q_all.resize(N);
        ord_all.resize(N);
        std::vector<long> c(k);
        for (long x = 0; x < N; ++x) {
            decode(x, c);
            q_all[x] = q_of(c);
            long o = 1;
            for (std::size_t i = 0; i < k; ++i) o = std::lcm(o, ord[i] / std::gcd(c[i], ord[i]));
            ord_all[x] = o;
        }
    }

    void decode(long x, std::vector<long>& c) const {
        c.resize(ord.size());
        for (std::size_t i = 0; i < ord.size(); ++i) {
            c[i] = x % ord[i];
            x /= ord[i];
        }
    }

    long encode(const std::vector<long>& c) const {
        long x = 0;
        for (std::size_t i = ord.size(); i-- > 0;) x = x * ord[i] + ((c[i] % ord[i]) + ord[i]) % ord[i];
        return x;
    }

    long q_of(const std::vector<long>& c) const {
        const long M = 2 * E;
        long s = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!c[i]) continue;
            s = (s + (c[i] * c[i] % M) * qv[i]) % M;
            for (std::size_t j = i + 1; j < c.size(); ++j)
                if (c[j]) s = (s + 2 * ((c[i] * c[j] % E) * bv[i][j] % E)) % M;
        }
        return s;
    }

    long b_of(long x, long y) const {
        std::vector<long> a, c;
        decode(x, a);
        decode(y, c);
        long s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < c.size(); ++j)
                if (c[j]) s = (s + (a[i] * c[j] % E) * bv[i][j]) % E;
        }
        return s;
    }

    long add(long x, long y) const {
        long r = 0, m = 1;
        for (std::size_t i = 0; i < ord.size(); ++i) {
            long a = x % ord[i], b = y % ord[i];
            x /= ord[i];
            y /= ord[i];
            r += ((a + b) % ord[i]) * m;
            m *= ord[i];
        }
        return r;
    }

    long mul(long x, long t) const {
        std::vector<long> c;
        decode(x, c);
        for (auto& v : c) v = v * t;
        return encode(c);
    }

    std::map<std::pair<long, long>, long> histogram() const {
        std::map<std::pair<long, long>, long> h;
        for (long x = 0; x < N; ++x) ++h[{ord_all[x], q_all[x]}];
        return h;
    }
};

class Matcher {
public:
    Matcher(const Enumerated& a, const Enumerated& b, long p) : a_(a), b_(b), p_(p) {
        const std::size_t k = a.ord.size();
        perm_.resize(k);
        std::iota(perm_.begin(), perm_.end(), 0);
        std::stable_sort(perm_.begin(), perm_.end(), [&](std::size_t x, std::size_t y) { return a.ord[x] > a.ord[y]; });
        for (long x = 0; x < b.N; ++x) bucket_[{b.ord_all[x], b.q_all[x]}].push_back(x);
    }

    bool run() {
        std::vector<long> s{0};
        std::vector<char> in(b_.N, 0);
        in[0] = 1;
        return step(0, s, in);
    }

private:
    bool step(std::size_t i, const std::vector<long>& members, const std::vector<char>& in) {
        if (i == perm_.size()) return true;
        const std::size_t gi = perm_[i];
        const long n = a_.ord[gi];
        auto it = bucket_.find({n, a_.qv[gi] % (2 * a_.E)});
        if (it == bucket_.end()) return false;
        for (long y : it->second) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (b_.b_of(y, img_[j]) != a_.bv[gi][perm_[j]]) ok = false;
            if (!ok) continue;
            if (in[b_.mul(y, n / p_)]) continue;
            std::vector<long> next;
            next.reserve(members.size() * n);
            std::vector<char> in2 = in;
            long m = 0;
            for (long t = 0; t < n; ++t) {
                for (long s : members) {
                    long z = b_.add(s, m);
                    if (!in2[z] || t == 0) {
                        in2[z] = 1;
                        next.push_back(z);
                    }
                }
                m = b_.add(m, y);
            }
            img_.push_back(y);
            if (step(i + 1, next, in2)) return true;
            img_.pop_back();
        }
        return false;
    }

    const Enumerated& a_;
    const Enumerated& b_;
    long p_;
    std::vector<std::size_t> perm_;
    std::map<std::pair<long, long>, std::vector<long>> bucket_;
    std::vector<long> img_;
};

bool p_parts_isomorphic(const FiniteQuadraticForm& fa, const FiniteQuadraticForm& fb, long p, const IsoOptions& opt) {
    if (fa.invariant_factors() != fb.invariant_factors()) return false;
    if (fa.exponent() != fb.exponent()) return false;
    Enumerated a(fa), b(fb);
    if (a.histogram() != b.histogram()) return false;
    bool elementary = std::all_of(a.ord.begin(), a.ord.end(), [](long o) { return o == 2; });
    // For 2-elementary forms the q-histogram fixes rank, parity and the Gauss sum.
    if (p == 2 && elementary && opt.two_elementary_shortcut) return true;
    return Matcher(a, b, p).run();
}

}  // namespace

bool fqf_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b, const IsoOptions& opt) {
    if (a.order() != b.order()) return false;
    if (a.order() > opt.max_order || b.order() > opt.max_order)
        throw DomainError("discriminant group too large for isomorphism search");
    if (a.invariant_factors() != b.invariant_factors()) return false;
    for (auto& p : a.primes())
        if (!p_parts_isomorphic(a.p_part(p), b.p_part(p), p.get_si(), opt)) return false;
    return true;
}

bool genus_equal(const Lattice& a, const Lattice& b, const IsoOptions& opt) {
    if (a.rank() != b.rank()) return false;
    if (!(a.signature() == b.signature())) return false;
    if (abs(a.determinant()) != abs(b.determinant())) return false;
    return fqf_isomorphic(discriminant_form(a), discriminant_form(b), opt);
}

namespace {

std::string frac(long num, long den) {
    long g = std::gcd(num < 0 ? -num : num, den);
    num /= g;
    den /= g;
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

// greedy orthogonal splitting of one p-part
void describe_part(const FiniteQuadraticForm& f, long p, std::vector<std::string>& out) {
    Enumerated e(f);
    std::vector<long> rem(e.N);
    std::iota(rem.begin(), rem.end(), 0);
    auto restrict = [&](std::vector<long> gens) {
        std::vector<long> keep;
        for (long y : rem) {
            bool ok = true;
            for (long g : gens)
                if (e.b_of(g, y) != 0) ok = false;
            if (ok) keep.push_back(y);
        }
        rem = keep;
    };
    while (rem.size() > 1) {
        long n = 1;
        for (long x : rem) n = std::max(n, e.ord_all[x]);
        const long unit = e.E / n;  // 1/n in scaled units
        bool done = false;
        // hyperbolic or anisotropic planes
        for (int kind = 0; kind < 2 && !done && p == 2; ++kind) {
            for (long x : rem) {
                if (e.ord_all[x] != n) continue;
                if (kind == 0 && e.q_all[x] != 0) continue;
                if (e.b_of(x, x) % (unit * 2) != 0) continue;
                for (long y : rem) {
                    if (e.ord_all[y] != n || e.b_of(x, y) != unit) continue;
                    if (kind == 0 && e.q_all[y] != 0) continue;
                    if (e.b_of(y, y) % (unit * 2) != 0) continue;
                    FiniteQuadraticForm blk({n, n}, RatMatrix{{ratio(e.q_all[x], e.E), ratio(1, n)},
                                                              {ratio(1, n), ratio(e.q_all[y], e.E)}});
                    IsoOptions o;
                    if (fqf_isomorphic(blk, u_form(n), o)) out.push_back("u(" + std::to_string(n) + ")");
                    else if (fqf_isomorphic(blk, v_form(n), o)) out.push_back("v(" + std::to_string(n) + ")");
                    else out.push_back("[" + std::to_string(n) + ": " + frac(e.q_all[x], e.E) + ", " +
                                       frac(e.q_all[y], e.E) + "]");
                    restrict({x, y});
                    done = true;
                    break;
                }
                if (done) break;
            }
        }
        if (done) continue;
        // nondegenerate cyclic summand with the simplest q
        long best = -1, best_key = 0;
        for (long x : rem) {
            if (e.ord_all[x] != n) continue;
            long bxx = e.b_of(x, x);
            if ((bxx / unit) % p == 0) continue;
            long qd = e.q_all[x] > e.E ? e.q_all[x] - 2 * e.E : e.q_all[x];
            long key = 2 * std::labs(qd) + (qd < 0 ? 1 : 0);
            if (best < 0 || key < best_key) best = x, best_key = key;
        }
        if (best < 0) {
            out.push_back("?");
            return;
        }
        long qd = e.q_all[best] > e.E ? e.q_all[best] - 2 * e.E : e.q_all[best];
        out.push_back("(" + frac(qd, e.E) + ")");
        restrict({best});
    }
}

}  // namespace

std::string describe(const FiniteQuadraticForm& f) {
    if (f.order() == 1) return "0";
    std::vector<std::string> parts;
    for (auto& p : f.primes()) {
        auto pp = f.p_part(p);
        if (pp.order() > (1 << 16)) {
            std::ostringstream os;
            os << "[" << p << "-part of order " << pp.order() << "]";
            parts.push_back(os.str());
            continue;
        }
        describe_part(pp, p.get_si(), parts);
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (i) os << " + ";
        os << parts[i];
        if (j - i > 1) os << "^" << (j - i);
        i = j;
    }
    return os.str();
}

}  // namespace nikulin
