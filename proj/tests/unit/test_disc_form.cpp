#include "support.hpp"

#include "nikulin/catalog.hpp"
#include "nikulin/disc_form.hpp"

#include <doctest.h>

#include <functional>
#include <map>
#include <set>

using namespace nikulin;
using testing::uniform;

namespace {

std::vector<IntVector> elements(const FiniteQuadraticForm& f) {
    std::vector<IntVector> out{IntVector(f.size(), 0)};
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::vector<IntVector> next;
        for (auto& e : out)
            for (long k = 0; k < f.orders()[i].get_si(); ++k) {
                IntVector x = e;
                x[i] = k;
                next.push_back(x);
            }
        out = next;
    }
    return out;
}

std::map<Rational, int> histogram(const FiniteQuadraticForm& f) {
    std::map<Rational, int> h;
    for (auto& x : elements(f)) ++h[f.q(x)];
    return h;
}

IntVector reduce(IntVector x, const IntVector& orders) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] %= orders[i];
        if (x[i] < 0) x[i] += orders[i];
    }
    return x;
}

// every assignment of generator images; a map is an isometry if it is well defined,
// injective and preserves q
bool brute_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
    if (a.order() != b.order()) return false;
    auto eb = elements(b), ea = elements(a);
    std::vector<IntVector> img(a.size());
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == a.size()) {
            std::set<IntVector> seen;
            for (auto& x : ea) {
                IntVector y(b.size(), 0);
                for (std::size_t g = 0; g < a.size(); ++g)
                    for (std::size_t k = 0; k < b.size(); ++k) y[k] += x[g] * img[g][k];
                y = reduce(y, b.orders());
                if (a.q(x) != b.q(y) || !seen.insert(y).second) return false;
            }
            return true;
        }
        for (auto& y : eb) {
            IntVector ny(y.size());
            for (std::size_t k = 0; k < y.size(); ++k) ny[k] = y[k] * a.orders()[i];
            if (reduce(ny, b.orders()) != IntVector(b.size(), 0)) continue;
            if (b.q(y) != a.q_value(i)) continue;
            img[i] = y;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

Lattice random_small_lattice(Integer max_det) {
    while (true) {
        std::size_t n = uniform(1, 4);
        IntMatrix g = testing::random_symmetric(n, -4, 4, true);
        Integer d = determinant(g);
        if (d != 0 && abs(d) <= max_det) return Lattice(g);
    }
}

void check_polarization(const FiniteQuadraticForm& f) {
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (i == j) continue;
            IntVector x(f.size(), 0);
            x[i] += 1;
            x[j] += 1;
            CHECK(f.b_value(i, j) == mod1((f.q(x) - f.q_value(i) - f.q_value(j)) / 2));
        }
}

FiniteQuadraticForm permuted(const FiniteQuadraticForm& f, const std::vector<std::size_t>& p) {
    IntVector ord;
    RatMatrix val(f.size(), f.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        ord.push_back(f.orders()[p[i]]);
        for (std::size_t j = 0; j < p.size(); ++j) val(i, j) = f.values()(p[i], p[j]);
    }
    return FiniteQuadraticForm(ord, val);
}

}  // namespace

TEST_CASE("value histograms") {
    CHECK(histogram(u_form(2)) == std::map<Rational, int>{{0, 3}, {1, 1}});
    CHECK(histogram(v_form(2)) == std::map<Rational, int>{{0, 1}, {1, 3}});
    CHECK(histogram(cyclic_form(2, Rational(-1, 2))) == std::map<Rational, int>{{0, 1}, {Rational(3, 2), 1}});
}

TEST_CASE("catalog discriminant forms") {
    using namespace catalog;
    CHECK(fqf_isomorphic(discriminant_form(E8m2()), direct_sum(std::vector<FiniteQuadraticForm>(4, u_form(2)))));
    CHECK(fqf_isomorphic(discriminant_form(nikulin_N()), direct_sum(std::vector<FiniteQuadraticForm>(3, u_form(2)))));
    CHECK(describe(discriminant_form(E8m2())) == "u(2)^4");
    CHECK(describe(discriminant_form(nikulin_N())) == "u(2)^3");
    CHECK(fqf_isomorphic(discriminant_form(diag(-2)), cyclic_form(2, Rational(-1, 2))));
    CHECK(discriminant_form(diag(-2)).q_value(0) == Rational(3, 2));
    CHECK(discriminant_form(E8m1()).order() == 1);
    CHECK(discriminant_form(LK3()).order() == 1);
    CHECK(fqf_isomorphic(discriminant_form(L()), cyclic_form(2, Rational(-1, 2))));
    for (long d = 1; d <= 8; ++d) {
        auto want = direct_sum({cyclic_form(2 * d, ratio(1, 2 * d)), u_form(2), u_form(2), u_form(2), u_form(2)});
        CHECK(fqf_isomorphic(discriminant_form(Lambda(d)), want));
    }
    for (long d : {2, 4, 6, 8}) {
        auto want = direct_sum({cyclic_form(2 * d, ratio(1, 2 * d)), u_form(2), u_form(2), u_form(2)});
        CHECK(fqf_isomorphic(discriminant_form(LambdaTilde(d)), want));
        // glue class: (h + b1)/2 for d = 2 mod 4, (h + b1 + b3)/2 for d = 0 mod 4
        RatVector g = lambda_tilde_glue(d);
        RatVector expect(9, 0);
        expect[0] = expect[1] = Rational(1, 2);
        if (d % 4 == 0) expect[3] = Rational(1, 2);
        CHECK(g == expect);
    }
    CHECK_THROWS_AS(LambdaTilde(3), ParameterError);

    // group order is |det| everywhere in the catalog
    for (const std::string& name : names()) {
        long param = name == "Dm1" ? 5 : name == "LambdaTilde" ? 4 : 3;
        Lattice l = make(name, takes_parameter(name) ? param : 0);
        if (!l.is_even() || l.determinant() == 0) continue;
        FiniteQuadraticForm f = discriminant_form(l);
        CHECK(f.order() == abs(l.determinant()));
        check_polarization(f);
    }
}

TEST_CASE("identities used for the embeddings of Lambda_2d") {
    Rational h(1, 2), mh(-1, 2);
    auto c = [](Integer n, Rational a) { return cyclic_form(n, a); };
    // d = 2
    auto lhs = direct_sum({u_form(2), u_form(2), u_form(2), c(4, Rational(-1, 4)), c(2, mh)});
    auto rhs = direct_sum({c(2, h), c(2, h), c(2, h), c(2, mh), c(2, mh), c(2, mh), c(2, mh), c(4, Rational(-1, 4))});
    CHECK(fqf_isomorphic(lhs, rhs));
    CHECK(fqf_isomorphic(lhs, rhs, IsoOptions{false}));
    CHECK(fqf_isomorphic(direct_sum({c(2, h), c(2, h), c(2, h), c(2, mh), c(2, mh), c(2, mh), c(2, mh)}),
                         direct_sum({v_form(2), c(2, mh), c(2, mh), c(2, mh), c(2, mh), c(2, mh)})));
    CHECK_FALSE(fqf_isomorphic(u_form(2), v_form(2)));
    CHECK(fqf_isomorphic(direct_sum(u_form(2), u_form(2)), direct_sum(v_form(2), v_form(2))));
    CHECK(fqf_isomorphic(direct_sum(c(2, h), c(2, mh)), direct_sum(c(2, Rational(3, 2)), c(2, Rational(5, 2)))));
}

TEST_CASE("isomorphism agrees with exhaustive search") {
    std::vector<FiniteQuadraticForm> pool;
    while (pool.size() < 40) {
        Lattice l = random_small_lattice(16);
        FiniteQuadraticForm f = discriminant_form(l);
        if (f.size() > 0) pool.push_back(f);
    }
    for (auto& f : pool) {
        check_polarization(f);
        CHECK(fqf_isomorphic(f, f));
    }
    int compared = 0;
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            if (pool[i].order() != pool[j].order()) continue;
            bool fast = fqf_isomorphic(pool[i], pool[j]);
            CHECK(fast == fqf_isomorphic(pool[j], pool[i]));
            CHECK(fast == fqf_isomorphic(pool[i], pool[j], IsoOptions{false}));
            CHECK(fast == brute_isomorphic(pool[i], pool[j]));
            ++compared;
        }
    CHECK(compared > 20);
}

TEST_CASE("isomorphism is invariant under scrambling") {
    for (int t = 0; t < 60; ++t) {
        Lattice l = random_small_lattice(200);
        IntMatrix p = testing::random_unimodular(l.rank());
        Lattice m(testing::congruent(l.gram(), p));
        CHECK(fqf_isomorphic(discriminant_form(l), discriminant_form(m)));
        CHECK(genus_equal(l, m));
        // generator reordering
        FiniteQuadraticForm f = discriminant_form(l);
        std::vector<std::size_t> perm(f.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = perm.size() - 1 - i;
        CHECK(fqf_isomorphic(f, permuted(f, perm)));
    }
}

TEST_CASE("complements in a unimodular lattice have opposite forms") {
    Lattice k3 = catalog::LK3();
    int done = 0;
    for (int t = 0; t < 200 && done < 40; ++t) {
        std::size_t k = uniform(1, 3);
        IntMatrix gens = testing::random_matrix(k, k3.rank(), -1, 1);
        if (rank(gens) != k) continue;
        Sublattice s(k3, saturate(k3.rank(), gens));
        Lattice sl = s.induced();
        if (sl.determinant() == 0) continue;
        Lattice c = orthogonal_complement(s).induced();
        CHECK(fqf_isomorphic(discriminant_form(c), discriminant_form(sl).negated()));
        ++done;
    }
    CHECK(done >= 20);
    // the expected complement form for <2d> + <-2>^7
    for (long d = 1; d <= 6; ++d) {
        std::vector<FiniteQuadraticForm> parts{cyclic_form(2 * d, ratio(-1, 2 * d))};
        for (int i = 0; i < 7; ++i) parts.push_back(cyclic_form(2, Rational(1, 2)));
        CHECK(fqf_isomorphic(discriminant_form(catalog::S_NS(d)).negated(), direct_sum(parts)));
    }
}

TEST_CASE("genus") {
    CHECK_FALSE(genus_equal(catalog::U(), catalog::U_scaled(2)));
    CHECK(genus_equal(direct_sum(catalog::U(), catalog::E8m2()),
                      direct_sum(catalog::U(), catalog::E8m2())));
    // same form, different signature
    CHECK_FALSE(genus_equal(catalog::E8m1(), direct_sum({catalog::U(), catalog::U(), catalog::U(), catalog::U()})));
}

TEST_CASE("validation and bounds") {
    CHECK_NOTHROW(cyclic_form(4, Rational(1, 2)));
    CHECK_THROWS_AS(cyclic_form(2, Rational(1, 4)), DomainError);  // q(g) must lie in (1/n)Z
    CHECK_THROWS_AS(cyclic_form(3, Rational(1, 3)), DomainError);   // 9 * 1/3 is odd
    CHECK_THROWS_AS(discriminant_form(catalog::diag(3)), DomainError);
    auto big = direct_sum(std::vector<FiniteQuadraticForm>(6, u_form(4)));
    CHECK(big.order() == Integer(1) << 24);
    CHECK_THROWS(fqf_isomorphic(big, big));
}
