#pragma once

#include "nikulin/lattice.hpp"

#include <string>
#include <vector>

namespace nikulin {

// Finite quadratic form on a sum of cyclic groups Z/n_i.
// q-values live in Q/2Z, normalized to [0, 2); b-values in Q/Z, normalized to [0, 1).
class FiniteQuadraticForm {
public:
    FiniteQuadraticForm() = default;
    // values: q(g_i) on the diagonal, b(g_i, g_j) off it.
    FiniteQuadraticForm(IntVector orders, RatMatrix values);

    std::size_t size() const { return orders_.size(); }
    const IntVector& orders() const { return orders_; }
    const RatMatrix& values() const { return values_; }
    Rational q_value(std::size_t i) const { return values_(i, i); }
    Rational b_value(std::size_t i, std::size_t j) const;

    Integer order() const;
    Integer exponent() const;
    IntVector invariant_factors() const;
    Rational q(const IntVector& x) const;
    Rational b(const IntVector& x, const IntVector& y) const;

    FiniteQuadraticForm negated() const;
    FiniteQuadraticForm p_part(const Integer& p) const;
    std::vector<Integer> primes() const;

    // Representatives of the generators in lattice coordinates, when built from a lattice.
    const RatMatrix& generators() const { return generators_; }

private:
    friend FiniteQuadraticForm discriminant_form(const Lattice& l);
    IntVector orders_;
    RatMatrix values_;
    RatMatrix generators_;
};

Rational mod2(const Rational& x);
Rational mod1(const Rational& x);

FiniteQuadraticForm discriminant_form(const Lattice& l);
FiniteQuadraticForm direct_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b);
FiniteQuadraticForm direct_sum(const std::vector<FiniteQuadraticForm>& parts);

// u(n): hyperbolic plane on (Z/n)^2, v(n) its anisotropic cousin (n a power of 2)
FiniteQuadraticForm u_form(const Integer& n);
FiniteQuadraticForm v_form(const Integer& n);
// Z/m with q(g) = alpha
FiniteQuadraticForm cyclic_form(const Integer& m, const Rational& alpha);

struct IsoOptions {
    // 2-elementary 2-parts are decided by their q-histogram when set
    bool two_elementary_shortcut = true;
    unsigned long max_order = 1ul << 20;
};

bool fqf_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b, const IsoOptions& opt = {});
bool genus_equal(const Lattice& a, const Lattice& b, const IsoOptions& opt = {});

// Readable decomposition such as "u(2)^3 + (1/4)"; deterministic but not a normal form.
std::string describe(const FiniteQuadraticForm& f);

}  // namespace nikulin
