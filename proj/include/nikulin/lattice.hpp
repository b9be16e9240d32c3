#pragma once

#include "nikulin/exact_linear.hpp"

#include <string>
#include <vector>

namespace nikulin {

enum class Parity { Even, Integral };

// Integral symmetric bilinear form on Z^n. Even by default; odd forms need Parity::Integral.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(IntMatrix gram, std::vector<std::string> labels = {}, Parity parity = Parity::Even);

    std::size_t rank() const { return gram_.rows(); }
    const IntMatrix& gram() const { return gram_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool is_even() const { return even_; }
    bool is_nondegenerate() const { return determinant() != 0; }
    Integer determinant() const;
    Signature signature() const;

    Integer pair(const IntVector& x, const IntVector& y) const;
    Integer norm(const IntVector& x) const { return pair(x, x); }
    Rational pair(const RatVector& x, const RatVector& y) const;

    std::size_t index_of(const std::string& label) const;
    IntVector unit(std::size_t i) const;
    IntVector unit(const std::string& label) const { return unit(index_of(label)); }

private:
    IntMatrix gram_;
    std::vector<std::string> labels_;
    bool even_ = true;
};

// Span of independent integer rows inside an ambient lattice.
class Sublattice {
public:
    Sublattice(Lattice ambient, IntMatrix gens);

    const Lattice& ambient() const { return ambient_; }
    const IntMatrix& gens() const { return gens_; }
    std::size_t rank() const { return gens_.rows(); }
    Lattice induced(std::vector<std::string> labels = {}) const;
    bool is_primitive() const;
    Sublattice saturated() const;
    bool contains(const IntVector& v) const;

private:
    Lattice ambient_;
    IntMatrix gens_;
};

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice direct_sum(const std::vector<Lattice>& parts);
Lattice rescale(const Lattice& a, const Integer& n);

Sublattice orthogonal_complement(const Sublattice& s);
Sublattice orthogonal_complement(const Lattice& ambient, const IntMatrix& gens);

// gcd of v.x over the ambient lattice
Integer divisibility(const Lattice& ambient, const IntVector& v);

struct Overlattice {
    Lattice lattice;
    RatMatrix basis;  // rows, in coordinates of the original lattice
    Integer index;
};

// Glue rows are rational vectors in the coordinates of a.
Overlattice overlattice(const Lattice& a, const RatMatrix& glue, std::vector<std::string> labels = {});

// Binary forms. Canonical representative under GL2(Z); throws on degenerate input.
IntMatrix reduce_binary(const IntMatrix& gram);
bool binary_isometric(const IntMatrix& a, const IntMatrix& b);

struct TwoElementary {
    std::size_t r = 0, a = 0;
    int delta = 0;
    bool operator==(const TwoElementary&) const = default;
};
TwoElementary two_elementary_invariants(const Lattice& l);

// Hilbert symbol (a, b)_p for nonzero rationals; p == 0 means the real place.
int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p);
int hasse_invariant(const RatVector& diagonal, const Integer& p);

struct RationalInvariants {
    std::size_t rank = 0;
    Signature sig;
    Rational det;  // of a diagonalization
    std::vector<Integer> primes;
    std::vector<int> hasse;  // aligned with primes
};
RationalInvariants rational_invariants(const RatVector& diagonal, const std::vector<Integer>& primes);

// Q-isometry of the two quadratic spaces (Hasse-Minkowski).
bool rational_equivalence(const Lattice& a, const Lattice& b);
bool rational_equivalence(const RatMatrix& a, const RatMatrix& b);

}  // namespace nikulin
