#include "nikulin/lattice.hpp"

#include "nikulin/disc_form.hpp"

#include <algorithm>

namespace nikulin {

Lattice::Lattice(IntMatrix gram, std::vector<std::string> labels, Parity parity)
    : gram_(std::move(gram)), labels_(std::move(labels)) {
    if (!gram_.is_symmetric()) throw DomainError("Gram matrix is not symmetric: " + to_string(gram_));
    if (labels_.empty())
        for (std::size_t i = 0; i < gram_.rows(); ++i) labels_.push_back("x" + std::to_string(i + 1));
    if (labels_.size() != gram_.rows()) throw DomainError("label count does not match rank");
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        if (gram_(i, i) % 2 != 0) even_ = false;
    if (parity == Parity::Even && !even_) throw DomainError("lattice is not even: " + to_string(gram_));
}

Integer Lattice::determinant() const {
    return nikulin::determinant(gram_);
}

Signature Lattice::signature() const {
    return nikulin::signature(gram_);
}

Integer Lattice::pair(const IntVector& x, const IntVector& y) const {
    if (x.size() != rank() || y.size() != rank()) throw DomainError("vector length does not match lattice rank");
    return dot(x * gram_, y);
}

Rational Lattice::pair(const RatVector& x, const RatVector& y) const {
    if (x.size() != rank() || y.size() != rank()) throw DomainError("vector length does not match lattice rank");
    return dot(x * to_rational(gram_), y);
}

std::size_t Lattice::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw DomainError("unknown basis label " + label);
    return static_cast<std::size_t>(it - labels_.begin());
}

IntVector Lattice::unit(std::size_t i) const {
    IntVector v(rank());
    v.at(i) = 1;
    return v;
}

Sublattice::Sublattice(Lattice ambient, IntMatrix gens) : ambient_(std::move(ambient)), gens_(std::move(gens)) {
    if (gens_.rows() == 0) gens_ = IntMatrix(0, ambient_.rank());
    if (gens_.cols() != ambient_.rank()) throw DomainError("generator width does not match ambient rank");
    if (nikulin::rank(gens_) != gens_.rows()) throw DomainError("sublattice generators are dependent");
}

Lattice Sublattice::induced(std::vector<std::string> labels) const {
    IntMatrix g = gens_ * ambient_.gram() * gens_.transpose();
    return Lattice(g, std::move(labels), ambient_.is_even() ? Parity::Even : Parity::Integral);
}

bool Sublattice::is_primitive() const {
    return nikulin::is_primitive(gens_);
}

Sublattice Sublattice::saturated() const {
    return Sublattice(ambient_, saturate(ambient_.rank(), gens_));
}

bool Sublattice::contains(const IntVector& v) const {
    IntMatrix g = gens_;
    g.append_row(v);
    return hermite_normal_form(g) == hermite_normal_form(gens_);
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
    auto labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    bool even = a.is_even() && b.is_even();
    return Lattice(block_diagonal(a.gram(), b.gram()), labels, even ? Parity::Even : Parity::Integral);
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
    Lattice acc;
    for (auto& p : parts) acc = direct_sum(acc, p);
    return acc;
}

Lattice rescale(const Lattice& a, const Integer& n) {
    if (n == 0) throw DomainError("rescale by zero");
    IntMatrix g = a.gram();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) g(i, j) *= n;
    bool even = a.is_even() || n % 2 == 0;
    return Lattice(g, a.labels(), even ? Parity::Even : Parity::Integral);
}

Sublattice orthogonal_complement(const Lattice& ambient, const IntMatrix& gens) {
    if (gens.rows() == 0) return Sublattice(ambient, IntMatrix::identity(ambient.rank()));
    return Sublattice(ambient, integer_kernel(gens * ambient.gram()));
}

Sublattice orthogonal_complement(const Sublattice& s) {
    return orthogonal_complement(s.ambient(), s.gens());
}

Integer divisibility(const Lattice& ambient, const IntVector& v) {
    return vector_gcd(v * ambient.gram());
}

Overlattice overlattice(const Lattice& a, const RatMatrix& glue, std::vector<std::string> labels) {
    const std::size_t n = a.rank();
    if (glue.rows() && glue.cols() != n) throw DomainError("glue width does not match rank");
    RatMatrix g = to_rational(a.gram());
    for (std::size_t i = 0; i < glue.rows(); ++i) {
        RatVector x = glue.row(i);
        for (auto& c : x * g)
            if (c.get_den() != 1) throw DomainError("glue vector does not pair integrally with the lattice");
        for (std::size_t j = 0; j <= i; ++j) {
            Rational p = dot(x * g, glue.row(j));
            if (p.get_den() != 1) throw DomainError("glue vectors do not pair integrally");
            if (i == j && a.is_even() && p.get_num() % 2 != 0) throw DomainError("glue vector has odd norm");
        }
    }
    Integer den = 1;
    for (std::size_t i = 0; i < glue.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) den = lcm(den, glue(i, j).get_den());
    IntMatrix scaled(0, n);
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n);
        e[i] = den;
        scaled.append_row(e);
    }
    for (std::size_t i = 0; i < glue.rows(); ++i) {
        IntVector e(n);
        for (std::size_t j = 0; j < n; ++j) e[j] = Integer(glue(i, j) * den);
        scaled.append_row(e);
    }
    IntMatrix h = hermite_normal_form(scaled);
    RatMatrix basis = to_rational(h);
    for (std::size_t i = 0; i < basis.rows(); ++i)
        for (std::size_t j = 0; j < n; ++j) basis(i, j) /= den;
    IntMatrix gram = to_integer(basis * g * basis.transpose());
    Rational det = nikulin::determinant(basis);
    Integer index = Integer(1 / abs(det));
    // the HNF basis has nothing to do with the old one, so old labels would mislead
    if (labels.empty())
        for (std::size_t i = 0; i < gram.rows(); ++i) labels.push_back("w" + std::to_string(i + 1));
    Lattice lat(gram, labels, a.is_even() ? Parity::Even : Parity::Integral);
    return {lat, basis, index};
}

TwoElementary two_elementary_invariants(const Lattice& l) {
    auto f = discriminant_form(l);
    TwoElementary t;
    t.r = l.rank();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.orders()[i] != 2) throw DomainError("discriminant group is not 2-elementary");
        ++t.a;
        if (f.q_value(i).get_den() != 1) t.delta = 1;
    }
    return t;
}

}  // namespace nikulin
