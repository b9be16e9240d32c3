#include "nikulin/lagrangian.hpp"

#include <algorithm>
#include <bit>

namespace nikulin {

namespace {

std::array<std::vector<std::uint8_t>, 8> build_subsets() {
    std::array<std::vector<std::uint8_t>, 8> s;
    for (int m = 0; m < 128; ++m) s[std::popcount(static_cast<unsigned>(m))].push_back(static_cast<std::uint8_t>(m));
    // lexicographic order of the sorted index tuples
    auto key = [](std::uint8_t m) {
        std::vector<int> v;
        for (int i = 0; i < 7; ++i)
            if (m >> i & 1) v.push_back(i);
        return v;
    };
    for (auto& v : s) std::sort(v.begin(), v.end(), [&](std::uint8_t a, std::uint8_t b) { return key(a) < key(b); });
    return s;
}

const std::array<std::vector<std::uint8_t>, 8>& all_subsets() {
    static const auto s = build_subsets();
    return s;
}

const std::array<std::size_t, 128>& index_table() {
    static const auto t = [] {
        std::array<std::size_t, 128> t{};
        for (auto& v : all_subsets())
            for (std::size_t i = 0; i < v.size(); ++i) t[v[i]] = i;
        return t;
    }();
    return t;
}

void check_degree(int k) {
    if (k < 0 || k > MultiVector::dim) throw DomainError("multivector degree out of range");
}

}  // namespace

MultiVector::MultiVector(int degree) : degree_(degree) {
    check_degree(degree);
    coords_.assign(subsets(degree).size(), Rational(0));
}

MultiVector::MultiVector(int degree, RatVector coords) : degree_(degree), coords_(std::move(coords)) {
    check_degree(degree);
    if (coords_.size() != subsets(degree).size()) throw DomainError("coordinate count does not match degree");
}

MultiVector MultiVector::basis(const std::vector<int>& idx) {
    std::uint8_t m = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= dim) throw DomainError("basis index out of range");
        if (i && idx[i] <= idx[i - 1]) throw DomainError("basis indices must increase");
        m |= static_cast<std::uint8_t>(1u << idx[i]);
    }
    MultiVector v(static_cast<int>(idx.size()));
    v.coords_[index_of(m)] = 1;
    return v;
}

const std::vector<std::uint8_t>& MultiVector::subsets(int degree) {
    check_degree(degree);
    return all_subsets()[degree];
}

std::size_t MultiVector::index_of(std::uint8_t mask) {
    return index_table()[mask & 127];
}

bool MultiVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& x) { return x == 0; });
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
    if (o.degree_ != degree_) throw DomainError("adding multivectors of different degree");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
    if (a.degree() + b.degree() > MultiVector::dim) throw DomainError("wedge degree exceeds 7");
    MultiVector r(a.degree() + b.degree());
    const auto& sa = MultiVector::subsets(a.degree());
    const auto& sb = MultiVector::subsets(b.degree());
    for (std::size_t i = 0; i < sa.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < sb.size(); ++j) {
            if (b[j] == 0 || (sa[i] & sb[j])) continue;
            // sign: pairs x in A, y in B with x > y
            int inv = 0;
            for (int y = 0; y < 7; ++y)
                if (sb[j] >> y & 1) inv += std::popcount(static_cast<unsigned>(sa[i] >> (y + 1)));
            Rational c = a[i] * b[j];
            if (inv % 2) c = -c;
            r[MultiVector::index_of(sa[i] | sb[j])] += c;
        }
    }
    return r;
}

RatVector TripleElement::flatten() const {
    RatVector v;
    for (auto& x : l) v.insert(v.end(), x.coords().begin(), x.coords().end());
    v.insert(v.end(), alpha.coords().begin(), alpha.coords().end());
    for (auto& x : w) v.insert(v.end(), x.coords().begin(), x.coords().end());
    return v;
}

MultiVector b_pair(const TripleElement& x, const TripleElement& y) {
    MultiVector r(6);
    for (int i = 0; i < 3; ++i) {
        r += wedge(x.w[i], y.l[i]);
        r += wedge(x.l[i], y.w[i]);
    }
    r += wedge(x.alpha, y.alpha);
    return r;
}

bool is_isotropic(const std::vector<TripleElement>& basis) {
    if (basis.empty()) return true;
    RatMatrix m(0, 0);
    for (auto& b : basis) m.append_row(b.flatten());
    if (rank(m) != basis.size()) throw DomainError("isotropy check needs an independent basis");
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            if (!b_pair(basis[i], basis[j]).is_zero()) return false;
    return true;
}

}  // namespace nikulin
