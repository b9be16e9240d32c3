#pragma once

#include "nikulin/exact_linear.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace nikulin {

// Element of the k-th exterior power of a fixed 7-dimensional space,
// in the lexicographic basis of k-subsets of {0..6}.
class MultiVector {
public:
    static constexpr int dim = 7;

    MultiVector() = default;
    explicit MultiVector(int degree);
    MultiVector(int degree, RatVector coords);

    // e_{i1} ^ ... ^ e_{ik}, indices 0-based and increasing
    static MultiVector basis(const std::vector<int>& indices);

    int degree() const { return degree_; }
    const RatVector& coords() const { return coords_; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    bool is_zero() const;

    MultiVector& operator+=(const MultiVector& o);
    bool operator==(const MultiVector& o) const { return degree_ == o.degree_ && coords_ == o.coords_; }

    // subsets as bitmasks in basis order
    static const std::vector<std::uint8_t>& subsets(int degree);
    static std::size_t index_of(std::uint8_t mask);

private:
    int degree_ = 0;
    RatVector coords_;
};

MultiVector wedge(const MultiVector& a, const MultiVector& b);

struct TripleElement {
    std::array<MultiVector, 3> l{MultiVector(1), MultiVector(1), MultiVector(1)};
    MultiVector alpha{3};
    std::array<MultiVector, 3> w{MultiVector(5), MultiVector(5), MultiVector(5)};

    RatVector flatten() const;  // 3*7 + 35 + 3*21 = 119 coordinates
};

// sum w_i(x) ^ l_i(y) + alpha(x) ^ alpha(y) + sum l_i(x) ^ w_i(y), in the 6th power
MultiVector b_pair(const TripleElement& x, const TripleElement& y);

bool is_isotropic(const std::vector<TripleElement>& basis);

}  // namespace nikulin
