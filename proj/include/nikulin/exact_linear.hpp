#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace nikulin {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Thrown for every malformed input (shape mismatch, non-symmetric Gram, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const;
    std::vector<T> col(std::size_t j) const;
    void set_row(std::size_t i, const std::vector<T>& v);
    void append_row(const std::vector<T>& v);
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    Matrix transpose() const;
    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    bool is_symmetric() const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v);
// row vector times matrix
template <class T>
std::vector<T> operator*(const std::vector<T>& v, const Matrix<T>& a);

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b);

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);
// Throws DomainError if some entry is not integral.
IntMatrix to_integer(const RatMatrix& m);
IntVector to_integer(const RatVector& v);

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

struct SmithForm {
    IntMatrix U, D, V;  // U * M * V == D
};

SmithForm smith_normal_form(const IntMatrix& m);
// Nonzero diagonal of the Smith form, positive and in divisibility order.
IntVector invariant_factors(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(const RatMatrix& m);
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);
RatMatrix inverse(const IntMatrix& m);

// Row-style HNF: zero rows dropped, pivots positive, entries above a pivot in [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

// Rows spanning {x in Z^n : m * x == 0}, in HNF.
IntMatrix integer_kernel(const IntMatrix& m);

// Basis (HNF) of (span_Q of the rows) intersected with Z^n.
IntMatrix saturate(std::size_t n, const IntMatrix& gens);
bool is_primitive(const IntMatrix& gens);

struct Signature {
    std::size_t plus = 0;
    std::size_t minus = 0;
    std::size_t zero = 0;
    bool operator==(const Signature&) const = default;
};

Signature signature(const IntMatrix& gram);
Signature signature(const RatMatrix& gram);

// Congruent diagonal form P * G * P^T = diag, over Q.
RatVector rational_diagonalization(const RatMatrix& gram);

Integer vector_gcd(const IntVector& v);

// a/b in lowest terms; mpq_class(a, b) alone does not canonicalize
inline Rational ratio(const Integer& a, const Integer& b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}
std::string to_string(const IntMatrix& m);
std::string to_string(const IntVector& v);

}  // namespace nikulin
