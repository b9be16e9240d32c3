#include "nikulin/exact_linear.hpp"

#include <algorithm>
#include <sstream>

namespace nikulin {

template <class T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (auto& r : init) {
        if (r.size() != cols_) throw DomainError("ragged matrix literal");
        for (auto& x : r) data_.push_back(x);
    }
}

template <class T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

template <class T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
    return m;
}

template <class T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

template <class T>
std::vector<T> Matrix<T>::col(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

template <class T>
void Matrix<T>::set_row(std::size_t i, const std::vector<T>& v) {
    if (v.size() != cols_) throw DomainError("row length mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
}

template <class T>
void Matrix<T>::append_row(const std::vector<T>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw DomainError("row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

template <class T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <class T>
void Matrix<T>::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

template <class T>
Matrix<T> Matrix<T>::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

template <class T>
Matrix<T> Matrix<T>::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix s(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
    return s;
}

template <class T>
bool Matrix<T>::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.rows()) throw DomainError("matrix product shape mismatch");
    Matrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v) {
    if (a.cols() != v.size()) throw DomainError("matrix-vector shape mismatch");
    std::vector<T> r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
    return r;
}

template <class T>
std::vector<T> operator*(const std::vector<T>& v, const Matrix<T>& a) {
    if (a.rows() != v.size()) throw DomainError("vector-matrix shape mismatch");
    std::vector<T> r(a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < a.cols(); ++j) r[j] += v[i] * a(i, j);
    }
    return r;
}

template <class T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw DomainError("dot length mismatch");
    T s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template class Matrix<Integer>;
template class Matrix<Rational>;
template IntMatrix operator*(const IntMatrix&, const IntMatrix&);
template RatMatrix operator*(const RatMatrix&, const RatMatrix&);
template IntVector operator*(const IntMatrix&, const IntVector&);
template RatVector operator*(const RatMatrix&, const RatVector&);
template IntVector operator*(const IntVector&, const IntMatrix&);
template RatVector operator*(const RatVector&, const RatMatrix&);
template Integer dot(const IntVector&, const IntVector&);
template Rational dot(const RatVector&, const RatVector&);

RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}

RatVector to_rational(const IntVector& v) {
    return RatVector(v.begin(), v.end());
}

IntMatrix to_integer(const RatMatrix& m) {
    IntMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1) throw DomainError("non-integral entry");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

IntVector to_integer(const RatVector& v) {
    IntVector r;
    r.reserve(v.size());
    for (auto& x : v) {
        if (x.get_den() != 1) throw DomainError("non-integral entry");
        r.push_back(x.get_num());
    }
    return r;
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw DomainError("vstack width mismatch");
    IntMatrix m = a;
    for (std::size_t i = 0; i < b.rows(); ++i) m.append_row(b.row(i));
    return m;
}

namespace {

// row_i += f * row_k
void add_row(IntMatrix& m, std::size_t i, std::size_t k, const Integer& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += f * m(k, j);
}

void add_col(IntMatrix& m, std::size_t j, std::size_t k, const Integer& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) += f * m(i, k);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    SmithForm s{IntMatrix::identity(r), m, IntMatrix::identity(c)};
    IntMatrix& D = s.D;
    for (std::size_t t = 0; t < std::min(r, c); ++t) {
        // smallest nonzero |entry|, first in row-major order
        std::size_t pi = r, pj = c;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j)
                if (D(i, j) != 0 && (pi == r || abs(D(i, j)) < abs(D(pi, pj)))) pi = i, pj = j;
        if (pi == r) break;
        D.swap_rows(t, pi);
        s.U.swap_rows(t, pi);
        D.swap_cols(t, pj);
        s.V.swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (D(i, t) == 0) continue;
                Integer q = D(i, t) / D(t, t);
                add_row(D, i, t, -q);
                add_row(s.U, i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (D(t, j) == 0) continue;
                Integer q = D(t, j) / D(t, t);
                add_col(D, j, t, -q);
                add_col(s.V, j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) {
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < r; ++i)
                    if (D(i, t) != 0 && abs(D(i, t)) < abs(D(bi, bj))) bi = i, bj = t;
                for (std::size_t j = t + 1; j < c; ++j)
                    if (D(t, j) != 0 && abs(D(t, j)) < abs(D(bi, bj))) bi = t, bj = j;
                D.swap_rows(t, bi);
                s.U.swap_rows(t, bi);
                D.swap_cols(t, bj);
                s.V.swap_cols(t, bj);
                continue;
            }
            // pivot must divide the rest of the block
            std::size_t bad = r;
            for (std::size_t i = t + 1; i < r && bad == r; ++i)
                for (std::size_t j = t + 1; j < c; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == r) break;
            add_row(D, t, bad, 1);
            add_row(s.U, t, bad, 1);
        }
        if (D(t, t) < 0) {
            for (std::size_t j = 0; j < c; ++j) D(t, j) = -D(t, j);
            for (std::size_t j = 0; j < r; ++j) s.U(t, j) = -s.U(t, j);
        }
    }
    return s;
}

IntVector invariant_factors(const IntMatrix& m) {
    auto s = smith_normal_form(m);
    IntVector out;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        if (s.D(i, i) != 0) out.push_back(s.D(i, i));
    return out;
}

namespace {

// In-place row echelon over Q; returns rank.
std::size_t echelon(RatMatrix& a) {
    std::size_t rk = 0;
    for (std::size_t j = 0; j < a.cols() && rk < a.rows(); ++j) {
        std::size_t p = rk;
        while (p < a.rows() && a(p, j) == 0) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(rk, p);
        for (std::size_t i = rk + 1; i < a.rows(); ++i) {
            if (a(i, j) == 0) continue;
            Rational f = a(i, j) / a(rk, j);
            for (std::size_t k = j; k < a.cols(); ++k) a(i, k) -= f * a(rk, k);
        }
        ++rk;
    }
    return rk;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    return echelon(a);
}

std::size_t rank(const IntMatrix& m) {
    return rank(to_rational(m));
}

Rational determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
    RatMatrix a = m;
    Rational det = 1;
    const std::size_t n = a.rows();
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = j;
        while (p < n && a(p, j) == 0) ++p;
        if (p == n) return 0;
        if (p != j) {
            a.swap_rows(p, j);
            det = -det;
        }
        det *= a(j, j);
        for (std::size_t i = j + 1; i < n; ++i) {
            if (a(i, j) == 0) continue;
            Rational f = a(i, j) / a(j, j);
            for (std::size_t k = j; k < n; ++k) a(i, k) -= f * a(j, k);
        }
    }
    return det;
}

Integer determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
    // Bareiss
    IntMatrix a = m;
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = m, inv = RatMatrix::identity(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = j;
        while (p < n && a(p, j) == 0) ++p;
        if (p == n) throw DomainError("singular matrix");
        a.swap_rows(p, j);
        inv.swap_rows(p, j);
        Rational piv = a(j, j);
        for (std::size_t k = 0; k < n; ++k) {
            a(j, k) /= piv;
            inv(j, k) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j || a(i, j) == 0) continue;
            Rational f = a(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                a(i, k) -= f * a(j, k);
                inv(i, k) -= f * inv(j, k);
            }
        }
    }
    return inv;
}

RatMatrix inverse(const IntMatrix& m) {
    return inverse(to_rational(m));
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t r = a.rows(), c = a.cols();
    std::size_t pr = 0;
    for (std::size_t j = 0; j < c && pr < r; ++j) {
        for (;;) {
            std::size_t best = r;
            for (std::size_t i = pr; i < r; ++i)
                if (a(i, j) != 0 && (best == r || abs(a(i, j)) < abs(a(best, j)))) best = i;
            if (best == r) break;
            a.swap_rows(pr, best);
            bool done = true;
            for (std::size_t i = pr + 1; i < r; ++i) {
                if (a(i, j) == 0) continue;
                Integer q = a(i, j) / a(pr, j);
                add_row(a, i, pr, -q);
                if (a(i, j) != 0) done = false;
            }
            if (done) break;
        }
        if (pr == r || a(pr, j) == 0) continue;
        if (a(pr, j) < 0)
            for (std::size_t k = 0; k < c; ++k) a(pr, k) = -a(pr, k);
        for (std::size_t i = 0; i < pr; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, j).get_mpz_t(), a(pr, j).get_mpz_t());
            if (q != 0) add_row(a, i, pr, -q);
        }
        ++pr;
    }
    IntMatrix out(pr, c);
    for (std::size_t i = 0; i < pr; ++i) out.set_row(i, a.row(i));
    return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
    auto s = smith_normal_form(m);
    std::size_t rk = 0;
    while (rk < std::min(m.rows(), m.cols()) && s.D(rk, rk) != 0) ++rk;
    IntMatrix k(m.cols() - rk, m.cols());
    for (std::size_t j = rk; j < m.cols(); ++j) k.set_row(j - rk, s.V.col(j));
    return hermite_normal_form(k);
}

IntMatrix saturate(std::size_t n, const IntMatrix& gens) {
    if (gens.rows() == 0) return IntMatrix(0, n);
    if (gens.cols() != n) throw DomainError("generator width mismatch");
    // (gens^perp)^perp over Z
    return integer_kernel(integer_kernel(gens));
}

bool is_primitive(const IntMatrix& gens) {
    if (gens.rows() == 0) return true;
    auto f = invariant_factors(gens);
    if (f.size() != gens.rows()) return false;
    return std::all_of(f.begin(), f.end(), [](const Integer& x) { return x == 1; });
}

RatVector rational_diagonalization(const RatMatrix& gram) {
    if (!gram.is_symmetric()) throw DomainError("Gram matrix is not symmetric");
    RatMatrix a = gram;
    const std::size_t n = a.rows();
    RatVector d(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, p) == 0) ++p;
        if (p == n) {
            // isotropic block: x <- x + y where G(x, y) != 0
            std::size_t bi = n, bj = n;
            for (std::size_t i = k; i < n && bi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a(i, j) != 0) {
                        bi = i, bj = j;
                        break;
                    }
            if (bi == n) break;  // remaining block is zero
            for (std::size_t c = 0; c < n; ++c) a(bi, c) += a(bj, c);
            for (std::size_t r = 0; r < n; ++r) a(r, bi) += a(r, bj);
            p = bi;
        }
        a.swap_rows(k, p);
        a.swap_cols(k, p);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rational f = a(i, k) / a(k, k);
            for (std::size_t c = k; c < n; ++c) a(i, c) -= f * a(k, c);
            for (std::size_t r = k; r < n; ++r) a(r, i) -= f * a(r, k);
        }
        d[k] = a(k, k);
    }
    return d;
}

Signature signature(const RatMatrix& gram) {
    Signature s;
    for (auto& x : rational_diagonalization(gram)) {
        if (x > 0) ++s.plus;
        else if (x < 0) ++s.minus;
        else ++s.zero;
    }
    return s;
}

Signature signature(const IntMatrix& gram) {
    return signature(to_rational(gram));
}

Integer vector_gcd(const IntVector& v) {
    Integer g = 0;
    for (auto& x : v) g = gcd(g, x);
    return g;
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ')';
    return os.str();
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", " : "") << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace nikulin
