/*
   Copyright 2026 The mvwlib Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MVW_MATRIX_HPP
#define MVW_MATRIX_HPP

#include <utility>
#include <vector>

#include "poly.hpp"

namespace mvw {

inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }

/// Dense matrix over an exact field K.
template <class K>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t r, std::size_t c, const K& fill) : rows_(r), cols_(c), a_(r * c, fill) {}

    static Matrix zero(std::size_t r, std::size_t c, const K& exemplar) {
        return Matrix(r, c, zero_like(exemplar));
    }
    static Matrix identity(std::size_t n, const K& exemplar) {
        Matrix m(n, n, zero_like(exemplar));
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(exemplar);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return a_.empty(); }

    K& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    const K& exemplar() const {
        check_internal(!a_.empty(), "exemplar of empty matrix");
        return a_[0];
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "matrix shape mismatch");
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        require(x.rows_ == y.rows_ && x.cols_ == y.cols_, "matrix shape mismatch");
        Matrix r = x;
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = r.a_[i] - y.a_[i];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.a_) v = -v;
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        require(x.cols_ == y.rows_, "matrix shape mismatch");
        check_internal(!x.a_.empty() || !y.a_.empty(), "product of empty matrices needs an exemplar");
        const K z = zero_like(x.a_.empty() ? y.a_[0] : x.a_[0]);
        Matrix r(x.rows_, y.cols_, z);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const K& xik = x(i, k);
                if (xik == z) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    r(i, j) = r(i, j) + xik * y(k, j);
            }
        return r;
    }
    friend Matrix operator*(const K& s, const Matrix& x) {
        Matrix r = x;
        for (auto& v : r.a_) v = s * v;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, a_.empty() ? K() : zero_like(a_[0]));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!(v == zero_like(v))) return false;
        return true;
    }

    K trace() const {
        require(rows_ == cols_, "trace of non-square matrix");
        check_internal(!a_.empty(), "trace of empty matrix");
        K t = zero_like(a_[0]);
        for (std::size_t i = 0; i < rows_; ++i) t = t + (*this)(i, i);
        return t;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        require(v.size() == cols_, "matrix-vector shape mismatch");
        check_internal(!a_.empty(), "apply on empty matrix");
        std::vector<K> r(rows_, zero_like(a_[0]));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
        return r;
    }

    Matrix pow(unsigned long e) const {
        require(rows_ == cols_, "pow of non-square matrix");
        Matrix r = identity(rows_, exemplar());
        Matrix b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    std::vector<K> col(std::size_t j) const {
        std::vector<K> r;
        r.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) r.push_back((*this)(i, j));
        return r;
    }

    void set_col(std::size_t j, const std::vector<K>& v) {
        require(v.size() == rows_, "column size mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    static Matrix from_cols(const std::vector<std::vector<K>>& cols) {
        require(!cols.empty() && !cols[0].empty(), "from_cols needs data");
        Matrix r(cols[0].size(), cols.size(), zero_like(cols[0][0]));
        for (std::size_t j = 0; j < cols.size(); ++j) r.set_col(j, cols[j]);
        return r;
    }

private:
    std::size_t rows_, cols_;
    std::vector<K> a_;
};

using QMat = Matrix<Rat>;

namespace linalg_detail {

/// In-place reduced row echelon form over a field; returns pivot columns.
template <class K>
std::vector<std::size_t> rref(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const K z = zero_like(m(0, 0));
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == z) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        K inv = one_like(z) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == z) continue;
            K f = m(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(r, j) = m(r, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Fraction-free Bareiss elimination on an integer-scaled copy of a rational
/// matrix.  Keeps intermediate entries integral with single-step exact
/// divisions, then hands the echelon form back as rationals.
inline void bareiss_echelon(QMat& m) {
    if (m.empty()) return;
    // Scale each row to integers (row scaling preserves row space / solutions
    // of homogeneous parts; callers only use the echelon for rref afterward).
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int l(1);
        for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
        if (l != 1)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= Rat(l);
    }
    Int prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && sgn(m(sel, col)) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        Int piv = m(row, col).get_num();
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            Int head = m(r, col).get_num();
            for (std::size_t j = col; j < m.cols(); ++j) {
                Int v = m(r, j).get_num() * piv - m(row, j).get_num() * head;
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(r, j) = Rat(v);
            }
        }
        prev = piv;
        ++row;
    }
}

}  // namespace linalg_detail

/// Result of an exact linear solve A x = b.
template <class K>
struct LinearSolution {
    bool consistent = false;
    std::vector<K> particular;              // one solution when consistent
    std::vector<std::vector<K>> kernel;     // basis of the null space of A
};

/// Exact solve via fraction-free elimination (rationals) or exact Gaussian
/// elimination (other fields).  b may be empty to ask only for the kernel.
template <class K>
LinearSolution<K> solve_linear(const Matrix<K>& A, const std::vector<K>& b) {
    require(b.empty() || b.size() == A.rows(), "dimension mismatch");
    check_internal(!A.empty(), "solve on empty matrix");
    const K z = zero_like(A(0, 0));
    const bool with_rhs = !b.empty();

    Matrix<K> aug(A.rows(), A.cols() + (with_rhs ? 1 : 0), z);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        if (with_rhs) aug(i, A.cols()) = b[i];
    }
    if constexpr (std::is_same_v<K, Rat>) linalg_detail::bareiss_echelon(aug);
    std::vector<std::size_t> pivots = linalg_detail::rref(aug);

    LinearSolution<K> out;
    bool rhs_pivot = with_rhs && !pivots.empty() && pivots.back() == A.cols();
    out.consistent = !with_rhs || !rhs_pivot;

    std::vector<long> pivot_row_of_col(A.cols(), -1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        if (pivots[r] < A.cols()) pivot_row_of_col[pivots[r]] = static_cast<long>(r);

    if (out.consistent && with_rhs) {
        out.particular.assign(A.cols(), z);
        for (std::size_t c = 0; c < A.cols(); ++c)
            if (pivot_row_of_col[c] >= 0)
                out.particular[c] = aug(static_cast<std::size_t>(pivot_row_of_col[c]), A.cols());
    }
    for (std::size_t c = 0; c < A.cols(); ++c) {
        if (pivot_row_of_col[c] >= 0) continue;
        std::vector<K> v(A.cols(), z);
        v[c] = one_like(z);
        for (std::size_t c2 = 0; c2 < A.cols(); ++c2)
            if (pivot_row_of_col[c2] >= 0)
                v[c2] = -aug(static_cast<std::size_t>(pivot_row_of_col[c2]), c);
        out.kernel.push_back(std::move(v));
    }
    return out;
}

template <class K>
std::vector<std::vector<K>> kernel_basis(const Matrix<K>& A) {
    return solve_linear(A, std::vector<K>{}).kernel;
}

template <class K>
std::size_t rank_of(const Matrix<K>& A) {
    Matrix<K> m = A;
    if constexpr (std::is_same_v<K, Rat>) linalg_detail::bareiss_echelon(m);
    return linalg_detail::rref(m).size();
}

template <class K>
K det(const Matrix<K>& A) {
    require(A.rows() == A.cols(), "determinant of non-square matrix");
    check_internal(!A.empty(), "determinant of empty matrix");
    Matrix<K> m = A;
    const K z = zero_like(m(0, 0));
    K d = one_like(z);
    std::size_t n = m.rows();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col) == z) ++sel;
        if (sel == n) return z;
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
            d = -d;
        }
        d = d * m(col, col);
        K inv = one_like(z) / m(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m(r, col) == z) continue;
            K f = inv * m(r, col);
            for (std::size_t j = col; j < n; ++j) m(r, j) = m(r, j) - f * m(col, j);
        }
    }
    return d;
}

template <class K>
bool is_invertible(const Matrix<K>& A) {
    return A.rows() == A.cols() && !(det(A) == zero_like(A.exemplar()));
}

template <class K>
Matrix<K> inverse(const Matrix<K>& A) {
    require(A.rows() == A.cols(), "inverse of non-square matrix");
    const std::size_t n = A.rows();
    const K z = zero_like(A.exemplar());
    Matrix<K> aug(n, 2 * n, z);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = one_like(z);
    }
    auto pivots = linalg_detail::rref(aug);
    require(pivots.size() >= n && pivots[n - 1] == n - 1, "singular matrix");
    Matrix<K> inv(n, n, z);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// Monic generator of the annihilator ideal of a square matrix: the least
/// k with M^k dependent on lower powers, via exact elimination on
/// vectorized powers.
template <class K>
Poly<K> minimal_polynomial(const Matrix<K>& m) {
    require(m.rows() == m.cols(), "non-square input");
    check_internal(!m.empty(), "minimal polynomial of empty matrix");
    const std::size_t n = m.rows();
    const K z = zero_like(m.exemplar());

    std::vector<std::vector<K>> powers;  // vectorized I, M, M^2, ...
    Matrix<K> cur = Matrix<K>::identity(n, m.exemplar());
    for (std::size_t k = 0;; ++k) {
        std::vector<K> vec;
        vec.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) vec.push_back(cur(i, j));
        if (!powers.empty()) {
            Matrix<K> A(n * n, powers.size(), z);
            for (std::size_t c = 0; c < powers.size(); ++c) A.set_col(c, powers[c]);
            auto sol = solve_linear(A, vec);
            if (sol.consistent) {
                std::vector<K> cs(k + 1, z);
                for (std::size_t i = 0; i < k; ++i) cs[i] = -sol.particular[i];
                cs[k] = one_like(z);
                return Poly<K>(std::move(cs));
            }
        }
        powers.push_back(std::move(vec));
        cur = cur * m;
        check_internal(k <= n, "minimal polynomial search exceeded dimension");
    }
}

}  // namespace mvw

#endif
