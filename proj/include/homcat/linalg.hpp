#pragma once

#include <cassert>
#include <optional>
#include <vector>

#include "homcat/fields.hpp"

namespace homcat {

/* Dense exact matrix, row-major. All eliminations are fraction-free only in
   the sense that the field arithmetic itself is exact. */
template <class F>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_((size_t)rows * cols, F::zero()) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = F::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& operator()(int r, int c) { return a_[(size_t)r * cols_ + c]; }
    const F& operator()(int r, int c) const { return a_[(size_t)r * cols_ + c]; }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const F& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }

    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const F& v = (*this)(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r = *this;
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
        return r;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    std::vector<F> apply(const std::vector<F>& v) const {
        assert((int)v.size() == cols_);
        std::vector<F> r(rows_, F::zero());
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    std::vector<F> col(int j) const {
        std::vector<F> r(rows_);
        for (int i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
        return r;
    }

    void set_col(int j, const std::vector<F>& v) {
        assert((int)v.size() == rows_);
        for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    static Matrix from_cols(int rows, const std::vector<std::vector<F>>& cols) {
        Matrix m(rows, (int)cols.size());
        for (int j = 0; j < (int)cols.size(); ++j) m.set_col(j, cols[j]);
        return m;
    }

    Matrix hstack(const Matrix& o) const {
        assert(rows_ == o.rows_);
        Matrix r(rows_, cols_ + o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
            for (int j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
        }
        return r;
    }

    /* In-place reduced row echelon form; returns pivot columns (increasing). */
    std::vector<int> rref_in_place() {
        std::vector<int> pivots;
        int row = 0;
        for (int c = 0; c < cols_ && row < rows_; ++c) {
            int sel = -1;
            for (int i = row; i < rows_; ++i)
                if (!(*this)(i, c).is_zero()) { sel = i; break; }
            if (sel < 0) continue;
            if (sel != row)
                for (int j = 0; j < cols_; ++j) std::swap((*this)(sel, j), (*this)(row, j));
            F inv = (*this)(row, c).inverse();
            for (int j = c; j < cols_; ++j) (*this)(row, j) *= inv;
            for (int i = 0; i < rows_; ++i) {
                if (i == row) continue;
                F f = (*this)(i, c);
                if (f.is_zero()) continue;
                for (int j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(row, j);
            }
            pivots.push_back(c);
            ++row;
        }
        return pivots;
    }

  private:
    int rows_, cols_;
    std::vector<F> a_;
};

template <class F>
struct RrefResult {
    Matrix<F> mat;
    std::vector<int> pivots;
};

template <class F>
RrefResult<F> rref(Matrix<F> a) {
    auto p = a.rref_in_place();
    return {std::move(a), std::move(p)};
}

template <class F>
int rank(const Matrix<F>& a) {
    Matrix<F> c = a;
    return (int)c.rref_in_place().size();
}

/* Columns span ker(a); column count equals the nullity. */
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& a) {
    auto r = rref(a);
    int n = a.cols();
    std::vector<bool> is_pivot(n, false);
    for (int p : r.pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix<F> k(n, (int)free_cols.size());
    for (int fi = 0; fi < (int)free_cols.size(); ++fi) {
        int fc = free_cols[fi];
        k(fc, fi) = F::one();
        for (int pi = 0; pi < (int)r.pivots.size(); ++pi) k(r.pivots[pi], fi) = -r.mat(pi, fc);
    }
    return k;
}

/* Solves a*x = b (multiple right-hand sides); nullopt iff inconsistent. */
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
    assert(a.rows() == b.rows());
    auto r = rref(a.hstack(b));
    for (int p : r.pivots)
        if (p >= a.cols()) return std::nullopt;
    Matrix<F> x(a.cols(), b.cols());
    for (int pi = 0; pi < (int)r.pivots.size(); ++pi)
        for (int j = 0; j < b.cols(); ++j) x(r.pivots[pi], j) = r.mat(pi, a.cols() + j);
    return x;
}

template <class F>
std::optional<std::vector<F>> solve_vec(const Matrix<F>& a, const std::vector<F>& b) {
    auto x = solve(a, Matrix<F>::from_cols(a.rows(), {b}));
    if (!x) return std::nullopt;
    return x->col(0);
}

template <class F>
bool in_column_span(const Matrix<F>& a, const std::vector<F>& v) {
    return solve_vec(a, v).has_value();
}

/* Quotient of K^n by the column span of a matrix. Coset representatives are
   the coordinates left free by the rref of the subspace, in ambient order. */
template <class F>
struct QuotientSpace {
    int ambient = 0;
    int dim = 0;
    std::vector<int> rep_coords;  // complement coordinate indices, increasing
    Matrix<F> reducer;            // rref rows spanning the subspace
    std::vector<int> pivots;

    std::vector<F> reduce(std::vector<F> v) const {
        for (int i = 0; i < (int)pivots.size(); ++i) {
            F f = v[pivots[i]];
            if (f.is_zero()) continue;
            for (int j = 0; j < ambient; ++j) v[j] -= f * reducer(i, j);
        }
        return v;
    }

    std::vector<F> project(const std::vector<F>& v) const {
        std::vector<F> w = reduce(v);
        std::vector<F> out(dim);
        for (int i = 0; i < dim; ++i) out[i] = w[rep_coords[i]];
        return out;
    }

    Matrix<F> projection_matrix() const {
        Matrix<F> p(dim, ambient);
        for (int j = 0; j < ambient; ++j) {
            std::vector<F> e(ambient, F::zero());
            e[j] = F::one();
            p.set_col(j, project(e));
        }
        return p;
    }

    /* Canonical section: coset i is represented by the ambient basis vector
       at rep_coords[i]. */
    std::vector<F> lift(const std::vector<F>& q) const {
        std::vector<F> v(ambient, F::zero());
        for (int i = 0; i < dim; ++i) v[rep_coords[i]] = q[i];
        return v;
    }
};

template <class F>
QuotientSpace<F> quotient_space(const Matrix<F>& subspace_cols, int ambient) {
    QuotientSpace<F> q;
    q.ambient = ambient;
    auto r = rref(subspace_cols.transposed());
    int rk = (int)r.pivots.size();
    q.reducer = Matrix<F>(rk, ambient);
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < ambient; ++j) q.reducer(i, j) = r.mat(i, j);
    q.pivots = r.pivots;
    std::vector<bool> is_pivot(ambient, false);
    for (int p : r.pivots) is_pivot[p] = true;
    for (int j = 0; j < ambient; ++j)
        if (!is_pivot[j]) q.rep_coords.push_back(j);
    q.dim = (int)q.rep_coords.size();
    return q;
}

template <class F>
std::vector<F> scaled(std::vector<F> v, const F& c) {
    for (F& x : v) x *= c;
    return v;
}

template <class F>
void add_scaled(std::vector<F>& v, const std::vector<F>& w, const F& c) {
    assert(v.size() == w.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] += c * w[i];
}

template <class F>
bool is_zero_vec(const std::vector<F>& v) {
    for (const F& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace homcat
