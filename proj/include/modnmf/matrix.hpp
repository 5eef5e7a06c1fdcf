#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "modnmf/errors.hpp"

namespace modnmf {

// Dense row-major matrix of doubles. Experiments top out at n = 1000, so a
// flat dense buffer is the simplest thing that works.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const double* row(std::size_t i) const { return data_.data() + i * cols_; }
    double* row(std::size_t i) { return data_.data() + i * cols_; }

    const std::vector<double>& data() const { return data_; }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("multiply: inner dimensions differ");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const double* ai = a.row(i);
        double* oi = out.row(i);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = ai[k];
            if (aik == 0.0) continue;
            const double* bk = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) oi[j] += aik * bk[j];
        }
    }
    return out;
}

inline Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
    return out;
}

// SᵀS for a tall matrix S (n×c → c×c)
inline Matrix gram(const Matrix& s) {
    Matrix out(s.cols(), s.cols());
    for (std::size_t i = 0; i < s.rows(); ++i) {
        const double* si = s.row(i);
        for (std::size_t r = 0; r < s.cols(); ++r) {
            const double v = si[r];
            if (v == 0.0) continue;
            double* orow = out.row(r);
            for (std::size_t t = 0; t < s.cols(); ++t) orow[t] += v * si[t];
        }
    }
    return out;
}

// Compensated (Neumaier) accumulator. The norm reducers below feed exact
// identities as differences of O(n²)-term sums; left-to-right rounding alone
// would swamp residuals near 1e-9 at n = 1000, so carry the lost low bits.
struct CompensatedSum {
    double sum = 0.0;
    double lost = 0.0;
    void add(double v) {
        const double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            lost += (sum - t) + v;
        else
            lost += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + lost; }
};

inline double frobenius_norm_sq(const Matrix& a) {
    CompensatedSum acc;
    for (double v : a.data()) acc.add(v * v);
    return acc.value();
}

// ‖W − SSᵀ‖²_F without materializing SSᵀ; row-major accumulation order.
inline double frobenius_diff_sq(const Matrix& w, const Matrix& s) {
    if (w.rows() != w.cols() || w.rows() != s.rows())
        throw ShapeError("frobenius_diff_sq: W must be n×n matching S's n");
    const std::size_t n = s.rows(), c = s.cols();
    CompensatedSum acc;
    for (std::size_t i = 0; i < n; ++i) {
        const double* si = s.row(i);
        const double* wi = w.row(i);
        for (std::size_t j = 0; j < n; ++j) {
            const double* sj = s.row(j);
            double dot = 0.0;
            for (std::size_t r = 0; r < c; ++r) dot += si[r] * sj[r];
            const double d = wi[j] - dot;
            acc.add(d * d);
        }
    }
    return acc.value();
}

}  // namespace modnmf
