// Dense row-major matrix and Householder-QR least squares.
//
// Sized for regression designs of a few thousand rows and a few dozen
// columns; everything is plain double with no blocking or vectorization.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dyadloop {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Least-squares solution of min ||A x - b|| by Householder reflections.
// Requires rows >= cols and full column rank.
struct QrLeastSquares {
    // Factorizes A (copied) into Q and R. Never throws; check rank_ok() before solving.
    explicit QrLeastSquares(const Matrix& a);

    bool rank_ok() const { return deficient_column_ < 0; }
    // Index of the first column whose pivot collapsed, -1 if full rank.
    int deficient_column() const { return deficient_column_; }

    // x minimizing ||A x - b||; b.size() == rows.
    std::vector<double> solve(const std::vector<double>& b) const;

    // Residual sum of squares for the solved system: ||A x - b||^2,
    // computed as the norm of the trailing part of Q^T b.
    double rss(const std::vector<double>& b) const;

    // Diagonal of (A^T A)^{-1} = R^{-1} R^{-T}, needed for coefficient
    // standard errors.
    std::vector<double> xtx_inverse_diagonal() const;

    // log |A^T A| = 2 * sum log |r_ii|.
    double log_det_xtx() const;

private:
    std::vector<double> qt_apply(const std::vector<double>& b) const;

    Matrix qr_;                 // reflectors below the diagonal, R above
    std::vector<double> rdiag_; // diagonal of R
    std::size_t m_ = 0, n_ = 0;
    int deficient_column_ = -1;
};

// Solves (A^T A) x = A^T b by Gaussian elimination with partial pivoting.
// Deliberately the numerically naive route; kept as an independent check
// against the QR path.
std::vector<double> solve_normal_equations(const Matrix& a, const std::vector<double>& b);

// Dense linear solve M x = rhs (partial pivoting), M square. Throws on
// singular M. Shared by the normal-equations route and test oracles.
std::vector<double> solve_dense(Matrix m, std::vector<double> rhs);

} // namespace dyadloop
