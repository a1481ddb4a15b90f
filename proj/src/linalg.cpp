#include "dyadloop/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace dyadloop {

QrLeastSquares::QrLeastSquares(const Matrix& a)
    : qr_(a), rdiag_(a.cols(), 0.0), m_(a.rows()), n_(a.cols()) {
    // Column-by-column Householder elimination; reflectors stored in the
    // eliminated part of the column, scaled so v[0] = 1 implicitly.
    for (std::size_t k = 0; k < n_; ++k) {
        double norm = 0.0;
        for (std::size_t i = k; i < m_; ++i) norm = std::hypot(norm, qr_(i, k));

        if (norm < 1e-12) {
            if (deficient_column_ < 0) deficient_column_ = static_cast<int>(k);
            rdiag_[k] = 0.0;
            continue;
        }
        if (qr_(k, k) < 0) norm = -norm;
        for (std::size_t i = k; i < m_; ++i) qr_(i, k) /= norm;
        qr_(k, k) += 1.0;

        for (std::size_t j = k + 1; j < n_; ++j) {
            double s = 0.0;
            for (std::size_t i = k; i < m_; ++i) s += qr_(i, k) * qr_(i, j);
            s = -s / qr_(k, k);
            for (std::size_t i = k; i < m_; ++i) qr_(i, j) += s * qr_(i, k);
        }
        rdiag_[k] = -norm;
    }
    // A pivot that is tiny relative to the column scale also signals rank
    // deficiency (column nearly dependent on its predecessors).
    double scale = 0.0;
    for (double d : rdiag_) scale = std::max(scale, std::fabs(d));
    for (std::size_t k = 0; k < n_ && deficient_column_ < 0; ++k)
        if (std::fabs(rdiag_[k]) < 1e-10 * std::max(scale, 1.0))
            deficient_column_ = static_cast<int>(k);
}

std::vector<double> QrLeastSquares::qt_apply(const std::vector<double>& b) const {
    std::vector<double> y = b;
    for (std::size_t k = 0; k < n_; ++k) {
        if (rdiag_[k] == 0.0) continue;
        double s = 0.0;
        for (std::size_t i = k; i < m_; ++i) s += qr_(i, k) * y[i];
        s = -s / qr_(k, k);
        for (std::size_t i = k; i < m_; ++i) y[i] += s * qr_(i, k);
    }
    return y;
}

std::vector<double> QrLeastSquares::solve(const std::vector<double>& b) const {
    if (b.size() != m_) throw std::invalid_argument("QrLeastSquares::solve: size mismatch");
    if (!rank_ok()) throw std::runtime_error("QrLeastSquares::solve: rank-deficient matrix");
    std::vector<double> y = qt_apply(b);
    std::vector<double> x(n_, 0.0);
    for (std::size_t kk = n_; kk > 0; --kk) {
        std::size_t k = kk - 1;
        double s = y[k];
        for (std::size_t j = k + 1; j < n_; ++j) s -= qr_(k, j) * x[j];
        x[k] = s / rdiag_[k];
    }
    return x;
}

double QrLeastSquares::rss(const std::vector<double>& b) const {
    std::vector<double> y = qt_apply(b);
    double s = 0.0;
    for (std::size_t i = n_; i < m_; ++i) s += y[i] * y[i];
    return s;
}

std::vector<double> QrLeastSquares::xtx_inverse_diagonal() const {
    if (!rank_ok()) throw std::runtime_error("xtx_inverse_diagonal: rank-deficient matrix");
    // Rows of R^{-1}: solve R row by row, then diag_i = sum_k (R^{-1})_{ik}^2.
    std::vector<double> diag(n_, 0.0);
    std::vector<double> row(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        for (auto& v : row) v = 0.0;
        row[i] = 1.0 / rdiag_[i];
        for (std::size_t j = i + 1; j < n_; ++j) {
            double s = 0.0;
            for (std::size_t k = i; k < j; ++k) s -= qr_(k, j) * row[k];
            row[j] = s / rdiag_[j];
        }
        double acc = 0.0;
        for (std::size_t k = i; k < n_; ++k) acc += row[k] * row[k];
        diag[i] = acc;
    }
    return diag;
}

double QrLeastSquares::log_det_xtx() const {
    double s = 0.0;
    for (double d : rdiag_) s += std::log(std::fabs(d));
    return 2.0 * s;
}

std::vector<double> solve_dense(Matrix m, std::vector<double> rhs) {
    const std::size_t n = m.rows();
    if (m.cols() != n || rhs.size() != n) throw std::invalid_argument("solve_dense: shape mismatch");
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::fabs(m(i, k)) > std::fabs(m(piv, k))) piv = i;
        if (std::fabs(m(piv, k)) < 1e-300) throw std::runtime_error("solve_dense: singular matrix");
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            std::swap(rhs[k], rhs[piv]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            double f = m(i, k) / m(k, k);
            if (f == 0.0) continue;
            for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
            rhs[i] -= f * rhs[k];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t kk = n; kk > 0; --kk) {
        std::size_t k = kk - 1;
        double s = rhs[k];
        for (std::size_t j = k + 1; j < n; ++j) s -= m(k, j) * x[j];
        x[k] = s / m(k, k);
    }
    return x;
}

std::vector<double> solve_normal_equations(const Matrix& a, const std::vector<double>& b) {
    const std::size_t n = a.cols(), m = a.rows();
    Matrix xtx(n, n);
    std::vector<double> xty(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < m; ++k) s += a(k, i) * a(k, j);
            xtx(i, j) = s;
        }
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k) s += a(k, i) * b[k];
        xty[i] = s;
    }
    return solve_dense(std::move(xtx), std::move(xty));
}

} // namespace dyadloop
