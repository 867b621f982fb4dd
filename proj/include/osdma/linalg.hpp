#ifndef OSDMA_LINALG_HPP
#define OSDMA_LINALG_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace osdma {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. Sized for the small channel/beam
/// matrices used here (a handful of rows and columns), not for BLAS work.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = cplx(1.0, 0.0);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    CMatrix adjoint() const {
        CMatrix m(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    double frobenius_norm() const {
        double s = 0.0;
        for (const cplx& v : data_) s += std::norm(v);
        return std::sqrt(s);
    }

    /// max_ij |a_ij - b_ij|
    double max_abs_diff(const CMatrix& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument("CMatrix::max_abs_diff: shape mismatch");
        double d = 0.0;
        for (std::size_t i = 0; i < data_.size(); ++i)
            d = std::max(d, std::abs(data_[i] - other.data_[i]));
        return d;
    }

    friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("CMatrix::operator*: inner dimensions differ");
        CMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const cplx aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        }
        return c;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// Solves B y = g for Hermitian positive definite B via Cholesky (B = L L^H).
/// Throws if a pivot is not strictly positive.
inline std::vector<cplx> hermitian_solve(const CMatrix& b, const std::vector<cplx>& g) {
    const std::size_t n = b.rows();
    if (b.cols() != n || g.size() != n)
        throw std::invalid_argument("hermitian_solve: shape mismatch");

    CMatrix l(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double diag = b(j, j).real();
        for (std::size_t k = 0; k < j; ++k) diag -= std::norm(l(j, k));
        if (!(diag > 0.0)) throw std::runtime_error("hermitian_solve: matrix not positive definite");
        const double ljj = std::sqrt(diag);
        l(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            cplx s = b(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
            l(i, j) = s / ljj;
        }
    }

    // forward: L z = g
    std::vector<cplx> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        cplx s = g[i];
        for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * z[k];
        z[i] = s / l(i, i).real();
    }
    // backward: L^H y = z
    std::vector<cplx> y(n);
    for (std::size_t ii = n; ii-- > 0;) {
        cplx s = z[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= std::conj(l(k, ii)) * y[k];
        y[ii] = s / l(ii, ii).real();
    }
    return y;
}

}  // namespace osdma

#endif  // OSDMA_LINALG_HPP
