#include "framesplit/complex_matrix.hpp"

#include <cmath>

#include "framesplit/errors.hpp"
#include "framesplit/kernels.hpp"

namespace framesplit {

namespace {

void require_positive_dims(int rows, int cols) {
    if (rows <= 0 || cols <= 0)
        throw UsageError("matrix dimensions must be positive");
}

} // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    require_positive_dims(rows, cols);
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require_positive_dims(rows, cols);
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
        throw UsageError("entry count does not match rows * cols");
    if (!all_finite())
        throw UsageError("matrix entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
    if (rows.size() == 0)
        throw UsageError("matrix dimensions must be positive");
    cols_ = static_cast<int>(rows.begin()->size());
    require_positive_dims(rows_, cols_);
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw UsageError("ragged initializer rows");
        data_.insert(data_.end(), r.begin(), r.end());
    }
    if (!all_finite())
        throw UsageError("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i)
        m.at(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = std::conj(at(i, j));
    return t;
}

ComplexMatrix ComplexMatrix::conjugated() const {
    ComplexMatrix c = *this;
    for (cplx& z : c.data_)
        z = std::conj(z);
    return c;
}

double ComplexMatrix::frobenius_norm() const {
    return std::sqrt(kernels::norm_sq(data_.size(), data_.data()));
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& z : data_)
        m = std::max(m, std::abs(z));
    return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw UsageError("matrix addition: dimension mismatch");
    ComplexMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
        c.data_[i] += b.data_[i];
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw UsageError("matrix subtraction: dimension mismatch");
    ComplexMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i)
        c.data_[i] -= b.data_[i];
    return c;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix c = a;
    kernels::scal(c.size(), s, c.data());
    return c;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw UsageError("matmul: inner dimension mismatch");
    ComplexMatrix c(a.rows(), b.cols());
    const std::size_t n = static_cast<std::size_t>(b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k)
            kernels::axpy(n, a.at(i, k), b.row(k), c.row(i));
    return c;
}

ComplexMatrix matmul_abh(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.cols())
        throw UsageError("matmul_abh: inner dimension mismatch");
    ComplexMatrix c(a.rows(), b.rows());
    const std::size_t n = static_cast<std::size_t>(a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.rows(); ++j)
            c.at(i, j) = kernels::dot_conj(n, a.row(i), b.row(j));
    return c;
}

std::vector<cplx> matvec(const ComplexMatrix& a, const std::vector<cplx>& x) {
    if (a.cols() != static_cast<int>(x.size()))
        throw UsageError("matvec: dimension mismatch");
    std::vector<cplx> y(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < a.rows(); ++i)
        y[static_cast<std::size_t>(i)] = kernels::dot_u(x.size(), a.row(i), x.data());
    return y;
}

cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y) {
    if (x.size() != y.size())
        throw UsageError("inner product: length mismatch");
    return kernels::dot_conj(x.size(), x.data(), y.data());
}

double norm_sq(const std::vector<cplx>& x) {
    return kernels::norm_sq(x.size(), x.data());
}

double norm(const std::vector<cplx>& x) {
    return std::sqrt(norm_sq(x));
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).max_abs();
}

} // namespace framesplit
