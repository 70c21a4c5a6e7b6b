#ifndef FRAMESPLIT_COMPLEX_MATRIX_HPP
#define FRAMESPLIT_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace framesplit {

using cplx = std::complex<double>;

// Dense complex matrix, row-major, the carrier for every operator and
// synthesis map in the library. Immutable by convention: operations return
// new values. Construction rejects non-finite entries.
class ComplexMatrix {
public:
    ComplexMatrix(int rows, int cols);                       // zeros
    ComplexMatrix(int rows, int cols, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(int n);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const cplx& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    cplx* row(int i) { return data_.data() + static_cast<std::size_t>(i) * cols_; }
    const cplx* row(int i) const { return data_.data() + static_cast<std::size_t>(i) * cols_; }

    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }
    std::size_t size() const { return data_.size(); }

    bool all_finite() const;

    ComplexMatrix transpose() const;
    ComplexMatrix adjoint() const;
    ComplexMatrix conjugated() const;

    double frobenius_norm() const;
    double max_abs() const;

    friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
    friend ComplexMatrix operator*(cplx s, const ComplexMatrix& a);

private:
    int rows_;
    int cols_;
    std::vector<cplx> data_;
};

// C = A * B.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// C = A * B^H; rides on contiguous conjugated dots in row-major layout.
ComplexMatrix matmul_abh(const ComplexMatrix& a, const ComplexMatrix& b);

// y = A * x.
std::vector<cplx> matvec(const ComplexMatrix& a, const std::vector<cplx>& x);

// sum_i x_i conj(y_i): linear in the first argument, conjugate-linear in
// the second.
cplx inner(const std::vector<cplx>& x, const std::vector<cplx>& y);

double norm(const std::vector<cplx>& x);
double norm_sq(const std::vector<cplx>& x);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace framesplit

#endif
