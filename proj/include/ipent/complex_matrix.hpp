#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace ipent {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. The single workhorse type for coefficient
/// matrices, unitaries, canonical-form factors and one-body operators.
/// Everything in this project stays small (N <= 64), so no effort is spent on
/// blocking or sparsity.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_ && rows_ > 0; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scalar);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scalar) { return lhs *= scalar; }
    friend ComplexMatrix operator*(Complex scalar, ComplexMatrix rhs) { return rhs *= scalar; }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;

    /// Matrix-vector product.
    std::vector<Complex> apply(const std::vector<Complex>& v) const;

    /// Returns a copy of column c.
    std::vector<Complex> column(std::size_t c) const;
    void set_column(std::size_t c, const std::vector<Complex>& v);
    void scale_column(std::size_t c, Complex factor);
    void swap_columns(std::size_t a, std::size_t b);

    double frobenius_norm() const;
    double max_abs() const;
    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

// Structure deviations used by the symmetry checks; all Frobenius norms.
double symmetric_deviation(const ComplexMatrix& m);      // ||M - M^T||
double antisymmetric_deviation(const ComplexMatrix& m);  // ||M + M^T||
double hermitian_deviation(const ComplexMatrix& m);      // ||M - M^dag||
double unitarity_deviation(const ComplexMatrix& m);      // ||M^dag M - 1||

}  // namespace ipent
