#include "ipent/complex_matrix.hpp"

#include <cmath>
#include <utility>

#include "ipent/error.hpp"

namespace ipent {

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            raise(Errc::DimensionMismatch, "ragged initializer for ComplexMatrix");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m = *this;
    for (auto& z : m.entries_) z = std::conj(z);
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = std::conj((*this)(r, c));
    return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        raise(Errc::DimensionMismatch, "matrix addition shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        raise(Errc::DimensionMismatch, "matrix subtraction shape mismatch");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& z : entries_) z *= scalar;
    return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) raise(Errc::DimensionMismatch, "matrix product shape mismatch");
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex a = (*this)(r, k);
            if (a == Complex(0.0, 0.0)) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
        }
    }
    return out;
}

std::vector<Complex> ComplexMatrix::apply(const std::vector<Complex>& v) const {
    if (cols_ != v.size()) raise(Errc::DimensionMismatch, "matrix-vector shape mismatch");
    std::vector<Complex> out(rows_, Complex(0.0, 0.0));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
}

std::vector<Complex> ComplexMatrix::column(std::size_t c) const {
    std::vector<Complex> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
}

void ComplexMatrix::set_column(std::size_t c, const std::vector<Complex>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

void ComplexMatrix::scale_column(std::size_t c, Complex factor) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) *= factor;
}

void ComplexMatrix::swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

double ComplexMatrix::frobenius_norm() const {
    double sq = 0.0;
    for (const auto& z : entries_) sq += std::norm(z);
    return std::sqrt(sq);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

double symmetric_deviation(const ComplexMatrix& m) { return (m - m.transpose()).frobenius_norm(); }

double antisymmetric_deviation(const ComplexMatrix& m) {
    return (m + m.transpose()).frobenius_norm();
}

double hermitian_deviation(const ComplexMatrix& m) { return (m - m.adjoint()).frobenius_norm(); }

double unitarity_deviation(const ComplexMatrix& m) {
    return (m.adjoint() * m - ComplexMatrix::identity(m.cols())).frobenius_norm();
}

}  // namespace ipent
