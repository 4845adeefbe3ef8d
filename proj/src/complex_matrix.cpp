#include "qdm/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qdm {

namespace {

void check_finite(const std::vector<Complex>& entries) {
  for (const auto& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::invalid_argument("ComplexMatrix: non-finite entry");
    }
  }
}

std::size_t checked_dim(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("ComplexMatrix: dim must be > 0");
  return dim;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim)
    : dim_(checked_dim(dim)), entries_(dim * dim, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(checked_dim(dim)), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument("ComplexMatrix: entry count " +
                                std::to_string(entries_.size()) +
                                " does not match dim^2");
  }
  check_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& diag) {
  ComplexMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  check_finite(m.entries_);
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = std::conj(entries_[i]);
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (other.dim_ != dim_)
    throw std::invalid_argument("matrix add: dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (other.dim_ != dim_)
    throw std::invalid_argument("matrix subtract: dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& z : entries_) z *= scalar;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_)
    throw std::invalid_argument("matrix product: dimension mismatch");
  const std::size_t n = a.dim_;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a(i, k);
      if (aik.real() == 0.0 && aik.imag() == 0.0) continue;
      const Complex* brow = &b.entries_[k * n];
      Complex* orow = &out.entries_[i * n];
      for (std::size_t j = 0; j < n; ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

std::vector<Complex> ComplexMatrix::apply(
    const std::vector<Complex>& v) const {
  if (v.size() != dim_)
    throw std::invalid_argument("matrix-vector product: dimension mismatch");
  std::vector<Complex> out(dim_, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < dim_; ++i) {
    Complex acc{0.0, 0.0};
    const Complex* row = &entries_[i * dim_];
    for (std::size_t j = 0; j < dim_; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("max_abs_diff: dimension mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
  return d;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      const Complex aij = a(i, j);
      if (aij.real() == 0.0 && aij.imag() == 0.0) continue;
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          out(i * db + k, j * db + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_first,
                            std::size_t dim_second, TraceSide which) {
  if (dim_first * dim_second != m.dim())
    throw std::invalid_argument(
        "partial_trace: factor dimensions do not match matrix");
  if (which == TraceSide::first) {
    ComplexMatrix out(dim_second);
    for (std::size_t k = 0; k < dim_second; ++k)
      for (std::size_t l = 0; l < dim_second; ++l) {
        Complex acc{0.0, 0.0};
        for (std::size_t i = 0; i < dim_first; ++i)
          acc += m(i * dim_second + k, i * dim_second + l);
        out(k, l) = acc;
      }
    return out;
  }
  ComplexMatrix out(dim_first);
  for (std::size_t i = 0; i < dim_first; ++i)
    for (std::size_t j = 0; j < dim_first; ++j) {
      Complex acc{0.0, 0.0};
      for (std::size_t k = 0; k < dim_second; ++k)
        acc += m(i * dim_second + k, j * dim_second + k);
      out(i, j) = acc;
    }
  return out;
}

ComplexMatrix realign(const ComplexMatrix& m) {
  const std::size_t dim = m.dim();
  const auto d = static_cast<std::size_t>(std::lround(std::sqrt(double(dim))));
  if (d * d != dim)
    throw std::invalid_argument("realign: dimension is not a perfect square");
  ComplexMatrix out(dim);
  for (std::size_t b1 = 0; b1 < d; ++b1)
    for (std::size_t b2 = 0; b2 < d; ++b2)
      for (std::size_t a1 = 0; a1 < d; ++a1)
        for (std::size_t a2 = 0; a2 < d; ++a2)
          out(b1 * d + a1, b2 * d + a2) = m(b1 * d + b2, a1 * d + a2);
  return out;
}

std::vector<Complex> vec(const ComplexMatrix& m) { return m.entries(); }

ComplexMatrix unvec(const std::vector<Complex>& v, std::size_t dim) {
  if (v.size() != dim * dim)
    throw std::invalid_argument("unvec: vector length does not match dim^2");
  return ComplexMatrix(dim, v);
}

ComplexMatrix pauli_x() {
  return ComplexMatrix(2, {{0, 0}, {1, 0}, {1, 0}, {0, 0}});
}

ComplexMatrix pauli_y() {
  return ComplexMatrix(2, {{0, 0}, {0, -1}, {0, 1}, {0, 0}});
}

ComplexMatrix pauli_z() {
  return ComplexMatrix(2, {{1, 0}, {0, 0}, {0, 0}, {-1, 0}});
}

}  // namespace qdm
