#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qdm {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major storage.
///
/// Index convention used throughout the library: the entry pair (i, j) of a
/// d-dimensional operator is flattened to i * d + j, both for vectorized
/// states and for the composite row/column labels of superoperators.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<Complex>& diag);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) {
    return entries_[i * dim_ + j];
  }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * dim_ + j];
  }

  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix conjugate() const;
  ComplexMatrix transpose() const;

  Complex trace() const;
  double max_abs() const;
  double frobenius_norm() const;
  /// max_ij |m(i,j) - conj(m(j,i))|
  double hermiticity_defect() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
  }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) {
    a *= s;
    return a;
  }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) {
    a *= s;
    return a;
  }

  /// Matrix product. Rows of the left factor with many exact zeros are
  /// skipped, so products with diagonal/permutation operators stay O(n^2).
  friend ComplexMatrix operator*(const ComplexMatrix& a,
                                 const ComplexMatrix& b);

  /// Matrix-vector product on a flattened (row-major) vector.
  std::vector<Complex> apply(const std::vector<Complex>& v) const;

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product: (a ⊗ b)[(i*db+k),(j*db+l)] = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class TraceSide { first, second };

/// Partial trace of an operator on a dim_first ⊗ dim_second space over the
/// selected tensor factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_first,
                            std::size_t dim_second, TraceSide which);

/// Index realignment between the stochastic (A) and dynamical (B) forms of a
/// map on a d-dimensional system:
///
///   out[(b1*d + a1), (b2*d + a2)] = m[(b1*d + b2), (a1*d + a2)]
///
/// The input must be d^2-dimensional. realign is an involution.
ComplexMatrix realign(const ComplexMatrix& m);

/// Row-major flattening of a matrix: vec(m)[i*d + j] = m(i, j).
std::vector<Complex> vec(const ComplexMatrix& m);
ComplexMatrix unvec(const std::vector<Complex>& v, std::size_t dim);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace qdm
