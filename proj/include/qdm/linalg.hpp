#pragma once

#include <stdexcept>
#include <vector>

#include "qdm/complex_matrix.hpp"

namespace qdm {

/// Raised by invert() when a pivot falls below the relative threshold
/// 1e-12 * max|m_ij|. For the map pipeline this signals that the map at the
/// earlier time is not invertible (a zero of the noise profile).
class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending, columns
/// of `eigenvectors` are the matching orthonormal eigenvectors.
struct Spectrum {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// The input must be Hermitian to 1e-10 (max abs deviation); it is
/// symmetrized before the sweep loop. Convergence: off-diagonal Frobenius
/// norm < 1e-13 * ||m||_F, at most 100 sweeps.
Spectrum hermitian_eig(const ComplexMatrix& m);

/// Gauss-Jordan inversion with partial pivoting. Throws SingularMatrixError
/// when a pivot magnitude drops below 1e-12 * max|m_ij|.
ComplexMatrix invert(const ComplexMatrix& m);

/// U = exp(-i h t) for Hermitian h, computed through hermitian_eig.
ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix& h, double t);

}  // namespace qdm
