#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdm/complex_matrix.hpp"
#include "qdm/linalg.hpp"

namespace qdm {

class NotCompletelyPositiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unit-trace Hermitian state. The default construction path also checks
/// positive semidefiniteness (smallest eigenvalue >= -1e-10); library
/// internals that legitimately produce indefinite objects (outputs of NCP
/// maps, pseudo-states) skip that check.
class DensityMatrix {
 public:
  enum class Check { full, hermitian_trace };

  explicit DensityMatrix(ComplexMatrix m, Check check = Check::full);

  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t dim() const { return matrix_.dim(); }

 private:
  ComplexMatrix matrix_;
};

/// Stochastic map: d^2 x d^2 matrix acting on the row-major vectorized
/// state, vec(rho') = A vec(rho). Construction checks dimensions only;
/// validate_a() reports the trace/hermiticity-preservation constraints.
struct StochasticMap {
  StochasticMap(std::size_t d, ComplexMatrix matrix);

  std::size_t d;
  ComplexMatrix matrix;
};

/// Dynamical map (Choi matrix): realignment of a stochastic map. Hermitian
/// with trace d when the map preserves trace and hermiticity; positive
/// semidefinite exactly when the map is completely positive. Intermediate
/// maps may carry negative eigenvalues, so PSD is never enforced here.
struct DynamicalMap {
  DynamicalMap(std::size_t d, ComplexMatrix matrix);

  std::size_t d;
  ComplexMatrix matrix;
};

struct ConstraintViolation {
  std::string constraint;
  double magnitude;
};

/// Checks the stochastic-map constraints
///   sum_b A[(b,b),(a1,a2)] = delta_{a1 a2}        (trace preservation)
///   A[(b1,b2),(a1,a2)] = conj(A[(b2,b1),(a2,a1)]) (hermiticity preservation)
/// and returns one entry per constraint violated beyond 1e-10.
std::vector<ConstraintViolation> validate_a(const StochasticMap& map);

/// Checks the dynamical-map constraints: hermiticity, trace d, and partial
/// trace over the output (first) index equal to the identity, all to 1e-10.
std::vector<ConstraintViolation> validate_b(const DynamicalMap& map);

/// vec(rho') = A vec(rho). PSD of the output is deliberately not enforced:
/// NCP maps produce indefinite outputs and callers inspect them.
DensityMatrix apply(const StochasticMap& map, const DensityMatrix& rho);

DynamicalMap a_to_b(const StochasticMap& map);
StochasticMap b_to_a(const DynamicalMap& map);

/// Composition of stochastic maps is plain matrix multiplication;
/// compose(a2, a1) applies a1 first.
StochasticMap compose(const StochasticMap& a2, const StochasticMap& a1);

/// Intermediate map A(t2,t1) = A(t2,0) A(t1,0)^{-1}. Throws
/// SingularMatrixError when the earlier map is not invertible.
StochasticMap intermediate(const StochasticMap& a_t2_0,
                           const StochasticMap& a_t1_0);

enum class CpVerdict { cp, ncp };

struct CpReport {
  std::vector<double> eigenvalues;  // ascending
  double min_eigenvalue;
  double tolerance;
  CpVerdict verdict;
};

/// Full Choi spectrum plus the CP/NCP verdict: NCP iff the smallest
/// eigenvalue is below -tolerance. tolerance <= 0 selects the default
/// 1e-9 * d.
CpReport cp_classify(const DynamicalMap& map, double tolerance = 0.0);

struct KrausSet {
  std::vector<ComplexMatrix> operators;
};

/// Kraus operators K_i = sqrt(lambda_i) unvec(v_i) from the Choi
/// eigendecomposition. Eigenvalues in [-tolerance, 0) are clipped to zero;
/// anything below throws NotCompletelyPositiveError.
KrausSet kraus_from_choi(const DynamicalMap& map, double tolerance = 0.0);

ComplexMatrix kraus_apply(const KrausSet& kraus, const ComplexMatrix& rho);

/// max |sum_i K_i^dag K_i - I|
double kraus_completeness_defect(const KrausSet& kraus);

/// State-side view of a map: rho_ab = B/d on the output x input composite.
/// NCP maps give indefinite pseudo-states; they are returned and flagged
/// rather than rejected, since inspecting their negativity is the point.
struct JamiolkowskiState {
  DensityMatrix state;
  bool completely_positive;
};

JamiolkowskiState jamiolkowski_state(const StochasticMap& map);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix& rho);

}  // namespace qdm
