#include "qdm/maps.hpp"

#include <algorithm>
#include <cmath>

namespace qdm {

namespace {

constexpr double kStateTol = 1e-10;
constexpr double kConstraintTol = 1e-10;

double default_cp_tolerance(std::size_t d) {
  return 1e-9 * static_cast<double>(d);
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
  const Spectrum spec = hermitian_eig(m);
  const std::size_t n = m.dim();
  ComplexMatrix scaled(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double lambda = std::max(spec.eigenvalues[j], 0.0);
    const double root = std::sqrt(lambda);
    for (std::size_t i = 0; i < n; ++i)
      scaled(i, j) = spec.eigenvectors(i, j) * root;
  }
  return scaled * spec.eigenvectors.adjoint();
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix m, Check check)
    : matrix_(std::move(m)) {
  const double hdef = matrix_.hermiticity_defect();
  if (hdef > kStateTol)
    throw std::invalid_argument("DensityMatrix: not Hermitian (deviation " +
                                std::to_string(hdef) + ")");
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > kStateTol)
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  if (check == Check::full) {
    const Spectrum spec = hermitian_eig(matrix_);
    if (spec.eigenvalues.front() < -kStateTol)
      throw std::invalid_argument(
          "DensityMatrix: negative eigenvalue " +
          std::to_string(spec.eigenvalues.front()));
  }
}

StochasticMap::StochasticMap(std::size_t d_, ComplexMatrix matrix_)
    : d(d_), matrix(std::move(matrix_)) {
  if (matrix.dim() != d * d)
    throw std::invalid_argument("StochasticMap: matrix dim must be d^2");
}

DynamicalMap::DynamicalMap(std::size_t d_, ComplexMatrix matrix_)
    : d(d_), matrix(std::move(matrix_)) {
  if (matrix.dim() != d * d)
    throw std::invalid_argument("DynamicalMap: matrix dim must be d^2");
}

std::vector<ConstraintViolation> validate_a(const StochasticMap& map) {
  const std::size_t d = map.d;
  const ComplexMatrix& a = map.matrix;

  double trace_violation = 0.0;
  for (std::size_t a1 = 0; a1 < d; ++a1)
    for (std::size_t a2 = 0; a2 < d; ++a2) {
      Complex sum{0.0, 0.0};
      for (std::size_t b = 0; b < d; ++b)
        sum += a(b * d + b, a1 * d + a2);
      const Complex expected = (a1 == a2) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      trace_violation = std::max(trace_violation, std::abs(sum - expected));
    }

  double herm_violation = 0.0;
  for (std::size_t b1 = 0; b1 < d; ++b1)
    for (std::size_t b2 = 0; b2 < d; ++b2)
      for (std::size_t a1 = 0; a1 < d; ++a1)
        for (std::size_t a2 = 0; a2 < d; ++a2) {
          const Complex lhs = a(b1 * d + b2, a1 * d + a2);
          const Complex rhs = std::conj(a(b2 * d + b1, a2 * d + a1));
          herm_violation = std::max(herm_violation, std::abs(lhs - rhs));
        }

  std::vector<ConstraintViolation> report;
  if (trace_violation > kConstraintTol)
    report.push_back({"trace-preservation", trace_violation});
  if (herm_violation > kConstraintTol)
    report.push_back({"hermiticity-preservation", herm_violation});
  return report;
}

std::vector<ConstraintViolation> validate_b(const DynamicalMap& map) {
  const std::size_t d = map.d;
  const ComplexMatrix& b = map.matrix;

  std::vector<ConstraintViolation> report;
  const double hdef = b.hermiticity_defect();
  if (hdef > kConstraintTol) report.push_back({"hermiticity", hdef});

  const double trace_dev = std::abs(b.trace() - Complex{double(d), 0.0});
  if (trace_dev > kConstraintTol) report.push_back({"trace-d", trace_dev});

  const ComplexMatrix reduced = partial_trace(b, d, d, TraceSide::first);
  const double tp_dev = max_abs_diff(reduced, ComplexMatrix::identity(d));
  if (tp_dev > kConstraintTol)
    report.push_back({"output-partial-trace-identity", tp_dev});
  return report;
}

DensityMatrix apply(const StochasticMap& map, const DensityMatrix& rho) {
  if (rho.dim() != map.d)
    throw std::invalid_argument("apply: state dimension does not match map");
  const std::vector<Complex> out = map.matrix.apply(vec(rho.matrix()));
  return DensityMatrix(unvec(out, map.d), DensityMatrix::Check::hermitian_trace);
}

DynamicalMap a_to_b(const StochasticMap& map) {
  return DynamicalMap(map.d, realign(map.matrix));
}

StochasticMap b_to_a(const DynamicalMap& map) {
  return StochasticMap(map.d, realign(map.matrix));
}

StochasticMap compose(const StochasticMap& a2, const StochasticMap& a1) {
  if (a2.d != a1.d)
    throw std::invalid_argument("compose: dimension mismatch");
  return StochasticMap(a2.d, a2.matrix * a1.matrix);
}

StochasticMap intermediate(const StochasticMap& a_t2_0,
                           const StochasticMap& a_t1_0) {
  if (a_t2_0.d != a_t1_0.d)
    throw std::invalid_argument("intermediate: dimension mismatch");
  return StochasticMap(a_t2_0.d, a_t2_0.matrix * invert(a_t1_0.matrix));
}

CpReport cp_classify(const DynamicalMap& map, double tolerance) {
  if (tolerance <= 0.0) tolerance = default_cp_tolerance(map.d);
  const Spectrum spec = hermitian_eig(map.matrix);
  const double min_eig = spec.eigenvalues.front();
  return CpReport{spec.eigenvalues, min_eig, tolerance,
                  min_eig < -tolerance ? CpVerdict::ncp : CpVerdict::cp};
}

KrausSet kraus_from_choi(const DynamicalMap& map, double tolerance) {
  if (tolerance <= 0.0) tolerance = default_cp_tolerance(map.d);
  const Spectrum spec = hermitian_eig(map.matrix);
  if (spec.eigenvalues.front() < -tolerance)
    throw NotCompletelyPositiveError(
        "kraus_from_choi: Choi matrix has negative eigenvalue " +
        std::to_string(spec.eigenvalues.front()));

  KrausSet kraus;
  const std::size_t d = map.d;
  for (std::size_t j = 0; j < spec.eigenvalues.size(); ++j) {
    const double lambda = spec.eigenvalues[j];
    if (lambda <= 0.0) continue;  // negative tail within tolerance clips to 0
    const double root = std::sqrt(lambda);
    ComplexMatrix k(d);
    for (std::size_t b1 = 0; b1 < d; ++b1)
      for (std::size_t a1 = 0; a1 < d; ++a1)
        k(b1, a1) = root * spec.eigenvectors(b1 * d + a1, j);
    kraus.operators.push_back(std::move(k));
  }
  return kraus;
}

ComplexMatrix kraus_apply(const KrausSet& kraus, const ComplexMatrix& rho) {
  ComplexMatrix out(rho.dim());
  for (const auto& k : kraus.operators) out += k * rho * k.adjoint();
  return out;
}

double kraus_completeness_defect(const KrausSet& kraus) {
  if (kraus.operators.empty()) return 1.0;
  const std::size_t d = kraus.operators.front().dim();
  ComplexMatrix sum(d);
  for (const auto& k : kraus.operators) sum += k.adjoint() * k;
  return max_abs_diff(sum, ComplexMatrix::identity(d));
}

JamiolkowskiState jamiolkowski_state(const StochasticMap& map) {
  const DynamicalMap choi = a_to_b(map);
  const CpReport report = cp_classify(choi);
  ComplexMatrix rho = choi.matrix;
  rho *= Complex{1.0 / static_cast<double>(map.d), 0.0};
  return JamiolkowskiState{
      DensityMatrix(std::move(rho), DensityMatrix::Check::hermitian_trace),
      report.verdict == CpVerdict::cp};
}

double concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4)
    throw std::invalid_argument("concurrence: requires a two-qubit state");

  const ComplexMatrix spin_flip = kron(pauli_y(), pauli_y());
  const ComplexMatrix root = matrix_sqrt_psd(rho.matrix());
  const ComplexMatrix flipped = spin_flip * rho.matrix().conjugate() * spin_flip;
  const ComplexMatrix x = root * flipped * root;

  const Spectrum spec = hermitian_eig(x);
  // mu_i are the descending square roots of eig(rho; spin-flipped rho).
  std::vector<double> mu;
  for (double lambda : spec.eigenvalues)
    mu.push_back(std::sqrt(std::max(lambda, 0.0)));
  std::sort(mu.begin(), mu.end(), std::greater<>());
  return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

}  // namespace qdm
