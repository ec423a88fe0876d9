#include "domainkit/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace domainkit {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kPositiveTol = -1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kFrameTol = 1e-10;
// Commutation gate, scaled by the operator norms.
constexpr double kCommuteTol = 1e-8;
// Eigenvalues closer than this are clustered into one eigenspace.
constexpr double kClusterTol = 1e-9;
// A cluster boundary this close to the clustering threshold is ambiguous.
constexpr double kClusterGuard = 10.0;
// Residual allowed on off-diagonals in the joint frame.
constexpr double kJointResidual = 1e-7;

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Probabilities from a trusted source (spectra, trace pairings): clamp
// rounding-level negatives and renormalize, rejecting anything that is off
// by more than `defect`.
ClassicalState state_from_probabilities(std::vector<double> p, double defect) {
  double sum = 0.0;
  for (double& v : p) {
    if (v < 0.0) {
      if (v < -defect) raise("not-positive", "probability " + fmt(v) + " below zero");
      v = 0.0;
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > defect) {
    raise("bad-trace", "probabilities sum to " + fmt(sum));
  }
  for (double& v : p) v /= sum;
  return ClassicalState(std::move(p));
}

double commute_threshold(const CMatrix& a, const CMatrix& b) {
  return kCommuteTol * std::max(1.0, a.norm() * b.norm());
}

}  // namespace

DensityMatrix DensityMatrix::validated(CMatrix m) {
  if (m.rows() != m.cols()) raise("dimension-mismatch", "density matrix must be square");
  if (m.rows() < 2) raise("dimension-mismatch", "density matrix needs dimension >= 2");
  const double hdefect = (m - m.adjoint()).norm();
  if (hdefect > kHermitianTol * (1.0 + m.norm())) {
    raise("not-hermitian", "hermitian residual " + fmt(hdefect));
  }
  const double tdefect = std::abs(m.trace().real() - 1.0) + std::abs(m.trace().imag());
  if (tdefect > kTraceTol) {
    raise("bad-trace", "trace residual " + fmt(tdefect));
  }
  const HermitianEigen eig = hermitian_eigen(m);
  const double lowest = eig.values[m.rows() - 1];
  if (lowest < kPositiveTol) {
    raise("not-positive", "lowest eigenvalue " + fmt(lowest));
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int n) {
  if (n < 2) raise("dimension-mismatch", "density matrix needs dimension >= 2");
  return DensityMatrix(CMatrix::Identity(n, n) / static_cast<double>(n));
}

bool DensityMatrix::is_pure(double tol) const {
  // Pure iff rho^2 = rho.
  return (m_ * m_ - m_).norm() <= tol;
}

Observable Observable::from_frame(CMatrix frame) {
  if (frame.rows() != frame.cols()) raise("not-orthonormal", "frame must be square");
  if (frame.rows() < 2) raise("dimension-mismatch", "observable needs dimension >= 2");
  const double defect =
      (frame.adjoint() * frame - CMatrix::Identity(frame.rows(), frame.cols())).norm();
  if (defect > kFrameTol * (1.0 + frame.norm())) {
    raise("not-orthonormal", "unitarity residual " + fmt(defect));
  }
  return Observable(std::move(frame));
}

Observable Observable::standard(int n) {
  if (n < 2) raise("dimension-mismatch", "observable needs dimension >= 2");
  return Observable(CMatrix::Identity(n, n));
}

CMatrix Observable::as_operator() const {
  const int n = dim();
  Eigen::VectorXcd labels(n);
  for (int k = 0; k < n; ++k) labels[k] = std::complex<double>(k + 1, 0.0);
  return frame_ * labels.asDiagonal() * frame_.adjoint();
}

double commutator_norm(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    raise("dimension-mismatch", "commutator needs equal shapes");
  }
  return (a * b - b * a).norm();
}

ClassicalState spec_given_observable(const DensityMatrix& rho, const Observable& e) {
  if (rho.dim() != e.dim()) raise("dimension-mismatch", "state and observable disagree");
  const int n = rho.dim();
  std::vector<double> p(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const CVector v = e.frame().col(k);
    p[k] = (v.adjoint() * rho.matrix() * v)(0, 0).real();
  }
  return state_from_probabilities(std::move(p), 1e-10);
}

std::pair<ClassicalState, ClassicalState> aligned_spectra(const DensityMatrix& rho,
                                                          const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) raise("dimension-mismatch", "states disagree in dimension");
  const int n = rho.dim();

  HermitianEigen base = hermitian_eigen(rho.matrix());

  // Cluster the (descending) eigenvalues of rho; refuse gaps so close to the
  // clustering threshold that the partition is a guess.
  std::vector<int> cluster_start{0};
  for (int i = 1; i < n; ++i) {
    const double gap = base.values[i - 1] - base.values[i];
    if (gap > kClusterTol) {
      if (gap < kClusterGuard * kClusterTol) {
        raise("numerical-degeneracy", "eigenvalue gap " + fmt(gap) + " is ambiguous at tolerance");
      }
      cluster_start.push_back(i);
    }
  }
  cluster_start.push_back(n);

  // Re-diagonalize sigma inside every rho-eigenspace so the frame is joint.
  CMatrix frame = base.vectors;
  for (std::size_t c = 0; c + 1 < cluster_start.size(); ++c) {
    const int lo = cluster_start[c];
    const int size = cluster_start[c + 1] - lo;
    if (size < 2) continue;
    const CMatrix block =
        frame.middleCols(lo, size).adjoint() * sigma.matrix() * frame.middleCols(lo, size);
    const HermitianEigen sub = hermitian_eigen(block);
    frame.middleCols(lo, size) = frame.middleCols(lo, size) * sub.vectors;
  }

  const CMatrix rho_d = frame.adjoint() * rho.matrix() * frame;
  const CMatrix sigma_d = frame.adjoint() * sigma.matrix() * frame;
  double offdiag = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) offdiag = std::max({offdiag, std::abs(rho_d(i, j)), std::abs(sigma_d(i, j))});
    }
  }
  if (offdiag > kJointResidual) {
    raise("numerical-degeneracy", "joint frame residual " + fmt(offdiag));
  }

  std::vector<double> xs(static_cast<std::size_t>(n)), ys(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    xs[i] = rho_d(i, i).real();
    ys[i] = sigma_d(i, i).real();
  }
  return {state_from_probabilities(std::move(xs), 1e-9),
          state_from_probabilities(std::move(ys), 1e-9)};
}

bool spectral_leq(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) raise("dimension-mismatch", "states disagree in dimension");
  if (commutator_norm(rho.matrix(), sigma.matrix()) >
      commute_threshold(rho.matrix(), sigma.matrix())) {
    return false;
  }
  const auto [x, y] = aligned_spectra(rho, sigma);
  return bayesian_leq_symmetric(x, y);
}

SpectralExplanation spectral_leq_explain(const DensityMatrix& rho, const DensityMatrix& sigma) {
  SpectralExplanation e;
  e.commutator = commutator_norm(rho.matrix(), sigma.matrix());
  e.commuting = e.commutator <= commute_threshold(rho.matrix(), sigma.matrix());
  if (!e.commuting) {
    e.result = false;
    e.detail = "no commuting observable: commutator norm " + fmt(e.commutator);
    return e;
  }
  const auto [x, y] = aligned_spectra(rho, sigma);
  e.rho_spectrum = x.coords();
  e.sigma_spectrum = y.coords();
  const OrderExplanation inner = bayesian_leq_explain(x, y);
  e.result = inner.result;
  e.detail = inner.result ? "" : "aligned spectra incomparable: " + inner.detail;
  return e;
}

double von_neumann_entropy(const DensityMatrix& rho, double log_base) {
  const HermitianEigen eig = hermitian_eigen(rho.matrix());
  double h = 0.0;
  for (int i = 0; i < rho.dim(); ++i) {
    const double lambda = eig.values[i];
    if (lambda > 0.0) h -= lambda * std::log(lambda);
  }
  if (log_base > 0.0) h /= std::log(log_base);
  return h < 0.0 ? 0.0 : h;
}

MonotoneState spectrum_descending(const DensityMatrix& rho) {
  const HermitianEigen eig = hermitian_eigen(rho.matrix());
  std::vector<double> v(static_cast<std::size_t>(rho.dim()));
  for (int i = 0; i < rho.dim(); ++i) v[i] = eig.values[i];
  ClassicalState s = state_from_probabilities(std::move(v), 1e-9);
  std::vector<double> sorted = s.coords();
  std::sort(sorted.begin(), sorted.end(), std::greater<double>());
  return MonotoneState(ClassicalState(std::move(sorted)));
}

DensityMatrix diag_embedding(const ClassicalState& x) {
  const int n = x.dim();
  CMatrix m = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = std::complex<double>(std::max(0.0, x[i]), 0.0);
  return DensityMatrix::validated(std::move(m));
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector bloch_from_density(const DensityMatrix& rho) {
  if (rho.dim() != 2) raise("dimension-mismatch", "bloch coordinates need a two-level state");
  const CMatrix& m = rho.matrix();
  BlochVector r;
  r.x = 2.0 * m(0, 1).real();
  r.y = -2.0 * m(0, 1).imag();
  r.z = (m(0, 0) - m(1, 1)).real();
  return r;
}

DensityMatrix density_from_bloch(const BlochVector& r) {
  if (r.norm() > 1.0 + 1e-10) raise("out-of-ball", "|r| = " + fmt(r.norm()));
  CMatrix m(2, 2);
  m(0, 0) = std::complex<double>(0.5 * (1.0 + r.z), 0.0);
  m(1, 1) = std::complex<double>(0.5 * (1.0 - r.z), 0.0);
  m(0, 1) = std::complex<double>(0.5 * r.x, -0.5 * r.y);
  m(1, 0) = std::complex<double>(0.5 * r.x, 0.5 * r.y);
  return DensityMatrix::validated(std::move(m));
}

bool bloch_leq(const BlochVector& a, const BlochVector& b) {
  constexpr double eps = 1e-9;
  const double bb = b.x * b.x + b.y * b.y + b.z * b.z;
  if (bb <= eps * eps) {
    // b is the least element; only the least element sits below it.
    return a.norm() <= eps;
  }
  double t = (a.x * b.x + a.y * b.y + a.z * b.z) / bb;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(a.x - t * b.x) <= eps && std::abs(a.y - t * b.y) <= eps &&
         std::abs(a.z - t * b.z) <= eps;
}

ClassicalState classical_slice(const Observable& e, const DensityMatrix& rho) {
  if (rho.dim() != e.dim()) raise("dimension-mismatch", "state and observable disagree");
  const CMatrix op = e.as_operator();
  const double comm = commutator_norm(rho.matrix(), op);
  if (comm > commute_threshold(rho.matrix(), op)) {
    raise("not-commuting", "commutator norm " + fmt(comm));
  }
  return spec_given_observable(rho, e);
}

DensityMatrix sample_density(int n, Rng& rng) {
  if (n < 2) raise("dimension-mismatch", "density matrix needs dimension >= 2");
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  }
  CMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix::validated(std::move(m));
}

CMatrix sample_unitary(int n, Rng& rng) {
  CMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
  }
  // Modified Gram-Schmidt.
  for (int k = 0; k < n; ++k) {
    for (int j = 0; j < k; ++j) {
      const std::complex<double> proj = (g.col(j).adjoint() * g.col(k))(0, 0);
      g.col(k) -= proj * g.col(j);
    }
    g.col(k) /= g.col(k).norm();
  }
  return g;
}

std::pair<DensityMatrix, DensityMatrix> sample_comparable_density_pair(int n, Rng& rng) {
  const CMatrix u = sample_unitary(n, rng);
  const auto [x, y] = sample_comparable_pair(n, rng);
  auto conjugate = [&](const ClassicalState& s) {
    CMatrix d = CMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = std::complex<double>(s[i], 0.0);
    return DensityMatrix::validated(u * d * u.adjoint());
  };
  return {conjugate(x), conjugate(y)};
}

Measurement<DensityMatrix> von_neumann_measurement() {
  return {"von-neumann",
          [](const DensityMatrix& rho) { return von_neumann_entropy(rho); },
          [](const DensityMatrix& a, const DensityMatrix& b) { return spectral_leq(a, b); }};
}

}  // namespace domainkit
