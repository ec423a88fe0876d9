#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "domainkit/jacobi.hpp"
#include "domainkit/measurement.hpp"
#include "domainkit/rng.hpp"
#include "domainkit/simplex.hpp"

namespace domainkit {

// Mixed quantum state: Hermitian, positive, unit-trace operator. Validation
// names the violated invariant ("not-hermitian", "not-positive",
// "bad-trace") together with the residual magnitude.
class DensityMatrix {
 public:
  static DensityMatrix validated(CMatrix m);
  static DensityMatrix maximally_mixed(int n);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  bool is_pure(double tol = 1e-8) const;

 private:
  explicit DensityMatrix(CMatrix m) : m_(std::move(m)) {}
  CMatrix m_;
};

// Non-degenerate observable presented by its orthonormal eigenframe; the
// outcome labels are the frame column numbers 1..n.
class Observable {
 public:
  static Observable from_frame(CMatrix frame);  // raises "not-orthonormal"
  static Observable standard(int n);

  int dim() const { return static_cast<int>(frame_.rows()); }
  const CMatrix& frame() const { return frame_; }
  // frame · diag(1..n) · frame^*
  CMatrix as_operator() const;

 private:
  explicit Observable(CMatrix frame) : frame_(std::move(frame)) {}
  CMatrix frame_;
};

// Frobenius norm of ab - ba.
double commutator_norm(const CMatrix& a, const CMatrix& b);

// Outcome distribution of measuring e on rho: (tr(p_k rho))_k over the
// frame's rank-one projections.
ClassicalState spec_given_observable(const DensityMatrix& rho, const Observable& e);

// Spectra of rho and sigma read in a joint eigenframe, aligned index by
// index. Only defined for (numerically) commuting pairs; raises
// "numerical-degeneracy" when eigenvalue clustering cannot be certified.
std::pair<ClassicalState, ClassicalState> aligned_spectra(const DensityMatrix& rho,
                                                          const DensityMatrix& sigma);

// The spectral order: rho ⊑ sigma iff some observable commutes with both and
// the induced outcome distributions compare in the Bayesian order. Commuting
// is checked first (necessary); the observable's labeling freedom is handled
// by the permutation search inside the Bayesian decider.
bool spectral_leq(const DensityMatrix& rho, const DensityMatrix& sigma);

struct SpectralExplanation {
  bool result = false;
  bool commuting = false;
  double commutator = 0.0;
  std::vector<double> rho_spectrum;    // aligned
  std::vector<double> sigma_spectrum;  // aligned
  std::string detail;
};
SpectralExplanation spectral_leq_explain(const DensityMatrix& rho, const DensityMatrix& sigma);

// Entropy of the spectrum, in nats by default.
double von_neumann_entropy(const DensityMatrix& rho, double log_base = 0.0);

// Spectrum rearranged into descending order.
MonotoneState spectrum_descending(const DensityMatrix& rho);

// Diagonal embedding of a classical state in the standard frame. Preserves
// and reflects the order and conserves entropy.
DensityMatrix diag_embedding(const ClassicalState& x);

// Point in the unit ball of R^3 describing a two-level state. Axis
// convention: diag(1,0) maps to (0,0,1).
struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double norm() const;
};

BlochVector bloch_from_density(const DensityMatrix& rho);  // n = 2 only
DensityMatrix density_from_bloch(const BlochVector& r);    // raises "out-of-ball"

// a ⊑ b iff a lies on the segment from the origin to b.
bool bloch_leq(const BlochVector& a, const BlochVector& b);

// Outcome distribution of rho on the commuting slice of e; raises
// "not-commuting" when [rho, e] is not numerically zero. On that slice the
// map is an order isomorphism onto the classical states.
ClassicalState classical_slice(const Observable& e, const DensityMatrix& rho);

// Haar-ish random state GG*/tr(GG*) from a complex Gaussian G.
DensityMatrix sample_density(int n, Rng& rng);

// Random unitary via Gram-Schmidt on a complex Gaussian matrix.
CMatrix sample_unitary(int n, Rng& rng);

// A pair (rho, sigma) with rho ⊑ sigma by construction: a comparable
// classical pair conjugated into a shared random eigenframe.
std::pair<DensityMatrix, DensityMatrix> sample_comparable_density_pair(int n, Rng& rng);

Measurement<DensityMatrix> von_neumann_measurement();

}  // namespace domainkit
