#include "domainkit/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <vector>

#include "domainkit/errors.hpp"

namespace domainkit {

namespace {

double offdiagonal_norm(const CMatrix& a) {
  double mass = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i != j) mass += std::norm(a(i, j));
    }
  }
  return std::sqrt(mass);
}

}  // namespace

HermitianEigen hermitian_eigen(const CMatrix& a, double off_tol, int max_sweeps) {
  if (a.rows() != a.cols()) raise("dimension-mismatch", "matrix must be square");
  const Eigen::Index n = a.rows();
  const double hermitian_defect = (a - a.adjoint()).norm();
  if (hermitian_defect > 1e-10 * (1.0 + a.norm())) {
    raise("not-hermitian", "hermitian defect " + std::to_string(hermitian_defect));
  }

  CMatrix m = 0.5 * (a + a.adjoint());  // symmetrize away rounding noise
  CMatrix v = CMatrix::Identity(n, n);
  const double threshold = off_tol * (1.0 + m.norm());

  int sweep = 0;
  while (offdiagonal_norm(m) > threshold) {
    if (++sweep > max_sweeps) {
      raise("no-convergence", "jacobi sweeps exhausted at off-diagonal mass " +
                                  std::to_string(offdiagonal_norm(m)));
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const std::complex<double> apq = m(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        // Rotation angle from the 2x2 block; the phase of a_pq moves into
        // the rotation so the block becomes real before it is zeroed. The
        // zeroing condition is t^2 - 2*tau*t - 1 = 0; take the small root.
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const std::complex<double> phase = apq / mag;
        const std::complex<double> sp = s * phase;             // U(p,q) = -sp
        const std::complex<double> spc = s * std::conj(phase);  // U(q,p) = +spc

        // m <- U^* m U with U the identity outside the (p,q) plane.
        for (Eigen::Index i = 0; i < n; ++i) {
          const std::complex<double> mip = m(i, p);
          const std::complex<double> miq = m(i, q);
          m(i, p) = c * mip + spc * miq;
          m(i, q) = -sp * mip + c * miq;
        }
        for (Eigen::Index j = 0; j < n; ++j) {
          const std::complex<double> mpj = m(p, j);
          const std::complex<double> mqj = m(q, j);
          m(p, j) = c * mpj + sp * mqj;
          m(q, j) = -spc * mpj + c * mqj;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
          const std::complex<double> vip = v(i, p);
          const std::complex<double> viq = v(i, q);
          v(i, p) = c * vip + spc * viq;
          v(i, q) = -sp * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return m(i, i).real() > m(j, j).real(); });

  HermitianEigen result;
  result.values.resize(n);
  result.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    result.values[k] = m(order[k], order[k]).real();
    result.vectors.col(k) = v.col(order[k]);
  }
  return result;
}

}  // namespace domainkit
