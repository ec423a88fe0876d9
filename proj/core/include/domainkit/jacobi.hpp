#pragma once

#include <Eigen/Dense>

namespace domainkit {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

struct HermitianEigen {
  Eigen::VectorXd values;  // descending
  CMatrix vectors;         // unitary, column k pairs with values[k]
};

// Cyclic Jacobi diagonalization for Hermitian matrices. Sweeps Givens-style
// complex rotations until the off-diagonal Frobenius mass falls below
// off_tol * (1 + ||a||_F). Intended for the small dimensions this library
// works at (n <= 16 in tests).
HermitianEigen hermitian_eigen(const CMatrix& a, double off_tol = 1e-12, int max_sweeps = 64);

}  // namespace domainkit
