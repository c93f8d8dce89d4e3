#pragma once

#include "socdc/types.hpp"

#include <vector>

namespace socdc {

// Eigenvalue sign counts of a symmetric matrix, classified against the
// relative band tol * max(1, spectral radius).
struct Inertia {
  int n_neg = 0;
  int n_zero = 0;
  int n_pos = 0;

  int dim() const { return n_neg + n_zero + n_pos; }
  bool operator==(const Inertia&) const = default;
};

// Full spectral decomposition S = Q diag(eigvals) Q^T, eigenvalues ascending.
struct Spectrum {
  Vector eigvals;  // ascending
  Matrix eigvecs;  // orthogonal, column j pairs with eigvals[j]

  // max(1, spectral radius): the scale every zero test is relative to.
  double scale() const {
    if (eigvals.size() == 0) return 1.0;
    return std::max(1.0, eigvals.cwiseAbs().maxCoeff());
  }
};

// Deterministic dense symmetric eigendecomposition.
Spectrum sym_eigen(const SymMatrix& S);

Inertia inertia(const Spectrum& sp, double tol = kDefaultTol);
Inertia inertia(const SymMatrix& S, double tol = kDefaultTol);

// Orthonormal basis of the numerical null space: eigenvectors whose
// eigenvalues fall inside the zero band. n x 0 when nonsingular.
Matrix nullspace_basis(const SymMatrix& S, double tol = kDefaultTol);

// All real eigenvalues of A0^{-1} A1, ascending, multiplicity preserved.
// An eigenvalue counts as real when |Im| <= imag_tol * (1 + |Re|); complex
// pairs are discarded. Throws when A0 is numerically singular.
std::vector<double> pencil_real_eigs(const SymMatrix& A0, const SymMatrix& A1,
                                     double tol = kDefaultTol,
                                     double imag_tol = kImagTol);

// Z^T S Z, symmetrized. Z must have orthonormal columns.
SymMatrix restricted_form(const SymMatrix& S, const Matrix& Z);

}  // namespace socdc
