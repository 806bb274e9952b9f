#pragma once

#include <complex>
#include <vector>

#include "tcue/rng.hpp"

// Dense complex linear algebra for the Haar-truncation sampler: Ginibre fill,
// Householder QR with the diagonal phase fix that makes the factor exactly
// Haar distributed, and a self-contained nonsymmetric eigensolver
// (unitary-similarity Hessenberg reduction + Wilkinson-shifted QR iteration)
// validated through trace identities rather than an external reference.

namespace tcue::linalg {

using cplx = std::complex<double>;

class CMat {
 public:
  CMat() = default;
  CMat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static CMat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

 private:
  int r_ = 0, c_ = 0;
  std::vector<cplx> a_;
};

// n x n matrix of iid standard complex Gaussians (re, im ~ N(0, 1/2)).
CMat ginibre(int n, rng::Substream& g);

// Haar-distributed unitary: QR of a Ginibre matrix, each column of Q rotated
// by the unit phase of the corresponding R diagonal entry.
CMat haar_unitary(int n, rng::Substream& g);

CMat top_left_block(const CMat& u, int p);

// max_ij |(U* U - I)_ij|.
double unitary_defect(const CMat& u);

struct EigenResult {
  std::vector<cplx> eigenvalues;
  double residual_trace = 0;   // |sum lambda - tr A|
  double residual_trace2 = 0;  // |sum lambda^2 - tr A^2|
  bool converged = true;
};

// All eigenvalues of a general complex matrix. Gives up (converged = false)
// after 30 n QR sweeps.
EigenResult complex_eigenvalues(const CMat& a);

// LU with partial pivoting; test oracle for the eigenvalue product.
cplx determinant(CMat a);

}  // namespace tcue::linalg
