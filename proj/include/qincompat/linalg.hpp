#ifndef QINCOMPAT_LINALG_HPP
#define QINCOMPAT_LINALG_HPP

#include <complex>
#include <vector>

#include "qincompat/errors.hpp"

namespace qincompat::linalg {

using Complex = std::complex<double>;

// Dense complex matrix, row-major. The universal carrier for states,
// effects and Choi operators throughout the library.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Complex(0, 0)) {
    if (rows <= 0 || cols <= 0) throw ShapeError("matrix dimensions must be positive");
  }

  static ComplexMatrix zero(int rows, int cols) { return ComplexMatrix(rows, cols); }
  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Complex& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  const std::vector<Complex>& data() const { return a_; }
  std::vector<Complex>& data() { return a_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  bool all_finite() const;

 private:
  int rows_, cols_;
  std::vector<Complex> a_;
};

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // sorted descending
  ComplexMatrix eigenvectors;       // columns orthonormal, matched to eigenvalues
};

enum class Side { Left, Right };

// a (x) b with a as the slow (left) tensor factor.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Partial trace of a square matrix on a bipartite space of dimensions
// dLeft*dRight. Side::Right traces out the right factor (result dLeft x dLeft),
// Side::Left traces out the left factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, int d_left, int d_right, Side side);

// Entrywise transpose in the fixed computational basis (no conjugation).
ComplexMatrix transpose_in_basis(const ComplexMatrix& m);

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

// Tr[a^dag b]
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

double max_abs(const ComplexMatrix& m);
double hermiticity_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol);

// (m + m^dag)/2
ComplexMatrix hermitize(const ComplexMatrix& m);

// Cyclic Jacobi on the symmetrized input. Throws NotHermitian when the
// asymmetry exceeds 1e-9 relative to the matrix scale.
EigenDecomposition hermitian_eigs(const ComplexMatrix& m);

// Largest singular value (max |eigenvalue| for Hermitian input).
double operator_norm(const ComplexMatrix& m);

// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

// True iff the minimum eigenvalue of the symmetrized input is >= -tol.
bool psd_check(const ComplexMatrix& m, double tol);

// All singular values, descending (shared backend of the two norms).
std::vector<double> singular_values(const ComplexMatrix& m);

}  // namespace qincompat::linalg

#endif
