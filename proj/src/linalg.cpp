#include "qincompat/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qincompat::linalg {

namespace {
constexpr int kMaxKronDim = 4096;
constexpr double kHermTol = 1e-9;
}  // namespace

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference: shape mismatch");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& v : a_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product: shape mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0, 0)) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const long long rr = static_cast<long long>(a.rows()) * b.rows();
  const long long cc = static_cast<long long>(a.cols()) * b.cols();
  if (rr > kMaxKronDim || cc > kMaxKronDim)
    throw SizeLimit("kron: result dimension exceeds limit of 4096");
  ComplexMatrix c(static_cast<int>(rr), static_cast<int>(cc));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0, 0)) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return c;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int d_left, int d_right, Side side) {
  if (m.rows() != m.cols() || m.rows() != d_left * d_right)
    throw ShapeError("partial_trace: matrix is not square with rows == d_left*d_right");
  if (side == Side::Right) {
    ComplexMatrix r(d_left, d_left);
    for (int i = 0; i < d_left; ++i)
      for (int j = 0; j < d_left; ++j) {
        Complex s = 0;
        for (int k = 0; k < d_right; ++k) s += m(i * d_right + k, j * d_right + k);
        r(i, j) = s;
      }
    return r;
  }
  ComplexMatrix r(d_right, d_right);
  for (int k = 0; k < d_right; ++k)
    for (int l = 0; l < d_right; ++l) {
      Complex s = 0;
      for (int i = 0; i < d_left; ++i) s += m(i * d_right + k, i * d_right + l);
      r(k, l) = s;
    }
  return r;
}

ComplexMatrix transpose_in_basis(const ComplexMatrix& m) {
  ComplexMatrix t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(j, i) = std::conj(m(i, j));
  return t;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
  ComplexMatrix t(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(i, j) = std::conj(m(i, j));
  return t;
}

Complex trace(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("trace: matrix not square");
  Complex s = 0;
  for (int i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("hs_inner: shape mismatch");
  Complex s = 0;
  for (size_t i = 0; i < a.data().size(); ++i) s += std::conj(a.data()[i]) * b.data()[i];
  return s;
}

double max_abs(const ComplexMatrix& m) {
  double r = 0;
  for (const auto& v : m.data()) r = std::max(r, std::abs(v));
  return r;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("hermiticity_defect: matrix not square");
  double d = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j)
      d = std::max(d, std::abs(m(i, j) - std::conj(m(j, i))));
  return d;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("hermitize: matrix not square");
  ComplexMatrix h(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) h(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return h;
}

namespace {

// One cyclic Jacobi pass over the strict upper triangle. Returns the largest
// off-diagonal magnitude seen before rotating it away.
double jacobi_sweep(ComplexMatrix& a, ComplexMatrix& v) {
  const int n = a.rows();
  double off = 0;
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const Complex apq = a(p, q);
      const double abs_apq = std::abs(apq);
      off = std::max(off, abs_apq);
      if (abs_apq == 0.0) continue;
      const double app = a(p, p).real();
      const double aqq = a(q, q).real();
      // Diagonalize the 2x2 principal submatrix [[app, apq],[conj(apq), aqq]]
      // with the unitary J = [[c, s*e^{i phi}], [-s*e^{-i phi}, c]].
      const Complex phase = apq / abs_apq;
      const double theta = 0.5 * std::atan2(2.0 * abs_apq, aqq - app);
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      const Complex sp = s * phase;         // s*e^{i phi}
      const Complex sm = s * std::conj(phase);  // s*e^{-i phi}
      // Columns: A <- A J.
      for (int i = 0; i < n; ++i) {
        const Complex aip = a(i, p), aiq = a(i, q);
        a(i, p) = c * aip - sm * aiq;
        a(i, q) = sp * aip + c * aiq;
      }
      // Rows: A <- J^dag A.
      for (int j = 0; j < n; ++j) {
        const Complex apj = a(p, j), aqj = a(q, j);
        a(p, j) = c * apj - sp * aqj;
        a(q, j) = sm * apj + c * aqj;
      }
      for (int i = 0; i < n; ++i) {
        const Complex vip = v(i, p), viq = v(i, q);
        v(i, p) = c * vip - sm * viq;
        v(i, q) = sp * vip + c * viq;
      }
    }
  }
  return off;
}

}  // namespace

EigenDecomposition hermitian_eigs(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("hermitian_eigs: matrix not square");
  const double scale = std::max(1.0, max_abs(m));
  if (hermiticity_defect(m) > kHermTol * scale)
    throw NotHermitian("hermitian_eigs: input not Hermitian within tolerance");

  const int n = m.rows();
  ComplexMatrix a = hermitize(m);
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double tol = 1e-14 * std::max(1.0, max_abs(a));
  for (int sweep = 0; sweep < 100; ++sweep) {
    const double off = jacobi_sweep(a, v);
    if (off <= tol) break;
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) diag[i] = a(i, i).real();
  std::sort(order.begin(), order.end(), [&](int x, int y) { return diag[x] > diag[y]; });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = diag[order[k]];
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  // Eigenvalues of m^dag m, clamped at zero before the square root.
  const ComplexMatrix g = adjoint(m) * m;
  auto eig = hermitian_eigs(g);
  std::vector<double> s(eig.eigenvalues.size());
  for (size_t i = 0; i < s.size(); ++i) s[i] = std::sqrt(std::max(0.0, eig.eigenvalues[i]));
  return s;
}

double operator_norm(const ComplexMatrix& m) {
  auto s = singular_values(m);
  return s.empty() ? 0.0 : s.front();
}

double trace_norm(const ComplexMatrix& m) {
  auto s = singular_values(m);
  double t = 0;
  for (double v : s) t += v;
  return t;
}

bool psd_check(const ComplexMatrix& m, double tol) {
  auto eig = hermitian_eigs(hermitize(m));
  return eig.eigenvalues.empty() || eig.eigenvalues.back() >= -tol;
}

}  // namespace qincompat::linalg
