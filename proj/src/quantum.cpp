#include "qincompat/quantum.hpp"

#include <cmath>
#include <random>

namespace qincompat::quantum {

using linalg::adjoint;
using linalg::hermitize;
using linalg::hs_inner;
using linalg::is_hermitian;
using linalg::kron;
using linalg::max_abs;
using linalg::partial_trace;
using linalg::psd_check;
using linalg::Side;
using linalg::trace;
using linalg::transpose_in_basis;

namespace {
constexpr double kObjTol = 1e-8;

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> l(n);
  for (int i = 0; i < n; ++i) l[i] = std::to_string(i);
  return l;
}
}  // namespace

Povm::Povm(int d, std::vector<ComplexMatrix> eff, std::vector<std::string> lab)
    : dim(d), effects(std::move(eff)), labels(std::move(lab)) {
  if (labels.empty()) labels = default_labels(outcomes());
  validate();
}

void Povm::validate() const {
  if (dim <= 0) throw ValidationError("positive dimension", static_cast<double>(dim));
  if (effects.empty()) throw ValidationError("nonempty effect list", 0.0);
  if (labels.size() != effects.size())
    throw ValidationError("label count matches effects",
                          static_cast<double>(labels.size()) - static_cast<double>(effects.size()));
  ComplexMatrix sum(dim, dim);
  for (const auto& e : effects) {
    if (e.rows() != dim || e.cols() != dim)
      throw ValidationError("effect shape", static_cast<double>(e.rows() - dim));
    const double defect = linalg::hermiticity_defect(e);
    if (defect > kObjTol) throw ValidationError("effect hermiticity", defect);
    if (!psd_check(e, kObjTol)) {
      auto eig = linalg::hermitian_eigs(hermitize(e));
      throw ValidationError("effect positivity", -eig.eigenvalues.back());
    }
    sum += e;
  }
  sum -= ComplexMatrix::identity(dim);
  const double completeness = max_abs(sum);
  if (completeness > kObjTol) throw ValidationError("completeness", completeness);
}

ChoiChannel::ChoiChannel(int din, int dout, ComplexMatrix c)
    : dim_in(din), dim_out(dout), choi(std::move(c)) {
  validate();
}

void ChoiChannel::validate() const {
  if (dim_in <= 0 || dim_out <= 0)
    throw ValidationError("positive dimensions", static_cast<double>(dim_in));
  const int n = dim_out * dim_in;
  if (choi.rows() != n || choi.cols() != n)
    throw ValidationError("choi shape", static_cast<double>(choi.rows() - n));
  const double defect = linalg::hermiticity_defect(choi);
  if (defect > kObjTol) throw ValidationError("choi hermiticity", defect);
  if (!psd_check(choi, kObjTol)) {
    auto eig = linalg::hermitian_eigs(hermitize(choi));
    throw ValidationError("choi positivity", -eig.eigenvalues.back());
  }
  ComplexMatrix tp = partial_trace(choi, dim_out, dim_in, Side::Left);
  tp -= ComplexMatrix::identity(dim_in);
  const double res = max_abs(tp);
  if (res > kObjTol) throw ValidationError("trace preservation", res);
}

JointChannel::JointChannel(int din, int dout1, int dout2, ComplexMatrix c)
    : dim_in(din), dim_out1(dout1), dim_out2(dout2), choi(std::move(c)) {
  validate();
}

void JointChannel::validate() const {
  if (dim_in <= 0 || dim_out1 <= 0 || dim_out2 <= 0)
    throw ValidationError("positive dimensions", static_cast<double>(dim_in));
  const int n = dim_out1 * dim_out2 * dim_in;
  if (choi.rows() != n || choi.cols() != n)
    throw ValidationError("choi shape", static_cast<double>(choi.rows() - n));
  const double defect = linalg::hermiticity_defect(choi);
  if (defect > kObjTol) throw ValidationError("choi hermiticity", defect);
  if (!psd_check(choi, kObjTol)) {
    auto eig = linalg::hermitian_eigs(hermitize(choi));
    throw ValidationError("choi positivity", -eig.eigenvalues.back());
  }
  ComplexMatrix tp = partial_trace(choi, dim_out1 * dim_out2, dim_in, Side::Left);
  tp -= ComplexMatrix::identity(dim_in);
  const double res = max_abs(tp);
  if (res > kObjTol) throw ValidationError("trace preservation", res);
}

// --- tensor helpers ---

namespace {
int total_dim(const std::vector<int>& dims) {
  int n = 1;
  for (int d : dims) n *= d;
  return n;
}

// Decompose a flat index into per-factor digits (left factor slowest).
void unflatten(int idx, const std::vector<int>& dims, std::vector<int>& out) {
  out.resize(dims.size());
  for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
    out[k] = idx % dims[k];
    idx /= dims[k];
  }
}

int flatten(const std::vector<int>& digits, const std::vector<int>& dims) {
  int idx = 0;
  for (size_t k = 0; k < dims.size(); ++k) idx = idx * dims[k] + digits[k];
  return idx;
}
}  // namespace

ComplexMatrix permute_factors(const ComplexMatrix& m, const std::vector<int>& dims,
                              const std::vector<int>& perm) {
  const int n = total_dim(dims);
  if (m.rows() != n || m.cols() != n) throw ShapeError("permute_factors: shape mismatch");
  if (perm.size() != dims.size()) throw ShapeError("permute_factors: bad permutation");
  std::vector<int> new_dims(dims.size());
  for (size_t k = 0; k < perm.size(); ++k) new_dims[k] = dims[perm[k]];
  ComplexMatrix r(n, n);
  std::vector<int> di, dj, pi(dims.size()), pj(dims.size());
  for (int i = 0; i < n; ++i) {
    unflatten(i, dims, di);
    for (size_t k = 0; k < perm.size(); ++k) pi[k] = di[perm[k]];
    const int ri = flatten(pi, new_dims);
    for (int j = 0; j < n; ++j) {
      unflatten(j, dims, dj);
      for (size_t k = 0; k < perm.size(); ++k) pj[k] = dj[perm[k]];
      r(ri, flatten(pj, new_dims)) = m(i, j);
    }
  }
  return r;
}

ComplexMatrix embed_on_factors(const ComplexMatrix& h, const std::vector<int>& dims,
                               const std::vector<int>& active) {
  int active_dim = 1;
  for (int k : active) active_dim *= dims[k];
  if (h.rows() != active_dim || h.cols() != active_dim)
    throw ShapeError("embed_on_factors: operator does not match active factors");
  const int n = total_dim(dims);
  std::vector<int> active_dims;
  for (int k : active) active_dims.push_back(dims[k]);

  ComplexMatrix r(n, n);
  std::vector<int> di, dj, ai(active.size()), aj(active.size());
  for (int i = 0; i < n; ++i) {
    unflatten(i, dims, di);
    for (int j = 0; j < n; ++j) {
      unflatten(j, dims, dj);
      bool diag = true;
      for (size_t k = 0; k < dims.size() && diag; ++k) {
        bool is_active = false;
        for (int a : active) is_active |= (a == static_cast<int>(k));
        if (!is_active && di[k] != dj[k]) diag = false;
      }
      if (!diag) continue;
      for (size_t k = 0; k < active.size(); ++k) {
        ai[k] = di[active[k]];
        aj[k] = dj[active[k]];
      }
      r(i, j) = h(flatten(ai, active_dims), flatten(aj, active_dims));
    }
  }
  return r;
}

ComplexMatrix partial_trace_factor(const ComplexMatrix& m, const std::vector<int>& dims,
                                   int which) {
  const int n = total_dim(dims);
  if (m.rows() != n || m.cols() != n) throw ShapeError("partial_trace_factor: shape mismatch");
  std::vector<int> kept_dims;
  for (size_t k = 0; k < dims.size(); ++k)
    if (static_cast<int>(k) != which) kept_dims.push_back(dims[k]);
  const int nk = total_dim(kept_dims);
  ComplexMatrix r(nk, nk);
  std::vector<int> di, dj;
  for (int i = 0; i < n; ++i) {
    unflatten(i, dims, di);
    for (int j = 0; j < n; ++j) {
      unflatten(j, dims, dj);
      if (di[which] != dj[which]) continue;
      std::vector<int> ki, kj;
      for (size_t k = 0; k < dims.size(); ++k) {
        if (static_cast<int>(k) == which) continue;
        ki.push_back(di[k]);
        kj.push_back(dj[k]);
      }
      r(flatten(ki, kept_dims), flatten(kj, kept_dims)) += m(i, j);
    }
  }
  return r;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
  auto eig = linalg::hermitian_eigs(m);
  const int n = m.rows();
  ComplexMatrix r(n, n);
  for (int k = 0; k < n; ++k) {
    const double s = std::sqrt(std::max(0.0, eig.eigenvalues[k]));
    if (s == 0.0) continue;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        r(i, j) += s * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
  }
  return r;
}

// --- constructors ---

ComplexMatrix unnormalized_max_entangled(int d) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  ComplexMatrix v(d * d, 1);
  for (int i = 0; i < d; ++i) v(i * d + i, 0) = 1.0;
  return v;
}

ChoiChannel identity_channel(int d) {
  ComplexMatrix c(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) c(i * d + i, j * d + j) = 1.0;
  return ChoiChannel(d, d, std::move(c));
}

ChoiChannel choi_from_kraus(const std::vector<ComplexMatrix>& kraus, int dim_in, int dim_out) {
  if (kraus.empty()) throw NotTracePreserving("empty Kraus set");
  ComplexMatrix comp(dim_in, dim_in);
  for (const auto& k : kraus) {
    if (k.rows() != dim_out || k.cols() != dim_in)
      throw ShapeError("choi_from_kraus: Kraus operator shape mismatch");
    comp += adjoint(k) * k;
  }
  comp -= ComplexMatrix::identity(dim_in);
  if (max_abs(comp) > kObjTol)
    throw NotTracePreserving("Kraus completeness violated by " + std::to_string(max_abs(comp)));

  // (kraus (x) 1)|phi> is the row-major vectorization of the Kraus operator.
  const int n = dim_out * dim_in;
  ComplexMatrix c(n, n);
  for (const auto& k : kraus) {
    std::vector<Complex> v(n);
    for (int b = 0; b < dim_out; ++b)
      for (int r = 0; r < dim_in; ++r) v[b * dim_in + r] = k(b, r);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) c(i, j) += v[i] * std::conj(v[j]);
  }
  return ChoiChannel(dim_in, dim_out, std::move(c));
}

ComplexMatrix apply_via_choi(const ChoiChannel& ch, const ComplexMatrix& rho) {
  if (rho.rows() != ch.dim_in || rho.cols() != ch.dim_in)
    throw ShapeError("apply_via_choi: state dimension mismatch");
  ComplexMatrix out(ch.dim_out, ch.dim_out);
  const ComplexMatrix rho_t = transpose_in_basis(rho);
  for (int b = 0; b < ch.dim_out; ++b)
    for (int bp = 0; bp < ch.dim_out; ++bp) {
      Complex s = 0;
      for (int r = 0; r < ch.dim_in; ++r)
        for (int rp = 0; rp < ch.dim_in; ++rp)
          s += rho_t(rp, r) * ch.choi(b * ch.dim_in + r, bp * ch.dim_in + rp);
      out(b, bp) = s;
    }
  return out;
}

ChoiChannel measurement_channel_choi(const Povm& p) {
  const int m = p.outcomes();
  const int d = p.dim;
  ComplexMatrix c(m * d, m * d);
  for (int x = 0; x < m; ++x) {
    const ComplexMatrix et = transpose_in_basis(p.effects[x]);
    for (int r = 0; r < d; ++r)
      for (int rp = 0; rp < d; ++rp) c(x * d + r, x * d + rp) = et(r, rp);
  }
  return ChoiChannel(d, m, std::move(c));
}

ChoiChannel marginal_choi(const JointChannel& j, int which) {
  if (which != 1 && which != 2) throw DomainError("marginal_choi: which must be 1 or 2");
  const std::vector<int> dims = {j.dim_out1, j.dim_out2, j.dim_in};
  const int traced = (which == 1) ? 1 : 0;
  ComplexMatrix m = partial_trace_factor(j.choi, dims, traced);
  const int dout = (which == 1) ? j.dim_out1 : j.dim_out2;
  return ChoiChannel(j.dim_in, dout, std::move(m));
}

ChoiChannel compose_channels(const ChoiChannel& second, const ChoiChannel& first) {
  if (second.dim_in != first.dim_out)
    throw ShapeError("compose_channels: dimension mismatch");
  const int da = second.dim_out;  // final output
  const int db = first.dim_out;   // intermediate
  const int dr = first.dim_in;    // input / reference
  // C(second o first)[(a,i),(a',j)] =
  //   sum_{k,l} C(first)[(k,i),(l,j)] * C(second)[(a,k),(a',l)]
  ComplexMatrix c(da * dr, da * dr);
  for (int a = 0; a < da; ++a)
    for (int ap = 0; ap < da; ++ap)
      for (int i = 0; i < dr; ++i)
        for (int jj = 0; jj < dr; ++jj) {
          Complex s = 0;
          for (int k = 0; k < db; ++k)
            for (int l = 0; l < db; ++l)
              s += first.choi(k * dr + i, l * dr + jj) * second.choi(a * db + k, ap * db + l);
          c(a * dr + i, ap * dr + jj) = s;
        }
  return ChoiChannel(dr, da, std::move(c));
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m(0, 1) = 1;
  m(1, 0) = 1;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m(0, 1) = Complex(0, -1);
  m(1, 0) = Complex(0, 1);
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m(0, 0) = 1;
  m(1, 1) = -1;
  return m;
}

Povm example_unbiased_qubit_povm(double eta) {
  if (eta < 0.0 || eta > 1.0) throw DomainError("unbiased qubit POVM: eta outside [0,1]");
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const ComplexMatrix z = pauli_z();
  ComplexMatrix plus = id;
  plus += eta * z;
  plus *= 0.5;
  ComplexMatrix minus = id;
  minus -= eta * z;
  minus *= 0.5;
  return Povm(2, {plus, minus}, {"+1", "-1"});
}

Povm example_sixfold_povm(double p) {
  if (p < 0.0 || p > 1.0) throw DomainError("sixfold POVM: p outside [0,1]");
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const ComplexMatrix paulis[3] = {pauli_x(), pauli_y(), pauli_z()};
  const char* names[3] = {"x", "y", "z"};
  std::vector<ComplexMatrix> effects;
  std::vector<std::string> labels;
  for (int a = 0; a < 3; ++a) {
    for (int sgn = 0; sgn < 2; ++sgn) {
      const double s = sgn == 0 ? 1.0 : -1.0;
      // |+-a><+-a| = (1 +- sigma_a)/2
      ComplexMatrix proj = id;
      proj += s * paulis[a];
      proj *= 0.5;
      ComplexMatrix e = proj;
      e *= (1.0 - p) / 3.0;
      ComplexMatrix noise = id;
      noise *= p / 6.0;
      e += noise;
      effects.push_back(e);
      labels.push_back(std::string(sgn == 0 ? "+" : "-") + names[a]);
    }
  }
  return Povm(2, std::move(effects), std::move(labels));
}

Povm trivial_povm(int dim, int outcomes) {
  std::vector<ComplexMatrix> effects;
  for (int x = 0; x < outcomes; ++x) {
    ComplexMatrix e = ComplexMatrix::identity(dim);
    e *= 1.0 / outcomes;
    effects.push_back(e);
  }
  return Povm(dim, std::move(effects));
}

Povm sharp_basis_povm(int dim) {
  std::vector<ComplexMatrix> effects;
  for (int x = 0; x < dim; ++x) {
    ComplexMatrix e(dim, dim);
    e(x, x) = 1.0;
    effects.push_back(e);
  }
  return Povm(dim, std::move(effects));
}

Povm sharp_x_povm() {
  ComplexMatrix plus(2, 2), minus(2, 2);
  plus(0, 0) = plus(0, 1) = plus(1, 0) = plus(1, 1) = 0.5;
  minus(0, 0) = minus(1, 1) = 0.5;
  minus(0, 1) = minus(1, 0) = -0.5;
  return Povm(2, {plus, minus}, {"+x", "-x"});
}

namespace {

ComplexMatrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im) * (1.0 / std::sqrt(2.0));
    }
  return g;
}

// Gram-Schmidt on columns; input assumed generic (full column rank).
void orthonormalize_columns(ComplexMatrix& g) {
  for (int j = 0; j < g.cols(); ++j) {
    for (int k = 0; k < j; ++k) {
      Complex dot = 0;
      for (int i = 0; i < g.rows(); ++i) dot += std::conj(g(i, k)) * g(i, j);
      for (int i = 0; i < g.rows(); ++i) g(i, j) -= dot * g(i, k);
    }
    double norm = 0;
    for (int i = 0; i < g.rows(); ++i) norm += std::norm(g(i, j));
    norm = std::sqrt(norm);
    for (int i = 0; i < g.rows(); ++i) g(i, j) /= norm;
  }
}

}  // namespace

ChoiChannel sample_random_channel(int dim_in, int dim_out, std::uint64_t seed) {
  if (dim_in < 1 || dim_out < 1) throw DomainError("sample_random_channel: dims must be >= 1");
  std::mt19937_64 rng(seed);
  const int env = dim_in * dim_out;
  ComplexMatrix w = gaussian_matrix(dim_out * env, dim_in, rng);
  orthonormalize_columns(w);
  // Kraus operators are the environment slices of the isometry.
  std::vector<ComplexMatrix> kraus;
  for (int e = 0; e < env; ++e) {
    ComplexMatrix k(dim_out, dim_in);
    for (int b = 0; b < dim_out; ++b)
      for (int a = 0; a < dim_in; ++a) k(b, a) = w(b * env + e, a);
    kraus.push_back(std::move(k));
  }
  return choi_from_kraus(kraus, dim_in, dim_out);
}

Povm sample_random_povm(int dim, int outcomes, std::uint64_t seed) {
  if (dim < 1 || outcomes < 1) throw DomainError("sample_random_povm: dims must be >= 1");
  if (outcomes == 1) return Povm(dim, {ComplexMatrix::identity(dim)});
  std::mt19937_64 rng(seed);
  std::vector<ComplexMatrix> raw;
  ComplexMatrix sum(dim, dim);
  for (int x = 0; x < outcomes; ++x) {
    ComplexMatrix g = gaussian_matrix(dim, dim, rng);
    ComplexMatrix a = g * adjoint(g);
    sum += a;
    raw.push_back(std::move(a));
  }
  // Normalize by the symmetric inverse square root of the total.
  auto eig = linalg::hermitian_eigs(sum);
  ComplexMatrix inv_sqrt(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const double s = 1.0 / std::sqrt(eig.eigenvalues[k]);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        inv_sqrt(i, j) += s * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
  }
  std::vector<ComplexMatrix> effects;
  for (auto& a : raw) effects.push_back(hermitize(inv_sqrt * a * inv_sqrt));
  return Povm(dim, std::move(effects));
}

ComplexMatrix sample_random_density(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ComplexMatrix g = gaussian_matrix(dim, dim, rng);
  ComplexMatrix rho = g * adjoint(g);
  const double t = trace(rho).real();
  rho *= 1.0 / t;
  return hermitize(rho);
}

}  // namespace qincompat::quantum
