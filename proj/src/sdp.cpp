#include "qincompat/sdp.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

namespace qincompat::sdp {

using linalg::Complex;

int SdpProblem::add_block(const std::string& name, int n) {
  blocks.push_back({name, n});
  objective.emplace_back(std::nullopt);
  return static_cast<int>(blocks.size()) - 1;
}

void SdpProblem::set_objective(int block, ComplexMatrix coeff) {
  objective.at(block) = std::move(coeff);
}

void SdpProblem::add_equality(Equality eq) { equalities.push_back(std::move(eq)); }

void SdpProblem::add_operator_equality(const std::vector<OperatorTerm>& terms,
                                       const ComplexMatrix& rhs) {
  const int n = rhs.rows();
  if (rhs.cols() != n) throw ShapeError("operator equality rhs must be square");
  auto emit = [&](const ComplexMatrix& h) {
    Equality eq;
    for (const auto& t : terms) eq.terms.emplace_back(t.block, t.lift(h));
    eq.rhs = linalg::hs_inner(h, rhs).real();
    equalities.push_back(std::move(eq));
  };
  for (int k = 0; k < n; ++k) {
    ComplexMatrix h(n, n);
    h(k, k) = 1.0;
    emit(h);
  }
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      ComplexMatrix hre(n, n);
      hre(k, l) = 1.0;
      hre(l, k) = 1.0;
      emit(hre);
      ComplexMatrix him(n, n);
      him(k, l) = Complex(0, 1);
      him(l, k) = Complex(0, -1);
      emit(him);
    }
}

int SdpProblem::total_real_dof() const {
  int dof = 0;
  for (const auto& b : blocks) dof += b.n * b.n;
  return dof;
}

linalg::ComplexMatrix realify(const ComplexMatrix& h) {
  if (h.rows() != h.cols()) throw ShapeError("realify: matrix not square");
  if (linalg::hermiticity_defect(h) > 1e-9 * std::max(1.0, linalg::max_abs(h)))
    throw NotHermitian("realify: coefficient not Hermitian");
  const int n = h.rows();
  ComplexMatrix r(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = h(i, j).real();
      const double im = h(i, j).imag();
      r(i, j) = re;
      r(n + i, n + j) = re;
      r(i, n + j) = -im;
      r(n + i, j) = im;
    }
  return r;
}

// ---------------------------------------------------------------------------
// Interior-point core on realified blocks.
// ---------------------------------------------------------------------------

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

struct REntry {
  int r, c;
  double v;
};

struct RTerm {
  int block;
  std::vector<REntry> entries;  // full symmetric entry list
};

struct RConstraint {
  std::vector<RTerm> terms;
  double rhs;
};

struct RealProblem {
  std::vector<int> dims;
  std::vector<MatrixXd> cost;  // zero matrices when absent
  std::vector<RConstraint> cons;
  VectorXd b;
};

void append_entries(std::vector<REntry>& out, const ComplexMatrix& h, bool realified) {
  const int n = h.rows();
  const double eps = 1e-15 * std::max(1.0, linalg::max_abs(h));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = h(i, j).real();
      const double im = h(i, j).imag();
      if (!realified) {
        if (std::abs(re) > eps) out.push_back({i, j, re});
        continue;
      }
      if (std::abs(re) > eps) {
        out.push_back({i, j, re});
        out.push_back({n + i, n + j, re});
      }
      if (std::abs(im) > eps) {
        out.push_back({i, n + j, -im});
        out.push_back({n + i, j, im});
      }
    }
}

struct BlockPanel {
  // constraints touching this block, with entry lists
  std::vector<int> con_index;
  std::vector<const std::vector<REntry>*> entries;
};

class NtSolver {
 public:
  NtSolver(const RealProblem& p, const SdpSettings& st) : p_(p), st_(st) {
    m_ = static_cast<int>(p_.cons.size());
    nblocks_ = static_cast<int>(p_.dims.size());
    total_dim_ = 0;
    for (int n : p_.dims) total_dim_ += n;
    panels_.resize(nblocks_);
    for (int i = 0; i < m_; ++i)
      for (const auto& t : p_.cons[i].terms) {
        panels_[t.block].con_index.push_back(i);
        panels_[t.block].entries.push_back(&t.entries);
      }
    bnorm_ = 1.0 + p_.b.cwiseAbs().maxCoeff();
    cnorm_ = 1.0;
    for (const auto& c : p_.cost) cnorm_ = std::max(cnorm_, c.cwiseAbs().maxCoeff());
  }

  SdpSolution run() {
    SdpSolution sol;
    const double tau = 1.0 + p_.b.cwiseAbs().maxCoeff();
    X_.clear();
    S_.clear();
    for (int n : p_.dims) {
      X_.push_back(MatrixXd::Identity(n, n) * tau);
      S_.push_back(MatrixXd::Identity(n, n) * tau);
    }
    y_ = VectorXd::Zero(m_);

    std::vector<MatrixXd> W(nblocks_), G(nblocks_), Ginv(nblocks_);
    std::vector<VectorXd> D(nblocks_);
    std::vector<MatrixXd> Rd(nblocks_), WRdW(nblocks_), K(nblocks_);
    std::vector<MatrixXd> dXa(nblocks_), dSa(nblocks_), dX(nblocks_), dS(nblocks_);
    std::vector<MatrixXd> Rc(nblocks_);
    MatrixXd M(m_, m_);
    VectorXd rp(m_);

    int it = 0;
    for (; it < st_.max_iters; ++it) {
      // residuals and objectives
      double pobj = 0, dobj = p_.b.dot(y_);
      for (int b = 0; b < nblocks_; ++b) pobj += (p_.cost[b].cwiseProduct(X_[b])).sum();
      for (int i = 0; i < m_; ++i) rp(i) = p_.cons[i].rhs - apply_row(i);
      double comp = 0;
      for (int b = 0; b < nblocks_; ++b) comp += (X_[b].cwiseProduct(S_[b])).sum();
      const double mu = comp / total_dim_;
      double dres = 0;
      for (int b = 0; b < nblocks_; ++b) {
        Rd[b] = p_.cost[b] - S_[b];
        subtract_adjoint(b, y_, Rd[b]);
        dres = std::max(dres, Rd[b].cwiseAbs().maxCoeff());
      }
      const double pres = rp.cwiseAbs().maxCoeff() / bnorm_;
      dres /= cnorm_;
      const double gap = std::abs(pobj - dobj);

      sol.trace.push_back({pobj, dobj, mu, comp, pres, dres});
      sol.primal_value = pobj;
      sol.dual_value = dobj;
      sol.gap = gap;
      sol.primal_residual = pres;
      sol.dual_residual = dres;

      if (pres <= st_.res_tol && dres <= st_.res_tol && gap <= st_.gap_tol * (1.0 + std::abs(pobj))) {
        sol.status = SdpStatus::Optimal;
        break;
      }
      if (!std::isfinite(pobj) || !std::isfinite(dobj) || std::abs(pobj) > 1e14 ||
          std::abs(dobj) > 1e14) {
        sol.status = SdpStatus::NumericalFailure;
        break;
      }

      // NT scaling per block
      bool scale_ok = true;
      for (int b = 0; b < nblocks_; ++b) {
        const int n = p_.dims[b];
        Eigen::LLT<MatrixXd> lltx(X_[b]);
        Eigen::LLT<MatrixXd> llts(S_[b]);
        if (lltx.info() != Eigen::Success || llts.info() != Eigen::Success) {
          scale_ok = false;
          break;
        }
        MatrixXd Lx = lltx.matrixL();
        MatrixXd Ls = llts.matrixL();
        MatrixXd Q = Ls.transpose() * Lx;
        Eigen::BDCSVD<MatrixXd> svd(Q, Eigen::ComputeFullU | Eigen::ComputeFullV);
        VectorXd sigma = svd.singularValues();
        if (sigma(n - 1) <= 0) {
          scale_ok = false;
          break;
        }
        D[b] = sigma;
        VectorXd si = sigma.cwiseSqrt().cwiseInverse();
        G[b] = Lx * svd.matrixV() * si.asDiagonal();
        MatrixXd LxInv = Lx.triangularView<Eigen::Lower>().solve(MatrixXd::Identity(n, n));
        Ginv[b] = sigma.cwiseSqrt().asDiagonal() * svd.matrixV().transpose() * LxInv;
        W[b] = G[b] * G[b].transpose();
      }
      if (!scale_ok) {
        sol.status = SdpStatus::NumericalFailure;
        break;
      }

      assemble_schur(W, M);
      // tiny ridge keeps the factorization alive under near-dependence
      double ridge = 1e-13 * (1.0 + M.diagonal().cwiseAbs().maxCoeff());
      Eigen::LLT<MatrixXd> lltm;
      for (int attempt = 0; attempt < 4; ++attempt) {
        MatrixXd Mr = M + ridge * MatrixXd::Identity(m_, m_);
        lltm.compute(Mr);
        if (lltm.info() == Eigen::Success) break;
        ridge *= 1e3;
      }
      if (lltm.info() != Eigen::Success) {
        sol.status = SdpStatus::NumericalFailure;
        break;
      }

      for (int b = 0; b < nblocks_; ++b) WRdW[b] = W[b] * Rd[b] * W[b];

      // predictor: target complementarity zero
      for (int b = 0; b < nblocks_; ++b) Rc[b] = -X_[b];
      VectorXd rhs = rp;
      for (int b = 0; b < nblocks_; ++b) K[b] = Rc[b] - WRdW[b];
      subtract_inner(K, rhs);
      VectorXd dya = lltm.solve(rhs);
      for (int b = 0; b < nblocks_; ++b) {
        dSa[b] = Rd[b];
        subtract_adjoint(b, dya, dSa[b]);
        dSa[b] = 0.5 * (dSa[b] + dSa[b].transpose()).eval();
        dXa[b] = Rc[b] - W[b] * dSa[b] * W[b];
        dXa[b] = 0.5 * (dXa[b] + dXa[b].transpose()).eval();
      }
      const double apa = step_length(X_, dXa);
      const double ada = step_length(S_, dSa);

      double mu_aff = 0;
      for (int b = 0; b < nblocks_; ++b)
        mu_aff += ((X_[b] + apa * dXa[b]).cwiseProduct(S_[b] + ada * dSa[b])).sum();
      mu_aff /= total_dim_;
      double sigma_c = std::pow(std::clamp(mu_aff / mu, 0.0, 1.0), 3);
      sigma_c = std::clamp(sigma_c, 1e-8, 1.0);

      // corrector in the scaled space where both iterates equal diag(D)
      const double nu = sigma_c * mu;
      for (int b = 0; b < nblocks_; ++b) {
        const int n = p_.dims[b];
        MatrixXd dxh = Ginv[b] * dXa[b] * Ginv[b].transpose();
        MatrixXd dsh = G[b].transpose() * dSa[b] * G[b];
        MatrixXd cross = dxh * dsh;
        cross = 0.5 * (cross + cross.transpose()).eval();
        MatrixXd rhat = -cross;
        for (int k = 0; k < n; ++k) rhat(k, k) += nu - D[b](k) * D[b](k);
        MatrixXd E(n, n);
        for (int i2 = 0; i2 < n; ++i2)
          for (int j2 = 0; j2 < n; ++j2) E(i2, j2) = 2.0 * rhat(i2, j2) / (D[b](i2) + D[b](j2));
        Rc[b] = G[b] * E * G[b].transpose();
      }
      rhs = rp;
      for (int b = 0; b < nblocks_; ++b) K[b] = Rc[b] - WRdW[b];
      subtract_inner(K, rhs);
      VectorXd dy = lltm.solve(rhs);
      for (int b = 0; b < nblocks_; ++b) {
        dS[b] = Rd[b];
        subtract_adjoint(b, dy, dS[b]);
        dS[b] = 0.5 * (dS[b] + dS[b].transpose()).eval();
        dX[b] = Rc[b] - W[b] * dS[b] * W[b];
        dX[b] = 0.5 * (dX[b] + dX[b].transpose()).eval();
      }
      double ap = step_length(X_, dX);
      double ad = step_length(S_, dS);

      for (int b = 0; b < nblocks_; ++b) {
        X_[b] += ap * dX[b];
        S_[b] += ad * dS[b];
      }
      y_ += ad * dy;
    }
    if (it >= st_.max_iters && sol.status != SdpStatus::Optimal)
      sol.status = SdpStatus::IterationLimit;
    sol.iterations = it;
    Xout_ = X_;
    yout_ = y_;
    return sol;
  }

  const std::vector<MatrixXd>& block_values() const { return Xout_; }
  const VectorXd& multipliers() const { return yout_; }

 private:
  double apply_row(int i) const {
    double s = 0;
    for (const auto& t : p_.cons[i].terms) {
      const MatrixXd& x = X_[t.block];
      for (const auto& e : t.entries) s += e.v * x(e.c, e.r);
    }
    return s;
  }

  // target -= sum_i y_i A_i (per block slice)
  void subtract_adjoint(int block, const VectorXd& y, MatrixXd& target) const {
    const auto& panel = panels_[block];
    for (size_t k = 0; k < panel.con_index.size(); ++k) {
      const double yi = y(panel.con_index[k]);
      if (yi == 0.0) continue;
      for (const auto& e : *panel.entries[k]) target(e.r, e.c) -= yi * e.v;
    }
  }

  // rhs_i -= <A_i, K>
  void subtract_inner(const std::vector<MatrixXd>& K, VectorXd& rhs) const {
    for (int b = 0; b < nblocks_; ++b) {
      const auto& panel = panels_[b];
      const MatrixXd& kb = K[b];
      for (size_t k = 0; k < panel.con_index.size(); ++k) {
        double s = 0;
        for (const auto& e : *panel.entries[k]) s += e.v * kb(e.c, e.r);
        rhs(panel.con_index[k]) -= s;
      }
    }
  }

  void assemble_schur(const std::vector<MatrixXd>& W, MatrixXd& M) const {
    M.setZero();
    for (int b = 0; b < nblocks_; ++b) {
      const auto& panel = panels_[b];
      const MatrixXd& w = W[b];
      const size_t nc = panel.con_index.size();
      for (size_t a = 0; a < nc; ++a) {
        const int ia = panel.con_index[a];
        const auto& ea = *panel.entries[a];
        for (size_t c = a; c < nc; ++c) {
          const int ic = panel.con_index[c];
          const auto& ec = *panel.entries[c];
          double s = 0;
          for (const auto& u : ea)
            for (const auto& v : ec) s += u.v * v.v * w(u.c, v.r) * w(v.c, u.r);
          if (ia <= ic)
            M(ic, ia) += s;
          else
            M(ia, ic) += s;
        }
      }
    }
    M = M.selfadjointView<Eigen::Lower>();
  }

  double step_length(const std::vector<MatrixXd>& Z, const std::vector<MatrixXd>& dZ) const {
    double alpha = 1.0;
    for (int b = 0; b < nblocks_; ++b) {
      Eigen::LLT<MatrixXd> llt(Z[b]);
      if (llt.info() != Eigen::Success) return 0.0;
      MatrixXd L = llt.matrixL();
      MatrixXd T = L.triangularView<Eigen::Lower>().solve(dZ[b]);
      T = L.triangularView<Eigen::Lower>().solve(T.transpose()).eval();
      Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (T + T.transpose()),
                                                 Eigen::EigenvaluesOnly);
      const double lmin = es.eigenvalues()(0);
      if (lmin < 0) alpha = std::min(alpha, -0.98 / lmin);
    }
    return alpha;
  }

  const RealProblem& p_;
  SdpSettings st_;
  int m_, nblocks_, total_dim_;
  double bnorm_, cnorm_;
  std::vector<BlockPanel> panels_;
  std::vector<MatrixXd> X_, S_, Xout_;
  VectorXd y_, yout_;
};

bool problem_is_real(const SdpProblem& p) {
  auto imag_small = [](const ComplexMatrix& m) {
    for (const auto& v : m.data())
      if (std::abs(v.imag()) > 1e-14) return false;
    return true;
  };
  for (const auto& o : p.objective)
    if (o && !imag_small(*o)) return false;
  for (const auto& eq : p.equalities)
    for (const auto& t : eq.terms)
      if (!imag_small(t.second)) return false;
  return true;
}

MatrixXd to_real_dense(const ComplexMatrix& h, bool realified) {
  const int n = h.rows();
  if (!realified) {
    MatrixXd r(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(i, j) = h(i, j).real();
    return 0.5 * (r + r.transpose()).eval();
  }
  MatrixXd r(2 * n, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = h(i, j).real();
      const double im = h(i, j).imag();
      r(i, j) = re;
      r(n + i, n + j) = re;
      r(i, n + j) = -im;
      r(n + i, j) = im;
    }
  return 0.5 * (r + r.transpose()).eval();
}

void validate_problem(const SdpProblem& p) {
  int m = 0;
  for (const auto& eq : p.equalities) {
    ++m;
    for (const auto& [blk, coeff] : eq.terms) {
      if (blk < 0 || blk >= static_cast<int>(p.blocks.size()))
        throw ShapeError("equality references unknown block");
      if (coeff.rows() != p.blocks[blk].n || coeff.cols() != p.blocks[blk].n)
        throw ShapeError("equality coefficient shape mismatch");
      if (linalg::hermiticity_defect(coeff) > 1e-9 * std::max(1.0, linalg::max_abs(coeff)))
        throw NotHermitian("equality coefficient not Hermitian");
      if (linalg::max_abs(coeff) > 1e12) throw SolverError("badly scaled coefficient");
    }
    if (std::abs(eq.rhs) > 1e12) throw SolverError("badly scaled right-hand side");
  }
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.objective[b]) {
      const auto& c = *p.objective[b];
      if (c.rows() != p.blocks[b].n || c.cols() != p.blocks[b].n)
        throw ShapeError("objective coefficient shape mismatch");
      if (linalg::hermiticity_defect(c) > 1e-9 * std::max(1.0, linalg::max_abs(c)))
        throw NotHermitian("objective coefficient not Hermitian");
    }
  }
  if (m > p.total_real_dof())
    throw ShapeError("more equality constraints than real degrees of freedom");
}

}  // namespace

SdpSolution solve_sdp(const SdpProblem& p, const SdpSettings& settings) {
  validate_problem(p);
  const bool realified = !problem_is_real(p);
  const double sign = p.maximize ? -1.0 : 1.0;
  const double value_scale = realified ? 2.0 : 1.0;

  RealProblem rp;
  for (const auto& b : p.blocks) rp.dims.push_back(realified ? 2 * b.n : b.n);
  rp.cost.resize(p.blocks.size());
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.objective[b])
      rp.cost[b] = sign * to_real_dense(*p.objective[b], realified);
    else
      rp.cost[b] = MatrixXd::Zero(rp.dims[b], rp.dims[b]);
  }
  rp.b.resize(static_cast<int>(p.equalities.size()));
  for (size_t i = 0; i < p.equalities.size(); ++i) {
    RConstraint rc;
    rc.rhs = value_scale * p.equalities[i].rhs;
    // merge repeated blocks so each constraint carries one entry list per block
    std::vector<std::pair<int, ComplexMatrix>> merged;
    for (const auto& [blk, coeff] : p.equalities[i].terms) {
      bool found = false;
      for (auto& [mb, mc] : merged)
        if (mb == blk) {
          mc += coeff;
          found = true;
          break;
        }
      if (!found) merged.emplace_back(blk, coeff);
    }
    for (const auto& [blk, coeff] : merged) {
      RTerm t;
      t.block = blk;
      append_entries(t.entries, coeff, realified);
      if (!t.entries.empty()) rc.terms.push_back(std::move(t));
    }
    rp.b(static_cast<int>(i)) = rc.rhs;
    rp.cons.push_back(std::move(rc));
  }

  NtSolver solver(rp, settings);
  SdpSolution sol = solver.run();

  // map internal (min, possibly realified) values back to the stated problem
  auto restate = [&](double v) { return sign * v / value_scale + p.objective_offset; };
  const double pv = restate(sol.primal_value);
  const double dv = restate(sol.dual_value);
  sol.primal_value = pv;
  sol.dual_value = dv;
  for (auto& rec : sol.trace) {
    rec.primal_obj = restate(rec.primal_obj);
    rec.dual_obj = restate(rec.dual_obj);
  }

  sol.block_values.clear();
  const auto& xs = solver.block_values();
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    const int n = p.blocks[b].n;
    ComplexMatrix xc(n, n);
    if (!realified) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) xc(i, j) = xs[b](i, j);
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const double re = 0.5 * (xs[b](i, j) + xs[b](n + i, n + j));
          const double im = 0.5 * (xs[b](n + i, j) - xs[b](i, n + j));
          xc(i, j) = Complex(re, im);
        }
    }
    sol.block_values.push_back(linalg::hermitize(xc));
  }
  sol.multipliers.assign(solver.multipliers().data(),
                         solver.multipliers().data() + solver.multipliers().size());
  return sol;
}

FeasibilityResult feasibility_probe(const SdpProblem& constraints, const SdpSettings& settings) {
  for (const auto& o : constraints.objective)
    if (o && linalg::max_abs(*o) > 0)
      throw PreconditionError("feasibility_probe expects a constraint-only problem");

  // Shift every block by t*I (t free via t+ - t-) and maximize t.
  SdpProblem probe = constraints;
  const int tp = probe.add_block("margin+", 1);
  const int tm = probe.add_block("margin-", 1);
  for (auto& eq : probe.equalities) {
    double tr = 0;
    for (const auto& [blk, coeff] : eq.terms) tr += linalg::trace(coeff).real();
    if (tr != 0.0) {
      ComplexMatrix cp(1, 1), cm(1, 1);
      cp(0, 0) = tr;
      cm(0, 0) = -tr;
      eq.terms.emplace_back(tp, cp);
      eq.terms.emplace_back(tm, cm);
    }
  }
  ComplexMatrix one(1, 1), mone(1, 1);
  one(0, 0) = 1.0;
  mone(0, 0) = -1.0;
  probe.objective.assign(probe.blocks.size(), std::nullopt);
  probe.set_objective(tp, one);
  probe.set_objective(tm, mone);
  probe.maximize = true;

  SdpSolution sol = solve_sdp(probe, settings);
  FeasibilityResult res;
  res.status = sol.status;
  res.margin = sol.primal_value;
  if (sol.status != SdpStatus::Optimal && sol.status != SdpStatus::IterationLimit)
    throw SolverError("feasibility probe failed to converge");
  res.feasible = res.margin >= -settings.res_tol;
  return res;
}

ResidualReport check_solution(const SdpProblem& p, const SdpSolution& s) {
  ResidualReport rep;
  rep.min_block_eigenvalue = std::numeric_limits<double>::infinity();
  rep.min_dual_slack_eigenvalue = std::numeric_limits<double>::infinity();

  double pobj = p.objective_offset;
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.objective[b]) pobj += linalg::hs_inner(*p.objective[b], s.block_values[b]).real();
    auto eig = linalg::hermitian_eigs(s.block_values[b]);
    rep.min_block_eigenvalue = std::min(rep.min_block_eigenvalue, eig.eigenvalues.back());
  }
  rep.primal_obj = pobj;

  double scale = 1.0;
  for (size_t i = 0; i < p.equalities.size(); ++i) {
    const auto& eq = p.equalities[i];
    double lhs = 0;
    for (const auto& [blk, coeff] : eq.terms)
      lhs += linalg::hs_inner(coeff, s.block_values[blk]).real();
    rep.max_equality_residual = std::max(rep.max_equality_residual, std::abs(lhs - eq.rhs));
    scale = std::max(scale, std::abs(eq.rhs));
  }
  rep.max_equality_residual /= scale;

  // dual slack in the internal minimization convention
  const double sign = p.maximize ? -1.0 : 1.0;
  double dobj = 0;
  for (size_t b = 0; b < p.blocks.size(); ++b) {
    const int n = p.blocks[b].n;
    ComplexMatrix slack(n, n);
    if (p.objective[b]) {
      slack = *p.objective[b];
      slack *= sign;
    }
    for (size_t i = 0; i < p.equalities.size(); ++i) {
      const double yi = s.multipliers[i];
      if (yi == 0.0) continue;
      for (const auto& [blk, coeff] : p.equalities[i].terms)
        if (blk == static_cast<int>(b)) {
          ComplexMatrix t = coeff;
          t *= yi;
          slack -= t;
        }
    }
    auto eig = linalg::hermitian_eigs(slack);
    rep.min_dual_slack_eigenvalue = std::min(rep.min_dual_slack_eigenvalue, eig.eigenvalues.back());
  }
  for (size_t i = 0; i < p.equalities.size(); ++i) dobj += s.multipliers[i] * p.equalities[i].rhs;
  rep.dual_obj = sign * dobj + p.objective_offset;
  return rep;
}

}  // namespace qincompat::sdp
