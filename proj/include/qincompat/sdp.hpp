#ifndef QINCOMPAT_SDP_HPP
#define QINCOMPAT_SDP_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qincompat/linalg.hpp"

namespace qincompat::sdp {

using linalg::ComplexMatrix;

// Block-structured semidefinite program over complex Hermitian PSD variables:
//
//   minimize   sum_b <objective[b], X_b> + objective_offset
//   subject to sum over terms <A, X_b> = rhs    (one real equation each)
//              X_b >= 0                          (every block)
//
// All coefficient matrices must be Hermitian, so every inner product is real.
// Maximization problems are stated by setting `maximize`; reported values are
// for the stated problem.
struct SdpProblem {
  struct Block {
    std::string name;
    int n = 0;
  };
  struct Equality {
    std::vector<std::pair<int, ComplexMatrix>> terms;  // (block index, coefficient)
    double rhs = 0.0;
  };

  std::vector<Block> blocks;
  std::vector<std::optional<ComplexMatrix>> objective;  // per block, empty == zero
  double objective_offset = 0.0;
  bool maximize = false;
  std::vector<Equality> equalities;

  int add_block(const std::string& name, int n);
  void set_objective(int block, ComplexMatrix coeff);
  void add_equality(Equality eq);

  // Expand an operator equality sum_k coeff_k = rhs over a Hermitian basis of
  // the rhs space into scalar equalities. Each term maps the basis element H
  // into the block coefficient via the supplied lift.
  struct OperatorTerm {
    int block;
    // lift(H) must produce the Hermitian coefficient K with <K, X> = <H, T(X)>
    // for the intended linear map T of the block variable.
    std::function<ComplexMatrix(const ComplexMatrix&)> lift;
  };
  void add_operator_equality(const std::vector<OperatorTerm>& terms, const ComplexMatrix& rhs);

  int total_real_dof() const;
};

enum class SdpStatus { Optimal, PrimalInfeasible, DualInfeasible, IterationLimit, NumericalFailure };

struct SdpSettings {
  double gap_tol = 1e-8;
  double res_tol = 1e-9;
  int max_iters = 200;
};

struct IterateRecord {
  double primal_obj;
  double dual_obj;
  double mu;
  double complementarity;  // <X, S>, scale-free weak-duality witness
  double primal_res;
  double dual_res;
};

struct SdpSolution {
  SdpStatus status = SdpStatus::NumericalFailure;
  double primal_value = 0.0;
  double dual_value = 0.0;
  double gap = 0.0;
  std::vector<ComplexMatrix> block_values;
  // One multiplier per scalar equality, in the internal minimization
  // convention (dual slack = C_min - sum_i y_i A_i with C_min negated for
  // maximize problems).
  std::vector<double> multipliers;
  int iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  std::vector<IterateRecord> trace;
};

// Realification of one Hermitian matrix: H -> [[Re H, -Im H], [Im H, Re H]].
// Inner products double, positivity is preserved both ways.
linalg::ComplexMatrix realify(const ComplexMatrix& h);

SdpSolution solve_sdp(const SdpProblem& p, const SdpSettings& settings = {});

struct FeasibilityResult {
  bool feasible = false;
  double margin = 0.0;  // optimal t with all blocks >= t*I under the equalities
  SdpStatus status = SdpStatus::NumericalFailure;
};

// Constraint-only probe: maximizes the uniform PSD margin t.
FeasibilityResult feasibility_probe(const SdpProblem& constraints,
                                    const SdpSettings& settings = {});

// Post-hoc verification on the complex side, independent of the solver's
// internal (realified) residual bookkeeping.
struct ResidualReport {
  double primal_obj = 0.0;
  double dual_obj = 0.0;
  double max_equality_residual = 0.0;
  double min_block_eigenvalue = 0.0;
  double min_dual_slack_eigenvalue = 0.0;
  bool ok(double res_tol, double scale = 1.0) const {
    return max_equality_residual <= res_tol * scale * 100 &&
           min_block_eigenvalue >= -res_tol * scale * 100 &&
           min_dual_slack_eigenvalue >= -res_tol * scale * 100;
  }
};

ResidualReport check_solution(const SdpProblem& p, const SdpSolution& s);

}  // namespace qincompat::sdp

#endif
