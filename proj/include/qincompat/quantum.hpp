#ifndef QINCOMPAT_QUANTUM_HPP
#define QINCOMPAT_QUANTUM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qincompat/linalg.hpp"

namespace qincompat::quantum {

using linalg::Complex;
using linalg::ComplexMatrix;

// Finite outcome-labeled family of Hermitian effects summing to the identity.
struct Povm {
  int dim = 0;
  std::vector<ComplexMatrix> effects;
  std::vector<std::string> labels;

  Povm() = default;
  Povm(int d, std::vector<ComplexMatrix> eff, std::vector<std::string> lab = {});

  int outcomes() const { return static_cast<int>(effects.size()); }
  void validate() const;  // throws ValidationError naming the broken invariant
};

// A channel stored as its Choi operator on B (x) R, with the output B as the
// left tensor factor and the reference R (isomorphic to the input) as the
// right factor.
struct ChoiChannel {
  int dim_in = 0;
  int dim_out = 0;
  ComplexMatrix choi;

  ChoiChannel() = default;
  ChoiChannel(int din, int dout, ComplexMatrix c);

  void validate() const;
};

// Joint channel A -> B1 (x) B2 stored as a Choi operator on B1 (x) B2 (x) R.
struct JointChannel {
  int dim_in = 0;
  int dim_out1 = 0;
  int dim_out2 = 0;
  ComplexMatrix choi;

  JointChannel() = default;
  JointChannel(int din, int dout1, int dout2, ComplexMatrix c);

  void validate() const;
};

// --- tensor-space helpers (multi-factor index bookkeeping) ---

// Reorder the tensor factors of a square operator. dims lists the factor
// dimensions left to right; perm[k] names the old factor placed at new slot k.
ComplexMatrix permute_factors(const ComplexMatrix& m, const std::vector<int>& dims,
                              const std::vector<int>& perm);

// Lift an operator acting on a subset of factors (given in increasing order)
// to the full tensor space by identity on the remaining factors.
ComplexMatrix embed_on_factors(const ComplexMatrix& h, const std::vector<int>& dims,
                               const std::vector<int>& active);

// Partial trace over one factor of a multi-factor operator.
ComplexMatrix partial_trace_factor(const ComplexMatrix& m, const std::vector<int>& dims,
                                   int which);

// PSD square root via eigendecomposition, tiny negatives clamped to zero.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m);

// --- constructors ---

// The vector sum_i |i>|i> as a d^2 x 1 column; squared norm d.
ComplexMatrix unnormalized_max_entangled(int d);

ChoiChannel identity_channel(int d);

// choi = sum_k (kraus_k (x) 1) |phi><phi| (kraus_k (x) 1)^dag.
// Throws NotTracePreserving when sum kraus^dag kraus deviates from identity.
ChoiChannel choi_from_kraus(const std::vector<ComplexMatrix>& kraus, int dim_in, int dim_out);

// Lambda(rho) = Tr_R[(1_B (x) rho^T) choi].
ComplexMatrix apply_via_choi(const ChoiChannel& ch, const ComplexMatrix& rho);

// Quantum-to-classical channel of a POVM: choi = sum_x |x><x| (x) E^{xT}.
ChoiChannel measurement_channel_choi(const Povm& p);

// Partial trace over the other output factor of a joint channel.
ChoiChannel marginal_choi(const JointChannel& j, int which);

// Choi composition: returns the channel second o first.
ChoiChannel compose_channels(const ChoiChannel& second, const ChoiChannel& first);

// Unbiased binary qubit POVM with effects (1 +- eta sigma_z)/2.
Povm example_unbiased_qubit_povm(double eta);

// Six effects (1-p)/3 |+-a><+-a| + p/6 for a in {x,y,z}.
Povm example_sixfold_povm(double p);

Povm trivial_povm(int dim, int outcomes);
Povm sharp_basis_povm(int dim);  // projectors onto the computational basis
Povm sharp_x_povm();             // qubit sigma_x eigenprojectors

// Seeded samplers; deterministic for a fixed seed.
ChoiChannel sample_random_channel(int dim_in, int dim_out, std::uint64_t seed);
Povm sample_random_povm(int dim, int outcomes, std::uint64_t seed);

ComplexMatrix sample_random_density(int dim, std::uint64_t seed);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace qincompat::quantum

#endif
