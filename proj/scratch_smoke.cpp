// throwaway smoke test for the solver core (not part of the build)
#include <cstdio>

#include "qincompat/quantum.hpp"
#include "qincompat/sdp.hpp"

using namespace qincompat;
using linalg::ComplexMatrix;

int main() {
  // eigs of sigma_y
  auto sy = quantum::pauli_y();
  auto eig = linalg::hermitian_eigs(sy);
  std::printf("sigma_y eigs: %.12f %.12f\n", eig.eigenvalues[0], eig.eigenvalues[1]);

  // reconstruction check
  ComplexMatrix rec(2, 2);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        rec(i, j) += eig.eigenvalues[k] * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
  rec -= sy;
  std::printf("reconstruction defect: %.3e\n", linalg::max_abs(rec));

  // trivial SDP: max Tr[X] s.t. X + T = I2, X,T >= 0  -> 2
  {
    sdp::SdpProblem p;
    int x = p.add_block("X", 2);
    int t = p.add_block("T", 2);
    p.set_objective(x, ComplexMatrix::identity(2));
    p.maximize = true;
    p.add_operator_equality({{x, [](const ComplexMatrix& h) { return h; }},
                             {t, [](const ComplexMatrix& h) { return h; }}},
                            ComplexMatrix::identity(2));
    auto sol = sdp::solve_sdp(p);
    std::printf("trivial sdp: status=%d value=%.10f dual=%.10f iters=%d\n",
                static_cast<int>(sol.status), sol.primal_value, sol.dual_value, sol.iterations);
  }

  // diamond distance id vs fully depolarizing qubit -> 1.5
  {
    auto id2 = quantum::identity_channel(2);
    std::vector<ComplexMatrix> kraus;
    ComplexMatrix paulis[4] = {ComplexMatrix::identity(2), quantum::pauli_x(), quantum::pauli_y(),
                               quantum::pauli_z()};
    for (auto& k : paulis) {
      k *= 0.5;
      kraus.push_back(k);
    }
    auto dep = quantum::choi_from_kraus(kraus, 2, 2);

    ComplexMatrix delta = id2.choi;
    delta -= dep.choi;

    const int dB = 2, dR = 2, n = dB * dR;
    sdp::SdpProblem p;
    int P = p.add_block("P", n);
    int Q = p.add_block("Q", n);
    int V = p.add_block("V", dR);
    ComplexMatrix cp = delta;
    cp *= 0.5;
    ComplexMatrix cq = delta;
    cq *= -0.5;
    p.set_objective(P, cp);
    p.set_objective(Q, cq);
    p.maximize = false;  // min (P-Q)/2 . delta = -max Z.delta
    // P + Q - 2 (1_B x V) = 0
    p.add_operator_equality(
        {{P, [](const ComplexMatrix& h) { return h; }},
         {Q, [](const ComplexMatrix& h) { return h; }},
         {V,
          [&](const ComplexMatrix& h) {
            ComplexMatrix k = linalg::partial_trace(h, dB, dR, linalg::Side::Left);
            k *= -2.0;
            return k;
          }}},
        ComplexMatrix::zero(n, n));
    sdp::SdpProblem::Equality trv;
    ComplexMatrix idr = ComplexMatrix::identity(dR);
    trv.terms.emplace_back(V, idr);
    trv.rhs = 1.0;
    p.add_equality(trv);
    auto sol = sdp::solve_sdp(p);
    std::printf("diamond(id,depol): status=%d value=%.10f (expect -1.5) iters=%d\n",
                static_cast<int>(sol.status), sol.primal_value, sol.iterations);
  }
  return 0;
}
