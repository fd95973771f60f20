#ifndef QHT_VERIFY_HPP
#define QHT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qht/states.hpp"

namespace qht {

// Result of a randomized property suite. Margins are oriented so that >= 0
// means the inequality held; a trial fails when its worst margin drops
// below -1e-9. Per-trial sub-seeds are derived by counter, so the report is
// identical for any thread count.
struct VerificationReport {
  std::string property_name;
  int trials = 0;
  double worst_margin = 0.0;
  int failures = 0;
  std::uint64_t seed = 0;

  bool passed() const { return failures == 0; }
  std::string to_string() const;
};

// Tr[a^s b^{1-s}] >= Tr[a + b - |a-b|]/2 on random PSD pairs (mixed ranks,
// random positive scales), 21-point s grid.
VerificationReport check_trace_inequality(int trials, std::uint64_t seed,
                                          const std::vector<Index>& dims);

// 1 - sqrt(1-F^2) <= 1 - T <= Q <= F <= sqrt(1-T^2), and F^2 <= Q.
VerificationReport check_chain(int trials, std::uint64_t seed,
                               const std::vector<Index>& dims);

// ||A^{1/2}B^{1/2}||_1 <= (Tr[A^s B^{1-s}])^{1/2} (Tr A)^{(1-s)/2} (Tr B)^{s/2}
// and ||A-B||_1^2 + 4 (Tr[A^{1/2}B^{1/2}])^2 <= (Tr(A+B))^2, on random
// unnormalized positive operators.
VerificationReport check_appendix(int trials, std::uint64_t seed,
                                  const std::vector<Index>& dims);

// The fixed two-qubit family where one-copy and two-copy trace-norm
// orderings reverse, with the Chernoff values -log(sqrt(3)/2) and -log(1-b)
// at b = 0.35.
VerificationReport check_tensor_counterexample();

// Convexity of Q_s in s, joint concavity of Q in the state pair, and
// monotonicity of Q under the partial trace.
VerificationReport check_convexity_concavity(int trials, std::uint64_t seed);

}  // namespace qht

#endif  // QHT_VERIFY_HPP
