#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qf/common.hpp"
#include "qf/construct.hpp"

namespace qf {

/// A replayable counterexample: the operator text plus the codeword pair it
/// separates (or -1 when the check is not pair-based).
struct Witness {
  std::string op_text;
  int m = -1;
  int m_prime = -1;
  std::string detail;
};

struct CheckResult {
  std::string name;
  std::string params;
  bool pass = false;
  std::uint64_t examined = 0;
  std::optional<Witness> witness;
  std::optional<int> value;  // e.g. measured distance or uniformity
  /// Knill-Laflamme diagonal table: operators with nonzero f, in enumeration
  /// order, plus the count of operators whose f vanished.
  std::vector<std::pair<std::string, std::string>> f_nonzero;
  std::uint64_t f_zero_count = 0;
  double elapsed_ms = 0.0;  // informational; never serialized
};

struct VerifyOptions {
  std::uint64_t budget = kDefaultBudget;
  bool skip_distance = false;
  /// Cap on the Knill-Laflamme sweep weight in run_all: -1 sweeps the full
  /// d-1, 0 skips the sweep, otherwise min(cap, d-1).
  int kl_max_weight = -1;
  enum class DistanceMethod { Auto, Overlap, Symplectic } method = DistanceMethod::Auto;
  int threads = 0;  // 0 = worker_thread_count()
};

struct VerificationReport {
  std::string code_label;
  std::uint64_t budget = kDefaultBudget;
  bool skip_distance = false;
  int kl_max_weight = -1;
  std::string distance_method = "auto";
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

/// S_i |psi_m> = |psi_m> exactly for every generator and codeword, plus
/// pairwise commutation and GF(q)-independence of the generators.
CheckResult check_stabilizes(const QuantumCode& code);

/// Equal support sizes and pairwise vanishing inner products.
CheckResult check_orthonormal(const QuantumCode& code);

/*
 * Logical operator algebra: every logical commutes with every stabilizer;
 * each X/Z pair anticommutes (nonzero diagonal symplectic pairing) and the
 * full pairing matrix is invertible over GF(q); X_i shifts codeword index
 * m_i -> m_i + 1 exactly at the state level; each Z_j acts on every codeword
 * as a pure w-phase. The pairing matrix is recorded in the result detail.
 */
CheckResult check_logical_algebra(const QuantumCode& code);

/*
 * Knill-Laflamme sweep over every phase-free Pauli W with
 * 1 <= wt(W) <= d-1: off-diagonal <psi_m|W|psi_m'> must vanish and the
 * diagonal must not depend on m; the common diagonal is recorded as f(W).
 * For k_logical = 0 the requirement is f(W) = 0, matching the distance
 * convention for [[n,0,d]] codes.
 */
CheckResult check_knill_laflamme(const QuantumCode& code, int d, const VerifyOptions& options = {});

/// Uniformity of the codewords against an expected value; checks every
/// codeword when the estimated work fits the budget, otherwise the base
/// codeword only (local unitaries preserve uniformity).
CheckResult check_codeword_uniformity(const QuantumCode& code, int expected_uniformity,
                                      const VerifyOptions& options = {});

/*
 * Code distance. The overlap method ascends in weight and returns the first
 * weight whose Knill-Laflamme sweep fails. The symplectic method returns the
 * minimum weight of a Pauli commuting with every stabilizer yet outside the
 * stabilizer group (inside it for k_logical = 0). Auto picks overlap up to
 * n = 6 and symplectic beyond.
 */
int code_distance(const QuantumCode& code, const VerifyOptions& options = {});

/// code_distance wrapped as a pass/fail check against distance_claimed.
CheckResult check_distance(const QuantumCode& code, const VerifyOptions& options = {});

/// Expected codeword uniformity per construction: min(k, n-k) for seeds,
/// k - r after shortening, floor(n/2) for the modified construction.
int expected_uniformity(const QuantumCode& code);

/// The full default suite in a fixed order.
VerificationReport run_all(const QuantumCode& code, const VerifyOptions& options = {});

}  // namespace qf
