#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qf/codes.hpp"
#include "qf/common.hpp"
#include "qf/pauli.hpp"
#include "qf/states.hpp"

namespace qf {

/// How a QuantumCode was produced; stored so records are self-describing and
/// reproducible (the primitive element matters for the derived matrices).
struct Provenance {
  std::string construction;  // "ame" | "shorten" | "mod-shorten"
  int q = 0;
  int gamma = 0;
  int seed_k = 0;
  int seed_n = 0;
  int r = 0;
  bool trim_logical_x = false;
};

/*
 * Stabilizer code [[n, k_logical, d]]_q held together with everything the
 * verifier needs: the explicit codewords (indexed by the logical m-string in
 * lexicographic order, first digit outermost), the logical X/Z pairs, and a
 * generating set for the stabilizer group. Immutable once built.
 */
struct QuantumCode {
  PrimeField field;
  int n = 0;
  int k_logical = 0;
  int distance_claimed = 0;
  std::vector<CodeState> codewords;
  std::vector<PauliString> logical_x;
  std::vector<PauliString> logical_z;
  std::vector<PauliString> stabilizers;
  Provenance provenance;
  GeneratorMatrix seed_generator;

  int correctable_errors() const { return (distance_claimed - 1) / 2; }
  std::string label() const;
};

/*
 * The [[n, 0, min(k, n-k)+1]]_q code whose single codeword is the uniform
 * codeword superposition of the MDS code G: k X-type generators from the
 * rows of G and n-k Z-type generators from the rows of H.
 */
QuantumCode kuniform_code(const GeneratorMatrix& g, std::uint64_t budget = kDefaultBudget);

/*
 * r-step shortening of the MDS seed G = [I_k | A] (1 <= r <= k-1): removes
 * the last r rows and the matching columns, yielding
 * [[n-r, r, min(k-r, n-k-r)+1]]_q. The logical X operators carry the removed
 * rows of A as exponents; the logical Z operators are rows n-k-r+1..n-k of H
 * with the removed columns deleted. Stabilizers come from code_stabilizers.
 *
 * With trim_logical_x set, each logical X keeps only its first k exponent
 * entries (a reduced-weight variant); the logical Z operators are then
 * re-solved so each pair still anticommutes.
 */
QuantumCode shorten(const GeneratorMatrix& g, int r, bool trim_logical_x = false,
                    std::uint64_t budget = kDefaultBudget);

/*
 * Stabilizer generators of the r-step shortened code: k-r X-type strings
 * (rows of the shortened generator) plus a basis of Z-type strings v H~ with
 * v ranging over the null space of the removed A rows, so that every
 * generator commutes with every logical X. Total n-2r generators.
 */
std::vector<PauliString> code_stabilizers(const GeneratorMatrix& g, int r,
                                          bool trim_logical_x = false);

/*
 * The weight-(ceil(n/2)) string that turns an AME seed into a code without
 * dropping a party: identity on the first floor(n/2) sites, X exponents from
 * row floor(n/2)+1 of the Singleton array (truncated to ceil(n/2)-1 entries),
 * and a single Z on site n. Defaults to n = q+1, the largest admissible size.
 */
PauliString mtilde(const PrimeField& field, int n = -1);

/*
 * [[n, 1, floor(n/2)]]_q from the AME seed state of mds_generator(q,
 * floor(n/2), n): codewords are mtilde^m applied to the seed state, the
 * logical X is mtilde, stabilizers are a maximal independent subset of the
 * seed stabilizer group commuting with mtilde (null-space solve over the
 * exponent representation), and the logical Z is a seed-group element with
 * nonzero symplectic pairing against mtilde, normalized to pairing 1.
 * Requires 4 <= n <= q+1; defaults to n = q+1.
 */
QuantumCode modified_shorten(const PrimeField& field, int n = -1,
                             std::uint64_t budget = kDefaultBudget);

}  // namespace qf
