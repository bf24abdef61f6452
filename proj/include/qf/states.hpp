#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qf/codes.hpp"
#include "qf/common.hpp"
#include "qf/field.hpp"
#include "qf/pauli.hpp"

namespace qf {

/*
 * Element of Z[w] for w = exp(2*pi*i/q), q prime, stored as the coefficient
 * vector of sum_j c_j w^j. For prime q the only Z-linear relation among the
 * powers of w is 1 + w + ... + w^{q-1} = 0, so subtracting the minimum
 * coefficient from every entry gives a canonical form and equality is
 * coefficient-wise. All public operations return canonical values.
 */
class CyclotomicInt {
 public:
  explicit CyclotomicInt(int q);
  static CyclotomicInt from_coeffs(int q, std::vector<long long> coeffs);
  static CyclotomicInt root_power(int q, int e);
  static CyclotomicInt integer(int q, long long v);

  int q() const { return q_; }
  const std::vector<long long>& coeffs() const { return c_; }

  CyclotomicInt add(const CyclotomicInt& o) const;
  CyclotomicInt sub(const CyclotomicInt& o) const;
  CyclotomicInt mul(const CyclotomicInt& o) const;
  CyclotomicInt negated() const;
  /// Complex conjugate: w^j -> w^{-j}.
  CyclotomicInt conj() const;

  bool is_zero() const;
  bool operator==(const CyclotomicInt& o) const { return q_ == o.q_ && c_ == o.c_; }

  std::string to_string() const;

 private:
  void canonicalize();
  int q_;
  std::vector<long long> c_;
};

/*
 * Unnormalized sparse state: a set of computational basis strings over
 * GF(q)^n, each carrying a phase exponent (amplitude w^phase). Terms are kept
 * sorted by string, site 0 most significant, so equality and inner products
 * are direct merges. Immutable after construction.
 */
class CodeState {
 public:
  CodeState(PrimeField field, int n);

  static CodeState from_terms(const PrimeField& field, int n,
                              const std::vector<std::pair<std::vector<int>, int>>& terms);

  const PrimeField& field() const { return field_; }
  int n() const { return n_; }
  std::size_t size() const { return keys_.size(); }

  std::uint64_t key(std::size_t t) const { return keys_[t]; }
  int phase(std::size_t t) const { return phases_[t]; }
  int digit(std::size_t t, int site) const { return digits_[t * n_ + site]; }
  std::vector<int> term_string(std::size_t t) const;

  /// Index of the term with this packed key, if present.
  std::optional<std::size_t> find(std::uint64_t key) const;

  std::uint64_t pack(const std::vector<int>& digits) const;
  std::uint64_t q_power(int i) const { return pow_[i]; }

  bool operator==(const CodeState& o) const {
    return field_.p() == o.field_.p() && n_ == o.n_ && keys_ == o.keys_ && phases_ == o.phases_;
  }

 private:
  friend CodeState apply(const PauliString& p, const CodeState& s);
  friend CodeState state_from_generator(const GeneratorMatrix& g, std::uint64_t budget);

  void finalize();  // sort by key, build digits, check distinctness

  PrimeField field_;
  int n_;
  std::vector<std::uint64_t> keys_;
  std::vector<int> phases_;
  std::vector<std::uint8_t> digits_;  // size() * n, aligned with keys_
  std::vector<std::uint64_t> pow_;    // q^(n-1-i) per site
};

/// Equally weighted superposition of all codewords of G, phases 0.
CodeState state_from_generator(const GeneratorMatrix& g, std::uint64_t budget = kDefaultBudget);

/// <a|b> = sum over common strings of w^{phase_b - phase_a}, exact.
CyclotomicInt inner_product(const CodeState& a, const CodeState& b);

/// P|s>: each string b maps to b + x sitewise, phase gains z.b + phase(P).
CodeState apply(const PauliString& p, const CodeState& s);

/*
 * Exact maximal-mixedness test of the reduced state on `subset`: builds the
 * reduced Gram matrix in Z[w] (grouping support strings by their complement
 * assignment) and checks it is a scalar multiple of the identity. Because
 * support strings are distinct, diagonal entries are plain multiplicities;
 * off-diagonal entries are cyclotomic sums that must cancel.
 */
bool marginal_is_maximally_mixed(const CodeState& s, const std::vector<int>& subset,
                                 std::uint64_t budget = kDefaultBudget);

struct UniformityOptions {
  std::uint64_t budget = kDefaultBudget;
  /// 0 = exhaustive; otherwise cap the subsets checked per size, drawn
  /// deterministically from the seeded generator below.
  int sample_per_size = 0;
  std::uint32_t sample_seed = 0x51e57a7e;
};

/// Largest u such that every size-u marginal (up to floor(n/2)) is maximally
/// mixed; 0 if some single site already fails. Scans sizes in increasing
/// order and stops at the first failure, which is exact because mixedness is
/// monotone under taking subsets.
int uniformity(const CodeState& s, const UniformityOptions& options = {});

}  // namespace qf
