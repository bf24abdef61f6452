#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qf/common.hpp"
#include "qf/field.hpp"

namespace qf {

/*
 * Generalized Pauli string on n qudits of prime dimension q, in exponent
 * representation: a global phase w^phase times the site-wise normal-ordered
 * product X^{x_i} Z^{z_i}, with w = exp(2*pi*i/q). Exponents and the phase
 * are kept reduced mod q. For odd prime q no extra sqrt(w) factor is needed,
 * so the phase group is exactly <w>.
 */
class PauliString {
 public:
  /// Identity on n sites.
  PauliString(PrimeField field, int n);

  static PauliString from_exponents(const PrimeField& field, std::vector<int> x,
                                    std::vector<int> z, int phase = 0);
  static PauliString x_string(const PrimeField& field, const std::vector<int>& exponents);
  static PauliString z_string(const PrimeField& field, const std::vector<int>& exponents);

  int n() const { return static_cast<int>(x_.size()); }
  const PrimeField& field() const { return field_; }
  int x(int i) const { return x_[i]; }
  int z(int i) const { return z_[i]; }
  int phase() const { return phase_; }
  const std::vector<int>& x_exp() const { return x_; }
  const std::vector<int>& z_exp() const { return z_; }

  /// Exponents as one length-2n vector (x | z); the symplectic coordinates.
  std::vector<int> symplectic_vector() const;

  bool is_identity() const;

  bool operator==(const PauliString& o) const {
    return field_.p() == o.field_.p() && x_ == o.x_ && z_ == o.z_ && phase_ == o.phase_;
  }

 private:
  PrimeField field_;
  std::vector<int> x_;
  std::vector<int> z_;
  int phase_;
};

/// Operator product P*Q. Exponents add; the phase picks up w^{P_z . Q_x}
/// from commuting the Z part of P past the X part of Q, per Z X = w X Z.
PauliString multiply(const PauliString& p, const PauliString& q);

/// P^m for m >= 0.
PauliString power(const PauliString& p, int m);

/// P_z . Q_x - P_x . Q_z mod q; zero iff P and Q commute, and in general
/// P Q = w^{symplectic(P,Q)} Q P.
int symplectic(const PauliString& p, const PauliString& q);

/// Number of sites with (x, z) != (0, 0).
int weight(const PauliString& p);

/*
 * Streams every phase-free Pauli string with weight in [wmin, wmax] exactly
 * once, in a fixed order: weight ascending, then site combinations in
 * lexicographic order, then per-site exponent pairs (x, z) != (0, 0) as a
 * lexicographic odometer with the first chosen site most significant.
 * Verification transcripts depend on this order being stable.
 */
class ErrorEnumerator {
 public:
  ErrorEnumerator(PrimeField field, int n, int wmin, int wmax);

  /// Closed-form count: sum over w of C(n, w) (q^2 - 1)^w.
  static std::uint64_t count(int q, int n, int wmin, int wmax);

  /// Writes the next operator into `out` (which must have matching field and
  /// n); returns false when exhausted.
  bool next(PauliString& out);

  /// Index of the last yielded operator, counted from 0.
  std::uint64_t index() const { return index_; }

  void reset();

 private:
  PrimeField field_;
  int n_;
  int wmin_;
  int wmax_;
  int w_;
  bool fresh_combo_;
  std::vector<int> sites_;
  std::vector<int> exps_;  // per chosen site, 1..q^2-1
  std::uint64_t index_;
};

/// Materialized list of all phase-free errors of weight 1..max_weight.
std::vector<PauliString> enumerate_errors(const PrimeField& field, int n, int max_weight,
                                          std::uint64_t budget = kDefaultBudget);

/// Canonical text form: site tokens "I", "X2", "Z1", "X1Z3" joined by ".".
std::string pauli_to_text(const PauliString& p);

/// Parses the canonical text form; accepts "." or the tensor sign as the
/// separator. The phase is not part of the text and defaults to 0.
PauliString pauli_from_text(const PrimeField& field, const std::string& text, int phase = 0);

}  // namespace qf
