#pragma once

#include <cstdint>
#include <vector>

#include "qf/common.hpp"
#include "qf/field.hpp"

namespace qf {

/*
 * Singleton array over GF(q): the triangular Cauchy-type array with entries
 * a_i = 1/(1 - gamma^i). Row 1 is all ones; row i >= 2 is (1, a_{i-1}, ...,
 * a_{q-2}). Every square submatrix of any top-left rectangular block is
 * nonsingular, which is what makes the blocks usable as MDS generator
 * matrices [I | A].
 */
class SingletonArray {
 public:
  explicit SingletonArray(PrimeField field);

  const PrimeField& field() const { return field_; }

  /// Array entry a_i, 1-indexed, defined for 1 <= i <= q-2.
  int a(int i) const;

  /// Row i of the triangular array, 1-indexed. Row 1 holds q-1 ones; row q
  /// degenerates to (1).
  std::vector<int> row(int i) const;

  /// Top-left nrows x ncols block: entry (1,j) = 1, (i,1) = 1, and
  /// (i,j) = a_{i+j-3} for i,j >= 2. Requires nrows + ncols <= q+1 when
  /// nrows >= 2 so the corner entry exists.
  MatrixGF submatrix(int nrows, int ncols) const;

  int max_rows() const { return (field_.p() + 1) / 2; }
  int max_cols() const { return (field_.p() + 2) / 2; }

 private:
  PrimeField field_;
  std::vector<int> a_;
};

SingletonArray singleton_array(const PrimeField& field);

/// Generator matrix in standard form [I_k | A]. Construction validates the
/// identity block.
class GeneratorMatrix {
 public:
  explicit GeneratorMatrix(MatrixGF m);

  int k() const { return mat_.rows(); }
  int n() const { return mat_.cols(); }
  const PrimeField& field() const { return mat_.field(); }
  const MatrixGF& matrix() const { return mat_; }

  /// The k x (n-k) block right of the identity.
  MatrixGF a_block() const;

  bool operator==(const GeneratorMatrix& o) const { return mat_ == o.mat_; }

 private:
  MatrixGF mat_;
};

/// Classical code with generator G, parity check H = [-A^T | I], and the
/// Hamming distance claimed by the construction (0 when unknown).
struct ClassicalCode {
  GeneratorMatrix G;
  MatrixGF H;
  int claimed_hamming_distance;

  int n() const { return G.n(); }
  int k() const { return G.k(); }

  static ClassicalCode from_generator(GeneratorMatrix g, int claimed = 0);
};

/// MDS generator [I_k | A] with A the top-left block of the Singleton array.
/// Requires 1 <= k <= floor((q+1)/2) and k <= n <= q+1.
GeneratorMatrix mds_generator(const PrimeField& field, int k, int n);

/// H = [-A^T | I_{n-k}]; satisfies G H^T = 0.
MatrixGF parity_check(const GeneratorMatrix& g);

/// True iff every square submatrix of the A block is nonsingular
/// (equivalently, any <= k columns of G are independent).
bool is_mds(const GeneratorMatrix& g);

/// All q^k codewords v G in lexicographic order of the message vector v.
std::vector<std::vector<int>> enumerate_codewords(const GeneratorMatrix& g,
                                                  std::uint64_t budget = kDefaultBudget);

/// Minimum weight over nonzero codewords; equals the minimum pairwise
/// Hamming distance by linearity.
int min_hamming_distance(const ClassicalCode& code, std::uint64_t budget = kDefaultBudget);

/// Remove the last r rows and columns k-r+1..k: [I_{k-r} | A_{(k-r) x (n-k)}].
/// Requires 1 <= r <= k-1. MDS inputs stay MDS.
GeneratorMatrix shorten_generator(const GeneratorMatrix& g, int r);

/// Text form "q k n" header plus k rows; used by the CLI import/export path.
std::string write_matrix_text(const GeneratorMatrix& g);
GeneratorMatrix read_matrix_text(const std::string& text);

}  // namespace qf
