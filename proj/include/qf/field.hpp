#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qf/errors.hpp"

namespace qf {

/*
 * Prime field GF(p) for an odd prime p. Elements are plain ints kept reduced
 * to [0, p). The primitive element gamma is configurable because derived
 * constructions (Singleton arrays) depend on which generator is chosen; the
 * default is the smallest primitive root mod p.
 */
class PrimeField {
 public:
  explicit PrimeField(int p, std::optional<int> gamma = std::nullopt);

  int p() const { return p_; }
  int gamma() const { return gamma_; }

  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
  int mul(int a, int b) const { return (a * b) % p_; }
  int neg(int a) const { return (p_ - a % p_) % p_; }

  /// Reduce an arbitrary (possibly negative) integer into [0, p).
  int reduce(long long v) const {
    long long r = v % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }

  int pow(int base, long long e) const;

  /// Multiplicative inverse; throws DivisionByZeroError on 0.
  int inv(int a) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_ && gamma_ == o.gamma_; }

  static bool is_prime(int n);
  /// Exhaustive order check: true iff g generates the multiplicative group.
  static bool is_primitive_root(int g, int p);
  static int smallest_primitive_root(int p);

 private:
  int p_;
  int gamma_;
};

/// Dense row-major matrix over GF(p). Entries are always reduced.
class MatrixGF {
 public:
  MatrixGF(PrimeField field, int rows, int cols);
  static MatrixGF identity(const PrimeField& field, int n);
  static MatrixGF from_rows(const PrimeField& field, const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  int at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, int v) { data_[static_cast<size_t>(r) * cols_ + c] = field_.reduce(v); }

  std::vector<int> row(int r) const;
  std::vector<std::vector<int>> to_rows() const;

  MatrixGF transpose() const;
  MatrixGF negated() const;
  MatrixGF mul(const MatrixGF& other) const;
  /// [this | other] side by side.
  MatrixGF hstack(const MatrixGF& other) const;
  MatrixGF drop_last_rows(int count) const;
  MatrixGF drop_cols(int from, int count) const;
  MatrixGF submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;

  bool is_zero() const;
  bool operator==(const MatrixGF& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_.p() == o.field_.p() && data_ == o.data_;
  }

 private:
  PrimeField field_;
  int rows_;
  int cols_;
  std::vector<int> data_;
};

struct RrefResult {
  MatrixGF matrix;
  int rank;
  std::vector<int> pivot_columns;
};

/// Reduced row echelon form over GF(p); preserves the row space.
RrefResult rref(const MatrixGF& m);

int matrix_rank(const MatrixGF& m);

/// Canonical basis of {v : M v = 0}, one vector per free column of the RREF,
/// in increasing free-column order. Size is cols - rank.
std::vector<std::vector<int>> null_space(const MatrixGF& m);

/// True iff a square matrix has full rank; throws NotSquareError otherwise.
bool is_nonsingular(const MatrixGF& m);

}  // namespace qf
