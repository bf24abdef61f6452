#include "qf/field.hpp"

#include <algorithm>

namespace qf {

PrimeField::PrimeField(int p, std::optional<int> gamma) : p_(p), gamma_(0) {
  if (p < 3 || !is_prime(p)) {
    throw NotPrimeError("modulus must be an odd prime >= 3, got " + std::to_string(p));
  }
  if (gamma.has_value()) {
    int g = *gamma;
    if (g <= 0 || g >= p || !is_primitive_root(g, p)) {
      throw NotPrimitiveError("gamma = " + std::to_string(g) +
                              " does not generate the multiplicative group of GF(" +
                              std::to_string(p) + ")");
    }
    gamma_ = g;
  } else {
    gamma_ = smallest_primitive_root(p);
  }
}

int PrimeField::pow(int base, long long e) const {
  base = reduce(base);
  if (e < 0) {
    base = inv(base);
    e = -e;
  }
  long long acc = 1, b = base;
  while (e > 0) {
    if (e & 1) acc = acc * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<int>(acc);
}

int PrimeField::inv(int a) const {
  a = reduce(a);
  if (a == 0) throw DivisionByZeroError("inverse of 0 in GF(" + std::to_string(p_) + ")");
  return pow(a, p_ - 2);
}

bool PrimeField::is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool PrimeField::is_primitive_root(int g, int p) {
  g = ((g % p) + p) % p;
  if (g == 0) return false;
  // Walk the powers; g is primitive iff none of g^1..g^{p-2} is 1.
  long long acc = g;
  for (int k = 1; k <= p - 2; ++k) {
    if (acc == 1) return false;
    acc = acc * g % p;
  }
  return acc == 1;  // g^{p-1} = 1 by Fermat; sanity only
}

int PrimeField::smallest_primitive_root(int p) {
  for (int g = 2; g < p; ++g) {
    if (is_primitive_root(g, p)) return g;
  }
  throw NotPrimitiveError("no primitive root found mod " + std::to_string(p));
}

MatrixGF::MatrixGF(PrimeField field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw OutOfRangeError("negative matrix dimension");
}

MatrixGF MatrixGF::identity(const PrimeField& field, int n) {
  MatrixGF m(field, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixGF MatrixGF::from_rows(const PrimeField& field, const std::vector<std::vector<int>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  MatrixGF m(field, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) {
      throw DimensionMismatchError("ragged row list");
    }
    for (int j = 0; j < c; ++j) m.set(i, j, field.reduce(rows[i][j]));
  }
  return m;
}

std::vector<int> MatrixGF::row(int r) const {
  std::vector<int> out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = at(r, j);
  return out;
}

std::vector<std::vector<int>> MatrixGF::to_rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(rows_);
  for (int i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

MatrixGF MatrixGF::transpose() const {
  MatrixGF t(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
  return t;
}

MatrixGF MatrixGF::negated() const {
  MatrixGF m(field_, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(i, j, field_.neg(at(i, j)));
  return m;
}

MatrixGF MatrixGF::mul(const MatrixGF& other) const {
  if (cols_ != other.rows_ || field_.p() != other.field_.p()) {
    throw DimensionMismatchError("matrix product shape mismatch");
  }
  MatrixGF out(field_, rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < other.cols_; ++j) {
      long long acc = 0;
      for (int l = 0; l < cols_; ++l) acc += at(i, l) * other.at(l, j);
      out.set(i, j, field_.reduce(acc));
    }
  }
  return out;
}

MatrixGF MatrixGF::hstack(const MatrixGF& other) const {
  if (rows_ != other.rows_ || field_.p() != other.field_.p()) {
    throw DimensionMismatchError("hstack row mismatch");
  }
  MatrixGF out(field_, rows_, cols_ + other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
    for (int j = 0; j < other.cols_; ++j) out.set(i, cols_ + j, other.at(i, j));
  }
  return out;
}

MatrixGF MatrixGF::drop_last_rows(int count) const {
  if (count < 0 || count > rows_) throw OutOfRangeError("drop_last_rows count");
  MatrixGF out(field_, rows_ - count, cols_);
  for (int i = 0; i < rows_ - count; ++i)
    for (int j = 0; j < cols_; ++j) out.set(i, j, at(i, j));
  return out;
}

MatrixGF MatrixGF::drop_cols(int from, int count) const {
  if (from < 0 || count < 0 || from + count > cols_) throw OutOfRangeError("drop_cols range");
  MatrixGF out(field_, rows_, cols_ - count);
  for (int i = 0; i < rows_; ++i) {
    int oj = 0;
    for (int j = 0; j < cols_; ++j) {
      if (j >= from && j < from + count) continue;
      out.set(i, oj++, at(i, j));
    }
  }
  return out;
}

MatrixGF MatrixGF::submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
  MatrixGF out(field_, static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (size_t i = 0; i < row_idx.size(); ++i)
    for (size_t j = 0; j < col_idx.size(); ++j) out.set(static_cast<int>(i), static_cast<int>(j), at(row_idx[i], col_idx[j]));
  return out;
}

bool MatrixGF::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](int v) { return v == 0; });
}

RrefResult rref(const MatrixGF& m) {
  MatrixGF r = m;
  const PrimeField& f = m.field();
  int rows = m.rows(), cols = m.cols();
  std::vector<int> pivots;
  int pr = 0;
  for (int c = 0; c < cols && pr < rows; ++c) {
    int sel = -1;
    for (int i = pr; i < rows; ++i) {
      if (r.at(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pr) {
      for (int j = 0; j < cols; ++j) {
        int tmp = r.at(pr, j);
        r.set(pr, j, r.at(sel, j));
        r.set(sel, j, tmp);
      }
    }
    int scale = f.inv(r.at(pr, c));
    for (int j = 0; j < cols; ++j) r.set(pr, j, f.mul(scale, r.at(pr, j)));
    for (int i = 0; i < rows; ++i) {
      if (i == pr) continue;
      int factor = r.at(i, c);
      if (factor == 0) continue;
      for (int j = 0; j < cols; ++j) {
        r.set(i, j, f.sub(r.at(i, j), f.mul(factor, r.at(pr, j))));
      }
    }
    pivots.push_back(c);
    ++pr;
  }
  return {r, pr, pivots};
}

int matrix_rank(const MatrixGF& m) { return rref(m).rank; }

std::vector<std::vector<int>> null_space(const MatrixGF& m) {
  RrefResult rr = rref(m);
  const PrimeField& f = m.field();
  int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : rr.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<int> v(cols, 0);
    v[free] = 1;
    for (int i = 0; i < rr.rank; ++i) {
      v[rr.pivot_columns[i]] = f.neg(rr.matrix.at(i, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

bool is_nonsingular(const MatrixGF& m) {
  if (m.rows() != m.cols()) throw NotSquareError("is_nonsingular needs a square matrix");
  return matrix_rank(m) == m.rows();
}

}  // namespace qf
