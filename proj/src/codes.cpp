#include "qf/codes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace qf {

namespace {

/// q^k with an overflow-safe budget comparison.
std::uint64_t checked_pow(int q, int k, std::uint64_t budget) {
  std::uint64_t v = 1;
  for (int i = 0; i < k; ++i) {
    if (v > budget / q) {
      throw BudgetExceededError("q^k = " + std::to_string(q) + "^" + std::to_string(k) +
                                " exceeds budget " + std::to_string(budget));
    }
    v *= static_cast<std::uint64_t>(q);
  }
  return v;
}

}  // namespace

SingletonArray::SingletonArray(PrimeField field) : field_(field) {
  int q = field_.p();
  a_.reserve(q - 2);
  int gp = 1;
  for (int i = 1; i <= q - 2; ++i) {
    gp = field_.mul(gp, field_.gamma());
    a_.push_back(field_.inv(field_.sub(1, gp)));  // gamma^i != 1 for i < q-1
  }
}

int SingletonArray::a(int i) const {
  if (i < 1 || i > field_.p() - 2) {
    throw OutOfRangeError("Singleton array entry a_" + std::to_string(i));
  }
  return a_[i - 1];
}

std::vector<int> SingletonArray::row(int i) const {
  int q = field_.p();
  if (i < 1 || i > q) throw OutOfRangeError("Singleton array row " + std::to_string(i));
  if (i == 1) return std::vector<int>(q - 1, 1);
  std::vector<int> out{1};
  for (int j = i - 1; j <= q - 2; ++j) out.push_back(a(j));
  return out;
}

MatrixGF SingletonArray::submatrix(int nrows, int ncols) const {
  int q = field_.p();
  if (nrows < 1 || ncols < 1) throw OutOfRangeError("Singleton submatrix dimensions");
  if (nrows >= 2 && nrows + ncols > q + 1) {
    throw OutOfRangeError("Singleton submatrix " + std::to_string(nrows) + "x" +
                          std::to_string(ncols) + " leaves the array over GF(" +
                          std::to_string(q) + ")");
  }
  if (nrows == 1 && ncols > q) throw OutOfRangeError("Singleton submatrix too wide");
  MatrixGF m(field_, nrows, ncols);
  for (int i = 1; i <= nrows; ++i) {
    for (int j = 1; j <= ncols; ++j) {
      int v = (i == 1 || j == 1) ? 1 : a(i + j - 3);
      m.set(i - 1, j - 1, v);
    }
  }
  return m;
}

SingletonArray singleton_array(const PrimeField& field) { return SingletonArray(field); }

GeneratorMatrix::GeneratorMatrix(MatrixGF m) : mat_(std::move(m)) {
  int k = mat_.rows(), n = mat_.cols();
  if (k > n) throw NotStandardFormError("generator matrix has more rows than columns");
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (mat_.at(i, j) != (i == j ? 1 : 0)) {
        throw NotStandardFormError("left block is not the identity");
      }
    }
  }
}

MatrixGF GeneratorMatrix::a_block() const { return mat_.drop_cols(0, k()); }

ClassicalCode ClassicalCode::from_generator(GeneratorMatrix g, int claimed) {
  MatrixGF h = parity_check(g);
  return ClassicalCode{std::move(g), std::move(h), claimed};
}

GeneratorMatrix mds_generator(const PrimeField& field, int k, int n) {
  int q = field.p();
  if (k < 1 || k > (q + 1) / 2) {
    throw OutOfRangeError("k = " + std::to_string(k) + " outside 1..floor((q+1)/2) for q = " +
                          std::to_string(q));
  }
  if (n < k || n > q + 1) {
    throw OutOfRangeError("n = " + std::to_string(n) + " outside k..q+1 for q = " +
                          std::to_string(q));
  }
  MatrixGF id = MatrixGF::identity(field, k);
  if (n == k) return GeneratorMatrix(id);
  MatrixGF a = SingletonArray(field).submatrix(k, n - k);
  return GeneratorMatrix(id.hstack(a));
}

MatrixGF parity_check(const GeneratorMatrix& g) {
  int k = g.k(), n = g.n();
  const PrimeField& f = g.field();
  if (n == k) return MatrixGF(f, 0, n);
  MatrixGF neg_at = g.a_block().transpose().negated();
  return neg_at.hstack(MatrixGF::identity(f, n - k));
}

bool is_mds(const GeneratorMatrix& g) {
  MatrixGF a = g.a_block();
  int kk = a.rows(), m = a.cols();
  for (int s = 1; s <= std::min(kk, m); ++s) {
    std::vector<int> rows = first_combination(s);
    do {
      std::vector<int> cols = first_combination(s);
      do {
        if (!is_nonsingular(a.submatrix(rows, cols))) return false;
      } while (next_combination(cols, m));
    } while (next_combination(rows, kk));
  }
  return true;
}

std::vector<std::vector<int>> enumerate_codewords(const GeneratorMatrix& g, std::uint64_t budget) {
  const PrimeField& f = g.field();
  int q = f.p(), k = g.k(), n = g.n();
  std::uint64_t total = checked_pow(q, k, budget);

  std::vector<std::vector<int>> out;
  out.reserve(total);
  std::vector<int> current(n, 0);
  std::vector<int> digits(k, 0);
  out.push_back(current);
  // Odometer over the message vector: incrementing digit j (and wrapping the
  // trailing q-1 digits to 0) changes the codeword by adding row j once and
  // each wrapped row once, since -(q-1) = 1 mod q.
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    int j = k - 1;
    while (digits[j] == q - 1) {
      digits[j] = 0;
      --j;
    }
    ++digits[j];
    for (int l = j; l < k; ++l) {
      for (int c = 0; c < n; ++c) current[c] = f.add(current[c], g.matrix().at(l, c));
    }
    out.push_back(current);
  }
  return out;
}

int min_hamming_distance(const ClassicalCode& code, std::uint64_t budget) {
  auto words = enumerate_codewords(code.G, budget);
  int best = code.n() + 1;
  for (const auto& w : words) {
    int wt = 0;
    for (int v : w) wt += (v != 0);
    if (wt > 0) best = std::min(best, wt);
  }
  return best == code.n() + 1 ? 0 : best;
}

GeneratorMatrix shorten_generator(const GeneratorMatrix& g, int r) {
  int k = g.k();
  if (r < 1 || r > k - 1) {
    throw OutOfRangeError("shortening steps r = " + std::to_string(r) + " outside 1..k-1");
  }
  MatrixGF m = g.matrix().drop_last_rows(r).drop_cols(k - r, r);
  return GeneratorMatrix(std::move(m));
}

std::string write_matrix_text(const GeneratorMatrix& g) {
  std::ostringstream os;
  os << g.field().p() << " " << g.k() << " " << g.n() << "\n";
  for (int i = 0; i < g.k(); ++i) {
    for (int j = 0; j < g.n(); ++j) {
      if (j) os << " ";
      os << g.matrix().at(i, j);
    }
    os << "\n";
  }
  return os.str();
}

GeneratorMatrix read_matrix_text(const std::string& text) {
  std::istringstream is(text);
  int q, k, n;
  if (!(is >> q >> k >> n)) throw ParseError("matrix text: bad header, expected 'q k n'");
  PrimeField f(q);
  MatrixGF m(f, k, n);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) {
      int v;
      if (!(is >> v)) throw ParseError("matrix text: missing entries");
      m.set(i, j, f.reduce(v));
    }
  }
  return GeneratorMatrix(std::move(m));
}

}  // namespace qf
