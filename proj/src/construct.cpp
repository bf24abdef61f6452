#include "qf/construct.hpp"

#include <algorithm>
#include <sstream>

#include "qf/errors.hpp"

namespace qf {

std::string QuantumCode::label() const {
  std::ostringstream os;
  os << "[[" << n << "," << k_logical << "," << distance_claimed << "]]_" << field.p();
  return os.str();
}

namespace {

/// Z-type string with exponent vector v H for the given parity check.
PauliString z_from_dual_vector(const PrimeField& f, const MatrixGF& h, const std::vector<int>& v) {
  std::vector<int> z(h.cols(), 0);
  for (int j = 0; j < h.cols(); ++j) {
    long long acc = 0;
    for (int i = 0; i < h.rows(); ++i) acc += static_cast<long long>(v[i]) * h.at(i, j);
    z[j] = f.reduce(acc);
  }
  return PauliString::z_string(f, z);
}

/// Exponent vectors of the logical X operators of the r-step shortening:
/// row k-r+i of A placed after k-r leading identity sites, optionally
/// truncated to the first k entries.
std::vector<std::vector<int>> logical_x_exponents(const GeneratorMatrix& g, int r, bool trim) {
  int k = g.k(), n = g.n();
  MatrixGF a = g.a_block();
  std::vector<std::vector<int>> out;
  for (int i = 0; i < r; ++i) {
    std::vector<int> x(n - r, 0);
    int keep = trim ? std::min(k, n - k) : n - k;
    for (int j = 0; j < keep; ++j) x[k - r + j] = a.at(k - r + i, j);
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

QuantumCode kuniform_code(const GeneratorMatrix& g, std::uint64_t budget) {
  if (!is_mds(g)) throw NotMdsError("seed generator matrix is not MDS");
  const PrimeField& f = g.field();
  int k = g.k(), n = g.n();

  QuantumCode code{f, n, 0, std::min(k, n - k) + 1, {}, {}, {}, {}, {}, g};
  code.codewords.push_back(state_from_generator(g, budget));

  MatrixGF h = parity_check(g);
  for (int i = 0; i < k; ++i) {
    code.stabilizers.push_back(PauliString::x_string(f, g.matrix().row(i)));
  }
  for (int i = 0; i < n - k; ++i) {
    code.stabilizers.push_back(PauliString::z_string(f, h.row(i)));
  }
  code.provenance = {"ame", f.p(), f.gamma(), k, n, 0, false};
  return code;
}

std::vector<PauliString> code_stabilizers(const GeneratorMatrix& g, int r, bool trim_logical_x) {
  int k = g.k(), n = g.n();
  if (r < 1 || r > k - 1) throw OutOfRangeError("shortening steps r outside 1..k-1");
  const PrimeField& f = g.field();

  GeneratorMatrix gs = shorten_generator(g, r);
  MatrixGF hs = parity_check(gs);

  std::vector<PauliString> gens;
  for (int i = 0; i < k - r; ++i) {
    gens.push_back(PauliString::x_string(f, gs.matrix().row(i)));
  }

  // Z-type generators: v H~ must pay zero symplectic product against every
  // logical X, i.e. m_X . (v H~) = 0. With H~ = [-A~^T | I] that constraint
  // reduces to (removed A row restricted to the kept X entries) . v = 0.
  auto mx = logical_x_exponents(g, r, trim_logical_x);
  MatrixGF constraint(f, r, n - k);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < n - k; ++j) {
      constraint.set(i, j, mx[i][k - r + j]);
    }
  }
  for (const auto& v : null_space(constraint)) {
    gens.push_back(z_from_dual_vector(f, hs, v));
  }
  return gens;
}

QuantumCode shorten(const GeneratorMatrix& g, int r, bool trim_logical_x, std::uint64_t budget) {
  int k = g.k(), n = g.n();
  if (r < 1 || r > k - 1) throw OutOfRangeError("shortening steps r outside 1..k-1");
  if (!is_mds(g)) throw NotMdsError("seed generator matrix is not MDS");
  const PrimeField& f = g.field();
  int q = f.p();

  GeneratorMatrix gs = shorten_generator(g, r);
  MatrixGF hs = parity_check(gs);

  QuantumCode code{f, n - r, r, std::min(k - r, n - k - r) + 1, {}, {}, {}, {}, {}, g};

  for (const auto& x : logical_x_exponents(g, r, trim_logical_x)) {
    code.logical_x.push_back(PauliString::x_string(f, x));
  }

  if (!trim_logical_x) {
    // Logical Z_i: row n-k-r+i of the seed H with the removed columns
    // deleted, i.e. row n-k-r+i of the shortened H~.
    for (int i = 0; i < r; ++i) {
      code.logical_z.push_back(PauliString::z_string(f, hs.row(n - k - r + i)));
    }
  } else {
    // The trimmed logical X no longer touches the sites carrying the
    // standard Z rows, so solve for dual vectors v_j with
    // m_{X,i} . (v_j H~) = delta_{ij} instead.
    MatrixGF pairing(f, r, n - k);
    auto mx = logical_x_exponents(g, r, true);
    for (int i = 0; i < r; ++i) {
      for (int l = 0; l < n - k; ++l) {
        long long acc = 0;
        for (int j = 0; j < n - r; ++j) acc += static_cast<long long>(mx[i][j]) * hs.at(l, j);
        pairing.set(i, l, f.reduce(acc));
      }
    }
    for (int i = 0; i < r; ++i) {
      MatrixGF rhs(f, r, 1);
      rhs.set(i, 0, 1);
      RrefResult sol = rref(pairing.hstack(rhs));
      std::vector<int> v(n - k, 0);
      for (int row = 0; row < sol.rank; ++row) {
        int pc = sol.pivot_columns[row];
        if (pc >= n - k) throw Error("inconsistent trimmed logical pairing system");
        v[pc] = sol.matrix.at(row, n - k);
      }
      code.logical_z.push_back(z_from_dual_vector(f, hs, v));
    }
  }

  code.stabilizers = code_stabilizers(g, r, trim_logical_x);

  // Codewords indexed by the logical string m, first digit outermost.
  std::uint64_t count = 1;
  for (int i = 0; i < r; ++i) {
    count *= static_cast<std::uint64_t>(q);
  }
  CodeState base = state_from_generator(gs, budget);
  code.codewords.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    CodeState cw = base;
    std::uint64_t rem = idx;
    for (int i = r - 1; i >= 0; --i) {
      int mi = static_cast<int>(rem % q);
      rem /= q;
      for (int t = 0; t < mi; ++t) cw = apply(code.logical_x[i], cw);
    }
    code.codewords.push_back(std::move(cw));
  }

  code.provenance = {"shorten", q, f.gamma(), k, n, r, trim_logical_x};
  return code;
}

PauliString mtilde(const PrimeField& field, int n) {
  int q = field.p();
  if (n < 0) n = q + 1;
  if (n < 4 || n > q + 1) {
    throw OutOfRangeError("mtilde needs 4 <= n <= q+1, got n = " + std::to_string(n));
  }
  int half = n / 2;
  SingletonArray arr(field);
  std::vector<int> row = arr.row(half + 1);  // (1, a_half, ..., a_{q-2})
  std::vector<int> x(n, 0), z(n, 0);
  int xlen = (n + 1) / 2 - 1;
  for (int j = 0; j < xlen; ++j) x[half + j] = row[j];
  z[n - 1] = 1;
  return PauliString::from_exponents(field, std::move(x), std::move(z), 0);
}

QuantumCode modified_shorten(const PrimeField& field, int n, std::uint64_t budget) {
  int q = field.p();
  if (n < 0) n = q + 1;
  if (n < 4 || n > q + 1) {
    throw OutOfRangeError("modified shortening needs 4 <= n <= q+1, got n = " + std::to_string(n));
  }
  int k = n / 2;
  GeneratorMatrix g = mds_generator(field, k, n);
  MatrixGF h = parity_check(g);
  PauliString m = mtilde(field, n);

  QuantumCode code{field, n, 1, k, {}, {}, {}, {}, {}, g};
  code.logical_x.push_back(m);

  /*
   * Seed stabilizer group elements have exponents (u G | v H). Commuting
   * with mtilde means (v H).m_x - (u G).m_z = 0, one linear constraint on
   * (u, v) in GF(q)^n; its null space gives n-1 independent generators that
   * fix every codeword. The complementary direction (pairing != 0) supplies
   * the logical Z; a pure-Z solution always exists because m_x is not in
   * the row space of G.
   */
  std::vector<int> u_coeff(k), v_coeff(n - k);
  for (int i = 0; i < k; ++i) u_coeff[i] = field.neg(g.matrix().at(i, n - 1));  // -(G col n)
  for (int l = 0; l < n - k; ++l) {
    long long acc = 0;
    for (int j = 0; j < n; ++j) acc += static_cast<long long>(h.at(l, j)) * m.x(j);
    v_coeff[l] = field.reduce(acc);  // H m_x^T
  }
  MatrixGF constraint(field, 1, n);
  for (int i = 0; i < k; ++i) constraint.set(0, i, u_coeff[i]);
  for (int l = 0; l < n - k; ++l) constraint.set(0, k + l, v_coeff[l]);

  for (const auto& sol : null_space(constraint)) {
    std::vector<int> x(n, 0), z(n, 0);
    for (int j = 0; j < n; ++j) {
      long long xs = 0, zs = 0;
      for (int i = 0; i < k; ++i) xs += static_cast<long long>(sol[i]) * g.matrix().at(i, j);
      for (int l = 0; l < n - k; ++l) zs += static_cast<long long>(sol[k + l]) * h.at(l, j);
      x[j] = field.reduce(xs);
      z[j] = field.reduce(zs);
    }
    code.stabilizers.push_back(PauliString::from_exponents(field, std::move(x), std::move(z), 0));
  }

  // Logical Z: pure-Z seed element v H with symplectic(mtilde, Z) = 1.
  int pivot = -1;
  for (int l = 0; l < n - k; ++l) {
    if (v_coeff[l] != 0) {
      pivot = l;
      break;
    }
  }
  if (pivot < 0) throw Error("mtilde X part unexpectedly lies in the seed row space");
  // symplectic(m, vH-string) = -(v . v_coeff); want it to be 1.
  std::vector<int> v(n - k, 0);
  v[pivot] = field.neg(field.inv(v_coeff[pivot]));
  code.logical_z.push_back(z_from_dual_vector(field, h, v));

  CodeState phi = state_from_generator(g, budget);
  code.codewords.reserve(q);
  code.codewords.push_back(phi);
  for (int mexp = 1; mexp < q; ++mexp) {
    phi = apply(m, phi);
    code.codewords.push_back(phi);
  }

  code.provenance = {"mod-shorten", q, field.gamma(), k, n, 0, false};
  return code;
}

}  // namespace qf
