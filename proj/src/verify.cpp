#include "qf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "qf/errors.hpp"

namespace qf {

int worker_thread_count() {
  if (const char* env = std::getenv("QECC_FORGE_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string cyclo_text(const CyclotomicInt& v) { return v.to_string(); }

/*
 * <psi_a| W |psi_b> accumulated exactly: walk the support of b, shift each
 * string by the X part of W (touching only the support sites of W), look the
 * shifted string up in a, and bucket the resulting w-phase. Cost is
 * |support| * (wt(W) + log |support|) per pair.
 */
CyclotomicInt pair_overlap(const CodeState& a, const CodeState& b, const PauliString& w,
                           const std::vector<int>& w_sites) {
  const PrimeField& f = a.field();
  int q = f.p();
  std::vector<long long> buckets(q, 0);
  for (std::size_t t = 0; t < b.size(); ++t) {
    std::uint64_t key = b.key(t);
    long long phase = b.phase(t) + w.phase();
    for (int site : w_sites) {
      int d = b.digit(t, site);
      phase += static_cast<long long>(w.z(site)) * d;
      int nd = f.add(d, w.x(site));
      key += (static_cast<std::uint64_t>(nd) - static_cast<std::uint64_t>(d)) * b.q_power(site);
    }
    auto hit = a.find(key);
    if (hit.has_value()) {
      int delta = f.reduce(phase - a.phase(*hit));
      buckets[delta] += 1;
    }
  }
  return CyclotomicInt::from_coeffs(q, std::move(buckets));
}

std::vector<int> support_sites(const PauliString& w) {
  std::vector<int> sites;
  for (int i = 0; i < w.n(); ++i) {
    if (w.x(i) != 0 || w.z(i) != 0) sites.push_back(i);
  }
  return sites;
}

/// Per-operator Knill-Laflamme test. Returns true when W satisfies the
/// conditions; on pass, f_out holds the measured common diagonal.
bool kl_op_holds(const QuantumCode& code, const PauliString& w, const std::vector<int>& w_sites,
                 CyclotomicInt& f_out, Witness& witness_out) {
  const auto& cw = code.codewords;
  int q = code.field.p();
  if (code.k_logical == 0) {
    CyclotomicInt f = pair_overlap(cw[0], cw[0], w, w_sites);
    f_out = f;
    if (!f.is_zero()) {
      witness_out = {pauli_to_text(w), 0, 0, "diagonal expectation " + cyclo_text(f) + " != 0"};
      return false;
    }
    return true;
  }
  CyclotomicInt f0 = pair_overlap(cw[0], cw[0], w, w_sites);
  for (std::size_t m = 1; m < cw.size(); ++m) {
    CyclotomicInt fm = pair_overlap(cw[m], cw[m], w, w_sites);
    if (!(fm == f0)) {
      witness_out = {pauli_to_text(w), 0, static_cast<int>(m),
                     "diagonal depends on m: " + cyclo_text(f0) + " vs " + cyclo_text(fm)};
      return false;
    }
  }
  for (std::size_t m = 0; m < cw.size(); ++m) {
    for (std::size_t mp = m + 1; mp < cw.size(); ++mp) {
      CyclotomicInt v = pair_overlap(cw[m], cw[mp], w, w_sites);
      if (!v.is_zero()) {
        witness_out = {pauli_to_text(w), static_cast<int>(m), static_cast<int>(mp),
                       "off-diagonal element " + cyclo_text(v) + " != 0"};
        return false;
      }
    }
  }
  f_out = f0;
  (void)q;
  return true;
}

struct SweepResult {
  bool pass = true;
  std::uint64_t examined = 0;
  std::uint64_t violation_index = UINT64_MAX;
  Witness witness;
  std::vector<std::tuple<std::uint64_t, std::string, std::string>> f_nonzero;
  std::uint64_t f_zero_count = 0;
};

/*
 * Strided multi-threaded sweep of the error enumeration: thread t handles
 * operator indices congruent to t mod T, so results are independent of the
 * thread count. The surviving violation is the one with the smallest
 * enumeration index. f tables are only meaningful when every operator
 * passes; they are merged back into enumeration order.
 */
SweepResult kl_sweep(const QuantumCode& code, int wmin, int wmax, const VerifyOptions& options) {
  SweepResult result;
  if (wmin > wmax || wmax < 1) return result;

  int q = code.field.p();
  std::uint64_t total = ErrorEnumerator::count(q, code.n, wmin, wmax);
  if (total > options.budget) {
    throw BudgetExceededError("Knill-Laflamme sweep needs " + std::to_string(total) +
                              " operators, budget is " + std::to_string(options.budget));
  }

  int threads = options.threads > 0 ? options.threads : worker_thread_count();
  threads = static_cast<int>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));

  std::atomic<std::uint64_t> min_violation{UINT64_MAX};
  std::vector<SweepResult> partial(threads);

  auto worker = [&](int tid) {
    SweepResult& local = partial[tid];
    ErrorEnumerator en(code.field, code.n, wmin, wmax);
    PauliString w(code.field, code.n);
    CyclotomicInt f(q);
    Witness witness;
    while (en.next(w)) {
      std::uint64_t idx = en.index();
      if (idx % static_cast<std::uint64_t>(threads) != static_cast<std::uint64_t>(tid)) continue;
      if (idx > min_violation.load(std::memory_order_relaxed)) break;
      std::vector<int> sites = support_sites(w);
      ++local.examined;
      if (!kl_op_holds(code, w, sites, f, witness)) {
        local.pass = false;
        local.violation_index = idx;
        local.witness = witness;
        // Publish so other threads can stop early; keep the smallest index.
        std::uint64_t cur = min_violation.load();
        while (idx < cur && !min_violation.compare_exchange_weak(cur, idx)) {
        }
        break;
      }
      if (f.is_zero()) {
        ++local.f_zero_count;
      } else {
        local.f_nonzero.emplace_back(idx, pauli_to_text(w), cyclo_text(f));
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  for (const auto& p : partial) {
    result.examined += p.examined;
    if (!p.pass && p.violation_index < result.violation_index) {
      result.pass = false;
      result.violation_index = p.violation_index;
      result.witness = p.witness;
    }
    result.f_zero_count += p.f_zero_count;
    result.f_nonzero.insert(result.f_nonzero.end(), p.f_nonzero.begin(), p.f_nonzero.end());
  }
  if (!result.pass) {
    result.f_nonzero.clear();
    result.f_zero_count = 0;
    result.examined = result.violation_index + 1;
  } else {
    std::sort(result.f_nonzero.begin(), result.f_nonzero.end());
    result.examined = total;
  }
  return result;
}

MatrixGF stabilizer_exponent_matrix(const QuantumCode& code) {
  MatrixGF m(code.field, static_cast<int>(code.stabilizers.size()), 2 * code.n);
  for (std::size_t i = 0; i < code.stabilizers.size(); ++i) {
    const PauliString& s = code.stabilizers[i];
    for (int j = 0; j < code.n; ++j) {
      m.set(static_cast<int>(i), j, s.x(j));
      m.set(static_cast<int>(i), code.n + j, s.z(j));
    }
  }
  return m;
}

int singleton_bound(const QuantumCode& code) { return (code.n - code.k_logical) / 2 + 1; }

int code_distance_overlap(const QuantumCode& code, const VerifyOptions& options,
                          std::uint64_t* examined) {
  int bound = singleton_bound(code);
  std::uint64_t swept = 0;
  for (int w = 1; w <= bound; ++w) {
    std::uint64_t this_weight = ErrorEnumerator::count(code.field.p(), code.n, w, w);
    if (swept + this_weight > options.budget) {
      throw BudgetExceededError("distance sweep at weight " + std::to_string(w) + " needs " +
                                std::to_string(swept + this_weight) + " operators, budget is " +
                                std::to_string(options.budget));
    }
    VerifyOptions o = options;
    SweepResult r = kl_sweep(code, w, w, o);
    swept += r.examined;
    if (!r.pass) {
      if (examined) *examined = swept;
      return w;
    }
  }
  throw Error("no Knill-Laflamme violation up to the quantum Singleton bound; " +
              std::string("input is not a valid [[n,k,d]] code object"));
}

int code_distance_symplectic(const QuantumCode& code, const VerifyOptions& options,
                             std::uint64_t* examined) {
  const PrimeField& f = code.field;
  MatrixGF stab = stabilizer_exponent_matrix(code);
  int stab_rank = matrix_rank(stab);
  std::uint64_t swept = 0;
  for (int w = 1; w <= code.n; ++w) {
    std::uint64_t this_weight = ErrorEnumerator::count(f.p(), code.n, w, w);
    if (swept + this_weight > options.budget) {
      throw BudgetExceededError("normalizer sweep at weight " + std::to_string(w) + " needs " +
                                std::to_string(swept + this_weight) + " operators, budget is " +
                                std::to_string(options.budget));
    }
    ErrorEnumerator en(f, code.n, w, w);
    PauliString cand(f, code.n);
    while (en.next(cand)) {
      ++swept;
      bool commutes = true;
      for (const PauliString& s : code.stabilizers) {
        if (symplectic(cand, s) != 0) {
          commutes = false;
          break;
        }
      }
      if (!commutes) continue;
      if (code.k_logical == 0) {
        // Normalizer equals the group: the first commuting operator is the
        // lowest-weight nonidentity stabilizer element.
        if (examined) *examined = swept;
        return w;
      }
      MatrixGF aug(f, stab.rows() + 1, 2 * code.n);
      for (int i = 0; i < stab.rows(); ++i) {
        for (int j = 0; j < 2 * code.n; ++j) aug.set(i, j, stab.at(i, j));
      }
      for (int j = 0; j < code.n; ++j) {
        aug.set(stab.rows(), j, cand.x(j));
        aug.set(stab.rows(), code.n + j, cand.z(j));
      }
      if (matrix_rank(aug) > stab_rank) {
        if (examined) *examined = swept;
        return w;  // commutes with everything but lies outside the group
      }
    }
  }
  throw Error("no normalizer element outside the stabilizer group up to weight n");
}

}  // namespace

CheckResult check_stabilizes(const QuantumCode& code) {
  auto t0 = Clock::now();
  CheckResult res{"stabilizer-fixing", "", true, 0, {}, {}, {}, 0, 0.0};
  for (std::size_t i = 0; i < code.stabilizers.size() && res.pass; ++i) {
    for (std::size_t m = 0; m < code.codewords.size(); ++m) {
      ++res.examined;
      CodeState mapped = apply(code.stabilizers[i], code.codewords[m]);
      if (!(mapped == code.codewords[m])) {
        res.pass = false;
        res.witness = Witness{pauli_to_text(code.stabilizers[i]), static_cast<int>(m), -1,
                              "generator " + std::to_string(i) + " does not fix codeword " +
                                  std::to_string(m)};
        break;
      }
    }
  }
  if (res.pass) {
    for (std::size_t i = 0; i < code.stabilizers.size() && res.pass; ++i) {
      for (std::size_t j = i + 1; j < code.stabilizers.size(); ++j) {
        ++res.examined;
        if (symplectic(code.stabilizers[i], code.stabilizers[j]) != 0) {
          res.pass = false;
          res.witness = Witness{pauli_to_text(code.stabilizers[i]), static_cast<int>(i),
                                static_cast<int>(j), "generators " + std::to_string(i) + " and " +
                                                         std::to_string(j) + " do not commute"};
          break;
        }
      }
    }
  }
  if (res.pass && !code.stabilizers.empty()) {
    MatrixGF m = stabilizer_exponent_matrix(code);
    if (matrix_rank(m) != m.rows()) {
      res.pass = false;
      res.witness = Witness{"", -1, -1, "stabilizer generators are linearly dependent"};
    }
  }
  res.elapsed_ms = ms_since(t0);
  return res;
}

CheckResult check_orthonormal(const QuantumCode& code) {
  auto t0 = Clock::now();
  CheckResult res{"codeword-orthonormality", "", true, 0, {}, {}, {}, 0, 0.0};
  const auto& cw = code.codewords;
  for (std::size_t m = 1; m < cw.size() && res.pass; ++m) {
    if (cw[m].size() != cw[0].size()) {
      res.pass = false;
      res.witness = Witness{"", static_cast<int>(m), 0, "support sizes differ"};
    }
  }
  for (std::size_t m = 0; m < cw.size() && res.pass; ++m) {
    for (std::size_t mp = m + 1; mp < cw.size(); ++mp) {
      ++res.examined;
      CyclotomicInt v = inner_product(cw[m], cw[mp]);
      if (!v.is_zero()) {
        res.pass = false;
        res.witness = Witness{"", static_cast<int>(m), static_cast<int>(mp),
                              "inner product " + cyclo_text(v) + " != 0"};
        break;
      }
    }
  }
  res.elapsed_ms = ms_since(t0);
  return res;
}

CheckResult check_logical_algebra(const QuantumCode& code) {
  auto t0 = Clock::now();
  CheckResult res{"logical-algebra", "", true, 0, {}, {}, {}, 0, 0.0};
  const PrimeField& f = code.field;
  int q = f.p();
  int kk = code.k_logical;
  if (kk == 0) {
    res.params = "no logicals (k=0)";
    res.elapsed_ms = ms_since(t0);
    return res;
  }
  if (static_cast<int>(code.logical_x.size()) != kk ||
      static_cast<int>(code.logical_z.size()) != kk) {
    res.pass = false;
    res.witness = Witness{"", -1, -1, "logical operator count != k"};
    res.elapsed_ms = ms_since(t0);
    return res;
  }

  for (int side = 0; side < 2 && res.pass; ++side) {
    const auto& logicals = side == 0 ? code.logical_x : code.logical_z;
    for (std::size_t i = 0; i < logicals.size() && res.pass; ++i) {
      for (const PauliString& s : code.stabilizers) {
        ++res.examined;
        if (symplectic(logicals[i], s) != 0) {
          res.pass = false;
          res.witness = Witness{pauli_to_text(logicals[i]), static_cast<int>(i), -1,
                                "logical does not commute with stabilizer " + pauli_to_text(s)};
          break;
        }
      }
    }
  }

  // Pairing matrix P_ij = symplectic(X_i, Z_j): nonzero diagonal and overall
  // invertibility. The off-diagonal entries are generically nonzero for the
  // matrices this construction produces (the A block has no zero entries),
  // so they are recorded rather than required to vanish.
  MatrixGF pairing(f, kk, kk);
  if (res.pass) {
    std::ostringstream ptext;
    ptext << "pairing=[";
    for (int i = 0; i < kk; ++i) {
      if (i) ptext << ";";
      for (int j = 0; j < kk; ++j) {
        int pij = symplectic(code.logical_x[i], code.logical_z[j]);
        pairing.set(i, j, pij);
        if (j) ptext << ",";
        ptext << pij;
      }
    }
    ptext << "]";
    res.params = ptext.str();
    for (int i = 0; i < kk && res.pass; ++i) {
      ++res.examined;
      if (pairing.at(i, i) == 0) {
        res.pass = false;
        res.witness = Witness{pauli_to_text(code.logical_x[i]), i, i,
                              "logical pair " + std::to_string(i) + " commutes"};
      }
    }
    if (res.pass && !is_nonsingular(pairing)) {
      res.pass = false;
      res.witness = Witness{"", -1, -1, "symplectic pairing matrix is singular"};
    }
  }

  // State-level action: X_i shifts digit i of the codeword index; Z_j fixes
  // every codeword up to a pure w-phase.
  if (res.pass) {
    std::uint64_t count = code.codewords.size();
    std::vector<std::uint64_t> stride(kk, 1);
    for (int i = kk - 2; i >= 0; --i) stride[i] = stride[i + 1] * q;
    for (int i = 0; i < kk && res.pass; ++i) {
      for (std::uint64_t idx = 0; idx < count && res.pass; ++idx) {
        int digit = static_cast<int>(idx / stride[i] % q);
        std::uint64_t target = digit == q - 1 ? idx - static_cast<std::uint64_t>(q - 1) * stride[i]
                                              : idx + stride[i];
        ++res.examined;
        CodeState mapped = apply(code.logical_x[i], code.codewords[idx]);
        if (!(mapped == code.codewords[target])) {
          res.pass = false;
          res.witness = Witness{pauli_to_text(code.logical_x[i]), static_cast<int>(idx),
                                static_cast<int>(target), "logical X does not shift the index"};
        }
      }
    }
    for (int j = 0; j < kk && res.pass; ++j) {
      for (std::uint64_t idx = 0; idx < count && res.pass; ++idx) {
        ++res.examined;
        CodeState mapped = apply(code.logical_z[j], code.codewords[idx]);
        const CodeState& orig = code.codewords[idx];
        bool eigen = mapped.size() == orig.size();
        int delta = 0;
        for (std::size_t t = 0; eigen && t < mapped.size(); ++t) {
          if (mapped.key(t) != orig.key(t)) {
            eigen = false;
            break;
          }
          int d = f.reduce(mapped.phase(t) - orig.phase(t));
          if (t == 0) {
            delta = d;
          } else if (d != delta) {
            eigen = false;
          }
        }
        if (!eigen) {
          res.pass = false;
          res.witness = Witness{pauli_to_text(code.logical_z[j]), static_cast<int>(idx), -1,
                                "logical Z is not a phase on this codeword"};
        }
      }
    }
  }
  res.elapsed_ms = ms_since(t0);
  return res;
}

CheckResult check_knill_laflamme(const QuantumCode& code, int d, const VerifyOptions& options) {
  auto t0 = Clock::now();
  CheckResult res{"knill-laflamme", "d=" + std::to_string(d), true, 0, {}, {}, {}, 0, 0.0};
  if (d <= 1) {
    res.params += " (vacuous)";
    res.elapsed_ms = ms_since(t0);
    return res;
  }
  SweepResult sweep = kl_sweep(code, 1, std::min(d - 1, code.n), options);
  res.pass = sweep.pass;
  res.examined = sweep.examined;
  if (!sweep.pass) {
    res.witness = sweep.witness;
  } else {
    res.f_zero_count = sweep.f_zero_count;
    for (const auto& [idx, op, fval] : sweep.f_nonzero) {
      (void)idx;
      res.f_nonzero.emplace_back(op, fval);
    }
  }
  res.elapsed_ms = ms_since(t0);
  return res;
}

int expected_uniformity(const QuantumCode& code) {
  const Provenance& p = code.provenance;
  if (p.construction == "shorten") return p.seed_k - p.r;
  if (p.construction == "mod-shorten") return code.n / 2;
  return std::min(p.seed_k, p.seed_n - p.seed_k);
}

CheckResult check_codeword_uniformity(const QuantumCode& code, int expected,
                                      const VerifyOptions& options) {
  auto t0 = Clock::now();
  CheckResult res{"codeword-uniformity", "expected=" + std::to_string(expected), true, 0, {}, {},
                  {}, 0, 0.0};

  // Marginal work estimate: codewords x subsets x support terms. When that
  // overflows the budget, check the base codeword only; the others are its
  // images under local Paulis, which preserve uniformity.
  double subsets = 0;
  for (int u = 1; u <= code.n / 2; ++u) {
    double c = 1;
    for (int i = 0; i < u; ++i) c = c * (code.n - i) / (i + 1);
    subsets += c;
  }
  double per_codeword = subsets * static_cast<double>(code.codewords[0].size());
  bool base_only =
      per_codeword * static_cast<double>(code.codewords.size()) > static_cast<double>(options.budget);
  std::size_t limit = base_only ? 1 : code.codewords.size();
  res.params += base_only ? " scope=base" : " scope=all";

  UniformityOptions uopt;
  uopt.budget = options.budget;
  for (std::size_t m = 0; m < limit && res.pass; ++m) {
    ++res.examined;
    int u = uniformity(code.codewords[m], uopt);
    res.value = u;
    if (u != expected) {
      res.pass = false;
      res.witness = Witness{"", static_cast<int>(m), -1,
                            "codeword " + std::to_string(m) + " has uniformity " +
                                std::to_string(u) + ", expected " + std::to_string(expected)};
    }
  }
  res.elapsed_ms = ms_since(t0);
  return res;
}

int code_distance(const QuantumCode& code, const VerifyOptions& options) {
  using Method = VerifyOptions::DistanceMethod;
  Method m = options.method;
  if (m == Method::Auto) m = code.n <= 6 ? Method::Overlap : Method::Symplectic;
  if (m == Method::Overlap) return code_distance_overlap(code, options, nullptr);
  return code_distance_symplectic(code, options, nullptr);
}

CheckResult check_distance(const QuantumCode& code, const VerifyOptions& options) {
  auto t0 = Clock::now();
  using Method = VerifyOptions::DistanceMethod;
  Method m = options.method;
  if (m == Method::Auto) m = code.n <= 6 ? Method::Overlap : Method::Symplectic;
  std::string method_name = m == Method::Overlap ? "overlap" : "symplectic";
  CheckResult res{"distance", "method=" + method_name, true, 0, {}, {}, {}, 0, 0.0};
  std::uint64_t examined = 0;
  int d;
  if (m == Method::Overlap) {
    d = code_distance_overlap(code, options, &examined);
  } else {
    d = code_distance_symplectic(code, options, &examined);
  }
  res.examined = examined;
  res.value = d;
  if (d != code.distance_claimed) {
    res.pass = false;
    res.witness = Witness{"", -1, -1, "measured distance " + std::to_string(d) +
                                          " != claimed " + std::to_string(code.distance_claimed)};
  }
  res.elapsed_ms = ms_since(t0);
  return res;
}

VerificationReport run_all(const QuantumCode& code, const VerifyOptions& options) {
  VerificationReport report;
  report.code_label = code.label();
  report.budget = options.budget;
  report.skip_distance = options.skip_distance;
  report.kl_max_weight = options.kl_max_weight;
  using Method = VerifyOptions::DistanceMethod;
  report.distance_method = options.method == Method::Auto        ? "auto"
                           : options.method == Method::Overlap   ? "overlap"
                                                                 : "symplectic";
  report.checks.push_back(check_stabilizes(code));
  report.checks.push_back(check_orthonormal(code));
  report.checks.push_back(check_logical_algebra(code));
  report.checks.push_back(check_codeword_uniformity(code, expected_uniformity(code), options));
  if (options.kl_max_weight != 0) {
    int d = code.distance_claimed;
    if (options.kl_max_weight > 0) d = std::min(d, options.kl_max_weight + 1);
    report.checks.push_back(check_knill_laflamme(code, d, options));
  }
  if (!options.skip_distance) {
    report.checks.push_back(check_distance(code, options));
  }
  return report;
}

}  // namespace qf
