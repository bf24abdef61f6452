#include "qf/states.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "qf/errors.hpp"

namespace qf {

CyclotomicInt::CyclotomicInt(int q) : q_(q), c_(q, 0) {
  if (q < 2) throw OutOfRangeError("cyclotomic order must be >= 2");
}

CyclotomicInt CyclotomicInt::from_coeffs(int q, std::vector<long long> coeffs) {
  if (static_cast<int>(coeffs.size()) != q) {
    throw DimensionMismatchError("cyclotomic coefficient length != q");
  }
  CyclotomicInt v(q);
  v.c_ = std::move(coeffs);
  v.canonicalize();
  return v;
}

CyclotomicInt CyclotomicInt::root_power(int q, int e) {
  CyclotomicInt v(q);
  v.c_[((e % q) + q) % q] = 1;
  v.canonicalize();
  return v;
}

CyclotomicInt CyclotomicInt::integer(int q, long long value) {
  CyclotomicInt v(q);
  v.c_[0] = value;
  v.canonicalize();
  return v;
}

void CyclotomicInt::canonicalize() {
  long long m = *std::min_element(c_.begin(), c_.end());
  if (m != 0) {
    for (auto& x : c_) x -= m;
  }
}

CyclotomicInt CyclotomicInt::add(const CyclotomicInt& o) const {
  if (q_ != o.q_) throw DimensionMismatchError("cyclotomic order mismatch");
  CyclotomicInt v(q_);
  for (int i = 0; i < q_; ++i) v.c_[i] = c_[i] + o.c_[i];
  v.canonicalize();
  return v;
}

CyclotomicInt CyclotomicInt::sub(const CyclotomicInt& o) const { return add(o.negated()); }

CyclotomicInt CyclotomicInt::mul(const CyclotomicInt& o) const {
  if (q_ != o.q_) throw DimensionMismatchError("cyclotomic order mismatch");
  CyclotomicInt v(q_);
  for (int i = 0; i < q_; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < q_; ++j) {
      v.c_[(i + j) % q_] += c_[i] * o.c_[j];
    }
  }
  v.canonicalize();
  return v;
}

CyclotomicInt CyclotomicInt::negated() const {
  CyclotomicInt v(q_);
  for (int i = 0; i < q_; ++i) v.c_[i] = -c_[i];
  v.canonicalize();
  return v;
}

CyclotomicInt CyclotomicInt::conj() const {
  CyclotomicInt v(q_);
  for (int i = 0; i < q_; ++i) v.c_[(q_ - i) % q_] = c_[i];
  v.canonicalize();
  return v;
}

bool CyclotomicInt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](long long x) { return x == 0; });
}

std::string CyclotomicInt::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < q_; ++i) {
    if (i) os << ",";
    os << c_[i];
  }
  os << "]";
  return os.str();
}

CodeState::CodeState(PrimeField field, int n) : field_(field), n_(n) {
  if (n < 0) throw OutOfRangeError("negative site count");
  pow_.resize(n);
  std::uint64_t p = 1;
  for (int i = n - 1; i >= 0; --i) {
    pow_[i] = p;
    p *= static_cast<std::uint64_t>(field.p());
  }
}

std::uint64_t CodeState::pack(const std::vector<int>& digits) const {
  std::uint64_t key = 0;
  for (int i = 0; i < n_; ++i) key += static_cast<std::uint64_t>(digits[i]) * pow_[i];
  return key;
}

void CodeState::finalize() {
  std::vector<std::size_t> order(keys_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return keys_[a] < keys_[b]; });
  std::vector<std::uint64_t> keys(keys_.size());
  std::vector<int> phases(keys_.size());
  std::vector<std::uint8_t> digits(keys_.size() * n_);
  for (std::size_t t = 0; t < order.size(); ++t) {
    keys[t] = keys_[order[t]];
    phases[t] = phases_[order[t]];
    std::uint64_t rem = keys[t];
    for (int i = 0; i < n_; ++i) {
      digits[t * n_ + i] = static_cast<std::uint8_t>(rem / pow_[i]);
      rem %= pow_[i];
    }
  }
  for (std::size_t t = 1; t < keys.size(); ++t) {
    if (keys[t] == keys[t - 1]) throw Error("duplicate support string in state");
  }
  keys_ = std::move(keys);
  phases_ = std::move(phases);
  digits_ = std::move(digits);
}

CodeState CodeState::from_terms(const PrimeField& field, int n,
                                const std::vector<std::pair<std::vector<int>, int>>& terms) {
  CodeState s(field, n);
  s.keys_.reserve(terms.size());
  s.phases_.reserve(terms.size());
  for (const auto& [digits, phase] : terms) {
    if (static_cast<int>(digits.size()) != n) {
      throw DimensionMismatchError("term string length != n");
    }
    std::vector<int> reduced(n);
    for (int i = 0; i < n; ++i) reduced[i] = field.reduce(digits[i]);
    s.keys_.push_back(s.pack(reduced));
    s.phases_.push_back(field.reduce(phase));
  }
  s.finalize();
  return s;
}

std::vector<int> CodeState::term_string(std::size_t t) const {
  std::vector<int> out(n_);
  for (int i = 0; i < n_; ++i) out[i] = digit(t, i);
  return out;
}

std::optional<std::size_t> CodeState::find(std::uint64_t key) const {
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - keys_.begin());
}

CodeState state_from_generator(const GeneratorMatrix& g, std::uint64_t budget) {
  auto words = enumerate_codewords(g, budget);
  CodeState s(g.field(), g.n());
  s.keys_.reserve(words.size());
  s.phases_.assign(words.size(), 0);
  for (const auto& w : words) s.keys_.push_back(s.pack(w));
  s.finalize();
  return s;
}

CyclotomicInt inner_product(const CodeState& a, const CodeState& b) {
  if (a.field().p() != b.field().p() || a.n() != b.n()) {
    throw DimensionMismatchError("inner product shape mismatch");
  }
  int q = a.field().p();
  std::vector<long long> buckets(q, 0);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a.key(i) < b.key(j)) {
      ++i;
    } else if (a.key(i) > b.key(j)) {
      ++j;
    } else {
      int d = b.phase(j) - a.phase(i);
      buckets[((d % q) + q) % q] += 1;
      ++i;
      ++j;
    }
  }
  return CyclotomicInt::from_coeffs(q, std::move(buckets));
}

CodeState apply(const PauliString& p, const CodeState& s) {
  if (p.field().p() != s.field().p() || p.n() != s.n()) {
    throw DimensionMismatchError("operator/state shape mismatch");
  }
  const PrimeField& f = s.field();
  CodeState out(f, s.n());
  out.keys_.reserve(s.size());
  out.phases_.reserve(s.size());
  std::vector<int> digits(s.n());
  for (std::size_t t = 0; t < s.size(); ++t) {
    long long phase = s.phase(t) + p.phase();
    for (int i = 0; i < s.n(); ++i) {
      int d = s.digit(t, i);
      phase += static_cast<long long>(p.z(i)) * d;
      digits[i] = f.add(d, p.x(i));
    }
    out.keys_.push_back(out.pack(digits));
    out.phases_.push_back(f.reduce(phase));
  }
  out.finalize();
  return out;
}

namespace {

struct MarginalEntry {
  std::uint64_t complement_key;
  std::uint64_t subset_key;
  int phase;
};

}  // namespace

bool marginal_is_maximally_mixed(const CodeState& s, const std::vector<int>& subset,
                                 std::uint64_t budget) {
  int u = static_cast<int>(subset.size());
  if (u == 0) return true;
  int n = s.n();
  int q = s.field().p();
  for (int site : subset) {
    if (site < 0 || site >= n) throw OutOfRangeError("marginal subset site out of range");
  }

  std::uint64_t dim = 1;
  for (int i = 0; i < u; ++i) {
    if (dim > budget / q) {
      throw BudgetExceededError("marginal dimension q^" + std::to_string(u) +
                                " exceeds budget " + std::to_string(budget));
    }
    dim *= static_cast<std::uint64_t>(q);
  }

  // Fewer support strings than q^u means some diagonal entry is empty while
  // the trace is positive, so the marginal cannot be proportional to I.
  if (s.size() < dim) return false;

  std::vector<char> in_subset(n, 0);
  for (int site : subset) in_subset[site] = 1;

  std::vector<MarginalEntry> entries;
  entries.reserve(s.size());
  for (std::size_t t = 0; t < s.size(); ++t) {
    std::uint64_t ck = 0, sk = 0;
    for (int i = 0; i < n; ++i) {
      int d = s.digit(t, i);
      if (in_subset[i]) {
        sk = sk * q + static_cast<std::uint64_t>(d);
      } else {
        ck = ck * q + static_cast<std::uint64_t>(d);
      }
    }
    entries.push_back({ck, sk, s.phase(t)});
  }
  std::sort(entries.begin(), entries.end(), [](const MarginalEntry& a, const MarginalEntry& b) {
    if (a.complement_key != b.complement_key) return a.complement_key < b.complement_key;
    return a.subset_key < b.subset_key;
  });

  // Diagonal entries are multiplicities (distinct strings cannot repeat a
  // (complement, subset) pair); off-diagonal entries accumulate w-phases
  // from strings sharing a complement assignment and must all cancel.
  std::map<std::uint64_t, std::uint64_t> diag;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<long long>> offdiag;
  std::size_t lo = 0;
  while (lo < entries.size()) {
    std::size_t hi = lo;
    while (hi < entries.size() && entries[hi].complement_key == entries[lo].complement_key) ++hi;
    for (std::size_t i = lo; i < hi; ++i) {
      diag[entries[i].subset_key] += 1;
      for (std::size_t j = i + 1; j < hi; ++j) {
        auto& acc = offdiag[{entries[i].subset_key, entries[j].subset_key}];
        if (acc.empty()) acc.assign(q, 0);
        int d = entries[i].phase - entries[j].phase;  // <r_i| rho |r_j> ~ w^{p_i - p_j}
        acc[((d % q) + q) % q] += 1;
      }
    }
    lo = hi;
  }

  if (diag.size() != dim) return false;
  std::uint64_t first = diag.begin()->second;
  for (const auto& [key, count] : diag) {
    (void)key;
    if (count != first) return false;
  }
  for (auto& [key, coeffs] : offdiag) {
    (void)key;
    if (!CyclotomicInt::from_coeffs(q, std::move(coeffs)).is_zero()) return false;
  }
  return true;
}

int uniformity(const CodeState& s, const UniformityOptions& options) {
  int n = s.n();
  int max_u = n / 2;
  int best = 0;
  for (int u = 1; u <= max_u; ++u) {
    bool all_pass = true;
    double total = 1;
    for (int i = 0; i < u; ++i) total = total * (n - i) / (i + 1);
    bool sample = options.sample_per_size > 0 && total > options.sample_per_size;
    if (!sample) {
      std::vector<int> subset = first_combination(u);
      do {
        if (!marginal_is_maximally_mixed(s, subset, options.budget)) {
          all_pass = false;
          break;
        }
      } while (next_combination(subset, n));
    } else {
      // Distinct random subsets, deterministic per (seed, size).
      std::mt19937 rng(options.sample_seed + static_cast<std::uint32_t>(u));
      std::vector<int> sites(n);
      std::iota(sites.begin(), sites.end(), 0);
      std::set<std::vector<int>> chosen;
      while (static_cast<int>(chosen.size()) < options.sample_per_size) {
        std::shuffle(sites.begin(), sites.end(), rng);
        std::vector<int> subset(sites.begin(), sites.begin() + u);
        std::sort(subset.begin(), subset.end());
        chosen.insert(std::move(subset));
      }
      for (const auto& subset : chosen) {
        if (!marginal_is_maximally_mixed(s, subset, options.budget)) {
          all_pass = false;
          break;
        }
      }
    }
    if (!all_pass) break;
    best = u;
  }
  return best;
}

}  // namespace qf
