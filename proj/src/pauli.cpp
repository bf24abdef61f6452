#include "qf/pauli.hpp"

#include <algorithm>
#include <sstream>

#include "qf/errors.hpp"

namespace qf {

PauliString::PauliString(PrimeField field, int n)
    : field_(field), x_(n, 0), z_(n, 0), phase_(0) {
  if (n < 0) throw OutOfRangeError("negative site count");
}

PauliString PauliString::from_exponents(const PrimeField& field, std::vector<int> x,
                                        std::vector<int> z, int phase) {
  if (x.size() != z.size()) throw DimensionMismatchError("x/z exponent length mismatch");
  PauliString p(field, static_cast<int>(x.size()));
  for (size_t i = 0; i < x.size(); ++i) {
    p.x_[i] = field.reduce(x[i]);
    p.z_[i] = field.reduce(z[i]);
  }
  p.phase_ = field.reduce(phase);
  return p;
}

PauliString PauliString::x_string(const PrimeField& field, const std::vector<int>& exponents) {
  return from_exponents(field, exponents, std::vector<int>(exponents.size(), 0));
}

PauliString PauliString::z_string(const PrimeField& field, const std::vector<int>& exponents) {
  return from_exponents(field, std::vector<int>(exponents.size(), 0), exponents);
}

std::vector<int> PauliString::symplectic_vector() const {
  std::vector<int> v;
  v.reserve(2 * x_.size());
  v.insert(v.end(), x_.begin(), x_.end());
  v.insert(v.end(), z_.begin(), z_.end());
  return v;
}

bool PauliString::is_identity() const {
  if (phase_ != 0) return false;
  for (size_t i = 0; i < x_.size(); ++i) {
    if (x_[i] != 0 || z_[i] != 0) return false;
  }
  return true;
}

PauliString multiply(const PauliString& p, const PauliString& q) {
  if (p.field().p() != q.field().p() || p.n() != q.n()) {
    throw DimensionMismatchError("pauli product shape mismatch");
  }
  const PrimeField& f = p.field();
  int n = p.n();
  std::vector<int> x(n), z(n);
  long long phase = p.phase() + q.phase();
  for (int i = 0; i < n; ++i) {
    x[i] = f.add(p.x(i), q.x(i));
    z[i] = f.add(p.z(i), q.z(i));
    phase += p.z(i) * q.x(i);
  }
  return PauliString::from_exponents(f, std::move(x), std::move(z), f.reduce(phase));
}

PauliString power(const PauliString& p, int m) {
  if (m < 0) throw OutOfRangeError("negative pauli power");
  PauliString acc(p.field(), p.n());
  for (int i = 0; i < m; ++i) acc = multiply(acc, p);
  return acc;
}

int symplectic(const PauliString& p, const PauliString& q) {
  if (p.field().p() != q.field().p() || p.n() != q.n()) {
    throw DimensionMismatchError("symplectic product shape mismatch");
  }
  const PrimeField& f = p.field();
  long long acc = 0;
  for (int i = 0; i < p.n(); ++i) {
    acc += p.z(i) * q.x(i) - p.x(i) * q.z(i);
  }
  return f.reduce(acc);
}

int weight(const PauliString& p) {
  int w = 0;
  for (int i = 0; i < p.n(); ++i) w += (p.x(i) != 0 || p.z(i) != 0);
  return w;
}

ErrorEnumerator::ErrorEnumerator(PrimeField field, int n, int wmin, int wmax)
    : field_(field), n_(n), wmin_(wmin), wmax_(wmax) {
  if (wmin < 1 || wmax > n || wmin > wmax) {
    throw OutOfRangeError("error enumeration weight range");
  }
  reset();
}

void ErrorEnumerator::reset() {
  w_ = wmin_;
  sites_ = first_combination(w_);
  exps_.assign(w_, 1);
  fresh_combo_ = true;
  index_ = 0;
}

std::uint64_t ErrorEnumerator::count(int q, int n, int wmin, int wmax) {
  std::uint64_t total = 0;
  std::uint64_t per_site = static_cast<std::uint64_t>(q) * q - 1;
  for (int w = wmin; w <= wmax; ++w) {
    // C(n, w)
    std::uint64_t comb = 1;
    for (int i = 0; i < w; ++i) comb = comb * (n - i) / (i + 1);
    std::uint64_t exps = 1;
    for (int i = 0; i < w; ++i) exps *= per_site;
    total += comb * exps;
  }
  return total;
}

bool ErrorEnumerator::next(PauliString& out) {
  if (w_ > wmax_) return false;
  if (!fresh_combo_) {
    // Advance the exponent odometer (last site fastest), then the site
    // combination, then the weight.
    int q2 = field_.p() * field_.p();
    int j = w_ - 1;
    while (j >= 0 && exps_[j] == q2 - 1) {
      exps_[j] = 1;
      --j;
    }
    if (j >= 0) {
      ++exps_[j];
    } else {
      if (!next_combination(sites_, n_)) {
        ++w_;
        if (w_ > wmax_) return false;
        sites_ = first_combination(w_);
      }
      exps_.assign(w_, 1);
    }
    ++index_;
  } else {
    fresh_combo_ = false;
    index_ = 0;
  }

  int q = field_.p();
  std::vector<int> x(n_, 0), z(n_, 0);
  for (int i = 0; i < w_; ++i) {
    x[sites_[i]] = exps_[i] / q;
    z[sites_[i]] = exps_[i] % q;
  }
  out = PauliString::from_exponents(field_, std::move(x), std::move(z), 0);
  return true;
}

std::vector<PauliString> enumerate_errors(const PrimeField& field, int n, int max_weight,
                                          std::uint64_t budget) {
  std::uint64_t total = ErrorEnumerator::count(field.p(), n, 1, max_weight);
  if (total > budget) {
    throw BudgetExceededError("error enumeration needs " + std::to_string(total) +
                              " operators, budget is " + std::to_string(budget));
  }
  std::vector<PauliString> out;
  out.reserve(total);
  ErrorEnumerator en(field, n, 1, max_weight);
  PauliString p(field, n);
  while (en.next(p)) out.push_back(p);
  return out;
}

std::string pauli_to_text(const PauliString& p) {
  std::ostringstream os;
  for (int i = 0; i < p.n(); ++i) {
    if (i) os << ".";
    if (p.x(i) == 0 && p.z(i) == 0) {
      os << "I";
    } else {
      if (p.x(i) != 0) os << "X" << p.x(i);
      if (p.z(i) != 0) os << "Z" << p.z(i);
    }
  }
  return os.str();
}

namespace {

std::vector<std::string> split_sites(const std::string& text) {
  static const std::string kTensor = "\xE2\x8A\x97";  // UTF-8 circled times
  std::vector<std::string> tokens;
  std::string cur;
  for (size_t i = 0; i < text.size();) {
    if (text[i] == '.') {
      tokens.push_back(cur);
      cur.clear();
      ++i;
    } else if (text.compare(i, kTensor.size(), kTensor) == 0) {
      tokens.push_back(cur);
      cur.clear();
      i += kTensor.size();
    } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    } else {
      cur += text[i];
      ++i;
    }
  }
  tokens.push_back(cur);
  return tokens;
}

}  // namespace

PauliString pauli_from_text(const PrimeField& field, const std::string& text, int phase) {
  std::vector<std::string> tokens = split_sites(text);
  std::vector<int> x, z;
  for (const std::string& tok : tokens) {
    if (tok.empty()) throw ParseError("empty site token in operator text '" + text + "'");
    int xv = 0, zv = 0;
    if (tok != "I") {
      size_t i = 0;
      while (i < tok.size()) {
        char c = tok[i];
        if (c != 'X' && c != 'Z') throw ParseError("bad operator token '" + tok + "'");
        ++i;
        size_t start = i;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
        if (start == i) throw ParseError("missing exponent in token '" + tok + "'");
        int e = std::stoi(tok.substr(start, i - start));
        if (e < 0 || e >= field.p()) throw ParseError("exponent out of range in '" + tok + "'");
        if (c == 'X') xv = e; else zv = e;
      }
    }
    x.push_back(xv);
    z.push_back(zv);
  }
  return PauliString::from_exponents(field, std::move(x), std::move(z), phase);
}

}  // namespace qf
