// polynomial.hpp
//
// Sparse multivariate polynomials with exact 64-bit integer coefficients.
// Overflow is detected and thrown, never wrapped.  Terms live in a hash map;
// rendering and comparison use graded lexicographic order, so the text form
// is canonical.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace muinv {

using Mono = std::vector<int>;  // exponent vector, fixed width per polynomial

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in +");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in *");
  return r;
}

struct MonoHash {
  std::size_t operator()(const Mono& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : m) {
      h ^= static_cast<std::size_t>(v) + 1;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// graded lexicographic: compare total degree, then exponent vectors
// lexicographically with x1 most significant
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return a < b;
  }
};

class MultiPolynomial {
 public:
  using TermMap = std::unordered_map<Mono, int64_t, MonoHash>;

  MultiPolynomial() : nvars_(0) {}
  explicit MultiPolynomial(int nvars) : nvars_(nvars) {}

  static MultiPolynomial constant(int nvars, int64_t c) {
    MultiPolynomial p(nvars);
    if (c != 0) p.terms_[Mono(nvars, 0)] = c;
    return p;
  }

  static MultiPolynomial variable(int nvars, int i, int exponent = 1) {
    if (i < 1 || i > nvars) throw std::invalid_argument("variable index out of range");
    MultiPolynomial p(nvars);
    Mono m(nvars, 0);
    m[i - 1] = exponent;
    p.terms_[std::move(m)] = 1;
    return p;
  }

  static MultiPolynomial monomial(Mono m, int64_t c) {
    MultiPolynomial p(static_cast<int>(m.size()));
    if (c != 0) p.terms_[std::move(m)] = c;
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // terms in increasing graded lexicographic order
  std::vector<std::pair<Mono, int64_t>> sorted_terms() const {
    std::vector<std::pair<Mono, int64_t>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return GrlexLess{}(a.first, b.first);
    });
    return out;
  }

  int64_t coefficient(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }

  int64_t constant_term() const { return coefficient(Mono(nvars_, 0)); }

  // total degree; -1 for the zero polynomial
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_)
      d = std::max(d, static_cast<int>(std::accumulate(m.begin(), m.end(), 0L)));
    return d;
  }

  bool is_homogeneous() const {
    long d = -1;
    for (const auto& [m, c] : terms_) {
      const long dm = std::accumulate(m.begin(), m.end(), 0L);
      if (d < 0) d = dm;
      else if (dm != d) return false;
    }
    return true;
  }

  void add_term(const Mono& m, int64_t c) {
    if (static_cast<int>(m.size()) != nvars_)
      throw std::invalid_argument("add_term: wrong exponent width");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (c != 0) terms_.emplace(m, c);
    } else {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  MultiPolynomial extended(int nvars) const {
    if (nvars < nvars_) throw std::invalid_argument("extended: shrinking not supported");
    MultiPolynomial p(nvars);
    p.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Mono mm = m;
      mm.resize(nvars, 0);
      p.terms_.emplace(std::move(mm), c);
    }
    return p;
  }

  friend MultiPolynomial operator+(const MultiPolynomial& a, const MultiPolynomial& b) {
    check_same(a, b);
    MultiPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend MultiPolynomial operator-(const MultiPolynomial& a, const MultiPolynomial& b) {
    check_same(a, b);
    MultiPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, checked_mul(c, -1));
    return r;
  }

  friend MultiPolynomial operator-(const MultiPolynomial& a) {
    MultiPolynomial r(a.nvars_);
    r.terms_.reserve(a.terms_.size());
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, checked_mul(c, -1));
    return r;
  }

  friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b) {
    check_same(a, b);
    MultiPolynomial r(a.nvars_);
    r.terms_.reserve(a.terms_.size() * b.terms_.size() / 2 + 1);
    Mono m(a.nvars_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        for (int i = 0; i < a.nvars_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, checked_mul(ca, cb));
      }
    }
    return r;
  }

  friend MultiPolynomial operator*(int64_t c, const MultiPolynomial& a) {
    MultiPolynomial r(a.nvars_);
    if (c == 0) return r;
    r.terms_.reserve(a.terms_.size());
    for (const auto& [m, cc] : a.terms_) r.terms_.emplace(m, checked_mul(c, cc));
    return r;
  }

  // exact division by an integer; throws when any coefficient is not divisible
  MultiPolynomial divided_by(int64_t d) const {
    MultiPolynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      if (c % d != 0) throw std::domain_error("divided_by: inexact division");
      r.terms_.emplace(m, c / d);
    }
    return r;
  }

  // action of s_i on variable subscripts
  MultiPolynomial swap_vars(int i) const {
    if (i < 1 || i >= nvars_) throw std::invalid_argument("swap_vars: index out of range");
    MultiPolynomial r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Mono mm = m;
      std::swap(mm[i - 1], mm[i]);
      r.add_term(mm, c);
    }
    return r;
  }

  // terms of minimal total degree
  MultiPolynomial lowest_component() const {
    MultiPolynomial r(nvars_);
    long best = -1;
    for (const auto& [m, c] : terms_) {
      const long d = std::accumulate(m.begin(), m.end(), 0L);
      if (best < 0 || d < best) best = d;
    }
    for (const auto& [m, c] : terms_)
      if (std::accumulate(m.begin(), m.end(), 0L) == best) r.terms_.emplace(m, c);
    return r;
  }

  // terms of total degree exactly d
  MultiPolynomial homogeneous_component(int d) const {
    MultiPolynomial r(nvars_);
    for (const auto& [m, c] : terms_)
      if (std::accumulate(m.begin(), m.end(), 0L) == d) r.terms_.emplace(m, c);
    return r;
  }

  bool has_nonnegative_coefficients() const {
    for (const auto& [m, c] : terms_)
      if (c < 0) return false;
    return true;
  }

  friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPolynomial& a, const MultiPolynomial& b) {
    return !(a == b);
  }

 private:
  static void check_same(const MultiPolynomial& a, const MultiPolynomial& b) {
    if (a.nvars_ != b.nvars_)
      throw std::invalid_argument("polynomial arithmetic: variable count mismatch");
  }

  int nvars_;
  TermMap terms_;
};

// divided difference: (f - s_i f) / (x_i - x_{i+1}), computed termwise so the
// division is exact by construction
inline MultiPolynomial divided_difference(int i, const MultiPolynomial& f) {
  if (i < 1 || i >= f.nvars()) throw std::invalid_argument("divided_difference: index");
  MultiPolynomial r(f.nvars());
  Mono m(f.nvars());
  for (const auto& [mono, c] : f.terms()) {
    const int a = mono[i - 1], b = mono[i];
    if (a == b) continue;
    const int lo = std::min(a, b), hi = std::max(a, b);
    const int64_t cc = a > b ? c : checked_mul(c, -1);
    m = mono;
    for (int k = lo; k < hi; ++k) {
      m[i - 1] = k;
      m[i] = a + b - 1 - k;
      r.add_term(m, cc);
    }
  }
  return r;
}

// isobaric divided difference pi_i(f) = d_i((1 - x_{i+1}) f)
inline MultiPolynomial isobaric_divided_difference(int i, const MultiPolynomial& f) {
  MultiPolynomial g = f;
  Mono m(f.nvars());
  for (const auto& [mono, c] : f.terms()) {
    m = mono;
    m[i] += 1;
    g.add_term(m, checked_mul(c, -1));
  }
  return divided_difference(i, g);
}

// canonical text form: terms in decreasing graded lexicographic order,
// e.g. "x1^2*x2 - 2*x3 + 1"; parse_polynomial inverts it exactly
inline std::string render_polynomial(const MultiPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const auto terms = f.sorted_terms();
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const int64_t ac = neg ? -c : c;
    std::vector<std::string> factors;
    for (int i = 0; i < f.nvars(); ++i) {
      if (m[i] == 0) continue;
      std::string v = "x" + std::to_string(i + 1);
      if (m[i] > 1) v += "^" + std::to_string(m[i]);
      factors.push_back(std::move(v));
    }
    if (factors.empty()) {
      os << ac;
    } else {
      if (ac != 1) os << ac << "*";
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) os << "*";
        os << factors[k];
      }
    }
  }
  return os.str();
}

inline MultiPolynomial parse_polynomial(const std::string& text, int nvars) {
  MultiPolynomial out(nvars);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto parse_int = [&]() -> int64_t {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("polynomial parse: expected integer");
    return std::stoll(text.substr(start, pos - start));
  };
  skip_ws();
  if (pos < text.size() && text.compare(pos, 1, "0") == 0 && pos + 1 == text.size())
    return out;
  bool first = true;
  while (pos < text.size()) {
    skip_ws();
    int64_t sign = 1;
    if (!first || text[pos] == '+' || text[pos] == '-') {
      if (pos >= text.size()) break;
      if (text[pos] == '-') sign = -1;
      else if (text[pos] != '+')
        throw std::invalid_argument("polynomial parse: expected sign");
      ++pos;
    }
    first = false;
    skip_ws();
    int64_t coeff = 1;
    bool saw_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = parse_int();
      saw_coeff = true;
    }
    Mono m(nvars, 0);
    bool saw_var = false;
    while (true) {
      skip_ws();
      if (saw_var || saw_coeff) {
        if (pos >= text.size() || text[pos] != '*') break;
        ++pos;
        skip_ws();
      }
      if (pos >= text.size() || text[pos] != 'x') {
        if (saw_var || saw_coeff) throw std::invalid_argument("polynomial parse: expected x");
        break;
      }
      ++pos;
      const int64_t idx = parse_int();
      if (idx < 1 || idx > nvars) throw std::invalid_argument("polynomial parse: variable index");
      int64_t e = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        e = parse_int();
      }
      m[idx - 1] += static_cast<int>(e);
      saw_var = true;
    }
    if (!saw_var && !saw_coeff) throw std::invalid_argument("polynomial parse: empty term");
    out.add_term(m, checked_mul(sign, coeff));
    skip_ws();
  }
  return out;
}

}  // namespace muinv
