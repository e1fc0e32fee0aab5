// permutation.hpp
//
// One-line permutations of [n], words in the simple reflections, reduced
// words, strong and weak Bruhat order, the 0-Hecke monoid, parabolic
// decomposition and standardization of words over arbitrary alphabets.
//
// Conventions used throughout the library:
//   * one-line notation with 1-based values and positions,
//   * compose(u, v)(i) = u(v(i)),
//   * w * t_{ij} swaps the entries of w at positions i, j,
//   * t_{ij} * w swaps the values i, j inside w.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace muinv {

using Word = std::vector<int>;       // letters a, 1 <= a <= n-1
using BlockWord = std::vector<int>;  // pairwise distinct positive values

class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
    std::vector<char> seen(oneline_.size(), 0);
    for (int v : oneline_) {
      if (v < 1 || v > static_cast<int>(oneline_.size()) || seen[v - 1])
        throw std::invalid_argument("one-line notation is not a bijection of [n]");
      seen[v - 1] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  // n n-1 ... 2 1
  static Permutation longest(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
  }

  int size() const { return static_cast<int>(oneline_.size()); }

  // image of i, 1-based
  int operator()(int i) const { return oneline_[i - 1]; }

  const std::vector<int>& oneline() const { return oneline_; }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.oneline_ == b.oneline_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.oneline_ < b.oneline_;
  }

 private:
  std::vector<int> oneline_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : w.oneline()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

inline Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> r(u.size());
  for (int i = 1; i <= u.size(); ++i) r[i - 1] = u(v(i));
  return Permutation(std::move(r));
}

inline Permutation inverse(const Permutation& w) {
  std::vector<int> r(w.size());
  for (int i = 1; i <= w.size(); ++i) r[w(i) - 1] = i;
  return Permutation(std::move(r));
}

// the transposition t_{ij} as an element of S_n
inline Permutation transposition(int n, int i, int j) {
  Permutation e = Permutation::identity(n);
  std::vector<int> v = e.oneline();
  std::swap(v[i - 1], v[j - 1]);
  return Permutation(std::move(v));
}

// embed into S_m, m >= n, fixing the appended values
inline Permutation pad(const Permutation& w, int m) {
  if (m < w.size()) throw std::invalid_argument("pad: target size too small");
  std::vector<int> v = w.oneline();
  for (int i = w.size() + 1; i <= m; ++i) v.push_back(i);
  return Permutation(std::move(v));
}

// restriction to S_m when w fixes all of m+1..n pointwise
inline Permutation truncate(const Permutation& w, int m) {
  for (int i = m + 1; i <= w.size(); ++i)
    if (w(i) != i) throw std::invalid_argument("truncate: value above m is not fixed");
  std::vector<int> v(w.oneline().begin(), w.oneline().begin() + m);
  return Permutation(std::move(v));
}

// number of inversions
inline int length(const Permutation& w) {
  int n = w.size(), inv = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (w(i) > w(j)) ++inv;
  return inv;
}

// w * s_i (swap positions i, i+1)
inline Permutation right_mul_s(const Permutation& w, int i) {
  std::vector<int> v = w.oneline();
  std::swap(v[i - 1], v[i]);
  return Permutation(std::move(v));
}

// s_i * w (swap values i, i+1)
inline Permutation left_mul_s(int i, const Permutation& w) {
  std::vector<int> v = w.oneline();
  for (int& x : v) {
    if (x == i) x = i + 1;
    else if (x == i + 1) x = i;
  }
  return Permutation(std::move(v));
}

// w * t_{ij} (swap positions i, j)
inline Permutation right_mul_t(const Permutation& w, int i, int j) {
  std::vector<int> v = w.oneline();
  std::swap(v[i - 1], v[j - 1]);
  return Permutation(std::move(v));
}

// t_{ij} * w (swap values i, j)
inline Permutation left_mul_t(int i, int j, const Permutation& w) {
  std::vector<int> v = w.oneline();
  for (int& x : v) {
    if (x == i) x = j;
    else if (x == j) x = i;
  }
  return Permutation(std::move(v));
}

inline bool has_right_descent(const Permutation& w, int i) { return w(i) > w(i + 1); }

// position of value i precedes position of value i+1
inline bool has_left_ascent(const Permutation& w, int i) {
  const Permutation wi = inverse(w);
  return wi(i) < wi(i + 1);
}

// 0-Hecke product w o s_i: right multiplication never decreases length
inline Permutation hecke_mul(const Permutation& w, int i) {
  if (i < 1 || i >= w.size()) throw std::invalid_argument("hecke_mul: letter out of range");
  return has_right_descent(w, i) ? w : right_mul_s(w, i);
}

// 0-Hecke product s_i o w
inline Permutation hecke_mul_left(int i, const Permutation& w) {
  if (i < 1 || i >= w.size()) throw std::invalid_argument("hecke_mul_left: letter out of range");
  return has_left_ascent(w, i) ? left_mul_s(i, w) : w;
}

inline Permutation word_to_perm(const Word& a, int n) {
  Permutation w = Permutation::identity(n);
  for (int letter : a) {
    if (letter < 1 || letter >= n) throw std::invalid_argument("word letter out of range");
    w = right_mul_s(w, letter);
  }
  return w;
}

// any reduced word for w, obtained by repeatedly removing the first descent
inline Word any_reduced_word(const Permutation& w) {
  Word rev;
  Permutation x = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i < x.size(); ++i) {
      if (has_right_descent(x, i)) {
        rev.push_back(i);
        x = right_mul_s(x, i);
        moved = true;
        break;
      }
    }
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

// 0-Hecke product u o v, folding a reduced word of v onto u
inline Permutation hecke_product(const Permutation& u, const Permutation& v) {
  if (u.size() != v.size()) throw std::invalid_argument("hecke_product: size mismatch");
  Permutation r = u;
  for (int letter : any_reduced_word(v)) r = hecke_mul(r, letter);
  return r;
}

inline bool is_reduced(const Word& a, int n) {
  return length(word_to_perm(a, n)) == static_cast<int>(a.size());
}

namespace detail {
inline void reduced_words_rec(const Permutation& w,
                              std::map<Permutation, std::set<Word>>& memo) {
  if (memo.count(w)) return;
  std::set<Word> out;
  if (length(w) == 0) {
    out.insert(Word{});
  } else {
    for (int i = 1; i < w.size(); ++i) {
      if (!has_right_descent(w, i)) continue;
      Permutation v = right_mul_s(w, i);
      reduced_words_rec(v, memo);
      for (Word a : memo.at(v)) {
        a.push_back(i);
        out.insert(std::move(a));
      }
    }
  }
  memo.emplace(w, std::move(out));
}
}  // namespace detail

inline std::set<Word> reduced_words(const Permutation& w) {
  std::map<Permutation, std::set<Word>> memo;
  detail::reduced_words_rec(w, memo);
  return memo.at(w);
}

// |R(w)| without materializing the set
inline long long reduced_word_count(const Permutation& w) {
  std::map<Permutation, long long> memo;
  std::function<long long(const Permutation&)> rec = [&](const Permutation& x) -> long long {
    if (length(x) == 0) return 1;
    auto it = memo.find(x);
    if (it != memo.end()) return it->second;
    long long c = 0;
    for (int i = 1; i < x.size(); ++i)
      if (has_right_descent(x, i)) c += rec(right_mul_s(x, i));
    memo.emplace(x, c);
    return c;
  };
  return rec(w);
}

// all length-k 0-Hecke words for w would be exponential; callers enumerate
// directly where needed.

// Deletion property: for a non-reduced word, two positions whose removal
// leaves a word with the same product.  Returns 1-based positions (k, m).
inline std::pair<int, int> deletion_witness(const Word& a, int n) {
  if (is_reduced(a, n)) throw std::invalid_argument("deletion_witness: word is reduced");
  const Permutation target = word_to_perm(a, n);
  const int p = static_cast<int>(a.size());
  for (int k = 1; k <= p; ++k) {
    for (int m = k + 1; m <= p; ++m) {
      Word b;
      for (int t = 1; t <= p; ++t)
        if (t != k && t != m) b.push_back(a[t - 1]);
      if (word_to_perm(b, n) == target) return {k, m};
    }
  }
  throw std::logic_error("deletion_witness: no witness found");
}

// strong Bruhat order via the sorted-prefix (dominance) criterion
inline bool bruhat_leq(const Permutation& v, const Permutation& w) {
  if (v.size() != w.size()) throw std::invalid_argument("bruhat_leq: size mismatch");
  const int n = v.size();
  std::vector<int> av, aw;
  av.reserve(n);
  aw.reserve(n);
  for (int i = 1; i <= n; ++i) {
    av.insert(std::upper_bound(av.begin(), av.end(), v(i)), v(i));
    aw.insert(std::upper_bound(aw.begin(), aw.end(), w(i)), w(i));
    for (int k = 0; k < i; ++k)
      if (av[k] > aw[k]) return false;
  }
  return true;
}

// covers in strong Bruhat order: w t_{ij} with one more inversion
inline std::set<Permutation> bruhat_covers_up(const Permutation& w) {
  std::set<Permutation> out;
  const int n = w.size();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) >= w(j)) continue;
      bool blocked = false;
      for (int k = i + 1; k < j && !blocked; ++k)
        if (w(i) < w(k) && w(k) < w(j)) blocked = true;
      if (!blocked) out.insert(right_mul_t(w, i, j));
    }
  }
  return out;
}

inline std::set<Permutation> weak_covers_up(const Permutation& w) {
  std::set<Permutation> out;
  for (int i = 1; i < w.size(); ++i)
    if (!has_right_descent(w, i)) out.insert(right_mul_s(w, i));
  return out;
}

class Composition;  // defined in composition.hpp

inline Permutation standardize(const BlockWord& q) {
  const int k = static_cast<int>(q.size());
  std::vector<int> sorted = q;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("standardize: letters are not distinct");
  std::vector<int> r(k);
  for (int i = 0; i < k; ++i) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), q[i]);
    r[i] = static_cast<int>(it - sorted.begin()) + 1;
  }
  return Permutation(std::move(r));
}

// word over `alphabet` (sorted ascending) with the relative order of `pattern`
inline BlockWord destandardize(const Permutation& pattern, const std::vector<int>& alphabet) {
  if (pattern.size() != static_cast<int>(alphabet.size()))
    throw std::invalid_argument("destandardize: size mismatch");
  BlockWord out(alphabet.size());
  for (int i = 1; i <= pattern.size(); ++i) out[i - 1] = alphabet[pattern(i) - 1];
  return out;
}

inline std::vector<int> sorted_alphabet(const BlockWord& q) {
  std::vector<int> a = q;
  std::sort(a.begin(), a.end());
  return a;
}

// relative value of a in Q: r_Q(a) = std(Q)(Q^{-1}(a))
inline int relative_value(const BlockWord& q, int a) {
  const Permutation st = standardize(q);
  for (int i = 0; i < static_cast<int>(q.size()); ++i)
    if (q[i] == a) return st(i + 1);
  throw std::invalid_argument("relative_value: letter not present");
}

// [w]_A = w(a_1) ... w(a_k) for positions A = {a_1 < ... < a_k}
inline BlockWord restrict_to(const Permutation& w, const std::vector<int>& positions) {
  std::vector<int> a = positions;
  std::sort(a.begin(), a.end());
  BlockWord out;
  out.reserve(a.size());
  for (int p : a) {
    if (p < 1 || p > w.size()) throw std::invalid_argument("restrict_to: position out of range");
    out.push_back(w(p));
  }
  return out;
}

inline void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    fn(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace muinv
