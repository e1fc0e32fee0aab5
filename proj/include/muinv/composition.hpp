// composition.hpp
//
// Compositions of n, refinement via partial sums, block bookkeeping for the
// parabolic subgroup S_mu, and the parabolic decomposition w = u v with
// u in S_mu and v a minimal-length coset representative.

#pragma once

#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "muinv/permutation.hpp"

namespace muinv {

class Composition {
 public:
  Composition() = default;

  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition must be nonempty");
    partial_.reserve(parts_.size());
    int s = 0;
    for (int p : parts_) {
      if (p < 1) throw std::invalid_argument("composition parts must be positive");
      s += p;
      partial_.push_back(s);
    }
  }

  static Composition ones(int n) { return Composition(std::vector<int>(n, 1)); }
  static Composition whole(int n) { return Composition(std::vector<int>{n}); }

  int n() const { return partial_.back(); }
  int num_blocks() const { return static_cast<int>(parts_.size()); }
  int part(int k) const { return parts_[k - 1]; }            // 1-based block index
  const std::vector<int>& parts() const { return parts_; }
  const std::vector<int>& partial_sums() const { return partial_; }

  // offset m_k = mu_1 + ... + mu_{k-1}; block k covers positions m_k+1 .. m_k+mu_k
  int block_start(int k) const { return k == 1 ? 0 : partial_[k - 2]; }
  int block_end(int k) const { return partial_[k - 1]; }

  // 1-based block containing position p
  int block_of_position(int p) const {
    if (p < 1 || p > n()) throw std::invalid_argument("position out of range");
    for (int k = 1; k <= num_blocks(); ++k)
      if (p <= partial_[k - 1]) return k;
    throw std::logic_error("unreachable");
  }

  // composition with an extra final part of size 1
  Composition padded() const {
    std::vector<int> p = parts_;
    p.push_back(1);
    return Composition(std::move(p));
  }

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Composition& a, const Composition& b) { return !(a == b); }
  friend bool operator<(const Composition& a, const Composition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
  std::vector<int> partial_;
};

// nu refines mu when the partial sums of nu contain those of mu
inline bool refines(const Composition& nu, const Composition& mu) {
  if (nu.n() != mu.n()) return false;
  const auto& a = nu.partial_sums();
  const auto& b = mu.partial_sums();
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

// all compositions nu refining mu with exactly one more part
inline std::vector<Composition> one_step_refinements(const Composition& mu) {
  std::vector<Composition> out;
  for (int k = 1; k <= mu.num_blocks(); ++k) {
    for (int a = 1; a < mu.part(k); ++a) {
      std::vector<int> parts;
      for (int t = 1; t <= mu.num_blocks(); ++t) {
        if (t == k) {
          parts.push_back(a);
          parts.push_back(mu.part(k) - a);
        } else {
          parts.push_back(mu.part(t));
        }
      }
      out.emplace_back(std::move(parts));
    }
  }
  return out;
}

inline std::vector<Composition> all_compositions(int n) {
  std::vector<Composition> out;
  // subsets of break points 1..n-1
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int last = 0;
    for (int i = 1; i < n; ++i) {
      if (mask & (1u << (i - 1))) {
        parts.push_back(i - last);
        last = i;
      }
    }
    parts.push_back(n - last);
    out.emplace_back(std::move(parts));
  }
  return out;
}

// value sets of the blocks: block k owns values m_k+1 .. m_k+mu_k
inline bool value_in_block(const Composition& mu, int value, int k) {
  return value > mu.block_start(k) && value <= mu.block_end(k);
}

inline int block_of_value(const Composition& mu, int value) {
  return mu.block_of_position(value);  // value blocks use the same partial sums
}

// u in S_mu (each value block preserved) and v minimal in its coset, w = u v,
// with length(w) = length(u) + length(v)
inline std::pair<Permutation, Permutation> parabolic_decompose(const Permutation& w,
                                                               const Composition& mu) {
  if (w.size() != mu.n()) throw std::invalid_argument("parabolic_decompose: size mismatch");
  const int n = w.size();
  // v: within each value block, redistribute values in increasing position order
  std::vector<int> v(n, 0);
  for (int k = 1; k <= mu.num_blocks(); ++k) {
    std::vector<int> positions;
    for (int p = 1; p <= n; ++p)
      if (value_in_block(mu, w(p), k)) positions.push_back(p);
    int next = mu.block_start(k) + 1;
    for (int p : positions) v[p - 1] = next++;
  }
  Permutation vp{std::move(v)};
  Permutation u = compose(w, inverse(vp));
  return {std::move(u), std::move(vp)};
}

// membership in the parabolic subgroup S_mu
inline bool in_parabolic(const Permutation& u, const Composition& mu) {
  for (int i = 1; i <= u.size(); ++i)
    if (block_of_value(mu, u(i)) != mu.block_of_position(i)) return false;
  return true;
}

// minimal coset representative test: values of each block appear in
// increasing order along the one-line notation
inline bool is_min_coset_rep(const Permutation& v, const Composition& mu) {
  std::vector<int> last(mu.num_blocks() + 1, 0);
  for (int p = 1; p <= v.size(); ++p) {
    const int k = block_of_value(mu, v(p));
    if (v(p) < last[k]) return false;
    last[k] = v(p);
  }
  return true;
}

}  // namespace muinv
