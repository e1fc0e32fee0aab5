// verify.hpp
//
// Exhaustive and sampled verification sweeps used by the command-line
// `verify` subcommand and by the acceptance suite.  Each suite returns a
// machine-readable report; instances are independent, so the sweeps fan out
// over a thread pool and aggregate order-independently.

#pragma once

#include <atomic>
#include <chrono>
#include <future>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "muinv/io.hpp"
#include "muinv/mu_involution.hpp"
#include "muinv/schubert_mu.hpp"

namespace muinv {

struct VerifyReport {
  std::string suite;
  long long checked = 0;
  long long failures = 0;
  std::vector<std::string> failure_details;  // capped
  double seconds = 0.0;

  bool ok() const { return failures == 0; }

  void note_failure(const std::string& detail) {
    ++failures;
    if (failure_details.size() < 32) failure_details.push_back(detail);
  }

  void merge(const VerifyReport& other) {
    checked += other.checked;
    failures += other.failures;
    for (const auto& d : other.failure_details)
      if (failure_details.size() < 32) failure_details.push_back(d);
  }
};

namespace detail {

template <typename Task>
inline std::vector<VerifyReport> run_parallel(const std::vector<Task>& tasks, int threads) {
  std::vector<VerifyReport> reports(tasks.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) reports[i] = tasks[i]();
    return reports;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      reports[i] = tasks[i]();
    }
  };
  std::vector<std::thread> pool;
  const int np = std::min<int>(threads, static_cast<int>(tasks.size()));
  for (int t = 0; t < np; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return reports;
}

}  // namespace detail

// Atom sets from the blockwise description against the brute-force 0-Hecke
// oracle, for every composition of every n <= max_n.  Also checks that the
// BFS closure is exactly the set of valid mu-involutions and that the
// within/between length split is word-independent.
inline VerifyReport verify_atoms(int max_n, int threads = 1) {
  const auto start = std::chrono::steady_clock::now();
  using Task = std::function<VerifyReport()>;
  std::vector<Task> tasks;
  for (int n = 1; n <= max_n; ++n) {
    for (const Composition& mu : all_compositions(n)) {
      tasks.push_back([mu, n]() {
        VerifyReport r;
        const MuTable table(mu);
        if (!table.split_consistent())
          r.note_failure("length split inconsistent for mu=" + render_composition(mu));
        // oracle: bucket every w by its folded target
        std::map<Permutation, std::vector<Permutation>> oracle;
        long long valid_count = 0;
        for_each_permutation(n, [&](const Permutation& w) {
          bool is_mu_inv = true;
          for (int k = 1; k <= mu.num_blocks() && is_mu_inv; ++k) {
            BlockWord b;
            for (int p = mu.block_start(k) + 1; p <= mu.block_end(k); ++p) b.push_back(w(p));
            is_mu_inv = is_block_involution(b);
          }
          if (is_mu_inv) {
            ++valid_count;
            if (!table.contains(w))
              r.note_failure("valid mu-involution missing from closure: " +
                             render_permutation(w));
          }
          const MuInvolution sigma = mu_act_perm(mu, w);
          if (table.info(sigma.perm()).len == length(w)) oracle[sigma.perm()].push_back(w);
        });
        if (valid_count != static_cast<long long>(table.elements().size()))
          r.note_failure("closure size mismatch for mu=" + render_composition(mu));
        for (const Permutation& p : table.elements()) {
          const MuInvolution pi(p, mu);
          std::vector<Permutation> expect = oracle[p];
          std::sort(expect.begin(), expect.end());
          const std::vector<Permutation> got = mu_atoms(pi);
          ++r.checked;
          if (got != expect)
            r.note_failure("atom mismatch at " + render_mu_involution(pi));
        }
        return r;
      });
    }
  }
  VerifyReport total;
  total.suite = "atoms";
  for (const VerifyReport& r : detail::run_parallel(tasks, threads)) total.merge(r);
  total.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

// Transition identities: exhaustive over every admissible (tau, i, j) for
// n <= min(max_n, 5), plus `samples` random instances at n = 6 when
// max_n >= 6.  Zero tolerance; exact integer polynomial equality.
inline VerifyReport verify_transition(int max_n, int samples_n6 = 500, unsigned seed = 20240801,
                                      int threads = 1) {
  const auto start = std::chrono::steady_clock::now();
  using Task = std::function<VerifyReport()>;
  std::vector<Task> tasks;

  auto admissible_pairs = [](const MuInvolution& tau) {
    std::vector<std::pair<int, int>> out;
    for (const Cycle& c : cyc_mu(tau)) out.push_back({c.first, c.second});
    for (int k = 1; k <= tau.mu().num_blocks(); ++k) {
      if (tau.mu().part(k) != 2) continue;
      for (int p = tau.mu().block_start(k) + 1; p <= tau.mu().block_end(k); ++p) {
        const int v = tau.perm()(p);
        out.push_back({v, v});
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    for (const Composition& mu : all_compositions(n)) {
      tasks.push_back([mu, n, admissible_pairs]() {
        VerifyReport r;
        SchubertTable table(n + 1);
        for (const Permutation& p : mu_table(mu).elements()) {
          const MuInvolution tau(p, mu);
          for (const auto& [i, j] : admissible_pairs(tau)) {
            ++r.checked;
            if (!verify_transition(tau, i, j, table))
              r.note_failure("transition fails at " + render_mu_involution(tau) + " cycle (" +
                             std::to_string(i) + "," + std::to_string(j) + ")");
          }
        }
        return r;
      });
    }
  }

  if (max_n >= 6) {
    const int n = 6;
    const std::vector<Composition> mus = all_compositions(n);
    std::mt19937 rng(seed);
    // pre-draw instances so tasks stay deterministic under any thread count
    struct Instance {
      Composition mu;
      Permutation tau;
      std::pair<int, int> cycle;
    };
    std::vector<Instance> instances;
    while (static_cast<int>(instances.size()) < samples_n6) {
      const Composition& mu = mus[rng() % mus.size()];
      const auto& elems = mu_table(mu).elements();
      const MuInvolution tau(elems[rng() % elems.size()], mu);
      const auto pairs = admissible_pairs(tau);
      if (pairs.empty()) continue;
      instances.push_back({mu, tau.perm(), pairs[rng() % pairs.size()]});
    }
    const int chunk = 25;
    for (std::size_t at = 0; at < instances.size(); at += chunk) {
      const std::size_t hi = std::min(instances.size(), at + chunk);
      std::vector<Instance> slice(instances.begin() + at, instances.begin() + hi);
      tasks.push_back([slice, n]() {
        VerifyReport r;
        SchubertTable table(n + 1);
        for (const Instance& inst : slice) {
          const MuInvolution tau(inst.tau, inst.mu);
          ++r.checked;
          if (!verify_transition(tau, inst.cycle.first, inst.cycle.second, table))
            r.note_failure("transition fails at " + render_mu_involution(tau) + " cycle (" +
                           std::to_string(inst.cycle.first) + "," +
                           std::to_string(inst.cycle.second) + ")");
        }
        return r;
      });
    }
  }

  VerifyReport total;
  total.suite = "transition";
  for (const VerifyReport& r : detail::run_parallel(tasks, threads)) total.merge(r);
  total.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

// Exchange sweep: every nearly mu-reduced (a, m) from words of length at
// most max_len over [n-1], n <= max_n.  Checks existence and uniqueness of
// the exchanged position and, for reduced words, that the second
// transposition pair lies in {j, y(j)} x {i, y(i)}.
inline VerifyReport verify_exchange(int max_n, int max_len = 7, int threads = 1) {
  const auto start = std::chrono::steady_clock::now();
  using Task = std::function<VerifyReport()>;
  std::vector<Task> tasks;
  for (int n = 2; n <= max_n; ++n) {
    for (const Composition& mu : all_compositions(n)) {
      tasks.push_back([mu, n, max_len]() {
        VerifyReport r;
        std::vector<Word> words{{}};
        for (int len = 1; len <= max_len; ++len) {
          std::vector<Word> next;
          for (const Word& a : words) {
            if (static_cast<int>(a.size()) != len - 1) continue;
            for (int i = 1; i < n; ++i) {
              Word b = a;
              b.push_back(i);
              next.push_back(std::move(b));
            }
          }
          for (const Word& a : next) {
            for (int m = 1; m <= len; ++m) {
              const auto tau = nearly_mu_reduced(a, m, mu);
              if (!tau) continue;
              ++r.checked;
              int k = -1;
              try {
                k = mu_exchange(a, m, mu);
              } catch (const std::logic_error&) {
                r.note_failure("exchange not unique for word " + render_word(a) + " at " +
                               std::to_string(m) + ", mu=" + render_composition(mu));
                continue;
              }
              if (!is_reduced(a, n)) continue;
              // strong form: both transposition pairs
              const ExchangePairs pairs = mu_exchange_pairs(a, m, mu);
              const auto [i, j] = pairs.removed;
              const auto [i2, j2] = pairs.inserted;
              const Involution y = y_of(*tau);
              const bool i_ok = (i2 == j || i2 == y(j));
              const bool j_ok = (j2 == i || j2 == y(i));
              const bool same_block =
                  tau->block_of_value(i) == tau->block_of_value(j);
              if (!i_ok || !j_ok || !same_block)
                r.note_failure("exchange pair outside predicted set for word " +
                               render_word(a) + ", mu=" + render_composition(mu));
            }
          }
          words = std::move(next);
        }
        return r;
      });
    }
  }
  VerifyReport total;
  total.suite = "exchange";
  for (const VerifyReport& r : detail::run_parallel(tasks, threads)) total.merge(r);
  total.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

}  // namespace muinv
