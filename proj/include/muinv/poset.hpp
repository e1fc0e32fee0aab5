// poset.hpp
//
// Weak and strong order posets on the mu-involutions of a fixed composition,
// with a deterministic Graphviz rendering.  Nodes are ordered
// lexicographically by one-line notation; weak covers carry letter labels,
// strong-only covers carry transposition-operator labels.

#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "muinv/io.hpp"
#include "muinv/mu_involution.hpp"

namespace muinv {

struct MuPoset {
  Composition mu;
  std::vector<MuInvolution> elements;  // sorted by one-line notation
  // cover -> labels; weak labels are acting letters, strong labels are the
  // (i, j) pairs of witnessing transposition operators
  std::map<std::pair<Permutation, Permutation>, std::set<int>> weak_covers;
  std::map<std::pair<Permutation, Permutation>, std::set<std::pair<int, int>>> strong_covers;
};

inline MuPoset build_mu_poset(const Composition& mu) {
  MuPoset poset;
  poset.mu = mu;
  const MuTable& table = mu_table(mu);
  for (const Permutation& p : table.elements()) poset.elements.push_back(MuInvolution(p, mu));

  for (const MuInvolution& pi : poset.elements) {
    for (const auto& [letter, tau] : weak_mu_covers(pi))
      poset.weak_covers[{pi.perm(), tau.perm()}].insert(letter);
    for (const auto& [target, labels] : mu_strong_covers_up(pi)) {
      auto& slot = poset.strong_covers[{pi.perm(), target}];
      for (const auto& lab : labels) slot.insert(lab);
    }
  }
  return poset;
}

// strong covers that are not weak covers
inline std::map<std::pair<Permutation, Permutation>, std::set<std::pair<int, int>>>
strong_only_covers(const MuPoset& poset) {
  std::map<std::pair<Permutation, Permutation>, std::set<std::pair<int, int>>> out;
  for (const auto& [edge, labels] : poset.strong_covers)
    if (!poset.weak_covers.count(edge)) out.emplace(edge, labels);
  return out;
}

enum class PosetMode { kWeak, kStrong, kBoth };

inline std::string emit_poset_dot(const Composition& mu, PosetMode mode) {
  const MuPoset poset = build_mu_poset(mu);
  std::ostringstream os;
  os << "digraph mu_poset {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=plaintext];\n";
  auto name = [&](const Permutation& p) { return render_mu_involution(MuInvolution(p, mu)); };
  for (const MuInvolution& pi : poset.elements)
    os << "  \"" << render_mu_involution(pi) << "\";\n";
  auto letter_label = [](const std::set<int>& letters) {
    std::ostringstream ls;
    bool first = true;
    for (int i : letters) {
      if (!first) ls << ",";
      ls << "s" << i;
      first = false;
    }
    return ls.str();
  };
  auto t_label = [](const std::set<std::pair<int, int>>& labels) {
    std::ostringstream ls;
    bool first = true;
    for (const auto& [i, j] : labels) {
      if (!first) ls << ",";
      ls << "t(" << i << "," << j << ")";
      first = false;
    }
    return ls.str();
  };
  if (mode == PosetMode::kWeak || mode == PosetMode::kBoth) {
    for (const auto& [edge, letters] : poset.weak_covers)
      os << "  \"" << name(edge.first) << "\" -> \"" << name(edge.second) << "\" [label=\""
         << letter_label(letters) << "\"];\n";
  }
  if (mode == PosetMode::kStrong) {
    for (const auto& [edge, labels] : poset.strong_covers)
      os << "  \"" << name(edge.first) << "\" -> \"" << name(edge.second) << "\" [label=\""
         << t_label(labels) << "\"];\n";
  }
  if (mode == PosetMode::kBoth) {
    for (const auto& [edge, labels] : strong_only_covers(poset))
      os << "  \"" << name(edge.first) << "\" -> \"" << name(edge.second)
         << "\" [color=red, label=\"" << t_label(labels) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace muinv
