// io.hpp
//
// Text formats.  Permutations render as comma-free digit strings for n <= 9
// and comma-separated lists otherwise; mu-involutions separate blocks with
// '|'; cycle sets render as "(5,1)(4,2)" with '|' between blocks for the
// blocked variant.  Every renderer has an exact inverse parser.

#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "muinv/composition.hpp"
#include "muinv/involution.hpp"
#include "muinv/mu_involution.hpp"

namespace muinv {

namespace detail {

inline std::vector<int> parse_value_list(const std::string& text, const std::string& what) {
  if (text.empty()) throw std::invalid_argument(what + ": empty");
  std::vector<int> values;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) throw std::invalid_argument(what + ": empty entry in \"" + text + "\"");
      for (char c : item)
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument(what + ": bad character in \"" + text + "\"");
      values.push_back(std::stoi(item));
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0')
        throw std::invalid_argument(what + ": bad character in \"" + text + "\"");
      values.push_back(c - '0');
    }
  }
  return values;
}

inline std::string render_value_list(const std::vector<int>& values, bool commas) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i && commas) os << ',';
    os << values[i];
  }
  return os.str();
}

}  // namespace detail

inline std::string render_permutation(const Permutation& w) {
  return detail::render_value_list(w.oneline(), w.size() > 9);
}

inline Permutation parse_permutation(const std::string& text) {
  return Permutation(detail::parse_value_list(text, "permutation"));
}

inline std::string render_word(const Word& a) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i];
  }
  os << ")";
  return os.str();
}

inline std::string render_composition(const Composition& mu) {
  return detail::render_value_list(mu.parts(), true);
}

inline Composition parse_composition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(std::stoi(item));
  return Composition(std::move(parts));
}

// blocked one-line notation, e.g. "651|3|742" or "10,2|3,1,..." past n = 9
inline MuInvolution parse_mu_involution(const std::string& text) {
  std::vector<int> oneline;
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string blocktext;
  std::vector<std::string> blocktexts;
  while (std::getline(ss, blocktext, '|')) blocktexts.push_back(blocktext);
  if (blocktexts.empty()) throw std::invalid_argument("mu-involution: empty input");
  for (std::size_t k = 0; k < blocktexts.size(); ++k) {
    const std::vector<int> vals =
        detail::parse_value_list(blocktexts[k], "block " + std::to_string(k + 1));
    parts.push_back(static_cast<int>(vals.size()));
    oneline.insert(oneline.end(), vals.begin(), vals.end());
  }
  Permutation perm(std::move(oneline));  // throws on non-bijections
  Composition mu(std::move(parts));
  // re-raise block validation with the offending block named
  for (int k = 1; k <= mu.num_blocks(); ++k) {
    BlockWord b;
    for (int p = mu.block_start(k) + 1; p <= mu.block_end(k); ++p) b.push_back(perm(p));
    if (!is_block_involution(b))
      throw std::invalid_argument("block " + std::to_string(k) + " \"" + blocktexts[k - 1] +
                                  "\" does not standardize to an involution");
  }
  return MuInvolution(std::move(perm), std::move(mu));
}

inline MuInvolution parse_mu_involution(const std::string& text, const Composition& mu) {
  if (text.find('|') != std::string::npos) {
    MuInvolution pi = parse_mu_involution(text);
    if (pi.mu() != mu) throw std::invalid_argument("blocked input disagrees with --mu");
    return pi;
  }
  return MuInvolution(parse_permutation(text), mu);
}

inline std::string render_mu_involution(const MuInvolution& pi) {
  const bool commas = pi.size() > 9;
  std::ostringstream os;
  for (int k = 1; k <= pi.mu().num_blocks(); ++k) {
    if (k > 1) os << '|';
    os << detail::render_value_list(pi.block(k), commas);
  }
  return os.str();
}

inline std::string render_cycles(const CycleSet& cycles) {
  std::ostringstream os;
  for (const auto& [b, a] : cycles) os << "(" << b << "," << a << ")";
  return os.str();
}

inline CycleSet parse_cycles(const std::string& text) {
  CycleSet out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("cycles: expected '('");
    const std::size_t comma = text.find(',', pos);
    const std::size_t close = text.find(')', pos);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw std::invalid_argument("cycles: malformed pair");
    const int b = std::stoi(text.substr(pos + 1, comma - pos - 1));
    const int a = std::stoi(text.substr(comma + 1, close - comma - 1));
    out.push_back({b, a});
    pos = close + 1;
  }
  return out;
}

// ordered set partition display: cycles per block separated by '|'
inline std::string render_mu_cycles(const MuInvolution& pi) {
  std::ostringstream os;
  for (int k = 1; k <= pi.mu().num_blocks(); ++k) {
    if (k > 1) os << '|';
    os << render_cycles(block_cycles(pi.block(k)));
  }
  return os.str();
}

inline MuInvolution parse_mu_cycles(const std::string& text) {
  std::vector<int> oneline;
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string blocktext;
  while (std::getline(ss, blocktext, '|')) {
    const BlockWord b = block_word_from_cycles(parse_cycles(blocktext));
    parts.push_back(static_cast<int>(b.size()));
    oneline.insert(oneline.end(), b.begin(), b.end());
  }
  return MuInvolution(Permutation(std::move(oneline)), Composition(std::move(parts)));
}

}  // namespace muinv
