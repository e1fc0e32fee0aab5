// muinv_cli.cpp
//
// Command-line front end.  Subcommands: atoms, poset, schubert,
// grothendieck, transition, expand, verify, count-words, span-check.
// Payload goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
// 1 verification failure, 2 usage or parse error.

#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "muinv/muinv.hpp"

namespace {

using nlohmann::json;

// blocked notation; a string without separators is one block, --mu overrides
muinv::MuInvolution parse_target(const std::string& text, const std::string& mu_text) {
  if (!mu_text.empty())
    return muinv::parse_mu_involution(text, muinv::parse_composition(mu_text));
  return muinv::parse_mu_involution(text);
}

json transition_json(const muinv::MuInvolution& tau, const muinv::TransitionSets& sets,
                     bool equal, const muinv::MultiPolynomial& lhs,
                     const muinv::MultiPolynomial& rhs) {
  json j;
  j["instance"] = muinv::render_mu_involution(tau) + " cycle (" +
                  std::to_string(sets.cycle.first) + "," + std::to_string(sets.cycle.second) +
                  ")";
  j["lhs"] = muinv::render_polynomial(lhs);
  j["rhs"] = muinv::render_polynomial(rhs);
  j["equal"] = equal;
  j["phi"] = json::array();
  j["psi"] = json::array();
  for (const auto& s : sets.phi) j["phi"].push_back(muinv::render_mu_involution(s.unpadded()));
  for (const auto& s : sets.psi) j["psi"].push_back(muinv::render_mu_involution(s.unpadded()));
  return j;
}

int report_verify(const muinv::VerifyReport& report, const std::string& format) {
  if (format == "json") {
    json j;
    j["suite"] = report.suite;
    j["checked"] = report.checked;
    j["failures"] = report.failures;
    j["seconds"] = report.seconds;
    j["failure_details"] = report.failure_details;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (report.ok() ? "PASS" : "FAIL") << " suite=" << report.suite
              << " checked=" << report.checked << " failures=" << report.failures
              << " seconds=" << report.seconds << "\n";
    for (const auto& d : report.failure_details) std::cerr << "  " << d << "\n";
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coxeter combinatorics of mu-involutions and their Schubert calculus"};
  app.require_subcommand(1);

  std::string target, mu_text, format = "text", nu_text, cycle_text, suite, poly_text;
  std::string order_mode = "both";
  int max_n = 4, var_index = 0, n_arg = 0;
  unsigned seed = 20240801;
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  bool inverse_flag = false;

  auto* atoms = app.add_subcommand("atoms", "atom set of a mu-involution");
  atoms->add_option("target", target)->required();
  atoms->add_option("--mu", mu_text);
  atoms->add_flag("--inverse", inverse_flag, "list inverse atoms instead");
  atoms->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* poset = app.add_subcommand("poset", "order poset as Graphviz or text");
  poset->add_option("--n", n_arg)->required();
  poset->add_option("--mu", mu_text)->required();
  poset->add_option("--order", order_mode)->check(CLI::IsMember({"weak", "strong", "both"}));
  poset->add_option("--format", format)->check(CLI::IsMember({"text", "dot"}));

  auto* schub = app.add_subcommand("schubert", "mu-involution Schubert polynomial");
  schub->add_option("target", target)->required();
  schub->add_option("--mu", mu_text);
  schub->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* groth = app.add_subcommand("grothendieck", "mu-involution Grothendieck polynomial");
  groth->add_option("target", target)->required();
  groth->add_option("--mu", mu_text);
  groth->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* trans = app.add_subcommand("transition", "transition identity for one cycle");
  trans->add_option("target", target)->required();
  trans->add_option("--cycle", cycle_text, "cycle as \"i,j\"")->required();
  trans->add_option("--mu", mu_text);
  trans->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* expand = app.add_subcommand("expand", "refinement expansion across a finer composition");
  expand->add_option("target", target)->required();
  expand->add_option("--nu", nu_text)->required();
  expand->add_option("--mu", mu_text);
  expand->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("suite", suite, "atoms | transition | exchange")->required();
  verify->add_option("--n,--max-n", max_n);
  verify->add_option("--seed", seed);
  verify->add_option("--threads", threads);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* count = app.add_subcommand("count-words", "number of reduced mu-words");
  count->add_option("target", target)->required();
  count->add_option("--mu", mu_text);

  auto* span = app.add_subcommand("span-check",
                                  "integer-span membership of x_r times the Schubert polynomial");
  span->add_option("target", target)->required();
  span->add_option("--var", var_index, "multiply by this variable");
  span->add_option("--poly", poly_text, "test an explicit polynomial instead");
  span->add_option("--mu", mu_text);
  span->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*atoms) {
      const muinv::MuInvolution pi = parse_target(target, mu_text);
      const auto list = inverse_flag ? muinv::mu_inverse_atoms(pi) : muinv::mu_atoms(pi);
      if (format == "json") {
        json j = json::array();
        for (const auto& w : list) j.push_back(muinv::render_permutation(w));
        std::cout << j.dump() << "\n";
      } else {
        for (const auto& w : list) std::cout << muinv::render_permutation(w) << "\n";
      }
    } else if (*poset) {
      const muinv::Composition mu = muinv::parse_composition(mu_text);
      if (mu.n() != n_arg) throw std::invalid_argument("--n disagrees with --mu");
      const muinv::PosetMode mode = order_mode == "weak"    ? muinv::PosetMode::kWeak
                                    : order_mode == "strong" ? muinv::PosetMode::kStrong
                                                             : muinv::PosetMode::kBoth;
      if (format == "text") {
        const muinv::MuPoset p = muinv::build_mu_poset(mu);
        std::cout << p.elements.size() << " elements\n";
        for (const auto& [edge, letters] : p.weak_covers)
          std::cout << muinv::render_permutation(edge.first) << " -> "
                    << muinv::render_permutation(edge.second) << "\n";
      } else {
        std::cout << muinv::emit_poset_dot(mu, mode);
      }
    } else if (*schub) {
      const muinv::MuInvolution pi = parse_target(target, mu_text);
      const muinv::MultiPolynomial p = muinv::mu_schubert(pi);
      if (format == "json") {
        json j;
        j["target"] = muinv::render_mu_involution(pi);
        j["polynomial"] = muinv::render_polynomial(p);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << muinv::render_polynomial(p) << "\n";
      }
    } else if (*groth) {
      const muinv::MuInvolution pi = parse_target(target, mu_text);
      const muinv::MultiPolynomial p = muinv::mu_grothendieck(pi);
      if (format == "json") {
        json j;
        j["target"] = muinv::render_mu_involution(pi);
        j["polynomial"] = muinv::render_polynomial(p);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << muinv::render_polynomial(p) << "\n";
      }
    } else if (*trans) {
      const muinv::MuInvolution tau = parse_target(target, mu_text);
      const muinv::Composition cyc = muinv::parse_composition(cycle_text);
      if (cyc.num_blocks() != 2) throw std::invalid_argument("--cycle expects \"i,j\"");
      int i = cyc.part(1), j = cyc.part(2);
      if (i < j) std::swap(i, j);
      const muinv::TransitionSets sets = muinv::transition_sets(tau, i, j);
      muinv::SchubertTable table(tau.size() + 1);
      const muinv::MuInvolution padded = tau.padded();
      muinv::MultiPolynomial lhs = (muinv::MultiPolynomial::variable(table.n(), i) +
                                    muinv::MultiPolynomial::variable(table.n(), j)) *
                                   muinv::mu_schubert(padded, table);
      if (sets.delta) lhs = lhs.divided_by(2);
      muinv::MultiPolynomial rhs(table.n());
      for (const auto& s : sets.phi) rhs = rhs + muinv::mu_schubert(s, table);
      for (const auto& s : sets.psi) rhs = rhs - muinv::mu_schubert(s, table);
      const bool equal = lhs == rhs;
      if (format == "json") {
        std::cout << transition_json(tau, sets, equal, lhs, rhs).dump(2) << "\n";
      } else {
        std::cout << "phi:";
        for (const auto& s : sets.phi)
          std::cout << " " << muinv::render_mu_involution(s.unpadded());
        std::cout << "\npsi:";
        for (const auto& s : sets.psi)
          std::cout << " " << muinv::render_mu_involution(s.unpadded());
        std::cout << "\nequal: " << (equal ? "true" : "false") << "\n";
      }
      if (!equal) return 1;
    } else if (*expand) {
      const muinv::MuInvolution pi = parse_target(target, mu_text);
      const muinv::Composition nu = muinv::parse_composition(nu_text);
      const auto terms = muinv::refinement_expand(pi, nu);
      if (format == "json") {
        json j = json::array();
        for (const auto& t : terms) j.push_back(muinv::render_mu_involution(t));
        std::cout << j.dump() << "\n";
      } else {
        for (const auto& t : terms) std::cout << muinv::render_mu_involution(t) << "\n";
      }
    } else if (*verify) {
      muinv::VerifyReport report;
      if (suite == "atoms") report = muinv::verify_atoms(max_n, threads);
      else if (suite == "transition") report = muinv::verify_transition(max_n, 500, seed, threads);
      else if (suite == "exchange") report = muinv::verify_exchange(max_n, 7, threads);
      else {
        std::cerr << "unknown suite: " << suite << "\n";
        return 2;
      }
      return report_verify(report, format);
    } else if (*count) {
      const muinv::MuInvolution pi = parse_target(target, mu_text);
      std::cout << muinv::count_reduced_mu_words(pi) << "\n";
    } else if (*span) {
      const muinv::MuInvolution tau = parse_target(target, mu_text);
      muinv::MultiPolynomial f(tau.size());
      if (!poly_text.empty()) {
        f = muinv::parse_polynomial(poly_text, tau.size());
      } else if (var_index >= 1 && var_index <= tau.size()) {
        f = muinv::MultiPolynomial::variable(tau.size(), var_index) * muinv::mu_schubert(tau);
      } else {
        throw std::invalid_argument("span-check requires --var or --poly");
      }
      const bool member = muinv::span_membership(f, tau.mu());
      if (format == "json") {
        json j;
        j["member"] = member;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << (member ? "in-span" : "not-in-span") << "\n";
      }
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
