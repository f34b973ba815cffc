// uxnfa: command-line front end for the unary automata library.
//
// Exit codes: 0 success (or a "true" decision), 1 a "false" decision or a
// failed verification, 2 any error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "uxnfa/automaton.hpp"
#include "uxnfa/automaton_file.hpp"
#include "uxnfa/chrobak.hpp"
#include "uxnfa/decisions.hpp"
#include "uxnfa/natural.hpp"
#include "uxnfa/numtheory.hpp"
#include "uxnfa/periodic.hpp"
#include "uxnfa/verify.hpp"
#include "uxnfa/witnesses.hpp"

namespace {

using namespace uxnfa;

struct budgets {
  std::size_t vector_cap = default_vector_cap;
  std::size_t superpath_limit = default_superpath_budget;
  std::size_t lcm_budget = default_lcm_budget;
};

automaton_file load(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return parse(text);
  } catch (const error& e) {
    throw error(e.code(), (path.empty() ? std::string("<stdin>") : path) + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw error(errc::parse_error, "cannot write '" + out_path + "'");
  out << text;
}

int report(const decision_report& r) {
  std::cout << (r.verdict ? "true" : "false");
  if (r.witness_length) std::cout << " witness=" << r.witness_length->str();
  std::cout << '\n';
  return r.verdict ? 0 : 1;
}

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"Unary exclusive automata: conversions, decisions and witnesses"};
  app.require_subcommand(1);
  app.fallthrough();
  budgets limits;
  app.add_option("--vector-cap", limits.vector_cap, "Maximum number of distinct count vectors explored");
  app.add_option("--superpath-limit", limits.superpath_limit, "Maximum number of component sequences");
  app.add_option("--lcm-budget", limits.lcm_budget, "Maximum cycle length of a determinized automaton");

  int status = 0;

  // gen
  auto* gen = app.add_subcommand("gen", "Generate automata");
  gen->require_subcommand(1);
  std::vector<std::size_t> primes, cycles;
  auto* gen_witness = gen->add_subcommand("witness-xnfa", "XNFA for lengths divisible by exactly one prime");
  gen_witness->add_option("--primes", primes, "Comma-separated distinct primes")->required()->delimiter(',');
  gen_witness->callback([&] { std::cout << serialize(witness_xnfa(primes), semantics::exclusive); });

  auto* gen_okhotin = gen->add_subcommand("okhotin-nfa", "NFA for lengths not divisible by lcm(cycles), plus 0");
  gen_okhotin->add_option("--cycles", cycles, "Comma-separated cycle lengths >= 2")->required()->delimiter(',');
  gen_okhotin->callback([&] { std::cout << serialize(okhotin_nfa(cycles), semantics::existential); });

  std::size_t rnd_states = 0;
  double rnd_density = 0;
  std::uint64_t rnd_seed = 0;
  bool rnd_trim = false;
  std::string rnd_mode = "xnfa";
  auto* gen_random = gen->add_subcommand("random", "Seeded random automaton");
  gen_random->add_option("--states", rnd_states)->required()->check(CLI::PositiveNumber);
  gen_random->add_option("--density", rnd_density)->required()->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--seed", rnd_seed)->required();
  gen_random->add_flag("--trim", rnd_trim, "Remove unreachable and unproductive states");
  gen_random->add_option("--mode", rnd_mode, "Mode written to the file")->check(CLI::IsMember({"xnfa", "nfa", "dfa"}));
  gen_random->callback([&] {
    const auto a = random_automaton(rnd_states, rnd_density, rnd_seed, rnd_trim);
    const semantics mode = parse_mode_keyword(rnd_mode);
    require_valid(a, mode);
    std::cout << serialize(a, mode);
  });

  // gadget
  std::string in_path;
  auto* gadget = app.add_subcommand("gadget", "Hardness gadgets");
  gadget->require_subcommand(1);
  auto* gadget_complement = gadget->add_subcommand("complement", "XNFA for the complement of an NFA's language");
  gadget_complement->add_option("--in", in_path, "Input automaton (default: stdin)");
  gadget_complement->callback([&] {
    const auto file = load(in_path);
    std::cout << serialize(complement_gadget(file.automaton), semantics::exclusive);
  });

  // convert
  std::string target, out_path;
  auto* convert = app.add_subcommand("convert", "Convert an XNFA to Chrobak normal form or to a DFA");
  convert->add_option("--to", target)->required()->check(CLI::IsMember({"chrobak", "dfa"}));
  convert->add_option("--in", in_path, "Input automaton (default: stdin)");
  convert->add_option("--out", out_path, "Output file (default: stdout)");
  convert->callback([&] {
    const auto file = load(in_path);
    if (file.mode == semantics::existential) {
      if (target == "chrobak")
        throw error(errc::parse_error, "Chrobak conversion reads its input as an XNFA; got mode nfa");
      const auto dfa = canonical_dfa(extract_periodic(file.automaton, file.mode, limits.vector_cap));
      emit(serialize(dfa, semantics::deterministic), out_path);
      return;
    }
    const auto c = to_chrobak(file.automaton, {limits.superpath_limit});
    if (target == "chrobak")
      emit(serialize(chrobak_as_automaton(c), semantics::exclusive), out_path);
    else
      emit(serialize(chrobak_to_dfa(c, limits.lcm_budget), semantics::deterministic), out_path);
  });

  // lang
  auto* lang = app.add_subcommand("lang", "Print the ultimately periodic form of the language");
  lang->add_option("--in", in_path, "Input automaton (default: stdin)");
  lang->callback([&] {
    const auto file = load(in_path);
    std::cout << render(extract_periodic(file.automaton, file.mode, limits.vector_cap)) << '\n';
  });

  // decide
  std::string a_path, b_path, length_text;
  auto* decide = app.add_subcommand("decide", "Decision procedures (exit 0 = true, 1 = false)");
  decide->require_subcommand(1);
  auto* d_member = decide->add_subcommand("member", "Is a^length accepted?");
  d_member->add_option("--in", in_path, "Input automaton (default: stdin)");
  d_member->add_option("--length", length_text, "Length in decimal, optionally with e<k> suffix")->required();
  d_member->callback([&] {
    const auto file = load(in_path);
    status = report(member_at(file.automaton, file.mode, parse_natural(length_text)));
  });
  auto* d_empty = decide->add_subcommand("empty", "Is the language empty?");
  d_empty->add_option("--in", in_path, "Input automaton (default: stdin)");
  d_empty->callback([&] {
    const auto file = load(in_path);
    status = report(is_empty(file.automaton, file.mode, limits.vector_cap));
  });
  auto* d_universal = decide->add_subcommand("universal", "Is every length accepted?");
  d_universal->add_option("--in", in_path, "Input automaton (default: stdin)");
  d_universal->callback([&] {
    const auto file = load(in_path);
    status = report(is_universal(file.automaton, file.mode, limits.vector_cap));
  });
  auto* d_subset = decide->add_subcommand("subset", "Is L(a) contained in L(b)?");
  d_subset->add_option("--a", a_path)->required();
  d_subset->add_option("--b", b_path)->required();
  d_subset->callback([&] {
    const auto a = load(a_path), b = load(b_path);
    status = report(includes(a.automaton, a.mode, b.automaton, b.mode, limits.vector_cap));
  });
  auto* d_equal = decide->add_subcommand("equal", "Is L(a) equal to L(b)?");
  d_equal->add_option("--a", a_path)->required();
  d_equal->add_option("--b", b_path)->required();
  d_equal->callback([&] {
    const auto a = load(a_path), b = load(b_path);
    status = report(equivalent(a.automaton, a.mode, b.automaton, b.mode, limits.vector_cap));
  });

  // landau
  std::size_t landau_n = 0;
  auto* landau = app.add_subcommand("landau", "Landau's function F(n) or the prime-prefix product G(n)");
  auto* opt_f = landau->add_option("--f", landau_n, "Print F(n)");
  auto* opt_g = landau->add_option("--g", landau_n, "Print G(n) and its primes");
  opt_f->excludes(opt_g);
  landau->require_option(1);
  landau->callback([&] {
    if (*opt_f) {
      std::cout << landau_f(landau_n).str() << '\n';
    } else {
      const auto g = greedy_g(landau_n);
      std::cout << g.value.str() << " primes=" << join(g.primes) << '\n';
    }
  });

  // progression
  std::vector<std::uint64_t> coins;
  std::uint64_t coin_bound = 0;
  auto* prog = app.add_subcommand("progression", "Offset and period of large coin sums");
  prog->add_option("--coins", coins)->required()->delimiter(',');
  prog->add_option("--n", coin_bound)->required();
  prog->callback([&] {
    const auto p = progression(coins, coin_bound);
    std::cout << "t=" << p.offset << " d=" << p.period << '\n';
  });

  // verify
  verify_options vopts;
  auto* verify = app.add_subcommand("verify", "Run the oracle cross-checks over a seeded corpus");
  verify->add_option("--seed", vopts.seed)->required();
  verify->add_option("--count", vopts.count)->required();
  verify->add_option("--max-states", vopts.max_states)->required()->check(CLI::PositiveNumber);
  verify->callback([&] {
    const auto r = run_verification(vopts);
    std::cout << r.summary();
    status = r.ok() ? 0 : 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "uxnfa: " << e.what() << '\n';
    return 2;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "uxnfa: " << e.what() << '\n';
    return 2;
  }
}
