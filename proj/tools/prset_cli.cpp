// prset: command-line front end.
//
// Exit codes: 0 ok, 1 property violation, 2 usage or parse error, 3 undecided at a cap.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "prset/prset.hpp"

using namespace prset;

namespace {

enum Exit : int { ok = 0, violation = 1, usage = 2, undecided = 3 };

struct RunConfig {
  std::uint64_t window = 10'000;
  std::uint64_t dp_cap = kDefaultDpCap;
  std::uint64_t lcm_cap = kDefaultLcmCap;
  std::uint64_t seed = 20240607;
  std::string format = "list";

  OutputFormat output() const { return parse_format(format); }
};

// Emits one sequence in the configured format.
void emit(const RunConfig& cfg, const std::vector<std::uint64_t>& set, const std::vector<std::uint64_t>& result,
          nlohmann::ordered_json extra = {}) {
  switch (cfg.output()) {
    case OutputFormat::list: write_list(std::cout, result); break;
    case OutputFormat::bfile: write_bfile(std::cout, result); break;
    case OutputFormat::json: {
      auto j = json_record(cfg.window, set, result);
      for (auto& [k, v] : extra.items()) j[k] = v;
      write_json(std::cout, j);
      break;
    }
  }
}

FiniteSet require_finite(const SetRule& rule, const char* what) {
  if (const auto* e = std::get_if<rules::Explicit>(&rule)) return e->elems;
  throw precondition_error(std::string(what) + " must be a finite explicit set");
}

int cmd_sieve(const RunConfig& cfg) {
  emit(cfg, {}, practical_sieve(cfg.window).members());
  return ok;
}

int cmd_check_set(const RunConfig& cfg, const std::string& text) {
  const FiniteSet a = require_finite(parse_rule(text), "--set");
  const auto fast = is_practical(a);
  const auto slow = is_practical_oracle(a, cfg.dp_cap);
  const bool agree = !slow || *slow == fast;
  std::vector<std::uint64_t> result;
  if (fast.witness) result.push_back(*fast.witness);

  if (cfg.output() == OutputFormat::json) {
    nlohmann::ordered_json extra;
    extra["practical"] = fast.practical;
    extra["oracle"] = slow ? nlohmann::ordered_json(slow->practical) : nlohmann::ordered_json("undecided");
    emit(cfg, a.elements(), result, extra);
  } else if (cfg.output() == OutputFormat::bfile) {
    emit(cfg, a.elements(), result);
  } else {
    std::cout << (fast.practical ? "practical" : "not practical, smallest gap " + std::to_string(*fast.witness));
    if (!slow) std::cout << " (oracle undecided: sum exceeds dp cap)";
    std::cout << '\n';
  }
  if (!agree) {
    std::cerr << "characterization and subset-sum oracle disagree on " << a.to_string() << '\n';
    return violation;
  }
  return ok;
}

int cmd_pr(const RunConfig& cfg, const std::string& text) {
  const WindowSet a = materialize(parse_rule(text), cfg.window);
  emit(cfg, a.members(), pr_window(a).members());
  return ok;
}

int cmd_order(const RunConfig& cfg, const std::string& a_text, const std::string& b_text) {
  const FiniteSet a = require_finite(parse_rule(a_text), "--a");
  const FiniteSet b = require_finite(parse_rule(b_text), "--b");
  const Decision d = precedes_exact_finite(a, b, cfg.lcm_cap);
  const FiniteSet core = minimal_core(a);
  if (cfg.output() == OutputFormat::list) {
    std::cout << "precedes: " << to_string(d) << '\n';
    std::cout << "minimal core of A: " << core.to_string() << '\n';
  } else {
    nlohmann::ordered_json extra;
    extra["b"] = b.elements();
    extra["precedes"] = to_string(d);
    emit(cfg, a.elements(), core.elements(), extra);
  }
  return d == Decision::undecided ? undecided : ok;
}

int cmd_orbit(const RunConfig& cfg, const std::string& text, std::size_t steps) {
  const WindowSet a = materialize(parse_rule(text), cfg.window);
  const auto rec = orbit(a, steps);
  if (cfg.output() == OutputFormat::list) {
    for (const auto& s : rec.states) write_list(std::cout, s.members());
    return ok;
  }
  nlohmann::ordered_json extra;
  auto& states = extra["states"] = nlohmann::ordered_json::array();
  for (const auto& s : rec.states) states.push_back(s.members());
  auto& dists = extra["distances"] = nlohmann::ordered_json::array();
  for (const auto& d : rec.distances) dists.push_back(d.to_string());
  if (rec.eventual_period)
    extra["period"] = {{"preperiod", rec.eventual_period->preperiod}, {"period", rec.eventual_period->period}};
  emit(cfg, a.members(), rec.states.back().members(), extra);
  return ok;
}

int cmd_periodic(const RunConfig& cfg, const std::string& choice_text) {
  const SetRule choice = parse_choice(choice_text);
  const auto pair = construct_2periodic(choice, cfg.window);
  switch (cfg.output()) {
    case OutputFormat::list:
      write_list(std::cout, pair.a.members());
      write_list(std::cout, pair.b.members());
      break;
    case OutputFormat::bfile: write_bfile(std::cout, pair.a.members()); break;
    case OutputFormat::json: {
      nlohmann::ordered_json extra;
      extra["b"] = pair.b.members();
      emit(cfg, materialize(choice, cfg.window).members(), pair.a.members(), extra);
      break;
    }
  }
  return ok;
}

int cmd_finite_pr(const RunConfig& cfg, std::uint64_t k, const std::string& variant_text) {
  ComplementVariant variant;
  if (variant_text == "finite")
    variant = ComplementVariant::finite_complement;
  else if (variant_text == "infinite")
    variant = ComplementVariant::infinite_complement;
  else
    throw ParseError(0, "variant must be finite or infinite", variant_text);
  const auto r = finite_pr_construct(k, variant, cfg.window);
  nlohmann::ordered_json extra;
  extra["bound"] = r.bound;
  extra["bounded"] = r.bounded;
  emit(cfg, r.a.members(), r.pr.members(), extra);
  if (!r.bounded) {
    std::cerr << "Pr(A_" << k << ") has member " << *r.largest_member << " above " << r.bound << '\n';
    return violation;
  }
  return ok;
}

int cmd_verify(const RunConfig& cfg, const std::vector<std::string>& wanted) {
  VerifyConfig vc{cfg.window, cfg.dp_cap, cfg.lcm_cap, cfg.seed};
  std::vector<const SuiteEntry*> chosen;
  for (const auto& w : wanted) {
    bool found = false;
    for (const auto& e : all_suites())
      if (w == "all" || w == e.id || w == e.name) {
        chosen.push_back(&e);
        found = true;
      }
    if (!found) throw ParseError(0, "unknown suite", w);
  }
  bool any_violation = false, any_undecided = false;
  nlohmann::ordered_json reports = nlohmann::ordered_json::array();
  for (const auto* e : chosen) {
    const auto r = run_suite(*e, vc);
    any_violation |= r.violations > 0;
    any_undecided |= r.undecided > 0;
    if (cfg.output() == OutputFormat::json) {
      reports.push_back({{"id", r.id},
                         {"name", e->name},
                         {"checks", r.checks},
                         {"violations", r.violations},
                         {"undecided", r.undecided},
                         {"examples", r.examples}});
      continue;
    }
    std::cout << r.id << ' ' << e->name << ": checks=" << r.checks << " violations=" << r.violations
              << " undecided=" << r.undecided << ' ' << (r.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& ex : r.examples) std::cout << "  " << ex << '\n';
  }
  if (cfg.output() == OutputFormat::json) {
    nlohmann::ordered_json extra;
    extra["suites"] = reports;
    emit(cfg, {}, {}, extra);
  }
  if (any_violation) return violation;
  return any_undecided ? undecided : ok;
}

int cmd_hypothesis(const RunConfig& cfg, const std::string& strategy_text, const SearchOptions& base) {
  SearchStrategy strategy;
  if (strategy_text == "single")
    strategy = SearchStrategy::single_deletion;
  else if (strategy_text == "random")
    strategy = SearchStrategy::randomized;
  else
    throw ParseError(0, "strategy must be single or random", strategy_text);
  SearchOptions opts = base;
  opts.seed = cfg.seed;
  const auto survivors = hypothesis_search(cfg.window, strategy, opts);
  if (cfg.output() == OutputFormat::json) {
    nlohmann::ordered_json extra;
    auto& arr = extra["survivors"] = nlohmann::ordered_json::array();
    for (const auto& s : survivors) arr.push_back(s.removed);
    emit(cfg, {}, {}, extra);
  } else {
    std::cout << "survivors: " << survivors.size() << '\n';
    for (const auto& s : survivors) write_list(std::cout, s.removed);
  }
  // A survivor is unrefuted within the multiplier budget: evidence, not a counterexample.
  return survivors.empty() ? ok : undecided;
}

int cmd_export(const RunConfig& cfg, const std::string& sequence, const std::string& text) {
  if (sequence == "practical") return cmd_sieve(cfg);
  if (sequence == "quasi-practical") {
    const FactorSieve sieve(cfg.window);
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 1; n <= cfg.window; ++n)
      if (sieve.is_practical_number(n) || sieve.is_prime(n)) out.push_back(n);
    emit(cfg, {}, out);
    return ok;
  }
  if (sequence == "set") {
    emit(cfg, {}, materialize(parse_rule(text), cfg.window).members());
    return ok;
  }
  if (sequence == "pr") return cmd_pr(cfg, text);
  throw ParseError(0, "sequence must be practical, quasi-practical, set or pr", sequence);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Practical sets, A-practical numbers and the Pr map"};
  app.require_subcommand(1);
  RunConfig cfg;

  app.add_option("-n,--n,--window", cfg.window, "Window {1..N}")
      ->envname("PRSET_WINDOW")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--dp-cap", cfg.dp_cap, "Largest set sum the subset-sum oracle will run on")
      ->envname("PRSET_DP_CAP")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--lcm-cap", cfg.lcm_cap, "Largest lcm the exact order decisions will enumerate")
      ->envname("PRSET_LCM_CAP")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized suites and searches")
      ->envname("PRSET_SEED")
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->envname("PRSET_FORMAT")
      ->check(CLI::IsMember({"list", "json", "bfile"}))
      ->capture_default_str();

  auto sub = [&](const char* name, const char* desc) {
    auto* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  std::string set_text, a_text, b_text, choice_text = "all", variant = "finite", strategy = "single",
                                        sequence = "practical";
  std::vector<std::string> suites{"all"};
  std::size_t steps = 10;
  std::uint64_t k = 0;
  SearchOptions search;

  auto* sieve = sub("sieve", "Practical numbers up to N");
  auto* check = sub("check-set", "Decide whether a finite set is practical");
  check->add_option("--set", set_text, "Finite set, e.g. 1,2,4")->required();
  auto* pr = sub("pr", "Pr(A) on the window");
  pr->add_option("--set", set_text, "Set rule")->required();
  auto* order = sub("order", "Decide A ≺ B for finite sets and report the minimal core of A");
  order->add_option("--a", a_text)->required();
  order->add_option("--b", b_text)->required();
  auto* orb = sub("orbit", "Iterate Pr from a set until a state repeats");
  orb->add_option("--set", set_text, "Set rule")->required();
  orb->add_option("--steps", steps)->check(CLI::PositiveNumber)->capture_default_str();
  auto* periodic = sub("periodic", "Construct a pair A, B with Pr(A) = B and Pr(B) = A");
  periodic->add_option("--choice", choice_text, "Choice set within ℕ \\ {1}")->capture_default_str();
  auto* fpr = sub("finite-pr", "Pr(A_k) for the finite-Pr constructions");
  fpr->add_option("--k", k)->required()->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 31));
  fpr->add_option("--variant", variant)->check(CLI::IsMember({"finite", "infinite"}))->capture_default_str();
  auto* verify = sub("verify", "Run verification suites (T1..T15, by id or name, or all)");
  verify->add_option("--suite", suites)->capture_default_str();
  auto* hyp = sub("hypothesis", "Search for A ≠ ℕ with Pr(A) = Pr(ℕ)");
  hyp->add_option("--strategy", strategy)->check(CLI::IsMember({"single", "random"}))->capture_default_str();
  hyp->add_option("--trials", search.trials)->capture_default_str();
  hyp->add_option("--max-removed", search.max_removed)->check(CLI::PositiveNumber)->capture_default_str();
  hyp->add_option("--max-multiplier", search.max_multiplier)->check(CLI::PositiveNumber)->capture_default_str();
  auto* exp = sub("export", "Write a sequence (default as a b-file)");
  exp->add_option("--sequence", sequence)
      ->check(CLI::IsMember({"practical", "quasi-practical", "set", "pr"}))
      ->capture_default_str();
  exp->add_option("--set", set_text, "Set rule for the set and pr sequences");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*exp && app.get_option("--format")->count() == 0 && !std::getenv("PRSET_FORMAT")) cfg.format = "bfile";
    if (*sieve) return cmd_sieve(cfg);
    if (*check) return cmd_check_set(cfg, set_text);
    if (*pr) return cmd_pr(cfg, set_text);
    if (*order) return cmd_order(cfg, a_text, b_text);
    if (*orb) return cmd_orbit(cfg, set_text, steps);
    if (*periodic) return cmd_periodic(cfg, choice_text);
    if (*fpr) return cmd_finite_pr(cfg, k, variant);
    if (*verify) return cmd_verify(cfg, suites);
    if (*hyp) return cmd_hypothesis(cfg, strategy, search);
    if (*exp) {
      if ((sequence == "set" || sequence == "pr") && set_text.empty())
        throw precondition_error("--set is required for the set and pr sequences");
      return cmd_export(cfg, sequence, set_text);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return usage;
  } catch (const cap_exceeded& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    return undecided;
  } catch (const overflow_error& e) {
    std::cerr << "undecided: " << e.what() << '\n';
    return undecided;
  } catch (const invariant_violation& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return violation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}
