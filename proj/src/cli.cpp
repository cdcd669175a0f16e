#include "enumkit/cli.hpp"

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "enumkit/amortize.hpp"
#include "enumkit/gray.hpp"
#include "enumkit/io.hpp"
#include "enumkit/oracle.hpp"

namespace enumkit {
namespace {

std::string format_avg(double v) {
  if (v == static_cast<double>(static_cast<uint64_t>(v)))
    return std::to_string(static_cast<uint64_t>(v));
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

using Printer = std::function<void(const Solution&)>;

Trace run_streaming(Machine& m, const RunLimits& limits, const Printer& print) {
  Trace t;
  while (true) {
    if (limits.emit_limit && t.events.size() >= *limits.emit_limit) break;
    StepOutcome out = m.step();
    if (out.is_done()) break;
    ++t.total_steps;
    if (t.total_steps > limits.step_budget)
      throw StepBudgetExceeded("step budget of " + std::to_string(limits.step_budget) +
                               " exceeded");
    if (out.is_emit()) {
      print(out.solution);
      t.events.push_back({t.total_steps, std::move(out.solution)});
    }
  }
  t.preprocessing_steps = t.events.empty() ? t.total_steps : t.events.front().step_index;
  return t;
}

struct ProblemSetup {
  std::function<Machine()> make_machine;
  std::function<SolutionSet()> make_reference;
  Printer printer;
  std::string order_contract;  // "lex", "hamming1" or ""
};

void print_stats(std::ostream& err, const Trace& t) {
  const DelayReport r = delay_report(t);
  err << "count=" << r.count << "\n"
      << "preprocessing=" << r.preprocessing << "\n"
      << "max_delay=" << r.max_delay << "\n"
      << "avg_delay=" << format_avg(r.avg_delay) << "\n"
      << "total_steps=" << r.total_steps << "\n";
  if (t.seed) err << "seed=" << *t.seed << "\n";
}

int check_order(const Trace& t, const std::string& contract, std::ostream& err) {
  if (contract.empty()) {
    err << "order_check=skipped\n";
    return kExitOk;
  }
  for (size_t i = 1; i < t.events.size(); ++i) {
    const Solution& a = t.events[i - 1].solution;
    const Solution& b = t.events[i].solution;
    const bool ok = contract == "lex" ? a < b : a.hamming_distance(b) == 1;
    if (!ok) {
      err << "order_check=failed at output " << i + 1 << "\n";
      return kExitVerifyMismatch;
    }
  }
  err << "order_check=ok\n";
  return kExitOk;
}

int verify_against_reference(const Trace& t, const SolutionSet& ref, std::ostream& err) {
  const CompareReport rep = compare(t, ref);
  err << "verify_missing=" << rep.missing.size() << "\n"
      << "verify_extra=" << rep.extra.size() << "\n"
      << "verify_duplicated=" << rep.duplicated.size() << "\n";
  if (rep.empty()) return kExitOk;
  for (size_t i = 0; i < rep.missing.size() && i < 5; ++i)
    err << "missing: " << rep.missing[i].to_string() << "\n";
  for (size_t i = 0; i < rep.extra.size() && i < 5; ++i)
    err << "extra: " << rep.extra[i].to_string() << "\n";
  for (size_t i = 0; i < rep.duplicated.size() && i < 5; ++i)
    err << "duplicated: " << rep.duplicated[i].to_string() << "\n";
  return kExitVerifyMismatch;
}

Machine apply_amortizer(const RunConfig& cfg, const ProblemSetup& setup, std::ostream& err) {
  Machine m = setup.make_machine();
  if (cfg.amortize == "none") return m;
  uint64_t p = cfg.incremental_delay.value_or(0);
  uint64_t count = cfg.solution_bound.value_or(0);
  if (p == 0 || (cfg.amortize == "geometric" && count == 0)) {
    // Calibration run of an identical machine to measure what was not given.
    Machine probe = setup.make_machine();
    Trace t = run(probe, RunLimits{cfg.step_budget, std::nullopt});
    if (p == 0) {
      p = measured_incremental_delay(t);
      if (cfg.stats) err << "measured_incremental_delay=" << p << "\n";
    }
    if (count == 0) {
      count = t.events.empty() ? 1 : t.events.size();
      if (cfg.amortize == "geometric" && cfg.stats) err << "measured_count=" << count << "\n";
    }
  }
  if (cfg.amortize == "queue") return queue_amortize(std::move(m), p);
  if (cfg.amortize == "geometric")
    return geometric_amortize(std::move(m), AmortizationConfig{p, count, cfg.epsilon});
  if (cfg.amortize == "adaptive") return geometric_amortize_adaptive(std::move(m), p);
  if (cfg.amortize == "epsilon") return adaptive_delay_amortize(std::move(m), cfg.epsilon);
  throw ValidationError("unknown amortizer '" + cfg.amortize + "'");
}

int execute(const RunConfig& cfg, const ProblemSetup& setup, std::ostream& err) {
  Machine m = apply_amortizer(cfg, setup, err);
  Trace t = run_streaming(m, RunLimits{cfg.step_budget, cfg.limit}, setup.printer);
  if (cfg.seed) t.seed = cfg.seed;
  if (cfg.stats) print_stats(err, t);
  int code = kExitOk;
  if (cfg.order_check) code = std::max(code, check_order(t, setup.order_contract, err));
  if (cfg.verify) code = std::max(code, verify_against_reference(t, setup.make_reference(), err));
  return code;
}

Printer element_list_printer(std::ostream& out) {
  return [&out](const Solution& s) {
    const auto elems = s.elements();
    for (size_t i = 0; i < elems.size(); ++i) out << (i ? " " : "") << elems[i];
    out << "\n";
  };
}

Printer bitstring_printer(std::ostream& out) {
  return [&out](const Solution& s) { out << s.to_string() << "\n"; };
}

int dispatch(const RunConfig& cfg, const std::string& instance_path, uint64_t gray_n,
             bool gf2_rank, std::optional<uint64_t> gf2_index, std::optional<uint64_t> gf2_sample,
             std::ostream& out, std::ostream& err) {
  if (cfg.problem == "union") {
    const SetSystem x = load_set_system(instance_path);
    std::string method = cfg.method == "default" ? "flashlight" : cfg.method;
    ProblemSetup setup;
    if (method == "flashlight")
      setup.make_machine = [x] { return union_flashlight(x); };
    else if (method == "supergraph")
      setup.make_machine = [x] { return union_supergraph(x); };
    else if (method == "reverse")
      setup.make_machine = [x] { return union_reverse_search(x); };
    else if (method == "saturate")
      setup.make_machine = [x] { return closure_saturate(x, ClosureOperator::Union); };
    else
      throw ValidationError("method '" + method + "' is not valid for union");
    setup.make_reference = [x] { return brute_union(x); };
    setup.printer = element_list_printer(out);
    setup.order_contract = method == "flashlight" ? "lex" : "";
    return execute(cfg, setup, err);
  }
  if (cfg.problem == "dnf") {
    if (cfg.method != "default" && cfg.method != "flashlight")
      throw ValidationError("method '" + cfg.method + "' is not valid for dnf");
    const DnfFormula d = load_dnf(instance_path);
    ProblemSetup setup;
    setup.make_machine = [d] { return dnf_enumerate(d); };
    setup.make_reference = [d] { return brute_dnf(d); };
    setup.printer = bitstring_printer(out);
    setup.order_contract = "lex";
    return execute(cfg, setup, err);
  }
  if (cfg.problem == "gray") {
    if (cfg.method != "default")
      throw ValidationError("gray has no method choice");
    const uint32_t n = static_cast<uint32_t>(gray_n);
    ProblemSetup setup;
    setup.make_machine = [n] { return gray_code(n); };
    setup.make_reference = [n] { return SolutionSet(rbc_reference(n)); };
    setup.printer = bitstring_printer(out);
    setup.order_contract = "hamming1";
    return execute(cfg, setup, err);
  }
  if (cfg.problem == "dagpaths") {
    if (cfg.method != "default")
      throw ValidationError("dagpaths has no method choice");
    const Dag g = load_dag(instance_path);
    ProblemSetup setup;
    setup.make_machine = [g] { return dag_paths(g); };
    setup.make_reference = [g] { return brute_paths(g); };
    setup.printer = [&out, g](const Solution& s) {
      const auto seq = g.decode_path(s);
      for (size_t i = 0; i < seq.size(); ++i) out << (i ? " " : "") << seq[i];
      out << "\n";
    };
    return execute(cfg, setup, err);
  }
  if (cfg.problem == "gf2") {
    if (cfg.method != "default")
      throw ValidationError("gf2 has no method choice");
    const Gf2System sys = load_gf2(instance_path);
    if (gf2_rank || gf2_index || gf2_sample) {
      const auto basis = gf2_basis(sys);
      if (gf2_rank) {
        err << "rank=" << (basis ? basis->rank : 0) << "\n";
        err << "kernel_dim=" << (basis ? basis->kernel_dim() : 0) << "\n";
        if (!basis)
          err << "count=0\n";
        else if (auto c = basis->count())
          err << "count=" << *c << "\n";
      }
      if (gf2_index) {
        if (!basis) {
          err << "no solution\n";
          return kExitValidation;
        }
        const auto x = gf2_jth_solution(*basis, *gf2_index);
        if (!x) {
          err << "index " << *gf2_index << " out of range\n";
          return kExitValidation;
        }
        out << x->to_string() << "\n";
      }
      if (gf2_sample) {
        auto sampler = make_gf2_sampler(sys, cfg.seed.value_or(0));
        for (uint64_t i = 0; i < *gf2_sample; ++i) {
          const auto x = sampler->sample();
          if (!x) {
            err << "empty solution set\n";
            return kExitValidation;
          }
          out << x->to_string() << "\n";
        }
      }
      return kExitOk;
    }
    ProblemSetup setup;
    setup.make_machine = [sys] { return gf2_enumerate(sys); };
    setup.make_reference = [sys] { return brute_gf2(sys); };
    setup.printer = bitstring_printer(out);
    return execute(cfg, setup, err);
  }
  throw ValidationError("unknown problem '" + cfg.problem + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"enumeration engine with delay instrumentation"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("ENUM_STEP_BUDGET")) {
    try {
      cfg.step_budget = std::stoull(env);
    } catch (const std::exception&) {
      err << "invalid ENUM_STEP_BUDGET '" << env << "'\n";
      return kExitParse;
    }
  }

  std::string instance_path;
  uint64_t gray_n = 0;
  bool gf2_rank = false;
  std::optional<uint64_t> gf2_index;
  std::optional<uint64_t> gf2_sample;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--method", cfg.method, "enumeration method");
    sub->add_option("--amortize", cfg.amortize,
                    "delay amortizer: none|queue|geometric|adaptive|epsilon");
    sub->add_option("--limit", cfg.limit, "stop after this many solutions");
    sub->add_option("--seed", cfg.seed, "seed for randomized machines");
    sub->add_option("--p", cfg.incremental_delay, "incremental delay bound for amortizers");
    sub->add_option("--ell", cfg.solution_bound, "solution count bound for geometric");
    sub->add_option("--epsilon", cfg.epsilon, "epsilon for adaptive amortizers");
    sub->add_flag("--stats", cfg.stats, "print a delay report");
    sub->add_flag("--verify", cfg.verify, "check the output against the brute-force oracle");
    sub->add_flag("--order-check", cfg.order_check, "check the method's output order contract");
  };

  CLI::App* sub_union = app.add_subcommand("union", "union closure of a set system");
  sub_union->add_option("instance", instance_path, "set system file")->required();
  add_common(sub_union);

  CLI::App* sub_dnf = app.add_subcommand("dnf", "models of a DNF formula");
  sub_dnf->add_option("instance", instance_path, "dnf file")->required();
  add_common(sub_dnf);

  CLI::App* sub_gray = app.add_subcommand("gray", "reflected binary code words");
  sub_gray->add_option("n", gray_n, "word length")->required();
  add_common(sub_gray);

  CLI::App* sub_dag = app.add_subcommand("dagpaths", "source-target paths of a DAG");
  sub_dag->add_option("instance", instance_path, "dag file")->required();
  add_common(sub_dag);

  CLI::App* sub_gf2 = app.add_subcommand("gf2", "solutions of a linear system over GF(2)");
  sub_gf2->add_option("instance", instance_path, "gf2 file")->required();
  sub_gf2->add_flag("--rank", gf2_rank, "report rank, kernel dimension and count");
  sub_gf2->add_option("--index", gf2_index, "print the j-th solution only");
  sub_gf2->add_option("--sample", gf2_sample, "print this many uniform samples");
  add_common(sub_gf2);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitParse;
  }

  for (CLI::App* sub : {sub_union, sub_dnf, sub_gray, sub_dag, sub_gf2})
    if (sub->parsed()) cfg.problem = sub->get_name();

  try {
    return dispatch(cfg, instance_path, gray_n, gf2_rank, gf2_index, gf2_sample, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const InstanceTooLarge& e) {
    err << "instance too large: " << e.what() << "\n";
    return kExitValidation;
  } catch (const StepBudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const StoreBudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const EnumError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace enumkit
