// dslab: command-line front end for the dyadic summability laboratory.
//
// Subcommands: kernel, conditions, lemma2, lemma3, blowup2, blowup3,
// converge, corollaries. Experiments write <out>.csv and <out>.json; the
// verdict decides the exit status (0 pass/hold, 2 inconclusive, 1 fail;
// 64 usage errors, 65 resolution overflow). DSLAB_THREADS overrides
// --threads.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "dslab/analysis.hpp"
#include "dslab/kernels.hpp"
#include "dslab/means.hpp"
#include "dslab/report.hpp"
#include "dslab/transforms.hpp"
#include "dslab/verification.hpp"
#include "dslab/weights.hpp"

namespace {

using namespace dslab;

constexpr int kUsageExit = 64;
constexpr int kResolutionExit = 65;
constexpr int kInternalExit = 70;

// "a..b" (all integers), "2^a..2^b" (dyadic), or a single entry.
std::vector<std::uint64_t> parse_ngrid(const std::string& spec) {
  auto parse_entry = [](const std::string& s, bool& dyadic) -> std::uint64_t {
    if (s.rfind("2^", 0) == 0) {
      dyadic = true;
      std::uint64_t e = std::stoull(s.substr(2));
      if (e > 62) throw std::invalid_argument("dyadic grid exponent too large");
      return e;
    }
    dyadic = false;
    return std::stoull(s);
  };
  std::size_t dots = spec.find("..");
  std::vector<std::uint64_t> out;
  if (dots == std::string::npos) {
    bool dy = false;
    std::uint64_t v = parse_entry(spec, dy);
    out.push_back(dy ? (std::uint64_t{1} << v) : v);
    return out;
  }
  bool dy_a = false, dy_b = false;
  std::uint64_t a = parse_entry(spec.substr(0, dots), dy_a);
  std::uint64_t b = parse_entry(spec.substr(dots + 2), dy_b);
  if (dy_a != dy_b) throw std::invalid_argument("mixed grid spec: " + spec);
  if (a > b) throw std::invalid_argument("empty grid: " + spec);
  if (dy_a) {
    for (std::uint64_t e = a; e <= b; ++e) out.push_back(std::uint64_t{1} << e);
  } else {
    for (std::uint64_t v = a; v <= b; ++v) out.push_back(v);
  }
  return out;
}

std::vector<int> small_grid(const std::string& spec) {
  std::vector<int> out;
  std::size_t dots = spec.find("..");
  if (dots == std::string::npos) {
    out.push_back(static_cast<int>(std::stoull(spec)));
    return out;
  }
  std::uint64_t a = std::stoull(spec.substr(0, dots));
  std::uint64_t b = std::stoull(spec.substr(dots + 2));
  if (a > b) throw std::invalid_argument("empty grid: " + spec);
  for (std::uint64_t v = a; v <= b; ++v) out.push_back(static_cast<int>(v));
  return out;
}

int finish(const std::vector<ExperimentReport>& reports,
           const std::string& out_base) {
  Verdict worst = Verdict::pass;
  for (const auto& r : reports) {
    std::string base = out_base;
    if (reports.size() > 1) base += "_" + r.id;
    write_report(r, base);
    std::cout << r.id << ": " << verdict_name(r.verdict) << "  (" << base
              << ".csv)\n";
    worst = worst_of(worst, r.verdict);
  }
  return verdict_exit_code(worst);
}

struct KernelArgs {
  std::string kind = "dirichlet";
  std::uint64_t n = 1;
  std::string system = "w";
  int resolution = 3;
  std::string alpha = "1/2";
  std::string weights = "constant";
  std::string mode = "exact";
};

int run_kernel(const KernelArgs& a) {
  System sys = parse_system(a.system);
  auto print = [](const auto& values, auto&& fmt) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) line += ',';
      line += fmt(values[i]);
    }
    std::cout << line << "\n";
  };
  if (a.mode == "exact") {
    SampledFunction<Rat> data(a.resolution);
    if (a.kind == "dirichlet") {
      data = dirichlet_kernel<Rat>(a.n, sys, a.resolution).data;
    } else if (a.kind == "fejer") {
      data = fejer_kernel<Rat>(a.n, sys, a.resolution).data;
    } else if (a.kind == "cesaro") {
      data = cesaro_kernel<Rat>(a.n, parse_rational(a.alpha), sys,
                                a.resolution).data;
    } else if (a.kind == "norlund") {
      auto q = WeightSequence::parse_preset(a.weights);
      if (!q->exact_capable())
        throw ModeError("preset " + q->key() + " has no exact values; use --mode float");
      data = norlund_kernel<Rat>(a.n, *q, sys, a.resolution).data;
    } else {
      throw std::invalid_argument("unknown kernel kind: " + a.kind);
    }
    print(data.values(), [](const Rat& v) { return rational_to_string(v); });
  } else if (a.mode == "float") {
    SampledFunction<double> data(a.resolution);
    if (a.kind == "dirichlet") {
      data = dirichlet_kernel<double>(a.n, sys, a.resolution).data;
    } else if (a.kind == "fejer") {
      data = fejer_kernel<double>(a.n, sys, a.resolution).data;
    } else if (a.kind == "cesaro") {
      data = cesaro_kernel<double>(a.n, parse_rational(a.alpha), sys,
                                   a.resolution).data;
    } else if (a.kind == "norlund") {
      auto q = WeightSequence::parse_preset(a.weights);
      data = norlund_kernel<double>(a.n, *q, sys, a.resolution).data;
    } else {
      throw std::invalid_argument("unknown kernel kind: " + a.kind);
    }
    print(data.values(), [](double v) { return format_double(v); });
  } else {
    throw std::invalid_argument("mode must be exact or float");
  }
  return 0;
}

ExperimentReport condition_report_to_experiment(const ConditionReport& r) {
  ExperimentReport rep;
  rep.id = "condition_" + condition_name(r.condition);
  rep.params = {{"weights", r.weight_key},
                {"condition", condition_name(r.condition)},
                {"alpha", format_double(r.alpha)},
                {"mode", "float"}};
  rep.columns = {"n"};
  for (const auto& name : r.witness_names) rep.columns.push_back(name + "_float");
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    std::vector<std::string> row{std::to_string(r.grid[i])};
    for (double w : r.witnesses[i]) row.push_back(format_double(w));
    rep.rows.push_back(std::move(row));
  }
  std::string verdict_text =
      r.verdict == ConditionVerdict::holds_empirically ? "holds_empirically"
      : r.verdict == ConditionVerdict::fails_at
          ? "fails_at_" + std::to_string(r.fail_n)
          : "inconclusive";
  rep.summary = {{"classification", verdict_text},
                 {"witness_min", format_double(r.summary_min)},
                 {"witness_max", format_double(r.summary_max)}};
  rep.verdict = r.verdict == ConditionVerdict::holds_empirically
                    ? Verdict::pass
                : r.verdict == ConditionVerdict::fails_at ? Verdict::fail
                                                          : Verdict::inconclusive;
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dyadic summability laboratory"};
  app.require_subcommand(1);

  // kernel
  KernelArgs ka;
  auto* kernel_cmd = app.add_subcommand("kernel", "dump kernel values as CSV");
  kernel_cmd->add_option("--kind", ka.kind, "dirichlet|fejer|cesaro|norlund");
  kernel_cmd->add_option("--n", ka.n, "kernel order")->required();
  kernel_cmd->add_option("--system", ka.system, "w|k");
  kernel_cmd->add_option("--resolution", ka.resolution, "dyadic resolution N");
  kernel_cmd->add_option("--alpha", ka.alpha, "cesaro alpha (rational a/b)");
  kernel_cmd->add_option("--weights", ka.weights, "norlund weight preset");
  kernel_cmd->add_option("--mode", ka.mode, "exact|float");

  // common experiment options
  std::string weights = "constant", alpha = "1/2", p = "2/5", mode;
  std::string ngrid, out, condition_name_arg, part = "b", p4 = "2/3";
  std::uint64_t n_max = 1 << 8;
  int resolution = 10, m = 3;
  unsigned threads = 1;

  auto* cond_cmd = app.add_subcommand("conditions", "weight condition table");
  cond_cmd->add_option("--weights", weights);
  cond_cmd->add_option("--alpha", alpha);
  cond_cmd->add_option("--n-max", n_max);
  cond_cmd->add_option("--condition", condition_name_arg,
                       "single condition (default: all)");
  cond_cmd->add_option("--out", out);

  auto* lemma2_cmd = app.add_subcommand("lemma2", "kernel decomposition identity");
  lemma2_cmd->add_option("--weights", weights);
  lemma2_cmd->add_option("--m", m);
  lemma2_cmd->add_option("--resolution", resolution);
  lemma2_cmd->add_option("--mode", mode, "exact (identity checks demand it)");
  lemma2_cmd->add_option("--threads", threads);
  lemma2_cmd->add_option("--out", out);

  auto* lemma3_cmd = app.add_subcommand("lemma3", "kernel majorant constant");
  lemma3_cmd->add_option("--weights", weights);
  lemma3_cmd->add_option("--alpha", alpha);
  lemma3_cmd->add_option("--n-max", n_max);
  lemma3_cmd->add_option("--resolution", resolution);
  lemma3_cmd->add_option("--mode", mode, "float (majorant has 2^{j alpha})");
  lemma3_cmd->add_option("--threads", threads);
  lemma3_cmd->add_option("--out", out);

  auto* blowup2_cmd = app.add_subcommand("blowup2", "theorem-2 counterexample ratios");
  blowup2_cmd->add_option("--weights", weights);
  blowup2_cmd->add_option("--p", p);
  blowup2_cmd->add_option("--n", ngrid, "e.g. 2..8")->required();
  blowup2_cmd->add_option("--mode", mode, "exact|float");
  blowup2_cmd->add_option("--threads", threads);
  blowup2_cmd->add_option("--out", out);

  auto* blowup3_cmd = app.add_subcommand("blowup3", "theorem-3 counterexample ratios");
  blowup3_cmd->add_option("--weights", weights);
  blowup3_cmd->add_option("--alpha", alpha);
  blowup3_cmd->add_option("--p", p);
  blowup3_cmd->add_option("--part", part, "b|c");
  blowup3_cmd->add_option("--n", ngrid, "e.g. 2..10")->required();
  blowup3_cmd->add_option("--mode", mode, "exact|float");
  blowup3_cmd->add_option("--threads", threads);
  blowup3_cmd->add_option("--out", out);

  std::string mean_name = "fejer", system_name_arg = "k";
  int f_rank = 2;
  std::uint32_t f_cell = 2;
  auto* converge_cmd = app.add_subcommand("converge", "L1 convergence sweep");
  converge_cmd->add_option("--mean", mean_name,
                           "fejer|fejer_printed|riesz|norlund_log|cesaro|norlund");
  converge_cmd->add_option("--weights", weights);
  converge_cmd->add_option("--alpha", alpha);
  converge_cmd->add_option("--system", system_name_arg, "w|k");
  converge_cmd->add_option("--resolution", resolution);
  converge_cmd->add_option("--f-rank", f_rank, "indicator interval rank");
  converge_cmd->add_option("--f-cell", f_cell, "indicator interval anchor");
  converge_cmd->add_option("--n", ngrid, "default 2^3..2^10");
  converge_cmd->add_option("--threads", threads);
  converge_cmd->add_option("--out", out);

  auto* coroll_cmd = app.add_subcommand("corollaries", "corollary preset bundle");
  coroll_cmd->add_option("--threads", threads);
  coroll_cmd->add_option("--p4", p4, "exponent for the norlund_log run");
  coroll_cmd->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsageExit;
  }

  try {
    if (kernel_cmd->parsed()) return run_kernel(ka);

    if (cond_cmd->parsed()) {
      auto q = WeightSequence::parse_preset(weights);
      double a = to_double(parse_rational(alpha));
      std::vector<Condition> conds;
      if (condition_name_arg.empty()) {
        conds = all_conditions();
      } else {
        conds.push_back(parse_condition(condition_name_arg));
      }
      std::vector<ExperimentReport> reports;
      for (Condition c : conds) {
        reports.push_back(
            condition_report_to_experiment(check_condition(*q, c, n_max, a)));
      }
      return finish(reports, out.empty() ? "conditions" : out);
    }

    if (lemma2_cmd->parsed()) {
      if (!mode.empty() && mode != "exact")
        throw ModeError("lemma2 is an exact identity check; --mode exact only");
      auto q = WeightSequence::parse_preset(weights);
      auto rep = verify_lemma2(*q, m, resolution, threads);
      return finish({rep}, out.empty() ? "lemma2" : out);
    }

    if (lemma3_cmd->parsed()) {
      if (!mode.empty() && mode != "float")
        throw ModeError(
            "lemma3's majorant contains 2^{j alpha}; it runs in float mode");
      auto q = WeightSequence::parse_preset(weights);
      auto rep = verify_lemma3(*q, parse_rational(alpha), n_max, resolution,
                               threads);
      return finish({rep}, out.empty() ? "lemma3" : out);
    }

    if (blowup2_cmd->parsed() || blowup3_cmd->parsed()) {
      auto q = WeightSequence::parse_preset(weights);
      bool force_float = (mode == "float");
      if (mode == "exact" && !q->exact_capable())
        throw ModeError("preset " + q->key() +
                        " has no exact values; use --mode float");
      std::vector<int> ns = small_grid(ngrid);
      ExperimentReport rep;
      if (blowup2_cmd->parsed()) {
        rep = blowup_theorem2(q, parse_rational(p), ns, threads, force_float);
        return finish({rep}, out.empty() ? "blowup2" : out);
      }
      Theorem3Part pt = part == "c" ? Theorem3Part::part_c : Theorem3Part::part_b;
      rep = blowup_theorem3(q, parse_rational(alpha), parse_rational(p), ns,
                            pt, threads, force_float);
      return finish({rep}, out.empty() ? "blowup3" : out);
    }

    if (converge_cmd->parsed()) {
      System sys = parse_system(system_name_arg);
      MeanId mid = MeanId::fejer(sys);
      if (mean_name == "fejer") {
        mid = MeanId::fejer(sys);
      } else if (mean_name == "fejer_printed") {
        mid = MeanId::fejer_printed(sys);
      } else if (mean_name == "riesz") {
        mid = MeanId::riesz(sys);
      } else if (mean_name == "norlund_log") {
        mid = MeanId::norlund_log(sys);
      } else if (mean_name == "cesaro") {
        mid = MeanId::cesaro(parse_rational(alpha), sys);
      } else if (mean_name == "norlund") {
        mid = MeanId::norlund(WeightSequence::parse_preset(weights), sys);
      } else {
        throw std::invalid_argument("unknown mean: " + mean_name);
      }
      if (f_rank > resolution - 2)
        throw std::domain_error(
            "convergence needs the sample two ranks below the resolution");
      DyadicInterval interval(f_rank, f_cell);
      CellRange range = interval_cells(interval, resolution);
      SampledFunction<double> f(resolution);
      for (std::size_t c = range.begin; c < range.end; ++c) f[c] = 1.0;
      auto grid = parse_ngrid(ngrid.empty() ? "2^3..2^10" : ngrid);
      std::string label = "indicator_rank" + std::to_string(f_rank) + "_cell" +
                          std::to_string(f_cell);
      auto rep = convergence_experiment(mid, f, grid, threads, label);
      return finish({rep}, out.empty() ? "converge" : out);
    }

    if (coroll_cmd->parsed()) {
      auto reports = corollary_presets_suite(threads, parse_rational(p4));
      return finish(reports, out.empty() ? "corollaries" : out);
    }
  } catch (const ResolutionError& e) {
    std::cerr << "resolution error: " << e.what() << "\n";
    return kResolutionExit;
  } catch (const ModeError& e) {
    std::cerr << "mode error: " << e.what() << "\n";
    return kUsageExit;
  } catch (const DegenerateWeightsError& e) {
    std::cerr << "degenerate weights: " << e.what() << "\n";
    return kUsageExit;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kUsageExit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsageExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternalExit;
  }
  return kUsageExit;
}
