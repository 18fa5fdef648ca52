// dcdlab command-line front end: construct set families, measure their
// additive statistics, run verification sweeps, search for extremal
// sumsets, and fit growth exponents from earlier sweeps.
//
// Exit status: 0 all assertions pass, 1 assertion failure, 2 usage or
// config error, 3 resource budget exceeded.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dcdlab/dcdlab.hpp"

namespace {

using namespace dcdlab;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::resource_limit:
    case errc::budget_exceeded:
      return 3;
    default:
      return 2;
  }
}

std::ostream& open_output(std::ofstream& file, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") return std::cout;
  file.open(out_path);
  if (!file) throw IoError("cannot open output file: " + out_path);
  return file;
}

void emit_records(const std::vector<Record>& records, const std::string& format,
                  const std::string& out_path) {
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  if (format == "csv")
    write_csv(out, records);
  else if (format == "jsonl")
    write_jsonl(out, records);
  else
    throw UsageError("format must be csv or jsonl");
}

void print_set_summary(const std::string& label, const GroundSet& a) {
  std::cout << label << ": size=" << a.size() << " min=" << a.min() << " max=" << a.max()
            << " convex=" << (is_convex(a) ? "yes" : "no")
            << " distinct-gaps=" << (has_distinct_consecutive_differences(a) ? "yes" : "no")
            << " sidon=" << (is_sidon(a) ? "yes" : "no") << '\n';
}

struct CommonFlags {
  std::string sizes;
  std::string family = "squares";
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = kDefaultSeed;
  std::int64_t trials = 0;
  std::int64_t max_k = 0;
  int alpha = 2;
  int order = 3;
  std::int64_t good_constant = 100;
  std::string threshold_c;
  std::int64_t budget = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--family", flags.family, "instance family");
  cmd->add_option("--k,--m", flags.sizes, "size or sweep: single, list a,b,c, or range a..b");
  cmd->add_option("--seed", flags.seed, "master seed for seeded instances");
  cmd->add_option("--trials", flags.trials, "number of seeded instances");
  cmd->add_option("--max-k", flags.max_k, "size cap for seeded instances");
  cmd->add_option("--alpha", flags.alpha, "exponent for the power family");
  cmd->add_option("--order", flags.order, "energy order (1..4)");
  cmd->add_option("--good-constant", flags.good_constant, "window goodness constant");
  cmd->add_option("--threshold-c", flags.threshold_c, "growth threshold c (decimal)");
  cmd->add_option("--budget", flags.budget, "resource budget override");
  cmd->add_option("--out", flags.out, "output path (default stdout)");
  cmd->add_option("--format", flags.format, "csv or jsonl");
}

SweepOptions to_options(const CommonFlags& flags) {
  SweepOptions opt;
  if (!flags.sizes.empty()) opt.sizes = parse_sizes(flags.sizes);
  opt.family = flags.family;
  opt.seed = flags.seed;
  opt.trials = flags.trials;
  opt.max_k = flags.max_k;
  opt.alpha = flags.alpha;
  opt.order = flags.order;
  opt.good_constant = flags.good_constant;
  opt.limits = default_limits();
  if (flags.budget > 0) opt.limits.budget = flags.budget;
  if (!flags.threshold_c.empty()) {
    Rational c = parse_decimal_rational(flags.threshold_c);
    Rational c2 = Rational::of(checked_mul(c.num, c.num), checked_mul(c.den, c.den));
    opt.growth_c2 = c2;
    opt.pair_c2 = c2;
    opt.image_c2 = c2;
  }
  return opt;
}

int cmd_construct(const std::string& what, const CommonFlags& flags) {
  SweepOptions opt = to_options(flags);
  std::int64_t k = opt.sizes.empty() ? 10 : opt.sizes.front();
  if (what == "dcd") {
    DcdInstance inst = dcd_construction(k, flags.family == "sidon-modular"
                                               ? SidonMethod::modular
                                               : SidonMethod::greedy);
    print_set_summary("A", inst.a);
    print_set_summary("B", inst.b);
    print_set_summary("S", inst.s);
    std::cout << "Q=" << inst.q << " |A+B|=" << sumset(inst.a, inst.b).size() << '\n';
    if (!flags.out.empty()) {
      save_set_file(flags.out + "_A.txt", inst.a);
      save_set_file(flags.out + "_B.txt", inst.b);
      save_set_file(flags.out + "_S.txt", inst.s);
    }
    return 0;
  }
  GroundSet a = [&]() {
    if (what == "sidon")
      return flags.family == "modular" || flags.family == "sidon-modular" ? sidon_modular(k)
                                                                          : sidon_greedy(k);
    if (what == "convex") {
      if (flags.family == "power") return convex_family(ConvexKind::power, k, flags.alpha);
      if (flags.family == "random-gaps")
        return convex_family(ConvexKind::random_gaps, k, flags.alpha, flags.seed);
      return convex_family(ConvexKind::squares, k);
    }
    if (what == "e3x") return e3_counterexample(k);
    if (what == "interval") return interval_set(k);
    throw UsageError("unknown construct target '" + what + "'");
  }();
  print_set_summary(what, a);
  if (!flags.out.empty()) save_set_file(flags.out, a);
  return 0;
}

int cmd_search(const std::string& method, const CommonFlags& flags, std::int64_t max_gap,
               std::int64_t iterations, int restarts) {
  SweepOptions opt = to_options(flags);
  std::int64_t k = opt.sizes.empty() ? 5 : opt.sizes.front();
  if (max_gap <= 0) max_gap = 2 * k;
  SearchWitness witness;
  if (method == "exhaustive") {
    witness = exhaustive_min(k, max_gap, opt.limits.budget);
  } else if (method == "anneal") {
    AnnealSchedule schedule;
    if (iterations > 0) schedule.iterations = iterations;
    if (restarts > 0) schedule.restarts = restarts;
    witness = anneal_min(k, max_gap, flags.seed, schedule);
  } else {
    throw UsageError("search method must be exhaustive or anneal");
  }
  std::ofstream file;
  std::ostream& out = open_output(file, flags.out);
  out << witness.to_json().dump() << '\n';
  return 0;
}

int cmd_report_fit(const std::string& in_path, const std::string& x_col,
                   const std::string& y_col) {
  std::ifstream in(in_path);
  if (!in) throw IoError("cannot open input file: " + in_path);
  std::string line;
  std::vector<std::string> header;
  std::vector<std::pair<double, double>> points;
  int xi = -1, yi = -1;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (header.empty()) {
      header = cells;
      for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == x_col) xi = static_cast<int>(i);
        if (header[i] == y_col) yi = static_cast<int>(i);
      }
      if (xi < 0 || yi < 0)
        throw UsageError("columns '" + x_col + "'/'" + y_col + "' not found in " + in_path);
      continue;
    }
    if (static_cast<int>(cells.size()) <= std::max(xi, yi)) continue;
    try {
      points.emplace_back(std::stod(cells[static_cast<std::size_t>(xi)]),
                          std::stod(cells[static_cast<std::size_t>(yi)]));
    } catch (const std::exception&) {
      throw UsageError("non-numeric cell in " + in_path + ": " + line);
    }
  }
  FitResult fit = fit_exponent(points);
  nlohmann::json j;
  j["n"] = points.size();
  j["slope"] = fit.slope;
  j["residual"] = fit.residual;
  std::cout << j.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for sumset growth, distinct consecutive differences, "
               "additive energies, and extremal-set search"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string target;
  std::int64_t max_gap = 0, iterations = 0;
  int restarts = 0;

  CLI::App* construct = app.add_subcommand("construct", "generate a set family, print a summary");
  construct->add_option("target", target, "sidon | dcd | convex | e3x | interval")->required();
  add_common(construct, flags);
  construct->add_option("--size", flags.sizes, "alias for --k");
  construct->add_option("--kind", flags.family, "convex kind: squares | power | random-gaps");
  construct->add_option("--method", flags.family, "sidon generator: greedy | modular");

  CLI::App* measure = app.add_subcommand("measure", "compute quantities, no assertions");
  measure->add_option("target", target, "growth | energy | richness | pipeline")->required();
  add_common(measure, flags);

  CLI::App* verify = app.add_subcommand("verify", "run assertion-level sweeps");
  verify
      ->add_option("target", target,
                   "tightness | dcd-growth | pair-growth | convex-image | prop-conv | "
                   "energy-identity | pigeonhole | dyadic")
      ->required();
  add_common(verify, flags);

  CLI::App* search = app.add_subcommand("search", "minimize |A+A| over distinct-gap sets");
  search->add_option("method", target, "exhaustive | anneal")->required();
  add_common(search, flags);
  search->add_option("--max-gap", max_gap, "largest gap value allowed");
  search->add_option("--iters", iterations, "annealing iterations per restart");
  search->add_option("--restarts", restarts, "annealing restarts");

  CLI::App* report = app.add_subcommand("report", "post-process sweep output");
  std::string fit_in, x_col = "k", y_col = "measured";
  CLI::App* fit = report->add_subcommand("fit", "log-log exponent fit over a CSV sweep");
  fit->add_option("--in", fit_in, "input CSV path")->required();
  fit->add_option("--x", x_col, "x column name");
  fit->add_option("--y", y_col, "y column name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (construct->parsed()) return cmd_construct(target, flags);
    if (measure->parsed()) {
      std::vector<Record> records = run_measure(target, to_options(flags));
      emit_records(records, flags.format, flags.out);
      return 0;
    }
    if (verify->parsed()) {
      std::vector<Record> records = run_verify(target, to_options(flags));
      emit_records(records, flags.format, flags.out);
      return all_pass(records) ? 0 : 1;
    }
    if (search->parsed()) return cmd_search(target, flags, max_gap, iterations, restarts);
    if (report->parsed()) {
      if (fit->parsed()) return cmd_report_fit(fit_in, x_col, y_col);
      throw UsageError("report needs a subcommand (fit)");
    }
  } catch (const Error& e) {
    std::cerr << "dcdlab: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "dcdlab: internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
