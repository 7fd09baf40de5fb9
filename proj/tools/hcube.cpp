// hcube: command-line front end for the vertex Turán toolkit.
//
// Exit codes: 0 success (or FREE), 1 witness found, 2 error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcube/configurations.hpp"
#include "hcube/density.hpp"
#include "hcube/embeddings.hpp"
#include "hcube/exact_solver.hpp"
#include "hcube/identities.hpp"
#include "hcube/io.hpp"
#include "hcube/stability.hpp"

namespace {

using hcube::PointSet;
using hcube::RunRecord;
using nlohmann::json;

struct Globals {
  bool json_output = false;
  bool no_timing = false;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
};

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Globals& g, RunRecord record, const Stopwatch& clock) {
  record.wall_time_ms = g.no_timing ? 0 : clock.elapsed_ms();
  std::cout << hcube::to_json(record).dump(2) << '\n';
}

hcube::ConfigurationFamily resolve_family(const std::vector<std::string>& names) {
  std::vector<hcube::Configuration> members;
  for (const auto& name : names) members.push_back(hcube::resolve_configuration(name));
  return hcube::ConfigurationFamily(std::move(members));
}

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& name : names) out += (out.empty() ? "" : ",") + name;
  return out;
}

std::vector<std::string> vertex_strings(int dim, const std::vector<std::uint64_t>& points) {
  std::vector<std::string> out;
  for (auto p : points) out.push_back(hcube::Vertex(dim, p).to_string());
  return out;
}

hcube::SearchBudget make_budget(std::uint64_t nodes, double seconds) {
  hcube::SearchBudget b;
  b.max_nodes = nodes;
  b.max_time = std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000.0));
  return b;
}

// ---------------------------------------------------------------------------

struct CheckFreeArgs {
  std::string set_file;
  std::string config;
  std::vector<std::string> extra;
};

int run_check_free(const Globals& g, const CheckFreeArgs& a) {
  const Stopwatch clock;
  const PointSet s = hcube::load_point_set(a.set_file);
  std::vector<std::string> names{a.config};
  names.insert(names.end(), a.extra.begin(), a.extra.end());
  const auto family = resolve_family(names);
  if (family.max_dim() > s.dim()) throw hcube::CubeError("configuration dimension exceeds the set's dimension");

  for (std::size_t i = 0; i < family.members().size(); ++i) {
    const auto witness = hcube::find_witness(s, family.members()[i]);
    if (!witness) continue;
    const auto points = vertex_strings(s.dim(), witness->points);
    if (g.json_output) {
      RunRecord r;
      r.command = "check-free";
      r.parameters = {{"set_file", a.set_file}, {"family", names}};
      r.result = {{"free", false}, {"member", names[i]}, {"witness", points}};
      emit(g, r, clock);
    } else {
      std::cout << "WITNESS " << names[i] << '\n';
      for (const auto& p : points) std::cout << p << '\n';
    }
    return 1;
  }
  if (g.json_output) {
    RunRecord r;
    r.command = "check-free";
    r.parameters = {{"set_file", a.set_file}, {"family", names}};
    r.result = {{"free", true}};
    emit(g, r, clock);
  } else {
    std::cout << "FREE\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct ExcArgs {
  int n = 0;
  std::vector<std::string> configs;
  std::uint64_t budget_nodes = 100'000'000;
  double budget_seconds = 300.0;
  bool enumerate = false;
  std::string witness_out;
  bool heuristic = false;
  std::uint64_t iterations = 100'000;
};

int run_exc(const Globals& g, const ExcArgs& a) {
  const Stopwatch clock;
  const auto family = resolve_family(a.configs);
  const std::string witness_path =
      a.witness_out.empty() ? "exc_n" + std::to_string(a.n) + "_witness.txt" : a.witness_out;

  RunRecord r;
  r.command = "exc";
  r.parameters = {{"n", a.n}, {"family", a.configs}, {"budget_nodes", a.budget_nodes},
                  {"budget_seconds", a.budget_seconds}, {"threads", g.threads}};

  if (a.heuristic) {
    const PointSet s = hcube::exc_lower_localsearch(a.n, family, g.seed, a.iterations);
    hcube::save_point_set(witness_path, s);
    r.parameters["seed"] = g.seed;
    r.parameters["iterations"] = a.iterations;
    r.result = {{"lower_bound", s.size()}, {"optimal", false}, {"witness_file", witness_path}};
    if (g.json_output) {
      emit(g, r, clock);
    } else {
      std::cout << "exc(" << a.n << "; " << join(a.configs) << ") >= " << s.size() << " (local search)\n"
                << "witness: " << witness_path << '\n';
    }
    return 0;
  }

  hcube::ExcOptions options;
  options.budget = make_budget(a.budget_nodes, a.budget_seconds);
  options.threads = g.threads;
  const auto result = hcube::exc_exact(a.n, family, options);
  if (result.degenerate) {
    std::cerr << "warning: family contains the empty configuration; exc is 0 by convention\n";
  }
  hcube::save_point_set(witness_path, result.witness);
  r.node_count = result.nodes;
  r.result = {{"value", result.value},
              {"optimal", result.optimal},
              {"degenerate", result.degenerate},
              {"witness_file", witness_path}};

  std::vector<PointSet> classes;
  if (a.enumerate) {
    classes = hcube::enumerate_extremal(a.n, family, options.budget);
    json reps = json::array();
    for (const auto& c : classes) reps.push_back(vertex_strings(c.dim(), c.members()));
    r.result["extremal_classes"] = classes.size();
    r.result["representatives"] = reps;
  }

  if (g.json_output) {
    emit(g, r, clock);
    return 0;
  }
  std::cout << "exc(" << a.n << "; " << join(a.configs) << ") = " << result.value
            << (result.optimal ? " (optimal)" : " (lower bound, budget exhausted)") << '\n'
            << "nodes: " << result.nodes << '\n'
            << "witness: " << witness_path << '\n';
  if (a.enumerate) {
    std::cout << "extremal classes: " << classes.size() << '\n';
    for (std::size_t i = 0; i < classes.size(); ++i) {
      std::cout << "class " << i + 1 << ':';
      for (const auto& p : vertex_strings(classes[i].dim(), classes[i].members())) std::cout << ' ' << p;
      std::cout << '\n';
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct StabilityArgs {
  std::string set_file;
  std::string delta = "1/5";
};

int run_stability(const Globals& g, const StabilityArgs& a) {
  const Stopwatch clock;
  const hcube::Rational delta = hcube::parse_rational(a.delta);
  const PointSet s = hcube::load_point_set(a.set_file);
  const auto report = hcube::stability_report(s, delta);
  if (g.json_output) {
    RunRecord r;
    r.command = "stability";
    r.parameters = {{"set_file", a.set_file}, {"delta", hcube::rational_string(delta)}};
    r.result = hcube::to_json(report);
    emit(g, r, clock);
    return 0;
  }
  std::cout << "n: " << report.n << '\n'
            << "|S|: " << report.set_size << '\n'
            << "delta: " << hcube::rational_string(report.delta) << '\n'
            << "bad_a: " << report.bad_a << '\n'
            << "bad_b: " << report.bad_b << '\n'
            << "bad_c: " << report.bad_c << '\n'
            << "bad_b_or_c: " << report.bad_bc_union << '\n'
            << "exceptional_fraction: " << hcube::rational_string(report.exceptional_fraction) << '\n'
            << "epsilon: " << hcube::rational_string(report.epsilon) << '\n'
            << "proof_delta: " << report.proof_delta << '\n';
  auto print_hist = [](const char* label, const std::vector<std::uint64_t>& hist) {
    std::cout << label << ':';
    for (auto c : hist) std::cout << ' ' << c;
    std::cout << '\n';
  };
  print_hist("h1_hist_in", report.h1_hist_in);
  print_hist("h1_hist_out", report.h1_hist_out);
  return 0;
}

// ---------------------------------------------------------------------------

struct DensityArgs {
  std::vector<std::string> configs;
  int n_max = 0;
  std::uint64_t budget_nodes = 100'000'000;
  double budget_seconds = 300.0;
};

int run_density(const Globals& g, const DensityArgs& a) {
  const Stopwatch clock;
  const auto family = resolve_family(a.configs);
  hcube::ExcOptions options;
  options.budget = make_budget(a.budget_nodes, a.budget_seconds);
  options.threads = g.threads;
  const auto rows = hcube::density_table(family, a.n_max, options);
  if (!g.json_output) {
    std::cout << hcube::density_csv(rows);
    return 0;
  }
  RunRecord r;
  r.command = "density";
  r.parameters = {{"family", a.configs}, {"n_max", a.n_max}};
  json out = json::array();
  for (const auto& row : rows) {
    out.push_back(hcube::to_json(row));
    r.node_count += row.nodes;
  }
  r.result = {{"rows", out}, {"ratios_non_increasing", hcube::ratios_non_increasing(rows)}};
  emit(g, r, clock);
  return 0;
}

// ---------------------------------------------------------------------------

struct PatternArgs {
  std::vector<std::string> configs;
  int max_period = 8;
};

int run_pattern(const Globals& g, const PatternArgs& a) {
  const Stopwatch clock;
  const auto family = resolve_family(a.configs);
  const auto best = hcube::best_periodic_pattern(family, a.max_period);
  const auto residues = best.pattern.residue_list();
  if (g.json_output) {
    RunRecord r;
    r.command = "pattern";
    r.parameters = {{"family", a.configs}, {"max_period", a.max_period}};
    r.result = {{"period", best.pattern.period},
                {"residues", residues},
                {"density", hcube::rational_string(best.density)}};
    emit(g, r, clock);
    return 0;
  }
  std::cout << "period: " << best.pattern.period << '\n' << "residues: {";
  for (std::size_t i = 0; i < residues.size(); ++i) std::cout << (i ? "," : "") << residues[i];
  std::cout << "}\n"
            << "density: " << hcube::rational_string(best.density) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

int run_mu(const Globals& g, int d) {
  const Stopwatch clock;
  const auto bounds = hcube::mu_bounds(d);
  const auto t = hcube::t_values(d);
  if (g.json_output) {
    RunRecord r;
    r.command = "mu";
    r.parameters = {{"d", d}};
    r.result = {{"lower", bounds.lower}, {"upper", bounds.upper}, {"t2", t.t2}, {"t3", t.t3}};
    emit(g, r, clock);
    return 0;
  }
  std::cout << "d: " << d << '\n'
            << "t2: " << t.t2 << '\n'
            << "t3: " << t.t3 << '\n'
            << "lower: " << bounds.lower << '\n'
            << "upper: " << bounds.upper << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct IdentitiesArgs {
  int n = 10;
  int l = 1;
  int trials = 100;
  std::string set_file;
};

int run_identities(const Globals& g, const IdentitiesArgs& a) {
  const Stopwatch clock;
  std::vector<PointSet> sets;
  if (!a.set_file.empty()) {
    sets.push_back(hcube::load_point_set(a.set_file));
  } else {
    if (a.n < 2 || a.n > hcube::kMaxSetDim) throw hcube::CubeError("--n out of range");
    std::mt19937_64 rng(g.seed);
    for (int t = 0; t < a.trials; ++t) {
      PointSet s(a.n);
      for (std::uint64_t v = 0; v < s.universe(); ++v) {
        if (rng() & 1U) s.insert(v);
      }
      sets.push_back(std::move(s));
    }
  }
  int one_matches = 0;
  int two_matches = 0;
  json failures = json::array();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const auto one = hcube::verify_identity_one(sets[i], a.l);
    const auto two = hcube::verify_identity_two(sets[i], a.l);
    one_matches += one.match;
    two_matches += two.match;
    if (!one.match || !two.match) {
      failures.push_back({{"index", i}, {"one", hcube::to_json(one)}, {"two", hcube::to_json(two)}});
    }
  }
  const auto total = static_cast<int>(sets.size());
  if (g.json_output) {
    RunRecord r;
    r.command = "identities";
    r.parameters = {{"n", sets.front().dim()}, {"l", a.l}, {"trials", total}, {"seed", g.seed}};
    if (!a.set_file.empty()) r.parameters["set_file"] = a.set_file;
    r.result = {{"identity_one_matches", one_matches},
                {"identity_two_matches", two_matches},
                {"total", total},
                {"failures", failures}};
    emit(g, r, clock);
  } else {
    std::cout << "identity one: " << one_matches << '/' << total << " match\n"
              << "identity two: " << two_matches << '/' << total << " match\n";
  }
  return one_matches == total && two_matches == total ? 0 : 1;
}

// ---------------------------------------------------------------------------

int run_construct(const Globals& g, const std::string& name, int n, const std::string& out_path) {
  const Stopwatch clock;
  const auto [which, d] = hcube::parse_construction(name);
  const PointSet s = hcube::make_construction(which, n, d);
  if (!out_path.empty()) {
    hcube::save_point_set(out_path, s);
  } else if (!g.json_output) {
    hcube::write_point_set(std::cout, s);
  }
  if (g.json_output) {
    RunRecord r;
    r.command = "construct";
    r.parameters = {{"name", name}, {"n", n}};
    r.result = {{"size", s.size()}};
    if (!out_path.empty()) r.result["file"] = out_path;
    emit(g, r, clock);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for vertex Turán problems in the hypercube."};
  app.set_version_flag("--version", std::string(hcube::kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_flag("--json", g.json_output, "Print a single JSON record");
  app.add_flag("--no-timing", g.no_timing, "Report wall_time_ms as 0 for byte-stable output");
  app.add_option("--threads", g.threads, "Search threads (1 is deterministic)")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized commands");

  int status = 0;

  CheckFreeArgs check;
  auto* check_cmd = app.add_subcommand("check-free", "Decide whether a point set avoids a family");
  check_cmd->add_option("set_file", check.set_file, "Point-set file")->required();
  check_cmd->add_option("config", check.config, "Configuration name or file")->required();
  check_cmd->add_option("--family", check.extra, "Further family members");
  check_cmd->callback([&] { status = run_check_free(g, check); });

  ExcArgs exc;
  auto* exc_cmd = app.add_subcommand("exc", "Compute exc(n, family) exactly");
  exc_cmd->add_option("--n", exc.n, "Dimension")->required();
  exc_cmd->add_option("--config", exc.configs, "Family member (repeatable)")->required();
  exc_cmd->add_option("--budget-nodes", exc.budget_nodes, "Branch node limit");
  exc_cmd->add_option("--budget-seconds", exc.budget_seconds, "Time limit");
  exc_cmd->add_flag("--enumerate-extremal", exc.enumerate, "List extremal sets up to automorphism (n <= 5)");
  exc_cmd->add_option("--witness-out", exc.witness_out, "Witness file path");
  exc_cmd->add_flag("--local-search", exc.heuristic, "Heuristic lower bound instead of exact search");
  exc_cmd->add_option("--iterations", exc.iterations, "Local search iterations");
  exc_cmd->callback([&] { status = run_exc(g, exc); });

  StabilityArgs stab;
  auto* stab_cmd = app.add_subcommand("stability", "Local stability statistics of a point set");
  stab_cmd->add_option("set_file", stab.set_file, "Point-set file")->required();
  stab_cmd->add_option("--delta", stab.delta, "Threshold as p/q");
  stab_cmd->callback([&] { status = run_stability(g, stab); });

  DensityArgs dens;
  auto* dens_cmd = app.add_subcommand("density", "exc(n)/2^n table as CSV");
  dens_cmd->add_option("--config", dens.configs, "Family member (repeatable)")->required();
  dens_cmd->add_option("--n-max", dens.n_max, "Largest n")->required();
  dens_cmd->add_option("--budget-nodes", dens.budget_nodes, "Branch node limit per n");
  dens_cmd->add_option("--budget-seconds", dens.budget_seconds, "Time limit per n");
  dens_cmd->callback([&] { status = run_density(g, dens); });

  PatternArgs pat;
  auto* pat_cmd = app.add_subcommand("pattern", "Densest free periodic layer pattern");
  pat_cmd->add_option("--config", pat.configs, "Family member (repeatable)")->required();
  pat_cmd->add_option("--max-period", pat.max_period, "Largest period");
  pat_cmd->callback([&] { status = run_pattern(g, pat); });

  int mu_d = 0;
  auto* mu_cmd = app.add_subcommand("mu", "Bounds on mu(d)");
  mu_cmd->add_option("--d", mu_d, "Subcube dimension")->required();
  mu_cmd->callback([&] { status = run_mu(g, mu_d); });

  IdentitiesArgs ids;
  auto* ids_cmd = app.add_subcommand("identities", "Check both counting identities");
  ids_cmd->add_option("--n", ids.n, "Dimension of random sets");
  ids_cmd->add_option("--l", ids.l, "Radius")->required();
  ids_cmd->add_option("--trials", ids.trials, "Number of random sets");
  ids_cmd->add_option("--set", ids.set_file, "Check one set from a file instead");
  ids_cmd->callback([&] { status = run_identities(g, ids); });

  std::string construct_name;
  int construct_n = 0;
  std::string construct_out;
  auto* cons_cmd = app.add_subcommand("construct", "Write a named construction as a point-set file");
  cons_cmd->add_option("name", construct_name, "S0, S1, S2, S_1, S_2, S_12, S_23, S_d+1:<d>, nonstab")->required();
  cons_cmd->add_option("--n", construct_n, "Dimension")->required();
  cons_cmd->add_option("--out", construct_out, "Output path (default stdout)");
  cons_cmd->callback([&] { status = run_construct(g, construct_name, construct_n, construct_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return status;
}
