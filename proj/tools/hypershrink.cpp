// Command-line front end. Exit codes: 0 success / true, 1 domain-negative
// (validation violations, not a hypertree, infeasible demands), 2 usage, I/O
// or parse errors, including malformed hypergraphs outside `validate`.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hypershrink/hypershrink.hpp"

namespace hs = hypershrink;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw usage_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

hs::Hypergraph load_valid(const std::string& path) {
  hs::Hypergraph h = hs::parse_hypergraph(read_file(path));
  auto report = hs::validate(h);
  if (!report.ok()) {
    std::string msg = path + " is not a valid hypergraph";
    for (const auto& v : report.violations) msg += "\n  " + v.describe();
    throw usage_error(msg);
  }
  return h;
}

std::string join(const std::vector<hs::Vertex>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + std::to_string(xs[i]);
  return s + "}";
}

int cmd_validate(const std::string& path) {
  hs::Hypergraph h = hs::parse_hypergraph(read_file(path));
  auto report = hs::validate(h);
  if (report.ok()) {
    std::cout << "valid: n = " << h.n << ", " << h.edges.size() << " hyperedges, rank "
              << hs::rank(h) << '\n';
    return exit_ok;
  }
  for (const auto& v : report.violations) std::cout << v.describe() << '\n';
  return exit_negative;
}

int cmd_check(const std::string& path, bool oracle, std::size_t limit) {
  const hs::Hypergraph h = load_valid(path);
  if (!oracle) {
    const bool yes = hs::is_hypertree(h);
    std::cout << (yes ? "hypertree" : "not a hypertree") << '\n';
    return yes ? exit_ok : exit_negative;
  }
  hs::HypertreeCheck check;
  try {
    check = hs::is_hypertree_bruteforce(h, limit);
  } catch (const hs::limit_exceeded&) {
    throw usage_error("refusing --oracle: n = " + std::to_string(h.n) +
                      " exceeds the exhaustive limit of " + std::to_string(limit) + " vertices");
  }
  if (check.hypertree) {
    std::cout << "hypertree\n";
    return exit_ok;
  }
  std::cout << "not a hypertree\n";
  if (check.violating_set) {
    const auto& xs = *check.violating_set;
    std::size_t inside = 0;
    for (const auto& e : h.edges)
      if (std::includes(xs.begin(), xs.end(), e.begin(), e.end())) ++inside;
    std::cout << "witness: X = " << join(xs) << " contains " << inside
              << " hyperedges, at most " << xs.size() - 1 << " allowed\n";
  } else {
    std::cout << "witness: " << h.edges.size() << " hyperedges, but n - 1 = "
              << (h.n == 0 ? -1 : static_cast<long long>(h.n) - 1) << '\n';
  }
  return exit_negative;
}

int cmd_shrink(const std::string& path, const std::string& format, std::optional<std::size_t> k) {
  const hs::Hypergraph h = load_valid(path);
  if (k && *k < hs::rank(h))
    throw usage_error("--k " + std::to_string(*k) + " is below the rank " +
                      std::to_string(hs::rank(h)));
  hs::Shrinking s;
  try {
    s = hs::shrink_hypertree(h, k);
  } catch (const hs::not_a_hypertree& e) {
    std::cerr << e.what() << '\n';
    return exit_negative;
  }
  const auto report = hs::verify_shrinking(h, s, k);
  if (format == "dot")
    std::cout << hs::to_dot(h, s);
  else
    std::cout << hs::shrinking_json(s, report).dump() << '\n';
  for (const auto& line : hs::verification_summary(report)) std::cerr << line << '\n';
  return report.ok() ? exit_ok : exit_negative;
}

int cmd_orient(const std::string& path, const std::string& demands_path,
               std::optional<std::size_t> k, const std::string& format) {
  const hs::Hypergraph h = load_valid(path);
  hs::DemandFunction f;
  if (!demands_path.empty()) {
    f = hs::parse_demands(read_file(demands_path));
    if (f.size() != h.n)
      throw usage_error("demand file has " + std::to_string(f.size()) + " entries, expected " +
                        std::to_string(h.n));
  } else {
    const std::size_t kk = k.value_or(std::max<std::size_t>(hs::rank(h), 1));
    if (kk < hs::rank(h))
      throw usage_error("--k " + std::to_string(kk) + " is below the rank " +
                        std::to_string(hs::rank(h)));
    f = hs::floor_demand(h, kk);
  }
  const auto result = hs::orient_with_demands(h, f);
  if (!result.oriented()) {
    const auto& v = result.violator();
    std::cout << hs::violator_json(v).dump() << '\n';
    std::cerr << "infeasible: F = " << join(v.vertices) << " has f(F) = " << v.demand
              << " > e*(F) = " << v.incident << '\n';
    return exit_negative;
  }
  if (format == "dot") {
    const auto stars = hs::star_graph(result.orientation());
    const auto tree = hs::rainbow_spanning_tree(stars);
    std::cout << (tree ? hs::to_dot(stars, *tree) : hs::to_dot(stars));
  } else {
    std::cout << hs::orientation_json(result.orientation(), f).dump() << '\n';
  }
  return exit_ok;
}

int cmd_gen(std::size_t n, std::size_t k, std::uint64_t seed, double p,
            const std::string& witness_path, const std::string& format) {
  if (n < 2) throw usage_error("--n must be at least 2");
  if (k < 2) throw usage_error("--k must be at least 2");
  if (!(p >= 0.0 && p <= 1.0)) throw usage_error("--p must lie in [0, 1]");
  const auto g = hs::random_hypertree(n, k, seed, p);
  std::cout << (format == "text" ? hs::to_text(g.hypergraph) : hs::to_json(g.hypergraph));
  if (!witness_path.empty()) {
    std::ofstream out(witness_path, std::ios::binary);
    if (!out) throw usage_error("cannot write " + witness_path);
    hs::ordered_json w;
    w["tree"] = hs::tree_json(g.witness);
    out << w.dump() << '\n';
  }
  return exit_ok;
}

std::string fixed(double x) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << x;
  return out.str();
}

int cmd_bench(std::size_t trials, std::size_t n, std::size_t k, std::uint64_t seed, double p) {
  if (n < 2) throw usage_error("--n must be at least 2");
  if (k < 2) throw usage_error("--k must be at least 2");
  if (!(p >= 0.0 && p <= 1.0)) throw usage_error("--p must lie in [0, 1]");
  bool all_ok = true;
  std::cout << "trial,seed,n,edges,rank,k,min_ratio,min_slack,mean_slack,min_dt_over_dh,"
               "rank3_ok,bound_ok\n";
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed + t;
    const auto g = hs::random_hypertree(n, k, trial_seed, p);
    const auto s = hs::shrink_hypertree(g.hypergraph, k);
    const auto r = hs::verify_shrinking(g.hypergraph, s, k);

    double min_ratio = std::numeric_limits<double>::infinity();
    double min_dt_dh = std::numeric_limits<double>::infinity();
    long long min_slack = std::numeric_limits<long long>::max();
    double slack_sum = 0;
    for (std::size_t v = 0; v < n; ++v) {
      const double dt = static_cast<double>(r.tree_degree[v]);
      const double dh = static_cast<double>(r.hyper_degree[v]);
      min_ratio = std::min(min_ratio, dt * static_cast<double>(k) / dh);
      min_dt_dh = std::min(min_dt_dh, dt / dh);
      const long long slack = static_cast<long long>(r.tree_degree[v]) -
                              static_cast<long long>(r.bound[v]);
      min_slack = std::min(min_slack, slack);
      slack_sum += static_cast<double>(slack);
    }
    const bool rank3 = r.rank3_applicable;
    all_ok = all_ok && r.ok();
    std::cout << t << ',' << trial_seed << ',' << n << ',' << g.hypergraph.edges.size() << ','
              << hs::rank(g.hypergraph) << ',' << k << ',' << fixed(min_ratio) << ','
              << min_slack << ',' << fixed(slack_sum / static_cast<double>(n)) << ','
              << fixed(min_dt_dh) << ','
              << (rank3 ? (r.rank3_failures.empty() ? "1" : "0") : "na") << ','
              << (r.bound_failures.empty() ? 1 : 0) << '\n';
  }
  return all_ok ? exit_ok : exit_negative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-preserving shrinking of hypertrees to spanning trees"};
  app.require_subcommand(1);

  std::string file, format = "json", demands, witness;
  bool oracle = false;
  std::size_t limit = hs::default_vertex_limit;
  std::optional<std::size_t> k_opt;
  std::size_t n = 0, k = 0, trials = 100;
  std::uint64_t seed = 0;
  double p = 0.5;

  auto* validate = app.add_subcommand("validate", "Check that a file holds a simple hypergraph");
  validate->add_option("file", file, "Hypergraph file (JSON or text)")->required();

  auto* check = app.add_subcommand("check", "Decide whether a hypergraph is a hypertree");
  check->add_option("file", file, "Hypergraph file (JSON or text)")->required();
  check->add_flag("--oracle", oracle, "Use the exhaustive definition check and print a witness");
  check->add_option("--limit", limit, "Vertex limit for --oracle")->capture_default_str();

  auto* shrink = app.add_subcommand("shrink", "Shrink a hypertree to a degree-preserving tree");
  shrink->add_option("file", file, "Hypergraph file (JSON or text)")->required();
  shrink->add_option("--out", format, "Output format")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();
  shrink->add_option("--k", k_opt, "Rank bound k used in the degree guarantee (default: rank)");

  auto* orient = app.add_subcommand("orient", "Orient a hypergraph to meet indegree demands");
  orient->add_option("file", file, "Hypergraph file (JSON or text)")->required();
  orient->add_option("--demands", demands,
                     "Demand file: JSON array or whitespace-separated integers "
                     "(default: floor(degree / k))");
  orient->add_option("--k", k_opt, "k for the default floor demands (default: rank)");
  orient->add_option("--out", format, "Output format")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();

  auto* gen = app.add_subcommand("gen", "Generate a random hypertree");
  gen->add_option("--n", n, "Number of vertices (>= 2)")->required();
  gen->add_option("--k", k, "Maximum hyperedge size (>= 2)")->required();
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--p", p, "Probability of enlarging each tree edge")->capture_default_str();
  gen->add_option("--witness", witness, "Also write the witness tree as JSON to this file");
  gen->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Shrink many random hypertrees and report CSV");
  bench->add_option("--trials", trials, "Number of trials")->capture_default_str();
  bench->add_option("--n", n, "Number of vertices (>= 2)")->required();
  bench->add_option("--k", k, "Maximum hyperedge size (>= 2)")->required();
  bench->add_option("--seed", seed, "Base seed; trial t uses seed + t")->required();
  bench->add_option("--p", p, "Probability of enlarging each tree edge")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (validate->parsed()) return cmd_validate(file);
    if (check->parsed()) return cmd_check(file, oracle, limit);
    if (shrink->parsed()) return cmd_shrink(file, format, k_opt);
    if (orient->parsed()) return cmd_orient(file, demands, k_opt, format);
    if (gen->parsed()) return cmd_gen(n, k, seed, p, witness, format);
    if (bench->parsed()) return cmd_bench(trials, n, k, seed, p);
  } catch (const hs::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return exit_usage;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
