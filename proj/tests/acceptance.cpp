// Acceptance suite. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Degrees, spanning checks and Hall sums are
// recomputed here from the raw outputs instead of trusting the library's own
// verifier.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hypershrink/hypershrink.hpp"
#include "oracles.hpp"

using namespace hypershrink;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t checked = 0;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<std::size_t> hyper_degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(h.n, 0);
  for (const auto& e : h.edges)
    for (Vertex v : e) ++d[v];
  return d;
}

std::vector<std::size_t> tree_degrees(std::size_t n, const std::vector<TreeEdge>& t) {
  std::vector<std::size_t> d(n, 0);
  for (const auto& e : t) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

bool contains(const Hyperedge& e, Vertex v) {
  return std::find(e.begin(), e.end(), v) != e.end();
}

// Checks that s is a shrinking of h: a spanning tree whose i-th assigned edge
// lies inside hyperedge i, with the assignment a bijection.
bool is_shrinking_of(const Hypergraph& h, const Shrinking& s) {
  if (s.tree.size() != h.edges.size() || s.assignment.size() != h.edges.size()) return false;
  std::vector<char> hit(s.tree.size(), 0);
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const std::size_t j = s.assignment[i];
    if (j >= s.tree.size() || hit[j]) return false;
    hit[j] = 1;
    if (!contains(h.edges[i], s.tree[j].u) || !contains(h.edges[i], s.tree[j].v)) return false;
  }
  std::vector<std::pair<Vertex, Vertex>> es;
  for (const auto& e : s.tree) es.emplace_back(e.u, e.v);
  return oracle::is_spanning_tree(h.n, es);
}

struct CorpusItem {
  std::uint64_t seed;
  std::size_t k;
  Hypergraph h;
  Shrinking s;
};

// Generated hypertrees: n up to 200, k in 2..6, p cycling through five values.
std::vector<CorpusItem> build_corpus(Outcome& shrink_failures) {
  std::vector<CorpusItem> corpus;
  const double ps[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  for (std::uint64_t seed = 0; seed < 1200; ++seed) {
    const std::size_t n = 2 + (seed * 37) % 199;
    const std::size_t k = 2 + seed % 5;
    const auto g = random_hypertree(n, k, seed, ps[(seed / 5) % 5]);
    try {
      corpus.push_back({seed, k, g.hypergraph, shrink_hypertree(g.hypergraph, k)});
    } catch (const std::exception& e) {
      shrink_failures.fail("seed " + std::to_string(seed) + ": " + e.what());
    }
  }
  return corpus;
}

Outcome main_bound(const std::vector<CorpusItem>& corpus, Outcome start) {
  Outcome o = start;
  for (const auto& c : corpus) {
    ++o.checked;
    if (!is_shrinking_of(c.h, c.s)) {
      o.fail("seed " + std::to_string(c.seed) + ": not a shrinking");
      continue;
    }
    const auto dh = hyper_degrees(c.h);
    const auto dt = tree_degrees(c.h.n, c.s.tree);
    for (Vertex v = 0; v < c.h.n; ++v)
      if (dt[v] < std::max<std::size_t>(1, dh[v] / c.k))
        o.fail("seed " + std::to_string(c.seed) + " vertex " + std::to_string(v));
  }
  return o;
}

Outcome half_bound(const std::vector<CorpusItem>& corpus) {
  Outcome o;
  for (const auto& c : corpus) {
    ++o.checked;
    const auto dh = hyper_degrees(c.h);
    const auto dt = tree_degrees(c.h.n, c.s.tree);
    for (Vertex v = 0; v < c.h.n; ++v)
      if (2 * c.k * dt[v] < dh[v])
        o.fail("seed " + std::to_string(c.seed) + " vertex " + std::to_string(v));
  }
  return o;
}

Outcome hundredth_bound(const std::vector<CorpusItem>& corpus) {
  Outcome o;
  for (const auto& c : corpus) {
    if (rank(c.h) != 3) continue;
    ++o.checked;
    const auto dh = hyper_degrees(c.h);
    const auto dt = tree_degrees(c.h.n, c.s.tree);
    for (Vertex v = 0; v < c.h.n; ++v)
      if (100 * dt[v] < dh[v])
        o.fail("seed " + std::to_string(c.seed) + " vertex " + std::to_string(v));
  }
  if (o.checked == 0) o.fail("empty rank-3 sub-corpus");
  return o;
}

Outcome floor_orientation() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 1200; ++seed) {
    const std::size_t n = 2 + seed % 40;
    const std::size_t k = 2 + seed % 5;
    const auto h = random_hypergraph(n, (seed * 7) % (3 * n), k, seed);
    ++o.checked;
    try {
      const std::size_t kk = std::max<std::size_t>(rank(h), 1);
      const auto d = orient_floor(h, kk);
      std::vector<std::size_t> in(h.n, 0);
      for (std::size_t i = 0; i < d.heads.size(); ++i) {
        if (!contains(h.edges[i], d.heads[i])) o.fail("seed " + std::to_string(seed) + ": bad head");
        ++in[d.heads[i]];
      }
      const auto dh = hyper_degrees(h);
      for (Vertex v = 0; v < h.n; ++v)
        if (in[v] < dh[v] / kk) o.fail("seed " + std::to_string(seed) + " vertex " + std::to_string(v));
    } catch (const std::exception& e) {
      o.fail("seed " + std::to_string(seed) + ": " + e.what());
    }
  }
  return o;
}

Outcome dichotomy() {
  Outcome o;
  std::size_t infeasible = 0;
  for (std::uint64_t seed = 0; seed < 1200; ++seed) {
    const std::size_t n = 2 + seed % 10;
    const auto h = random_hypergraph(n, 1 + seed % (2 * n), 2 + seed % 4, seed);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<std::size_t> f(n);
    for (auto& x : f) x = rng.below(3);
    ++o.checked;
    const auto r = orient_with_demands(h, DemandFunction{f});
    if (r.oriented()) {
      const auto& d = r.orientation();
      std::vector<std::size_t> in(n, 0);
      for (std::size_t i = 0; i < d.heads.size(); ++i) {
        if (!contains(h.edges[i], d.heads[i])) o.fail("seed " + std::to_string(seed) + ": bad head");
        ++in[d.heads[i]];
      }
      for (Vertex v = 0; v < n; ++v)
        if (in[v] < f[v]) o.fail("seed " + std::to_string(seed) + ": demand unmet");
    } else {
      ++infeasible;
      const auto& w = r.violator();
      std::size_t demand = 0, incident = 0;
      for (Vertex v : w.vertices) demand += f[v];
      for (const auto& e : h.edges) {
        bool meets = false;
        for (Vertex v : w.vertices) meets = meets || contains(e, v);
        incident += meets ? 1 : 0;
      }
      if (demand != w.demand || incident != w.incident || demand <= incident)
        o.fail("seed " + std::to_string(seed) + ": witness does not re-check");
      std::size_t choices = 1;
      for (const auto& e : h.edges) choices = std::min<std::size_t>(choices * e.size(), 1'000'000);
      if (choices < 1'000'000 && oracle::orientation_exists(h, f))
        o.fail("seed " + std::to_string(seed) + ": violator for a feasible instance");
    }
  }
  if (infeasible == 0) o.fail("no infeasible instances in the corpus");
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(infeasible) + " infeasible";
  return o;
}

Outcome rainbow_equivalence() {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const std::size_t n = 2 + seed % 7;
    const std::size_t colours = 1 + seed % 12;
    const auto g = random_coloured_graph(n, colours, n + seed % 16, seed);
    ++o.checked;
    const auto t = rainbow_spanning_tree(g);
    const auto c = check_rainbow_condition(g);
    if (t.has_value() != c.satisfied) o.fail("seed " + std::to_string(seed) + ": disagree");
    if (t) {
      std::vector<std::pair<Vertex, Vertex>> es;
      std::vector<char> used(g.colours, 0);
      for (const auto& e : t->edges) {
        if (used[e.colour]) o.fail("seed " + std::to_string(seed) + ": colour repeated");
        used[e.colour] = 1;
        es.emplace_back(e.u, e.v);
      }
      if (!oracle::is_spanning_tree(n, es)) o.fail("seed " + std::to_string(seed) + ": not spanning");
    }
    if (g.edges.size() <= 16 && t.has_value() != (oracle::max_rainbow_forest_size(g) == n - 1))
      o.fail("seed " + std::to_string(seed) + ": disagrees with subset enumeration");
  }
  return o;
}

Outcome recognition() {
  Outcome o;
  const std::vector<Hypergraph> hand_built = {
      {4, {{0, 1, 2}, {1, 2, 3}, {2, 3}}},
      {3, {{0, 1}, {1, 2}, {0, 2}}},
      {4, {{0, 1}, {0, 1, 2}, {0, 1, 3}}},
      {4, {{0, 1}, {1, 2}, {0, 2}}},
      {3, {{0, 1, 2}}},
      {3, {{0, 1}, {1, 2}}},
      {7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}},
      {4, {{0, 1}, {1, 2}, {2, 3}}},
      {2, {{0, 1}}},
      {1, {}},
      adversarial_star(3, 3),
  };
  for (const auto& h : hand_built) {
    ++o.checked;
    if (is_hypertree(h) != is_hypertree_bruteforce(h).hypertree) o.fail("hand-built example");
  }
  for (std::uint64_t seed = 0; seed < 2400; ++seed) {
    const std::size_t n = 2 + seed % 5;
    const auto h = random_hypergraph(n, n - 1, 2 + seed % n, seed);
    if (h.edges.size() != n - 1) continue;
    ++o.checked;
    const bool brute = is_hypertree_bruteforce(h).hypertree;
    if (is_hypertree(h) != brute) o.fail("seed " + std::to_string(seed));
    if (oracle::shrinkable(h) != brute) o.fail("seed " + std::to_string(seed) + ": shrinkable");
  }
  if (o.checked < 2000) o.fail("corpus too small: " + std::to_string(o.checked));
  return o;
}

Outcome shrink_agreement() {
  Outcome o;
  std::size_t positive = 0;
  auto check = [&](const Hypergraph& h, const std::string& label) {
    if (pair_choice_count(h, default_enumeration_limit + 1) > default_enumeration_limit) return;
    ++o.checked;
    bool pipeline = true;
    try {
      const auto s = shrink_hypertree(h);
      if (!is_shrinking_of(h, s)) o.fail(label + ": pipeline output is not a shrinking");
    } catch (const not_a_hypertree&) {
      pipeline = false;
    }
    const auto bf = brute_force_shrink(h);
    if (bf && !is_shrinking_of(h, *bf)) o.fail(label + ": brute-force output is not a shrinking");
    if (pipeline != bf.has_value()) o.fail(label + ": disagree");
    positive += pipeline ? 1 : 0;
  };
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const std::size_t n = 2 + seed % 7;
    check(random_hypergraph(n, n - 1, 2 + seed % 4, seed), "random seed " + std::to_string(seed));
    check(random_hypertree(n, 2 + seed % 4, seed, (seed % 3) / 2.0).hypergraph,
          "hypertree seed " + std::to_string(seed));
  }
  o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(positive) + " shrinkable";
  return o;
}

Outcome tightness() {
  Outcome o;
  const auto h = adversarial_star(100, 3);
  const auto s = shrink_hypertree(h);
  o.checked = 1;
  const auto dt = tree_degrees(h.n, s.tree);
  if (!is_shrinking_of(h, s)) o.fail("not a shrinking");
  if (dt[0] < 33) o.fail("hub degree " + std::to_string(dt[0]));
  o.detail += std::string(o.detail.empty() ? "" : "; ") + "hub degree " + std::to_string(dt[0]);
  return o;
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(HYPERSHRINK_CLI) + " " + args + " 2>&1; echo \"exit=$?\"";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "popen failed";
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  return out;
}

std::string snapshot(std::uint64_t seed) {
  std::ostringstream out;
  const auto g = random_hypertree(30, 4, seed, 0.6);
  out << to_json(g.hypergraph);
  const auto s = shrink_hypertree(g.hypergraph);
  out << shrinking_json(s, verify_shrinking(g.hypergraph, s)).dump();
  out << orientation_json(orient_floor(g.hypergraph), floor_demand(g.hypergraph, rank(g.hypergraph)))
             .dump();
  out << to_dot(g.hypergraph, s);
  const auto h = random_hypergraph(8, 7, 3, seed);
  out << is_hypertree(h) << is_hypertree_bruteforce(h).hypertree;
  if (const auto bf = brute_force_shrink(h)) out << tree_json(bf->tree).dump();
  const auto cg = random_coloured_graph(6, 5, 12, seed);
  if (const auto t = rainbow_spanning_tree(cg)) out << to_dot(cg, *t);
  const auto c = check_rainbow_condition(cg);
  out << c.satisfied << c.components << c.violating.size();
  for (auto e : random_tree(25, seed)) out << e.u << '-' << e.v << ' ';
  return out.str();
}

Outcome determinism(const std::string& tmp) {
  Outcome o;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    ++o.checked;
    if (snapshot(seed) != snapshot(seed)) o.fail("library seed " + std::to_string(seed));
  }

  const std::string file = tmp + "/acceptance_h.json";
  const std::string small = tmp + "/acceptance_small.txt";
  auto write = [](const std::string& path, const std::string& body) {
    FILE* f = std::fopen(path.c_str(), "w");
    if (!f) return false;
    std::fwrite(body.data(), 1, body.size(), f);
    std::fclose(f);
    return true;
  };
  if (!write(file, to_json(random_hypertree(40, 3, 11, 0.7).hypergraph)) ||
      !write(small, to_text(random_hypertree(12, 4, 11, 0.7).hypergraph))) {
    o.fail("cannot write input files under " + tmp);
    return o;
  }
  const std::vector<std::string> commands = {
      "gen --n 50 --k 4 --seed 7",
      "gen --n 50 --k 4 --seed 7 --format text",
      "validate " + file,
      "check " + file,
      "check --oracle " + small,
      "shrink " + file,
      "shrink --out dot " + file,
      "orient " + file,
      "orient --out dot " + file,
      "bench --trials 20 --n 40 --k 3 --seed 5",
  };
  for (const auto& cmd : commands) {
    ++o.checked;
    const auto a = run_cli(cmd);
    const auto b = run_cli(cmd);
    if (a != b) o.fail("cli: " + cmd);
  }
  std::remove(file.c_str());
  std::remove(small.c_str());
  return o;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int id, const std::string& name, const Outcome& o) {
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << id << "  " << name << "  ("
              << o.checked << " checked";
    if (!o.detail.empty()) std::cout << "; " << o.detail;
    std::cout << ")" << std::endl;
  };

  Outcome shrink_failures;
  const auto corpus = build_corpus(shrink_failures);
  report(1, "degree bound max{1, floor(d/k)}", main_bound(corpus, shrink_failures));
  report(2, "degree bound d/(2k)", half_bound(corpus));
  report(3, "rank-3 degree bound d/100", hundredth_bound(corpus));
  report(4, "floor-demand orientation exists", floor_orientation());
  report(5, "orientation or Hall violator", dichotomy());
  report(6, "rainbow finder matches condition check", rainbow_equivalence());
  report(7, "recognition matches definition", recognition());
  report(8, "shrink pipeline matches enumeration", shrink_agreement());
  report(9, "adversarial star hub keeps a third", tightness());
  report(10, "byte-identical reruns", determinism(TEST_TMP_DIR));

  std::cout << (all ? "ALL PASS" : "SOME FAILED") << std::endl;
  return all ? 0 : 1;
}
