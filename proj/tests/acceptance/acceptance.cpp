#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "oddakh/algebra.hpp"
#include "oddakh/corpus.hpp"
#include "oddakh/gl11.hpp"
#include "oddakh/homology.hpp"
#include "oddakh/oracle.hpp"

using namespace oddakh;

namespace {

struct Criterion {
  int number;
  std::string title;
  CheckReport report;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fixed(double x, int digits = 2) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << x;
  return s.str();
}

unsigned worker_count() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

BuildOptions options() {
  BuildOptions o;
  o.threads = worker_count();
  return o;
}

Criterion differential_identities(const Corpus& corpus) {
  Criterion c{1, "differential identities", {}, {}};
  double slowest = 0;
  std::string slowest_name;
  for (const auto& [stem, d] : corpus.diagrams) {
    const auto t0 = Clock::now();
    const ChainComplex cx(d, options());
    c.report.merge(check_differential_identities(cx), stem);
    const double dt = seconds_since(t0);
    if (dt > slowest) {
      slowest = dt;
      slowest_name = stem;
    }
    if (dt >= 10.0) c.report.fail(stem + " took " + fixed(dt) + " s");
  }
  c.detail = std::to_string(corpus.diagrams.size()) + " diagrams, slowest " + slowest_name + " " + fixed(slowest) + " s";
  return c;
}

Criterion superalgebra(const Corpus& corpus) {
  Criterion c{2, "superalgebra relations", {}, {}};
  std::size_t reps = 0;
  for (auto [m, n] : {std::pair{1, 0}, {0, -1}, {2, 1}, {1, -1}}) {
    c.report.merge(verify_superalgebra(irreducible(m, n)), "L(" + std::to_string(m) + "," + std::to_string(n) + ")");
    ++reps;
  }
  for (const auto& [stem, d] : corpus.diagrams) {
    const Cube cube(d, worker_count());
    for (Vertex v = 0; v < cube.num_vertices(); ++v) {
      const auto& res = cube.resolution(v);
      for (auto mode : {Supergrading::quantum, Supergrading::kshift}) {
        c.report.merge(verify_superalgebra(exterior_action(res, 0, mode)), stem + " exterior");
        c.report.merge(verify_superalgebra(tensor_action(res, 0, mode)), stem + " tensor");
        reps += 2;
      }
    }
    const ChainComplex cx(d, options());
    c.report.merge(verify_superalgebra(complex_action(cx)), stem + " complex");
    ++reps;
  }
  c.detail = std::to_string(reps) + " representations";
  return c;
}

Criterion intertwining(const Corpus& corpus) {
  Criterion c{3, "d0 intertwines e, f, h1, h2", {}, {}};
  for (const auto& [stem, d] : corpus.diagrams) {
    const ChainComplex cx(d, options());
    c.report.merge(check_d0_intertwines(cx, complex_action(cx)), stem);
  }
  c.detail = std::to_string(corpus.diagrams.size()) + " complexes";
  return c;
}

Criterion two_descriptions(const Corpus& corpus) {
  Criterion c{4, "alpha intertwines, edge conjugation", {}, {}};
  std::size_t vertices = 0, edges = 0;
  for (const auto& [stem, d] : corpus.diagrams) {
    const Cube cube(d, worker_count());
    for (Vertex v = 0; v < cube.num_vertices(); ++v, ++vertices)
      c.report.merge(check_alpha_intertwines(cube.resolution(v)), stem + " vertex " + std::to_string(v));
    for (const auto& e : cube.edges()) {
      c.report.merge(check_edge_conjugation(cube, e), stem);
      c.report.merge(check_k_parts(cube, e), stem);
      ++edges;
    }
  }
  c.detail = std::to_string(vertices) + " vertices, " + std::to_string(edges) + " edges";
  return c;
}

Criterion gradings(const Corpus& corpus) {
  Criterion c{5, "gradings", {}, {}};
  std::size_t gens = 0;
  for (const auto& [stem, d] : corpus.diagrams) {
    for (auto mode : {Supergrading::quantum, Supergrading::kshift}) {
      BuildOptions o = options();
      o.supergrading = mode;
      const ChainComplex cx(d, o);
      c.report.merge(check_gradings(cx, complex_action(cx)), stem);
      gens += cx.size();
    }
  }
  c.detail = std::to_string(gens) + " generators";
  return c;
}

Criterion oracle(const Corpus& corpus) {
  Criterion c{6, "mod-2 oracle", {}, {}};
  for (const auto& [stem, d] : corpus.diagrams) {
    const ChainComplex cx(d, options());
    const auto red = mod2_reduce(cx);
    c.report.merge(compare_mod2(red, even_complex(d)), stem);
    if (gf2_homology(red) != even_akh_gf2(d)) c.report.fail(stem + ": GF(2) homology differs");
  }
  c.detail = std::to_string(corpus.diagrams.size()) + " diagrams";
  return c;
}

Criterion invariance(const Corpus& corpus) {
  Criterion c{7, "Reidemeister invariance", {}, {}};
  for (const auto& p : corpus.pairs) c.report.merge(compare_pair(p, options()));
  const bool distinguished = !compare_diagrams(corpus.diagrams.at("d_e"), corpus.diagrams.at("d_t"), options()).ok;
  if (!distinguished) c.report.fail("negative control: essential and trivial unknot not distinguished");
  c.detail = std::to_string(corpus.pairs.size()) + " pairs, negative control " +
             (distinguished ? "distinguished" : "not distinguished");
  return c;
}

Criterion base_cases(const Corpus& corpus) {
  Criterion c{8, "base cases", {}, {}};
  using Dims = std::map<TriDegree, std::size_t>;
  const auto de = compute_invariants(corpus.diagrams.at("d_e"));
  if (de.dimensions != Dims{{{0, 1, 1}, 1}, {{0, -1, -1}, 1}}) c.report.fail("essential unknot dimensions");
  if (de.fingerprint != rep_fingerprint(fundamental())) c.report.fail("essential unknot is not L(1,0)");

  const ChainComplex dt(corpus.diagrams.at("d_t"));
  const auto h = homology(dt);
  if (h.dimensions() != Dims{{{0, 1, 0}, 1}, {{0, -1, 0}, 1}}) c.report.fail("trivial unknot dimensions");
  const auto rep = action_on_homology(dt, complex_action(dt), h).rep;
  if (rep.dim() != 2 || !rep.e.is_zero() || !rep.f.is_zero() || !rep.hplus.is_zero() || !rep.hminus.is_zero())
    c.report.fail("trivial unknot action is not trivial");
  c.detail = "D_e = L(1,0), D_t = trivial 2-dimensional";
  return c;
}

Criterion robustness(const Corpus& corpus) {
  Criterion c{9, "robustness of conventions", {}, {}};
  std::mt19937 rng(20261014);
  std::size_t permutations = 0, reassigned = 0;
  for (const auto& [stem, d] : corpus.diagrams) {
    const auto base = compute_invariants(d, options());

    for (int trial = 0; trial < 3 && d.num_crossings() > 1; ++trial) {
      std::vector<int> order(d.num_crossings());
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      c.report.merge(compare_invariants(base, compute_invariants(permute_crossings(d, order), options())),
                     stem + " (a) crossing order");
      ++permutations;
    }

    const ChainComplex cx(d, options());
    if (cx.assignment().free_variables > 0) {
      for (int trial = 0; trial < 3; ++trial) {
        BuildOptions o = options();
        const auto seed = rng();
        o.free_negative = [seed](std::size_t v) { return ((seed >> (v % 32)) & 1u) != 0; };
        if (trial == 0) o.free_negative = [](std::size_t) { return true; };
        const ChainComplex other(d, o);
        c.report.merge(check_differential_identities(other), stem + " (b)");
        c.report.merge(compare_invariants(base, compute_invariants(d, o)), stem + " (b) edge assignment");
        ++reassigned;
      }
    }

    BuildOptions k = options();
    k.supergrading = Supergrading::kshift;
    c.report.merge(compare_invariants(base, compute_invariants(d, k)), stem + " (c) supergrading");
  }
  c.detail = std::to_string(permutations) + " permutations, " + std::to_string(reassigned) +
             " alternative edge assignments, " + std::to_string(corpus.diagrams.size()) + " supergrading switches";
  return c;
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const Corpus corpus = load_corpus();
  std::vector<Criterion (*)(const Corpus&)> steps{differential_identities, superalgebra, intertwining,
                                                  two_descriptions,        gradings,     oracle,
                                                  invariance,              base_cases,   robustness};
  int failed = 0;
  for (std::size_t n = 0; n < steps.size(); ++n) {
    Criterion c{static_cast<int>(n + 1), "", {}, {}};
    try {
      auto step = steps[n];
      c = step(corpus);
    } catch (const std::exception& e) {
      c.report.fail(std::string("exception: ") + e.what());
    }
    if (!c.report.ok) ++failed;
    std::cout << "criterion " << c.number << " " << (c.report.ok ? "PASS" : "FAIL") << "  " << c.title;
    if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
    std::cout << "\n";
    if (!c.report.ok) std::cout << "  " << c.report.failure << "\n";
    std::cout.flush();
  }
  std::cout << (failed ? "FAILED " : "ALL PASS ") << steps.size() - failed << "/" << steps.size() << " criteria in "
            << fixed(seconds_since(t0), 1) << " s\n";
  return failed ? 1 : 0;
}
