#include "oddakh/cli.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "oddakh/corpus.hpp"
#include "oddakh/errors.hpp"
#include "oddakh/gl11.hpp"
#include "oddakh/homology.hpp"
#include "oddakh/oracle.hpp"

namespace oddakh {

using ojson = nlohmann::ordered_json;

namespace {

struct Flags {
  std::string coeff = "rational";
  std::string supergrading = "default";
  bool json = false;
  unsigned parallel = 1;
};

std::string vertex_string(Vertex v, std::size_t crossings) {
  std::string s;
  for (std::size_t x = 0; x < crossings; ++x) s += ((v >> x) & 1u) ? '1' : '0';
  return s.empty() ? "-" : s;
}

ojson matrix_json(const Matrix& m) {
  ojson a = ojson::array();
  m.for_each([&](std::size_t r, std::size_t c, const Rational& v) { a.push_back(ojson::array({r, c, v.get_str()})); });
  return a;
}

void print_matrix(std::ostream& out, const char* label, const Matrix& m) {
  out << label << ":";
  if (m.is_zero()) out << " 0";
  m.for_each([&](std::size_t r, std::size_t c, const Rational& v) { out << " (" << r << "," << c << ")=" << v.get_str(); });
  out << "\n";
}

ojson dims_json(const std::map<TriDegree, std::size_t>& dims, bool trigraded) {
  ojson rows = ojson::array();
  for (const auto& [d, n] : dims) {
    ojson row = {{"i", d.i}, {"j", d.j}};
    if (trigraded) row["k"] = d.k;
    row["dim"] = n;
    rows.push_back(row);
  }
  return rows;
}

void print_dims(std::ostream& out, const std::map<TriDegree, std::size_t>& dims) {
  out << "i\tj\tk\tdim\n";
  for (const auto& [d, n] : dims) out << d.i << '\t' << d.j << '\t' << d.k << '\t' << n << '\n';
  out << "poincare: " << poincare_polynomial(dims) << '\n';
}

ojson fingerprint_json(const RepFingerprint& fp) {
  ojson a = ojson::array();
  for (const auto& [sec, weights] : fp)
    for (const auto& [k, w] : weights)
      a.push_back({{"i", sec.first},
                   {"j-k", sec.second},
                   {"k", k},
                   {"dim", w.dim},
                   {"rank_e", w.rank_e},
                   {"rank_f", w.rank_f},
                   {"rank_ef", w.rank_ef},
                   {"rank_fe", w.rank_fe}});
  return a;
}

BuildOptions build_options(const Flags& f) {
  BuildOptions o;
  o.supergrading = f.supergrading == "kshift" ? Supergrading::kshift : Supergrading::quantum;
  o.threads = std::max(1u, f.parallel);
  return o;
}

int cmd_resolve(const AnnularDiagram& d, const Flags& f, std::ostream& out) {
  const ChainComplex c(d, build_options(f));
  const Cube& cube = c.cube();
  const std::size_t nc = cube.num_crossings();
  if (f.json) {
    ojson j;
    j["name"] = d.name();
    const auto st = cube.stats();
    j["stats"] = {{"n_plus", st.n_plus}, {"n_minus", st.n_minus}, {"components", st.num_components},
                  {"winding_parity", cube.winding_parity()}};
    ojson verts = ojson::array();
    for (Vertex v = 0; v < cube.num_vertices(); ++v) {
      const Resolution& r = cube.resolution(v);
      ojson circles = ojson::array();
      for (const auto& circle : r.circles) {
        ojson arcs = ojson::array();
        for (const auto& [e, fwd] : circle.arcs) arcs.push_back(fwd ? e : -e);
        circles.push_back({{"class", circle.essential() ? "essential" : "trivial"}, {"edges", arcs}});
      }
      verts.push_back({{"vertex", vertex_string(v, nc)}, {"circles", circles}});
    }
    j["vertices"] = verts;
    ojson edges = ojson::array();
    for (std::size_t e = 0; e < cube.edges().size(); ++e) {
      const CubeEdge& ce = cube.edges()[e];
      edges.push_back({{"from", vertex_string(ce.from, nc)},
                       {"to", vertex_string(ce.to, nc)},
                       {"crossing", ce.crossing},
                       {"kind", ce.kind == EdgeKind::merge ? "merge" : "split"},
                       {"circles", ojson::array({ce.pair[0], ce.pair[1]})},
                       {"single", ce.single},
                       {"sign", c.assignment().sign[e]}});
    }
    j["edges"] = edges;
    j["free_variables"] = c.assignment().free_variables;
    out << j.dump(2) << '\n';
    return 0;
  }
  const auto st = cube.stats();
  out << "diagram: " << d.name() << "\n";
  out << "n+ = " << st.n_plus << ", n- = " << st.n_minus << ", components = " << st.num_components
      << ", winding parity = " << cube.winding_parity() << "\n";
  for (Vertex v = 0; v < cube.num_vertices(); ++v) {
    const Resolution& r = cube.resolution(v);
    out << "vertex " << vertex_string(v, nc) << ":";
    for (std::size_t q = 0; q < r.size(); ++q) {
      out << " a" << q + 1 << (r.is_essential(q) ? "[E]" : "[T]") << "(";
      for (std::size_t t = 0; t < r.circles[q].arcs.size(); ++t) {
        const auto& [e, fwd] = r.circles[q].arcs[t];
        out << (t ? " " : "") << (fwd ? "" : "-") << e;
      }
      out << ")";
    }
    out << "\n";
  }
  for (std::size_t e = 0; e < cube.edges().size(); ++e) {
    const CubeEdge& ce = cube.edges()[e];
    out << "edge " << vertex_string(ce.from, nc) << " -> " << vertex_string(ce.to, nc) << " x" << ce.crossing << " ";
    if (ce.kind == EdgeKind::merge)
      out << "merge a" << ce.pair[0] + 1 << ",a" << ce.pair[1] + 1 << " -> a" << ce.single + 1;
    else
      out << "split a" << ce.single + 1 << " -> a" << ce.pair[0] + 1 << ",a" << ce.pair[1] + 1;
    out << " sign " << (c.assignment().sign[e] > 0 ? "+" : "-") << "\n";
  }
  out << "free variables: " << c.assignment().free_variables << "\n";
  return 0;
}

int cmd_homology(const AnnularDiagram& d, const Flags& f, std::ostream& out) {
  const ChainComplex c(d, build_options(f));
  const bool integral = f.coeff == "integral";
  const Homology h = homology(c, Differential::d0, {integral, build_options(f).threads});
  const auto dims = h.dimensions();
  if (f.json) {
    ojson j;
    j["name"] = d.name();
    j["coefficients"] = f.coeff;
    j["homology"] = dims_json(dims, true);
    j["poincare"] = poincare_polynomial(dims);
    if (integral) {
      ojson t = ojson::array();
      for (const auto& b : h.blocks)
        for (const auto& x : b.torsion) t.push_back({{"i", b.degree.i}, {"j", b.degree.j}, {"k", b.degree.k}, {"order", x.get_str()}});
      j["torsion"] = t;
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  print_dims(out, dims);
  if (integral) {
    out << "torsion:";
    bool any = false;
    for (const auto& b : h.blocks)
      for (const auto& x : b.torsion) {
        out << " Z/" << x.get_str() << "@(" << b.degree.i << "," << b.degree.j << "," << b.degree.k << ")";
        any = true;
      }
    out << (any ? "" : " none") << "\n";
  }
  return 0;
}

int cmd_action(const AnnularDiagram& d, const Flags& f, std::ostream& out) {
  const BuildOptions o = build_options(f);
  const ChainComplex c(d, o);
  const Homology h = homology(c, Differential::d0, {false, o.threads});
  const HomologyRep rep = action_on_homology(c, complex_action(c), h);
  const CheckReport rel = verify_superalgebra(rep.rep);
  if (!rel) throw InvariantError("induced action: " + rel.failure);
  const RepFingerprint fp = rep_fingerprint(rep);
  if (f.json) {
    ojson j;
    j["name"] = d.name();
    ojson basis = ojson::array();
    for (std::size_t b = 0; b < rep.rep.dim(); ++b) {
      const auto& deg = rep.degree[b];
      basis.push_back({{"index", b}, {"i", deg.i}, {"j-k", deg.j - deg.k}, {"k", deg.k}, {"superdegree", rep.rep.parity[b]}});
    }
    j["basis"] = basis;
    for (Gl11 x : kGl11Basis) j[name(x)] = matrix_json(action(rep.rep, x));
    j["fingerprint"] = fingerprint_json(fp);
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "basis (index: i, j-k, k, superdegree)\n";
  for (std::size_t b = 0; b < rep.rep.dim(); ++b) {
    const auto& deg = rep.degree[b];
    out << "  " << b << ": " << deg.i << ", " << deg.j - deg.k << ", " << deg.k << ", " << rep.rep.parity[b] << "\n";
  }
  for (Gl11 x : kGl11Basis) print_matrix(out, name(x), action(rep.rep, x));
  out << "fingerprint\n" << to_string(fp);
  return 0;
}

int cmd_oracle(const AnnularDiagram& d, const Flags& f, std::ostream& out) {
  const auto dims = even_akh_gf2(d);
  if (f.json) {
    ojson j;
    j["name"] = d.name();
    j["coefficients"] = "GF(2)";
    j["homology"] = dims_json(dims, true);
    j["poincare"] = poincare_polynomial(dims);
    out << j.dump(2) << '\n';
    return 0;
  }
  print_dims(out, dims);
  return 0;
}

int cmd_check(const AnnularDiagram& d, const Flags& f, std::ostream& out) {
  const auto results = check_suite(d, build_options(f));
  bool ok = true;
  ojson arr = ojson::array();
  for (const auto& r : results) {
    ok = ok && r.report.ok;
    if (f.json)
      arr.push_back({{"suite", r.name}, {"pass", r.report.ok}, {"failure", r.report.failure}});
    else
      out << (r.report.ok ? "PASS " : "FAIL ") << r.name << (r.report.ok ? "" : ": " + r.report.failure) << "\n";
  }
  if (f.json) out << ojson{{"name", d.name()}, {"suites", arr}, {"pass", ok}}.dump(2) << '\n';
  return ok ? 0 : 1;
}

int cmd_compare(const AnnularDiagram& a, const AnnularDiagram& b, const Flags& f, std::ostream& out) {
  const BuildOptions o = build_options(f);
  const Invariants ia = compute_invariants(a, o);
  const Invariants ib = compute_invariants(b, o);
  const CheckReport r = compare_invariants(ia, ib);
  if (f.json) {
    out << ojson{{"before", a.name()},
                 {"after", b.name()},
                 {"verdict", r.ok ? "isomorphic" : "different"},
                 {"reason", r.failure}}
               .dump(2)
        << '\n';
  } else {
    out << a.name() << " vs " << b.name() << ": " << (r.ok ? "isomorphic" : "different") << "\n";
    if (!r.ok) out << r.failure << "\n";
  }
  return r.ok ? 0 : 1;
}

void error_record(std::ostream& err, const char* kind, const std::string& message) {
  err << ojson{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

std::vector<SuiteResult> check_suite(const AnnularDiagram& d, const BuildOptions& options) {
  std::vector<SuiteResult> out;
  const ChainComplex c(d, options);
  const Cube& cube = c.cube();
  out.push_back({"differential identities", check_differential_identities(c)});
  out.push_back({"edge map ranks", check_edge_map_ranks(c)});

  CheckReport vertex_reps, alpha;
  for (Vertex v = 0; v < cube.num_vertices(); ++v) {
    const Resolution& res = cube.resolution(v);
    const std::string where = "vertex " + std::to_string(v);
    vertex_reps.merge(verify_superalgebra(exterior_action(res)), where + " exterior");
    vertex_reps.merge(verify_superalgebra(tensor_action(res)), where + " tensor");
    alpha.merge(check_alpha_intertwines(res), where);
  }
  out.push_back({"vertex superalgebra relations", vertex_reps});
  out.push_back({"alpha intertwines", alpha});

  CheckReport conj, kp;
  for (const auto& e : cube.edges()) {
    const std::string where = "edge " + std::to_string(e.from) + "/x" + std::to_string(e.crossing);
    conj.merge(check_edge_conjugation(cube, e), where);
    kp.merge(check_k_parts(cube, e), where);
  }
  out.push_back({"edge conjugation", conj});
  out.push_back({"k-parts table", kp});

  const SuperRep rho = complex_action(c);
  out.push_back({"chain superalgebra relations", verify_superalgebra(rho)});
  out.push_back({"d0 intertwines", check_d0_intertwines(c, rho)});
  out.push_back({"gradings", check_gradings(c, rho)});

  CheckReport oracle = compare_mod2(mod2_reduce(c), even_complex(d));
  const Homology h = homology(c, Differential::d0, {false, options.threads});
  const auto even = even_akh_gf2(d);
  if (oracle.ok) {
    const auto odd2 = gf2_homology(mod2_reduce(c));
    if (odd2 != even) oracle.fail("GF(2) homology of the reduced odd complex differs from the even oracle");
    for (const auto& [deg, n] : h.dimensions()) {
      auto it = even.find(deg);
      if (it == even.end() || it->second < n) oracle.fail("GF(2) dimension below the rational one");
    }
  }
  out.push_back({"mod-2 oracle", oracle});

  CheckReport induced;
  try {
    const HomologyRep rep = action_on_homology(c, rho, h);
    induced.merge(verify_superalgebra(rep.rep));
  } catch (const InvariantError& e) {
    induced.fail(e.what());
  }
  out.push_back({"induced action on homology", induced});
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Odd annular Khovanov homology and its gl(1|1) action", "oddakh"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags flags;
  app.add_option("--coeff", flags.coeff, "Coefficients for homology")->check(CLI::IsMember({"rational", "integral"}));
  app.add_option("--supergrading", flags.supergrading, "Supergrading convention")
      ->check(CLI::IsMember({"default", "kshift"}));
  app.add_flag("--json", flags.json, "Machine-readable output");
  app.add_option("--parallel", flags.parallel, "Worker threads")->check(CLI::PositiveNumber);

  std::string first, second;
  std::string command;
  const std::pair<const char*, const char*> subs[] = {
      {"resolve", "Dump the cube of resolutions and edge signs"},
      {"homology", "Trigraded odd annular Khovanov homology"},
      {"action", "gl(1|1) action on homology and its fingerprint"},
      {"oracle", "Even annular Khovanov homology over GF(2)"},
      {"check", "Run every identity check on one diagram"}};
  for (auto [sub, help] : subs) {
    auto* s = app.add_subcommand(sub, help);
    s->add_option("diagram", first, "Diagram file (.json optional)")->required();
    s->callback([&command, sub] { command = sub; });
  }
  auto* cmp = app.add_subcommand("compare", "Compare homology and fingerprints of two diagrams");
  cmp->add_option("before", first, "First diagram")->required();
  cmp->add_option("after", second, "Second diagram")->required();
  cmp->callback([&command] { command = "compare"; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    error_record(err, "input", e.what());
    return 2;
  }

  try {
    const AnnularDiagram a = load_diagram(first);
    if (command == "resolve") return cmd_resolve(a, flags, out);
    if (command == "homology") return cmd_homology(a, flags, out);
    if (command == "action") return cmd_action(a, flags, out);
    if (command == "oracle") return cmd_oracle(a, flags, out);
    if (command == "check") return cmd_check(a, flags, out);
    return cmd_compare(a, load_diagram(second), flags, out);
  } catch (const InputError& e) {
    error_record(err, "input", e.what());
    return 2;
  } catch (const InvariantError& e) {
    error_record(err, "invariant", e.what());
    return 1;
  } catch (const std::exception& e) {
    error_record(err, "internal", e.what());
    return 1;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace oddakh
