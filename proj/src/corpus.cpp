#include "oddakh/corpus.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oddakh/errors.hpp"
#include "oddakh/homology.hpp"

namespace oddakh {

namespace {

Move parse_move(const std::string& s) {
  if (s == "R1L") return Move::R1L;
  if (s == "R1R") return Move::R1R;
  if (s == "R2") return Move::R2;
  if (s == "R3") return Move::R3;
  throw InputError("corpus: unknown move '" + s + "'");
}

std::string dims_string(const std::map<TriDegree, std::size_t>& d) { return poincare_polynomial(d); }

}  // namespace

const char* name(Move m) {
  switch (m) {
    case Move::R1L: return "R1L";
    case Move::R1R: return "R1R";
    case Move::R2: return "R2";
    case Move::R3: return "R3";
  }
  return "?";
}

std::filesystem::path default_corpus_dir() { return ODDAKH_CORPUS_DIR; }

Corpus load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InputError("corpus directory not found: " + dir.string());
  Corpus c;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const auto& p = entry.path();
    if (p.extension() != ".json" || p.filename() == "pairs.json") continue;
    try {
      c.diagrams.emplace(p.stem().string(), load_diagram(p));
    } catch (const InputError& e) {
      throw InputError("corpus file " + p.filename().string() + ": " + e.what());
    }
  }
  const auto pairs_path = dir / "pairs.json";
  std::ifstream in(pairs_path);
  if (!in) return c;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("corpus pairs.json: ") + e.what());
  }
  if (!j.is_array()) throw InputError("corpus pairs.json: expected an array");
  for (const auto& item : j) {
    try {
      auto lookup = [&](const char* key) {
        const std::string stem = item.at(key).get<std::string>();
        auto it = c.diagrams.find(stem);
        if (it == c.diagrams.end()) throw InputError("corpus pairs.json: unknown diagram '" + stem + "'");
        return it->second;
      };
      c.pairs.push_back({item.at("name").get<std::string>(), parse_move(item.at("move").get<std::string>()),
                         lookup("before"), lookup("after"), item.value("note", std::string{})});
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("corpus pairs.json: ") + e.what());
    }
  }
  return c;
}

Invariants compute_invariants(const AnnularDiagram& d, const BuildOptions& options) {
  const ChainComplex c(d, options);
  const Homology h = homology(c, Differential::d0, {false, options.threads});
  Invariants inv;
  inv.dimensions = h.dimensions();
  inv.fingerprint = rep_fingerprint(action_on_homology(c, complex_action(c), h));
  return inv;
}

CheckReport compare_invariants(const Invariants& a, const Invariants& b) {
  CheckReport r;
  if (a.dimensions != b.dimensions)
    r.fail("homology differs: " + dims_string(a.dimensions) + " vs " + dims_string(b.dimensions));
  else if (a.fingerprint != b.fingerprint)
    r.fail("fingerprints differ:\n" + to_string(a.fingerprint) + "vs\n" + to_string(b.fingerprint));
  return r;
}

CheckReport compare_diagrams(const AnnularDiagram& a, const AnnularDiagram& b, const BuildOptions& options) {
  return compare_invariants(compute_invariants(a, options), compute_invariants(b, options));
}

CheckReport compare_pair(const MovePair& p, const BuildOptions& options) {
  CheckReport r;
  r.merge(compare_diagrams(p.before, p.after, options), p.name);
  return r;
}

}  // namespace oddakh
