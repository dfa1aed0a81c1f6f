#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "oddakh/algebra.hpp"
#include "oddakh/diagram.hpp"
#include "oddakh/gl11.hpp"
#include "oddakh/report.hpp"

namespace oddakh {

enum class Move { R1L, R1R, R2, R3 };
const char* name(Move m);

struct MovePair {
  std::string name;
  Move move = Move::R1L;
  AnnularDiagram before;
  AnnularDiagram after;
  std::string note;
};

struct Corpus {
  std::map<std::string, AnnularDiagram> diagrams;  // keyed by file stem
  std::vector<MovePair> pairs;
};

std::filesystem::path default_corpus_dir();
/// Every *.json in `dir` except pairs.json is a diagram; pairs.json lists the move
/// pairs by file stem. Throws InputError on a corrupt file.
Corpus load_corpus(const std::filesystem::path& dir = default_corpus_dir());

/// Everything the invariance comparison looks at for one diagram.
struct Invariants {
  std::map<TriDegree, std::size_t> dimensions;
  RepFingerprint fingerprint;
};
Invariants compute_invariants(const AnnularDiagram& d, const BuildOptions& options = {});

/// Equal trigraded dimensions and equal fingerprints.
CheckReport compare_invariants(const Invariants& a, const Invariants& b);
CheckReport compare_diagrams(const AnnularDiagram& a, const AnnularDiagram& b, const BuildOptions& options = {});
CheckReport compare_pair(const MovePair& p, const BuildOptions& options = {});

}  // namespace oddakh
