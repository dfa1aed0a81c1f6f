#pragma once

#include <string>

#include "oddakh/corpus.hpp"
#include "oddakh/diagram.hpp"

namespace test {

inline oddakh::AnnularDiagram corpus(const std::string& stem) {
  return oddakh::load_diagram(oddakh::default_corpus_dir() / (stem + ".json"));
}

inline const oddakh::Corpus& bundled() {
  static const oddakh::Corpus c = oddakh::load_corpus(oddakh::default_corpus_dir());
  return c;
}

}  // namespace test
