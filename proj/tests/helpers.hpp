#pragma once

// Shared fixtures: locate the corpus directory and load named files from it.

#include <cstdlib>
#include <string>

#include "aftlab/io.hpp"

namespace testutil {

inline std::string corpus_dir() {
  if (const char* env = std::getenv("AFTLAB_CORPUS")) return env;
  return "corpus";
}

inline std::string corpus_text(const std::string& file) {
  return aftlab::read_text(corpus_dir() + "/" + file);
}

inline aftlab::CatPtr corpus_cat(const std::string& stem) {
  return aftlab::parse_fincat(corpus_text(stem + ".fincat"));
}

inline aftlab::PosetPtr corpus_poset(const std::string& stem) {
  return aftlab::parse_poset(corpus_text(stem + ".poset"));
}

inline aftlab::Functor corpus_functor(const std::string& stem, const aftlab::CatPtr& src,
                                      const aftlab::CatPtr& dst) {
  return aftlab::bind_functor(aftlab::parse_map_file(corpus_text(stem + ".fun")), src, dst);
}

inline aftlab::PosetMap corpus_monotone(const std::string& stem, const aftlab::PosetPtr& src,
                                        const aftlab::PosetPtr& dst) {
  return aftlab::bind_monotone(aftlab::parse_map_file(corpus_text(stem + ".fun")), src, dst);
}

inline aftlab::Presheaf corpus_presheaf(const std::string& stem, const aftlab::CatPtr& base) {
  return aftlab::parse_presheaf(corpus_text(stem + ".psh"), base);
}

}  // namespace testutil
