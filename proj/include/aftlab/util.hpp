#pragma once
// Small shared helpers: deterministic hashing, string building, and the
// library-wide exception taxonomy.

#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace aftlab {

inline constexpr const char* kVersion = "0.1.0";

//----------------------------------------------------------------------------
// deterministic hashing (FNV-1a, 64 bit) — used for memo keys and input digests

struct Fnv1a {
  std::uint64_t state = 1469598103934665603ULL;
  void feed(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      state ^= (v >> (8 * i)) & 0xffu;
      state *= 1099511628211ULL;
    }
  }
  void feed(int v) { feed(static_cast<std::uint64_t>(static_cast<std::int64_t>(v))); }
  void feed(const std::string& s) {
    for (unsigned char c : s) {
      state ^= c;
      state *= 1099511628211ULL;
    }
    feed(std::uint64_t{0x9e3779b97f4a7c15ULL});  // separator
  }
  std::uint64_t value() const { return state; }
};

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

//----------------------------------------------------------------------------
// string helpers

template <class Seq, class Fn>
std::string join(const Seq& xs, const std::string& sep, Fn&& render) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) os << sep;
    first = false;
    os << render(x);
  }
  return os.str();
}

inline std::string join_ids(const std::vector<std::string>& xs, const std::string& sep = " ") {
  return join(xs, sep, [](const std::string& s) { return s; });
}

template <class... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

//----------------------------------------------------------------------------
// error taxonomy

// Base for all library errors. Subclasses carry structured data where callers
// need it (validation issue lists, failing objects, failing 2-cells).
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  int line = 0;
  ParseError(int line_, const std::string& msg)
      : Error(cat("parse error (line ", line_, "): ", msg)), line(line_) {}
};

// Category/functor/presheaf data that is shaped correctly but breaks a law.
struct ValidationError : Error {
  std::vector<std::string> issues;
  explicit ValidationError(std::vector<std::string> issues_)
      : Error(cat("validation failed: ", join_ids(issues_, "; "))), issues(std::move(issues_)) {}
};

// Functors/transformations wired between the wrong categories, or data whose
// endpoints do not line up.
struct ShapeMismatch : Error {
  explicit ShapeMismatch(const std::string& msg) : Error(cat("shape mismatch: ", msg)) {}
};

struct ObjectNotFound : Error {
  explicit ObjectNotFound(const std::string& id) : Error(cat("object not found: ", id)) {}
};

// A requested weight class has no semantics for the requested operation.
struct UnsupportedClass : Error {
  explicit UnsupportedClass(const std::string& msg) : Error(cat("unsupported class: ", msg)) {}
};

struct UnsupportedPair : Error {
  explicit UnsupportedPair(const std::string& msg) : Error(cat("unsupported pair: ", msg)) {}
};

// Composition-lemma hypotheses that fail to hold; names the offending 2-cell
// and the object where invertibility breaks.
struct HypothesisFailure : Error {
  std::string cell;    // "counit" or "whiskered-unit"
  std::string object;  // object id where invertibility fails
  HypothesisFailure(std::string cell_, std::string object_)
      : Error(cat("hypothesis failure: 2-cell '", cell_, "' not invertible at object '", object_, "'")),
        cell(std::move(cell_)),
        object(std::move(object_)) {}
};

// Theorem-instance hypotheses (cocompleteness of source/target) that fail.
struct PreconditionFailure : Error {
  std::string side;    // "source" or "target"
  std::string detail;  // failing shape/diagram description
  PreconditionFailure(std::string side_, std::string detail_)
      : Error(cat("precondition failure: ", side_, " category is not cocomplete enough: ", detail_)),
        side(std::move(side_)),
        detail(std::move(detail_)) {}
};

struct NotCompleteLattice : Error {
  explicit NotCompleteLattice(const std::string& msg) : Error(cat("not a complete lattice: ", msg)) {}
};

}  // namespace aftlab
