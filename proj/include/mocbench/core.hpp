#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mocbench/error.hpp"

namespace mocbench::core {

// A finite set of single-byte glyphs plus a distinguished blank that is not
// itself a glyph. Words never contain the blank; machine tapes do.
class Alphabet {
public:
  Alphabet(std::string symbols, char blank);

  const std::string& symbols() const { return symbols_; }
  char blank() const { return blank_; }
  std::size_t size() const { return symbols_.size(); }

  bool contains(char g) const { return index_of(g) >= 0; }
  // Index of a glyph in declaration order, -1 if absent.
  int index_of(char g) const;

  bool operator==(const Alphabet& o) const {
    return symbols_ == o.symbols_ && blank_ == o.blank_;
  }

  // One-line declaration used by every machine file format.
  std::string declaration() const;
  static Alphabet parse_declaration(const std::string& line);

private:
  std::string symbols_;
  char blank_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

AlphabetRef make_alphabet(std::string symbols, char blank = '_');
// The binary alphabet {0,1} used throughout the test corpus.
AlphabetRef binary_alphabet();

// A finite glyph sequence over a fixed alphabet. Immutable after construction.
class Word {
public:
  Word(AlphabetRef alphabet, std::string glyphs);

  const std::string& glyphs() const { return glyphs_; }
  const AlphabetRef& alphabet() const { return alphabet_; }
  std::size_t size() const { return glyphs_.size(); }
  bool empty() const { return glyphs_.empty(); }

  // Behavioral comparisons are glyph-for-glyph; the alphabet is a carrier.
  bool operator==(const Word& o) const { return glyphs_ == o.glyphs_; }
  bool operator<(const Word& o) const { return glyphs_ < o.glyphs_; }

private:
  AlphabetRef alphabet_;
  std::string glyphs_;
};

struct Fuel {
  std::uint64_t steps = 0;
};

// Outcome of one fueled run. FuelExhausted is the finite stand-in for a
// diverging computation; nothing in this library runs unbounded.
struct Halted {
  std::vector<Word> outputs;
  std::uint64_t steps_used = 0;
  std::uint64_t cells_used = 0;
};
struct Rejected {
  std::uint64_t steps_used = 0;
};
struct FuelExhausted {};

class RunOutcome {
public:
  RunOutcome(Halted h) : v_(std::move(h)) {}
  RunOutcome(Rejected r) : v_(r) {}
  RunOutcome(FuelExhausted f) : v_(f) {}

  bool halted() const { return std::holds_alternative<Halted>(v_); }
  bool rejected() const { return std::holds_alternative<Rejected>(v_); }
  bool fuel_exhausted() const { return std::holds_alternative<FuelExhausted>(v_); }
  // Halted or Rejected: the run came to rest by itself.
  bool settled() const { return !fuel_exhausted(); }

  const Halted& as_halted() const { return std::get<Halted>(v_); }
  const Rejected& as_rejected() const { return std::get<Rejected>(v_); }

  std::uint64_t steps_used() const {
    if (halted()) return as_halted().steps_used;
    if (rejected()) return as_rejected().steps_used;
    return 0;
  }

  // I/O-behavior equality: outcome kind plus outputs; step and cell counts
  // are resource data, not behavior.
  bool same_behavior(const RunOutcome& o) const;

private:
  std::variant<Halted, Rejected, FuelExhausted> v_;
};

// A machine of any model, reduced to the one thing the harness needs:
// a pure, deterministic evaluation procedure on word tuples.
struct BlackBoxFunction {
  std::size_t arity_in = 0;
  std::size_t arity_out = 0;
  std::function<RunOutcome(std::span<const Word>, Fuel)> evaluate;
};

// Enumeration used everywhere reproducibility matters: words ordered by
// length then lexicographically by alphabet order; tuples ordered by total
// length, then by the length split (first component longest range first from
// 0 upward), then componentwise lexicographically.
std::vector<Word> enumerate_words(const AlphabetRef& alphabet, std::size_t exact_len);
std::vector<std::vector<Word>> enumerate_tuples(const AlphabetRef& alphabet,
                                                std::size_t arity,
                                                std::size_t max_total_len);

struct EquivalenceReport {
  enum class Verdict { Equal, Counterexample };
  Verdict verdict = Verdict::Equal;
  // Set iff verdict == Counterexample.
  std::optional<std::vector<Word>> counterexample;
  // Inputs where at least one side ran out of fuel; never counterexamples.
  std::vector<std::vector<Word>> inconclusive;
  std::size_t inputs_checked = 0;

  bool equal() const { return verdict == Verdict::Equal; }
};

// Bounded behavioral comparison: the artifact's stand-in for morphism
// equality. Exhaustive over every input tuple of total length <= max_len.
EquivalenceReport behaviorally_equivalent(const BlackBoxFunction& f,
                                          const BlackBoxFunction& g,
                                          const AlphabetRef& alphabet,
                                          std::size_t max_len,
                                          Fuel fuel);

}  // namespace mocbench::core
