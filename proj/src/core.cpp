#include "mocbench/core.hpp"

#include <algorithm>
#include <sstream>

namespace mocbench::core {

Alphabet::Alphabet(std::string symbols, char blank) : symbols_(std::move(symbols)), blank_(blank) {
  if (symbols_.empty()) throw_shape("alphabet must declare at least one symbol");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == blank_) throw_shape("blank glyph must not be an alphabet symbol");
    for (std::size_t j = i + 1; j < symbols_.size(); ++j)
      if (symbols_[i] == symbols_[j]) throw_shape("duplicate glyph in alphabet");
  }
}

int Alphabet::index_of(char g) const {
  auto pos = symbols_.find(g);
  return pos == std::string::npos ? -1 : static_cast<int>(pos);
}

std::string Alphabet::declaration() const {
  std::string out = "alphabet: ";
  out += symbols_;
  out += " blank:";
  out += blank_;
  return out;
}

Alphabet Alphabet::parse_declaration(const std::string& line) {
  std::istringstream in(line);
  std::string head, syms, blank_tok;
  in >> head >> syms >> blank_tok;
  if (head != "alphabet:" || syms.empty() || blank_tok.rfind("blank:", 0) != 0 ||
      blank_tok.size() != 7)
    throw_parse("bad alphabet declaration: " + line);
  return Alphabet(syms, blank_tok[6]);
}

AlphabetRef make_alphabet(std::string symbols, char blank) {
  return std::make_shared<const Alphabet>(std::move(symbols), blank);
}

AlphabetRef binary_alphabet() {
  static const AlphabetRef a = make_alphabet("01", '_');
  return a;
}

Word::Word(AlphabetRef alphabet, std::string glyphs)
    : alphabet_(std::move(alphabet)), glyphs_(std::move(glyphs)) {
  if (!alphabet_) throw_shape("word requires an alphabet");
  for (char g : glyphs_)
    if (!alphabet_->contains(g))
      throw_shape(std::string("glyph '") + g + "' not in alphabet " + alphabet_->symbols());
}

bool RunOutcome::same_behavior(const RunOutcome& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (!halted()) return true;  // Rejected/FuelExhausted carry no outputs
  const auto& a = as_halted().outputs;
  const auto& b = o.as_halted().outputs;
  return a == b;
}

std::vector<Word> enumerate_words(const AlphabetRef& alphabet, std::size_t exact_len) {
  std::vector<Word> out;
  std::string buf(exact_len, alphabet->symbols()[0]);
  // Odometer over symbol indices, most significant position first.
  std::vector<std::size_t> idx(exact_len, 0);
  while (true) {
    for (std::size_t i = 0; i < exact_len; ++i) buf[i] = alphabet->symbols()[idx[i]];
    out.emplace_back(alphabet, buf);
    std::size_t pos = exact_len;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < alphabet->size()) break;
      idx[pos] = 0;
      if (pos == 0) return out;
    }
    if (exact_len == 0) return out;
  }
}

namespace {

// Tuples whose component lengths sum to exactly `budget`.
void enumerate_tuples_rec(const AlphabetRef& alphabet, std::size_t arity, std::size_t budget,
                          std::vector<Word>& acc, std::vector<std::vector<Word>>& out) {
  if (acc.size() == arity) {
    if (budget == 0) out.push_back(acc);
    return;
  }
  bool last_slot = acc.size() + 1 == arity;
  for (std::size_t len = last_slot ? budget : 0; len <= budget; ++len) {
    for (auto& w : enumerate_words(alphabet, len)) {
      acc.push_back(w);
      enumerate_tuples_rec(alphabet, arity, budget - len, acc, out);
      acc.pop_back();
    }
  }
}

}  // namespace

std::vector<std::vector<Word>> enumerate_tuples(const AlphabetRef& alphabet, std::size_t arity,
                                                std::size_t max_total_len) {
  std::vector<std::vector<Word>> out;
  // Total length ascending so counterexamples are minimal.
  for (std::size_t total = 0; total <= max_total_len; ++total) {
    std::vector<Word> acc;
    enumerate_tuples_rec(alphabet, arity, total, acc, out);
  }
  return out;
}

EquivalenceReport behaviorally_equivalent(const BlackBoxFunction& f, const BlackBoxFunction& g,
                                          const AlphabetRef& alphabet, std::size_t max_len,
                                          Fuel fuel) {
  if (f.arity_in != g.arity_in || f.arity_out != g.arity_out)
    throw_shape("behavioral comparison requires identical arities");
  EquivalenceReport report;
  for (auto& inputs : enumerate_tuples(alphabet, f.arity_in, max_len)) {
    RunOutcome a = f.evaluate(inputs, fuel);
    RunOutcome b = g.evaluate(inputs, fuel);
    ++report.inputs_checked;
    if (a.fuel_exhausted() || b.fuel_exhausted()) {
      report.inconclusive.push_back(inputs);
      continue;
    }
    if (!a.same_behavior(b)) {
      report.verdict = EquivalenceReport::Verdict::Counterexample;
      report.counterexample = inputs;
      return report;
    }
  }
  return report;
}

}  // namespace mocbench::core
