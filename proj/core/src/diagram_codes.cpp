#include "ttl/diagram_codes.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "closure_trace.hpp"
#include "ttl/error.hpp"

namespace ttl {

DiagramFormat parse_format(std::string_view name) {
  if (name == "braid-word") return DiagramFormat::BraidWord;
  if (name == "gauss") return DiagramFormat::Gauss;
  if (name == "pd") return DiagramFormat::Pd;
  throw Error(ErrorKind::Parse, "unknown diagram format '" + std::string(name) + "'");
}

std::string_view to_string(DiagramFormat format) noexcept {
  switch (format) {
    case DiagramFormat::BraidWord: return "braid-word";
    case DiagramFormat::Gauss: return "gauss";
    case DiagramFormat::Pd: return "pd";
  }
  return "unknown";
}

namespace {

std::string braid_word_text(const BraidWord& word) {
  std::ostringstream out;
  out << word.strands() << " |";
  for (const int letter : word.letters()) out << ' ' << letter;
  out << '\n';
  return out.str();
}

// A positive crossing has the strand entering from the right on top.
bool left_is_over(int letter) { return letter < 0; }

std::string gauss_text(const BraidWord& word) {
  const detail::ClosureTrace trace = detail::trace_closure(word);
  const auto letters = word.letters();
  std::ostringstream out;
  for (const auto& visits : trace.component_visits) {
    bool first = true;
    for (const auto& visit : visits) {
      const int letter = letters[visit.crossing];
      const bool over = visit.left == left_is_over(letter);
      if (!first) out << ' ';
      out << (over ? 'O' : 'U') << (letter > 0 ? '+' : '-') << visit.crossing + 1;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

struct CrossingArcs {
  // [0] = strand entering from the left, [1] = from the right.
  int in[2] = {0, 0};
  int out[2] = {0, 0};
};

std::string pd_text(const BraidWord& word) {
  const detail::ClosureTrace trace = detail::trace_closure(word);
  const auto letters = word.letters();
  std::vector<CrossingArcs> arcs(letters.size());

  int next_label = 1;
  for (const auto& visits : trace.component_visits) {
    const int n = static_cast<int>(visits.size());
    for (int v = 0; v < n; ++v) {
      const int side = visits[v].left ? 0 : 1;
      arcs[visits[v].crossing].in[side] = next_label + v;
      arcs[visits[v].crossing].out[side] = next_label + (v + 1) % n;
    }
    next_label += n;
  }

  std::ostringstream out;
  for (std::size_t t = 0; t < letters.size(); ++t) {
    const CrossingArcs& x = arcs[t];
    const int under = left_is_over(letters[t]) ? 1 : 0;
    const int over = 1 - under;
    out << "X[" << x.in[under] << ',';
    if (letters[t] > 0) {
      out << x.out[over] << ',' << x.out[under] << ',' << x.in[over];
    } else {
      out << x.in[over] << ',' << x.out[under] << ',' << x.out[over];
    }
    out << "]\n";
  }
  return out.str();
}

Int parse_int(std::string_view token) {
  Int value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  if (!token.empty() && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw Error(ErrorKind::Parse, "not an integer: '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string export_code(const BraidWord& word, DiagramFormat format) {
  switch (format) {
    case DiagramFormat::BraidWord: return braid_word_text(word);
    case DiagramFormat::Gauss: return gauss_text(word);
    case DiagramFormat::Pd: return pd_text(word);
  }
  throw Error(ErrorKind::Internal, "unhandled diagram format");
}

BraidWord parse_braid_word(std::string_view text) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    throw Error(ErrorKind::Parse, "braid word must look like 'N | i1 i2 ...'");
  }
  std::istringstream head{std::string(text.substr(0, bar))};
  std::string strands_token;
  std::string extra;
  if (!(head >> strands_token) || (head >> extra)) {
    throw Error(ErrorKind::Parse, "expected a single strand count before '|'");
  }
  const Int strands = parse_int(strands_token);
  if (strands < 2 || strands > (Int{1} << 20)) {
    throw Error(ErrorKind::OutOfRange, "strand count out of range");
  }

  std::istringstream body{std::string(text.substr(bar + 1))};
  std::vector<int> letters;
  std::string token;
  while (body >> token) {
    const Int letter = parse_int(token);
    if (letter == 0 || letter > strands - 1 || letter < -(strands - 1)) {
      throw Error(ErrorKind::OutOfRange, "generator index out of range: " + token);
    }
    letters.push_back(static_cast<int>(letter));
  }
  return BraidWord(static_cast<int>(strands), std::move(letters));
}

}  // namespace ttl
