#include "ttl/braid.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

#include "closure_trace.hpp"
#include "ttl/error.hpp"

namespace ttl {

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 2) {
    throw Error(ErrorKind::OutOfRange, "a braid needs at least 2 strands");
  }
  for (const int letter : letters_) {
    if (letter == 0 || std::abs(letter) > strands - 1) {
      std::ostringstream msg;
      msg << "generator index " << letter << " out of range for " << strands << " strands";
      throw Error(ErrorKind::OutOfRange, msg.str());
    }
  }
}

namespace {

// Guards against census inputs that would allocate absurd words.
constexpr Int kMaxLetters = Int{1} << 26;

void append_block(std::vector<int>& letters, Int width, Int power, int sign) {
  for (Int rep = 0; rep < power; ++rep) {
    for (Int i = 1; i < width; ++i) letters.push_back(sign * static_cast<int>(i));
  }
}

Int letter_budget(Int width, Int power) {
  return detail::checked_mul(width - 1, power);
}

}  // namespace

BraidWord torus_braid(Int p, Int q) {
  if (p < 2 || q < 1 || p > (Int{1} << 20)) {
    throw Error(ErrorKind::OutOfRange, "torus_braid needs p >= 2 and q >= 1");
  }
  if (letter_budget(p, q) > kMaxLetters) {
    throw Error(ErrorKind::OutOfRange, "torus braid word too long");
  }
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>((p - 1) * q));
  append_block(letters, p, q, +1);
  return BraidWord(static_cast<int>(p), std::move(letters));
}

BraidWord twisted_torus_braid(const TwistedTorusParams& params) {
  const Int p = params.p();
  const Int r = params.r();
  const Int s = params.s();
  if (r > p) {
    throw Error(ErrorKind::Unsupported,
                "no braid form for twisting r > p strands; only 2 <= r <= p is supported");
  }
  const Int twist_power = detail::checked_mul(r, std::llabs(s));
  const Int total = detail::checked_add(letter_budget(r, twist_power), letter_budget(p, params.q()));
  if (total > kMaxLetters || p > (Int{1} << 20)) {
    throw Error(ErrorKind::OutOfRange, "twisted torus braid word too long");
  }
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(total));
  append_block(letters, r, twist_power, s < 0 ? -1 : +1);
  append_block(letters, p, params.q(), +1);
  return BraidWord(static_cast<int>(p), std::move(letters));
}

namespace detail {

ClosureTrace trace_closure(const BraidWord& word) {
  const int n = word.strands();
  const auto letters = word.letters();
  ClosureTrace trace;
  trace.strands_in.reserve(letters.size());

  std::vector<int> at(n);  // at[pos] = strand currently at pos
  std::iota(at.begin(), at.end(), 0);
  std::vector<std::vector<Visit>> strand_visits(n);
  for (std::size_t t = 0; t < letters.size(); ++t) {
    const int i = std::abs(letters[t]) - 1;
    const int left = at[i];
    const int right = at[i + 1];
    trace.strands_in.push_back({left, right});
    strand_visits[left].push_back({static_cast<int>(t), true});
    strand_visits[right].push_back({static_cast<int>(t), false});
    std::swap(at[i], at[i + 1]);
  }
  trace.permutation.assign(n, 0);
  for (int pos = 0; pos < n; ++pos) trace.permutation[at[pos]] = pos;

  // Strand j leaves the bottom at permutation[j] and re-enters at the top as
  // strand permutation[j]; components are the cycles.
  trace.component_of.assign(n, -1);
  for (int start = 0; start < n; ++start) {
    if (trace.component_of[start] != -1) continue;
    const int id = trace.component_count++;
    std::vector<Visit>& visits = trace.component_visits.emplace_back();
    int strand = start;
    do {
      trace.component_of[strand] = id;
      visits.insert(visits.end(), strand_visits[strand].begin(), strand_visits[strand].end());
      strand = trace.permutation[strand];
    } while (strand != start);
  }
  return trace;
}

}  // namespace detail

LinkingSummary closure_analysis(const BraidWord& word) {
  const detail::ClosureTrace trace = detail::trace_closure(word);
  LinkingSummary out;
  out.component_of = trace.component_of;
  out.component_count = trace.component_count;
  const auto c = static_cast<std::size_t>(trace.component_count);
  std::vector<std::vector<Int>> signed_count(c, std::vector<Int>(c, 0));

  const auto letters = word.letters();
  for (std::size_t t = 0; t < letters.size(); ++t) {
    const int sign = letters[t] > 0 ? 1 : -1;
    out.writhe += sign;
    const int a = trace.component_of[trace.strands_in[t][0]];
    const int b = trace.component_of[trace.strands_in[t][1]];
    if (a != b) {
      signed_count[a][b] += sign;
      signed_count[b][a] += sign;
    }
  }
  out.linking_matrix.assign(c, std::vector<Int>(c, 0));
  for (std::size_t a = 0; a < c; ++a) {
    for (std::size_t b = 0; b < c; ++b) {
      if (signed_count[a][b] % 2 != 0) {
        throw Error(ErrorKind::Internal, "odd inter-component crossing count in braid closure");
      }
      out.linking_matrix[a][b] = signed_count[a][b] / 2;
    }
  }
  return out;
}

std::vector<Int> strand_counts(const LinkingSummary& summary, Int r) {
  if (r < 0 || r > static_cast<Int>(summary.component_of.size())) {
    throw Error(ErrorKind::OutOfRange, "strand_counts: r exceeds the strand count");
  }
  std::vector<Int> counts(summary.component_count, 0);
  for (Int j = 0; j < r; ++j) ++counts[summary.component_of[j]];
  return counts;
}

TwistRegionSplit twist_region_count(Int p, Int q, Int r) {
  if (p < 2 || q < 2 || gcd(p, q) != 2) {
    throw Error(ErrorKind::Unsupported, "twist_region_count requires gcd(p, q) = 2");
  }
  if (r > p || r < 2) {
    throw Error(ErrorKind::Unsupported, "twist_region_count requires 2 <= r <= p");
  }
  const LinkingSummary summary = closure_analysis(torus_braid(p, q));
  auto counts = strand_counts(summary, r);
  std::sort(counts.begin(), counts.end(), std::greater<>());
  return {counts.at(0), counts.at(1)};
}

std::optional<OracleChecks> verify_against_oracle(const TwistedTorusParams& params) {
  const Int p = params.p();
  const Int q = params.q();
  const Int r = params.r();
  const Int s = params.s();
  const Int d = gcd(p, q);
  if (r > p || d < 2) return std::nullopt;

  const LinkingSummary summary = closure_analysis(twisted_torus_braid(params));
  OracleChecks checks;
  checks.components = summary.component_count == component_count(p, q);

  // Closed form: the components of T(p, q) are the residue classes of the
  // strand positions mod d, so component c owns ceil((r - c) / d) of the
  // twisted strands.
  std::vector<Int> expected_counts(d);
  for (Int c = 0; c < d; ++c) expected_counts[c] = (r - c + d - 1) / d;

  const Int base = d == 2 ? pairwise_linking_number(p, q).as_integer()
                          : parallel_linking_number(p, q).as_integer();
  checks.linking = checks.components;
  for (Int a = 0; checks.linking && a < d; ++a) {
    for (Int b = 0; b < d; ++b) {
      const Int expected = a == b ? 0 : base + s * expected_counts[a] * expected_counts[b];
      if (summary.linking(static_cast<int>(a), static_cast<int>(b)) != expected) {
        checks.linking = false;
        break;
      }
    }
  }

  if (d == 2) {
    const TwistRegionSplit counted = twist_region_count(p, q, r);
    const TwistRegionSplit expected =
        r % 2 == 1 ? twist_region_split(p, q, r) : TwistRegionSplit{r / 2, r / 2};
    checks.split = counted == expected && strand_counts(summary, r) == expected_counts;
  } else {
    checks.split = checks.components && strand_counts(summary, r) == expected_counts;
  }
  return checks;
}

}  // namespace ttl
