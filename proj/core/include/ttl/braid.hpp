#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ttl/formulas.hpp"
#include "ttl/params.hpp"

namespace ttl {

/// Braid word on `strands` strands. Letter i > 0 is the positive Artin
/// generator sigma_i, i < 0 its inverse; 1 <= |i| <= strands - 1. Positive
/// letters are positive crossings of the closure.
class BraidWord {
 public:
  /// Throws Error(OutOfRange) on strands < 2 or a letter out of bounds.
  BraidWord(int strands, std::vector<int> letters = {});

  int strands() const noexcept { return strands_; }
  std::span<const int> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> letters_;
};

/// (sigma_1 ... sigma_{p-1})^q on p strands.
BraidWord torus_braid(Int p, Int q);

/// (sigma_1 ... sigma_{r-1})^{r s} (sigma_1 ... sigma_{p-1})^q on p strands;
/// the twist block comes first and its letters carry the sign of s. Throws
/// Error(Unsupported) if r > p.
BraidWord twisted_torus_braid(const TwistedTorusParams& params);

/// Components and pairwise linking of a braid closure. Strands are indexed
/// 0..n-1 by their position at the top of the braid; component ids are
/// assigned in order of each component's smallest strand.
struct LinkingSummary {
  std::vector<int> component_of;
  int component_count = 0;
  std::vector<std::vector<Int>> linking_matrix;
  Int writhe = 0;

  Int linking(int a, int b) const { return linking_matrix.at(a).at(b); }
};

/// Throws Error(Internal) if an inter-component signed crossing count is odd.
LinkingSummary closure_analysis(const BraidWord& word);

/// For each component, how many of the strands at positions 1..r it owns.
std::vector<Int> strand_counts(const LinkingSummary& summary, Int r);

/// Counts strands 1..r of torus_braid(p, q) per component, descending.
/// Throws Error(Unsupported) unless gcd(p, q) = 2 and r <= p.
TwistRegionSplit twist_region_count(Int p, Int q, Int r);

/// Cross-checks of the closed forms against the braid oracle for one tuple.
/// Present only when r <= p and gcd(p, q) >= 2.
struct OracleChecks {
  bool components = false;  // closure component count = gcd(p, q)
  bool linking = false;     // linking entries = closed form + s n_a n_b
  bool split = false;       // strand counts per component match the closed form
};

std::optional<OracleChecks> verify_against_oracle(const TwistedTorusParams& params);

}  // namespace ttl
