#pragma once

#include <string>

#include "ttl/params.hpp"

namespace ttl {

/// Exact rational, always stored reduced with a positive denominator.
class Rational {
 public:
  Rational(Int num = 0, Int den = 1);

  Int num() const noexcept { return num_; }
  Int den() const noexcept { return den_; }
  bool is_integer() const noexcept { return den_ == 1; }

  /// Throws Error(Internal) when the value is not an integer.
  Int as_integer() const;

  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  Int num_;
  Int den_;
};

/// Pairwise linking number of two components of T(p, q) in the form
/// (p/d)(q - q/d), d = gcd(p, q). Throws Error(NotALink) when d = 1.
///
/// Only authoritative for d = 2. For d >= 3 it disagrees with the
/// parallel-curve value p q / d^2 that the braid oracle measures; see
/// linking_report.
Rational pairwise_linking_number(Int p, Int q);

/// p q / d^2: linking number of two parallel (p/d, q/d) curves on the torus.
Rational parallel_linking_number(Int p, Int q);

struct LinkingReport {
  Int gcd = 0;
  Rational closed_form;     // (p/d)(q - q/d)
  Rational parallel_curve;  // p q / d^2
  bool discrepant = false;  // the two readings differ (d >= 3)
};

LinkingReport linking_report(Int p, Int q);

/// Linking numbers (r1, r2) of the twisting circle with the two components
/// of T(p, q) when gcd(p, q) = 2 and r is odd, ordered r1 >= r2.
struct TwistRegionSplit {
  Int r1 = 0;
  Int r2 = 0;

  friend bool operator==(const TwistRegionSplit&, const TwistRegionSplit&) = default;
};

/// Throws Error(Unsupported) unless gcd(p, q) = 2 and r is odd, and
/// Error(OutOfRange) unless 1 < r <= p + q.
TwistRegionSplit twist_region_split(Int p, Int q, Int r);

/// Torus knot T(p/2, q/2 + s p/2) carried by the component that the twisting
/// circle meets p/2 times when r = p +- 1.
struct AdjacentCompanion {
  TorusLinkParams knot;
  bool trivial = false;  // unknot: second coordinate in {-1, 0, 1} or p/2 = 1

  friend bool operator==(const AdjacentCompanion&, const AdjacentCompanion&) = default;
};

AdjacentCompanion companion_adjacent(Int p, Int q, Int s);

/// Companion data when one of (r +- 1)/2 equals k q/2: the surgered torus has
/// core T(k, k s + 1) and the enclosed component becomes
/// T(q/2, p/2 + k^2 (q/2) s).
struct KqCompanionData {
  Int k = 0;
  TorusLinkParams torus_core;
  TorusLinkParams cabled_component;

  friend bool operator==(const KqCompanionData&, const KqCompanionData&) = default;
};

/// Throws Error(Unsupported) if gcd(p, q) != 2 or r is even, and
/// Error(NotThisCase) if q = 2 or neither half of r is a positive multiple
/// of q/2.
KqCompanionData companion_kq(Int p, Int q, Int r, Int s);

}  // namespace ttl
