#include "ttl/formulas.hpp"

#include <sstream>

#include "ttl/error.hpp"

namespace ttl {

using detail::checked_add;
using detail::checked_mul;

Rational::Rational(Int num, Int den) {
  if (den == 0) {
    throw Error(ErrorKind::Internal, "rational with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Int Rational::as_integer() const {
  if (!is_integer()) {
    throw Error(ErrorKind::Internal, "expected an integral value, got " + to_string());
  }
  return num_;
}

std::string Rational::to_string() const {
  std::ostringstream out;
  out << num_;
  if (den_ != 1) out << "/" << den_;
  return out.str();
}

namespace {

Int require_link(Int p, Int q) {
  if (p < 2 || q < 2) {
    throw Error(ErrorKind::OutOfRange, "linking numbers need p, q >= 2");
  }
  const Int d = gcd(p, q);
  if (d == 1) {
    throw Error(ErrorKind::NotALink, "T(p, q) is a knot when gcd(p, q) = 1");
  }
  return d;
}

void require_gcd_two(Int p, Int q, const char* what) {
  if (p < 2 || q < 2 || gcd(p, q) != 2) {
    throw Error(ErrorKind::Unsupported, std::string(what) + " requires gcd(p, q) = 2");
  }
}

}  // namespace

Rational pairwise_linking_number(Int p, Int q) {
  const Int d = require_link(p, q);
  // Stays exact: d divides both p and q.
  const Rational value(checked_mul(p, checked_mul(q, d - 1)), checked_mul(d, d));
  value.as_integer();
  return value;
}

Rational parallel_linking_number(Int p, Int q) {
  const Int d = require_link(p, q);
  return Rational(checked_mul(p, q), checked_mul(d, d));
}

LinkingReport linking_report(Int p, Int q) {
  LinkingReport report;
  report.gcd = require_link(p, q);
  report.closed_form = pairwise_linking_number(p, q);
  report.parallel_curve = parallel_linking_number(p, q);
  report.discrepant = !(report.closed_form == report.parallel_curve);
  return report;
}

TwistRegionSplit twist_region_split(Int p, Int q, Int r) {
  require_gcd_two(p, q, "twist_region_split");
  if (r % 2 == 0) {
    throw Error(ErrorKind::Unsupported, "twist_region_split requires r odd");
  }
  if (r <= 1 || r > p + q) {
    throw Error(ErrorKind::OutOfRange, "twist_region_split requires 1 < r <= p+q");
  }
  return {(r + 1) / 2, r / 2};
}

AdjacentCompanion companion_adjacent(Int p, Int q, Int s) {
  require_gcd_two(p, q, "companion_adjacent");
  const Int a = p / 2;
  const Int b = checked_add(q / 2, checked_mul(s, p / 2));
  AdjacentCompanion out{TorusLinkParams(a, b), false};
  out.trivial = (b >= -1 && b <= 1) || a == 1;
  return out;
}

KqCompanionData companion_kq(Int p, Int q, Int r, Int s) {
  require_gcd_two(p, q, "companion_kq");
  if (r % 2 == 0) {
    throw Error(ErrorKind::Unsupported, "companion_kq requires r odd");
  }
  if (q <= 2) {
    throw Error(ErrorKind::NotThisCase, "companion_kq requires q > 2");
  }
  const Int half_q = q / 2;
  Int k = 0;
  int hits = 0;
  for (const Int half_r : {(r - 1) / 2, (r + 1) / 2}) {
    if (half_r > 0 && half_r % half_q == 0) {
      k = half_r / half_q;
      ++hits;
    }
  }
  if (hits == 0) {
    throw Error(ErrorKind::NotThisCase, "r is not of the form k q +- 1");
  }
  if (hits > 1) {
    // Consecutive integers cannot both be multiples of q/2 >= 2.
    throw Error(ErrorKind::Internal, "both halves of r are multiples of q/2");
  }
  KqCompanionData out;
  out.k = k;
  out.torus_core = TorusLinkParams(k, checked_add(checked_mul(k, s), 1));
  out.cabled_component = TorusLinkParams(
      half_q, checked_add(p / 2, checked_mul(checked_mul(checked_mul(k, k), half_q), s)));
  return out;
}

}  // namespace ttl
