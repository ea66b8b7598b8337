#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ttl/formulas.hpp"
#include "ttl/params.hpp"

namespace ttl {

namespace obstruction {

/// gcd(p, q) = d >= 3: one of the d torus annuli misses the twisting disk.
struct GcdExceedsTwo {
  Int d = 0;
  friend bool operator==(const GcdExceedsTwo&, const GcdExceedsTwo&) = default;
};

/// gcd(p, q) = 2 and r even.
struct EvenTwistRegion {
  friend bool operator==(const EvenTwistRegion&, const EvenTwistRegion&) = default;
};

enum class Side { PMinusOne, PPlusOne };

/// r = p - 1 or r = p + 1.
struct AdjacentCount {
  Side side = Side::PMinusOne;
  AdjacentCompanion companion;
  friend bool operator==(const AdjacentCount&, const AdjacentCount&) = default;
};

/// q > 2, r odd and r = k q +- 1.
struct KqForm {
  KqCompanionData data;
  friend bool operator==(const KqForm&, const KqForm&) = default;
};

}  // namespace obstruction

using Obstruction = std::variant<obstruction::GcdExceedsTwo, obstruction::EvenTwistRegion,
                                 obstruction::AdjacentCount, obstruction::KqForm>;

std::string_view obstruction_name(const Obstruction& o) noexcept;
std::string_view to_string(obstruction::Side side) noexcept;
std::string describe(const Obstruction& o);

enum class UndeterminedReason {
  SmallTwist,  // the hyperbolic conditions hold but 1 <= |s| <= 3
  KnotCase,    // gcd(p, q) = 1
};

std::string_view to_string(UndeterminedReason reason) noexcept;

namespace verdict {

struct TorusLink {
  TorusLinkParams link;
  friend bool operator==(const TorusLink&, const TorusLink&) = default;
};

struct Hyperbolic {
  friend bool operator==(const Hyperbolic&, const Hyperbolic&) = default;
};

/// `primary` follows the case order GcdExceedsTwo, EvenTwistRegion,
/// AdjacentCount, KqForm. `secondary` holds any later case that also applies;
/// only KqForm can accompany AdjacentCount.
struct NotHyperbolic {
  Obstruction primary;
  std::vector<Obstruction> secondary;
  friend bool operator==(const NotHyperbolic&, const NotHyperbolic&) = default;
};

struct Undetermined {
  UndeterminedReason reason = UndeterminedReason::SmallTwist;
  friend bool operator==(const Undetermined&, const Undetermined&) = default;
};

}  // namespace verdict

using GeometricClassification = std::variant<verdict::TorusLink, verdict::Hyperbolic,
                                             verdict::NotHyperbolic, verdict::Undetermined>;

std::string_view verdict_name(const GeometricClassification& c) noexcept;

/// One-line human-readable verdict, e.g. "TorusLink T(6,32)" or
/// "NotHyperbolic KqForm(k=2, core=T(2,11), cable=T(2,45))".
std::string describe(const GeometricClassification& c);

/// Result of classify together with the normalization that preceded it.
struct Classification {
  NormalForm normal_form;
  GeometricClassification verdict;
};

/// Smallest k >= 1 with r = k q +- 1, or 0 if there is none.
Int kq_multiplier(Int q, Int r) noexcept;

Classification classify_detailed(const TwistedTorusParams& params);

/// Geometric type of T(p, q; r, s) for |s| >= 4, with obstructions for every
/// s != 0. Evaluation order after normalization (p >= q):
///   reductions to a torus link, gcd = 1, gcd > 2, r even, r = p +- 1,
///   r = k q +- 1 (q > 2), then Hyperbolic or SmallTwist by |s|.
GeometricClassification classify(const TwistedTorusParams& params);

/// Classifies T((r, m), (p, q)) as T(p, q; r, m / r). Throws
/// Error(UnsupportedShape) unless there are exactly two pairs and r | m.
GeometricClassification classify_t_link(const TLinkParams& t);

}  // namespace ttl
