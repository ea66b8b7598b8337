#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ttl {

using Int = std::int64_t;

Int gcd(Int a, Int b) noexcept;

/// Number of components of the torus link T(p, q), i.e. gcd(p, q).
Int component_count(Int p, Int q);

/// The torus link T(a, b). Either coordinate may be negative or zero, but not
/// both zero.
struct TorusLinkParams {
  Int a = 0;
  Int b = 0;

  TorusLinkParams() = default;
  TorusLinkParams(Int a, Int b);

  /// gcd(|a|, |b|); T(a, 0) is the |a|-component unlink.
  Int component_count() const noexcept;

  std::string to_string() const;

  friend bool operator==(const TorusLinkParams&, const TorusLinkParams&) = default;
};

/// Twisted torus link T(p, q; r, s): s full twists on r adjacent strands of
/// T(p, q). Construction enforces p, q >= 2 and 2 <= r <= p + q; s is free.
class TwistedTorusParams {
 public:
  /// Throws Error(OutOfRange) when a bound is violated.
  TwistedTorusParams(Int p, Int q, Int r, Int s);

  Int p() const noexcept { return p_; }
  Int q() const noexcept { return q_; }
  Int r() const noexcept { return r_; }
  Int s() const noexcept { return s_; }

  std::string to_string() const;

  friend bool operator==(const TwistedTorusParams&, const TwistedTorusParams&) = default;
  friend auto operator<=>(const TwistedTorusParams&, const TwistedTorusParams&) = default;

 private:
  Int p_;
  Int q_;
  Int r_;
  Int s_;
};

inline TwistedTorusParams new_params(Int p, Int q, Int r, Int s) {
  return TwistedTorusParams(p, q, r, s);
}

struct TLinkPair {
  Int r = 0;
  Int s = 0;

  friend bool operator==(const TLinkPair&, const TLinkPair&) = default;
};

/// T-link T((r1, s1), ..., (rn, sn)): closure of the product of torus-braid
/// blocks (sigma_1 ... sigma_{ri-1})^{si}.
class TLinkParams {
 public:
  /// Throws Error(OutOfRange) unless the pairs are nonempty, every ri >= 2,
  /// every si >= 1 and the ri are nondecreasing.
  explicit TLinkParams(std::vector<TLinkPair> pairs);

  const std::vector<TLinkPair>& pairs() const noexcept { return pairs_; }

  std::string to_string() const;

  friend bool operator==(const TLinkParams&, const TLinkParams&) = default;

 private:
  std::vector<TLinkPair> pairs_;
};

enum class Rewrite {
  Swapped,          // p < q, exchanged
  ZeroTwist,        // s = 0 leaves T(p, q)
  FullTwist,        // r = p: T(p, q + p s)
  FullTwistMinor,   // r = q < p: T(q, p + q s), the same reduction seen from T(q, p)
};

std::string_view to_string(Rewrite rewrite) noexcept;

/// Result of normalize: either the tuple in canonical orientation (p >= q) or
/// the torus link it reduces to, plus every rewrite that fired, in order.
struct NormalForm {
  std::variant<TwistedTorusParams, TorusLinkParams> value;
  std::vector<Rewrite> rewrites;

  bool is_torus_link() const noexcept {
    return std::holds_alternative<TorusLinkParams>(value);
  }
  const TwistedTorusParams* twisted() const noexcept {
    return std::get_if<TwistedTorusParams>(&value);
  }
  const TorusLinkParams* torus_link() const noexcept {
    return std::get_if<TorusLinkParams>(&value);
  }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normalize(const TwistedTorusParams& params);

/// The same tuple with p and q exchanged if needed so that p >= q; no other
/// rewrite is applied.
TwistedTorusParams canonical_orientation(const TwistedTorusParams& params);

/// T((r, r s), (p, q)) for s >= 1 and r < p, using the fields verbatim.
/// Throws Error(NotApplicable) otherwise.
TLinkParams to_t_link(const TwistedTorusParams& params);

namespace detail {

// Overflow-checked arithmetic; throws Error(OutOfRange).
Int checked_add(Int a, Int b);
Int checked_mul(Int a, Int b);

}  // namespace detail

}  // namespace ttl
