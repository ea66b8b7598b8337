#include "ttl/params.hpp"

#include <numeric>
#include <sstream>

#include "ttl/error.hpp"

namespace ttl {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::NotALink: return "NotALink";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NotThisCase: return "NotThisCase";
    case ErrorKind::UnsupportedShape: return "UnsupportedShape";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace detail {

Int checked_add(Int a, Int b) {
  Int out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::OutOfRange, "integer overflow in parameter arithmetic");
  }
  return out;
}

Int checked_mul(Int a, Int b) {
  Int out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::OutOfRange, "integer overflow in parameter arithmetic");
  }
  return out;
}

}  // namespace detail

Int gcd(Int a, Int b) noexcept { return std::gcd(a, b); }

Int component_count(Int p, Int q) {
  if (p < 1 || q < 1) {
    throw Error(ErrorKind::OutOfRange, "component_count requires p, q >= 1");
  }
  return gcd(p, q);
}

TorusLinkParams::TorusLinkParams(Int a, Int b) : a(a), b(b) {
  if (a == 0 && b == 0) {
    throw Error(ErrorKind::OutOfRange, "T(0, 0) is not a torus link");
  }
}

Int TorusLinkParams::component_count() const noexcept { return gcd(a, b); }

std::string TorusLinkParams::to_string() const {
  std::ostringstream out;
  out << "T(" << a << "," << b << ")";
  return out.str();
}

TwistedTorusParams::TwistedTorusParams(Int p, Int q, Int r, Int s)
    : p_(p), q_(q), r_(r), s_(s) {
  if (p < 2 || q < 2) {
    std::ostringstream msg;
    msg << "p and q must be at least 2 (got p=" << p << ", q=" << q << ")";
    throw Error(ErrorKind::OutOfRange, msg.str());
  }
  if (r < 2 || r > p + q) {
    std::ostringstream msg;
    msg << "r must satisfy 2 <= r <= p+q = " << p + q << " (got r=" << r << ")";
    throw Error(ErrorKind::OutOfRange, msg.str());
  }
}

std::string TwistedTorusParams::to_string() const {
  std::ostringstream out;
  out << "T(" << p_ << "," << q_ << ";" << r_ << "," << s_ << ")";
  return out.str();
}

TLinkParams::TLinkParams(std::vector<TLinkPair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) {
    throw Error(ErrorKind::OutOfRange, "a T-link needs at least one (r, s) pair");
  }
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto& [r, s] = pairs_[i];
    if (r < 2 || s < 1) {
      throw Error(ErrorKind::OutOfRange, "T-link pairs need r >= 2 and s >= 1");
    }
    if (i > 0 && r < pairs_[i - 1].r) {
      throw Error(ErrorKind::OutOfRange, "T-link r values must be nondecreasing");
    }
  }
}

std::string TLinkParams::to_string() const {
  std::ostringstream out;
  out << "T(";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i > 0) out << ",";
    out << "(" << pairs_[i].r << "," << pairs_[i].s << ")";
  }
  out << ")";
  return out.str();
}

std::string_view to_string(Rewrite rewrite) noexcept {
  switch (rewrite) {
    case Rewrite::Swapped: return "swapped";
    case Rewrite::ZeroTwist: return "zero-twist";
    case Rewrite::FullTwist: return "full-twist";
    case Rewrite::FullTwistMinor: return "full-twist-minor";
  }
  return "unknown";
}

NormalForm normalize(const TwistedTorusParams& params) {
  NormalForm out{params, {}};
  Int p = params.p();
  Int q = params.q();
  if (p < q) {
    std::swap(p, q);
    out.rewrites.push_back(Rewrite::Swapped);
  }
  const Int r = params.r();
  const Int s = params.s();

  // Twisting all strands of either orientation is a power of the full twist.
  if (s == 0) {
    out.value = TorusLinkParams(p, q);
    out.rewrites.push_back(Rewrite::ZeroTwist);
  } else if (r == p) {
    out.value = TorusLinkParams(p, detail::checked_add(q, detail::checked_mul(r, s)));
    out.rewrites.push_back(Rewrite::FullTwist);
  } else if (r == q) {
    out.value = TorusLinkParams(q, detail::checked_add(p, detail::checked_mul(r, s)));
    out.rewrites.push_back(Rewrite::FullTwistMinor);
  } else {
    out.value = TwistedTorusParams(p, q, r, s);
  }
  return out;
}

TwistedTorusParams canonical_orientation(const TwistedTorusParams& params) {
  if (params.p() >= params.q()) return params;
  return TwistedTorusParams(params.q(), params.p(), params.r(), params.s());
}

TLinkParams to_t_link(const TwistedTorusParams& params) {
  if (params.s() <= 0 || params.r() >= params.p()) {
    throw Error(ErrorKind::NotApplicable,
                "the T-link form T((r, rs), (p, q)) needs s >= 1 and r < p");
  }
  return TLinkParams({{params.r(), detail::checked_mul(params.r(), params.s())},
                      {params.p(), params.q()}});
}

}  // namespace ttl
