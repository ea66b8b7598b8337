#include "ttl/classifier.hpp"

#include <cstdlib>
#include <sstream>

#include "ttl/error.hpp"

namespace ttl {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

std::string_view obstruction_name(const Obstruction& o) noexcept {
  return std::visit(overloaded{
                        [](const obstruction::GcdExceedsTwo&) { return std::string_view("GcdExceedsTwo"); },
                        [](const obstruction::EvenTwistRegion&) { return std::string_view("EvenTwistRegion"); },
                        [](const obstruction::AdjacentCount&) { return std::string_view("AdjacentCount"); },
                        [](const obstruction::KqForm&) { return std::string_view("KqForm"); },
                    },
                    o);
}

std::string_view to_string(obstruction::Side side) noexcept {
  return side == obstruction::Side::PMinusOne ? "p-1" : "p+1";
}

std::string describe(const Obstruction& o) {
  std::ostringstream out;
  out << obstruction_name(o);
  std::visit(overloaded{
                 [&](const obstruction::GcdExceedsTwo& g) { out << "(d=" << g.d << ")"; },
                 [&](const obstruction::EvenTwistRegion&) {},
                 [&](const obstruction::AdjacentCount& a) {
                   out << "(side=" << to_string(a.side)
                       << ", companion=" << a.companion.knot.to_string()
                       << (a.companion.trivial ? " trivial" : "") << ")";
                 },
                 [&](const obstruction::KqForm& k) {
                   out << "(k=" << k.data.k << ", core=" << k.data.torus_core.to_string()
                       << ", cable=" << k.data.cabled_component.to_string() << ")";
                 },
             },
             o);
  return out.str();
}

std::string_view to_string(UndeterminedReason reason) noexcept {
  return reason == UndeterminedReason::SmallTwist ? "SmallTwist" : "KnotCase";
}

std::string_view verdict_name(const GeometricClassification& c) noexcept {
  return std::visit(overloaded{
                        [](const verdict::TorusLink&) { return std::string_view("TorusLink"); },
                        [](const verdict::Hyperbolic&) { return std::string_view("Hyperbolic"); },
                        [](const verdict::NotHyperbolic&) { return std::string_view("NotHyperbolic"); },
                        [](const verdict::Undetermined&) { return std::string_view("Undetermined"); },
                    },
                    c);
}

std::string describe(const GeometricClassification& c) {
  std::ostringstream out;
  out << verdict_name(c);
  std::visit(overloaded{
                 [&](const verdict::TorusLink& t) { out << " " << t.link.to_string(); },
                 [&](const verdict::Hyperbolic&) {},
                 [&](const verdict::NotHyperbolic& n) {
                   out << " " << describe(n.primary);
                   for (const auto& extra : n.secondary) out << " +" << describe(extra);
                 },
                 [&](const verdict::Undetermined& u) { out << " " << to_string(u.reason); },
             },
             c);
  return out.str();
}

Int kq_multiplier(Int q, Int r) noexcept {
  if (q < 1) return 0;
  // r = k q +- 1 forces k <= (r + 1) / q, and r <= p + q keeps this finite.
  for (Int k = 1; k * q - 1 <= r; ++k) {
    if (r == k * q - 1 || r == k * q + 1) return k;
  }
  return 0;
}

Classification classify_detailed(const TwistedTorusParams& params) {
  Classification out{normalize(params), verdict::Hyperbolic{}};
  if (const auto* link = out.normal_form.torus_link()) {
    out.verdict = verdict::TorusLink{*link};
    return out;
  }
  const TwistedTorusParams& n = *out.normal_form.twisted();
  const Int p = n.p();
  const Int q = n.q();
  const Int r = n.r();
  const Int s = n.s();
  const Int d = gcd(p, q);

  if (d == 1) {
    out.verdict = verdict::Undetermined{UndeterminedReason::KnotCase};
    return out;
  }
  if (d > 2) {
    out.verdict = verdict::NotHyperbolic{obstruction::GcdExceedsTwo{d}, {}};
    return out;
  }
  if (r % 2 == 0) {
    out.verdict = verdict::NotHyperbolic{obstruction::EvenTwistRegion{}, {}};
    return out;
  }

  std::vector<Obstruction> found;
  if (r == p - 1 || r == p + 1) {
    found.emplace_back(obstruction::AdjacentCount{
        r == p - 1 ? obstruction::Side::PMinusOne : obstruction::Side::PPlusOne,
        companion_adjacent(p, q, s)});
  }
  if (q > 2 && kq_multiplier(q, r) > 0) {
    found.emplace_back(obstruction::KqForm{companion_kq(p, q, r, s)});
  }
  if (!found.empty()) {
    verdict::NotHyperbolic nh{found.front(), {}};
    nh.secondary.assign(found.begin() + 1, found.end());
    out.verdict = std::move(nh);
    return out;
  }

  if (std::llabs(s) >= 4) {
    out.verdict = verdict::Hyperbolic{};
  } else {
    out.verdict = verdict::Undetermined{UndeterminedReason::SmallTwist};
  }
  return out;
}

GeometricClassification classify(const TwistedTorusParams& params) {
  return classify_detailed(params).verdict;
}

GeometricClassification classify_t_link(const TLinkParams& t) {
  const auto& pairs = t.pairs();
  if (pairs.size() != 2) {
    throw Error(ErrorKind::UnsupportedShape, "only two-pair T-links T((r, m), (p, q)) are supported");
  }
  const auto [r, m] = pairs[0];
  const auto [p, q] = pairs[1];
  if (m % r != 0) {
    throw Error(ErrorKind::UnsupportedShape, "the first T-link pair (r, m) needs r | m");
  }
  return classify(TwistedTorusParams(p, q, r, m / r));
}

}  // namespace ttl
