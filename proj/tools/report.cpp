#include "report.hpp"

#include <sstream>

namespace ttl::cli {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string verdict_label(const GeometricClassification& c) {
  if (const auto* u = std::get_if<verdict::Undetermined>(&c)) {
    return "Undetermined:" + std::string(to_string(u->reason));
  }
  return std::string(verdict_name(c));
}

std::string bit(bool value) { return value ? "true" : "false"; }

}  // namespace

json to_json(const TorusLinkParams& link) { return json{{"a", link.a}, {"b", link.b}}; }

json to_json(const TwistedTorusParams& params) {
  return json{{"p", params.p()}, {"q", params.q()}, {"r", params.r()}, {"s", params.s()}};
}

json to_json(const Obstruction& obstruction) {
  json out{{"kind", std::string(obstruction_name(obstruction))}};
  std::visit(overloaded{
                 [&](const obstruction::GcdExceedsTwo& g) { out["d"] = g.d; },
                 [&](const obstruction::EvenTwistRegion&) {},
                 [&](const obstruction::AdjacentCount& a) {
                   out["side"] = std::string(to_string(a.side));
                   out["companion"] = to_json(a.companion.knot);
                   out["companion_trivial"] = a.companion.trivial;
                 },
                 [&](const obstruction::KqForm& k) {
                   out["k"] = k.data.k;
                   out["core"] = to_json(k.data.torus_core);
                   out["cable"] = to_json(k.data.cabled_component);
                 },
             },
             obstruction);
  return out;
}

json to_json(const Classification& classification, const TwistedTorusParams& input) {
  json out;
  out["input"] = to_json(input);
  const NormalForm& nf = classification.normal_form;
  out["normalized"] = nf.twisted() ? to_json(*nf.twisted()) : json(nullptr);
  json rewrites = json::array();
  for (const Rewrite rw : nf.rewrites) rewrites.push_back(std::string(to_string(rw)));
  out["rewrites"] = std::move(rewrites);
  out["verdict"] = std::string(verdict_name(classification.verdict));
  out["torus_link"] = nullptr;
  out["obstruction"] = nullptr;
  out["secondary_obstructions"] = json::array();
  out["reason"] = nullptr;
  std::visit(overloaded{
                 [&](const verdict::TorusLink& t) { out["torus_link"] = to_json(t.link); },
                 [&](const verdict::Hyperbolic&) {},
                 [&](const verdict::NotHyperbolic& n) {
                   out["obstruction"] = to_json(n.primary);
                   for (const auto& extra : n.secondary) {
                     out["secondary_obstructions"].push_back(to_json(extra));
                   }
                 },
                 [&](const verdict::Undetermined& u) {
                   out["reason"] = std::string(to_string(u.reason));
                 },
             },
             classification.verdict);
  return out;
}

std::vector<std::string> census_cells(const CensusRow& row) {
  std::vector<std::string> cells = {
      std::to_string(row.params.p()), std::to_string(row.params.q()),
      std::to_string(row.params.r()), std::to_string(row.params.s()),
      verdict_label(row.verdict),     "", "", "", "", "", "", ""};
  auto companion = [&](const TorusLinkParams& link) {
    cells[7] = std::to_string(link.a);
    cells[8] = std::to_string(link.b);
  };
  std::visit(overloaded{
                 [&](const verdict::TorusLink& t) { companion(t.link); },
                 [&](const verdict::Hyperbolic&) {},
                 [&](const verdict::NotHyperbolic& n) {
                   cells[5] = std::string(obstruction_name(n.primary));
                   if (const auto* a = std::get_if<obstruction::AdjacentCount>(&n.primary)) {
                     companion(a->companion.knot);
                   } else if (const auto* k = std::get_if<obstruction::KqForm>(&n.primary)) {
                     cells[6] = std::to_string(k->data.k);
                     companion(k->data.cabled_component);
                   }
                 },
                 [&](const verdict::Undetermined&) {},
             },
             row.verdict);
  if (row.checks) {
    cells[9] = bit(row.checks->components);
    cells[10] = bit(row.checks->linking);
    cells[11] = bit(row.checks->split);
  }
  return cells;
}

std::string census_csv_line(const CensusRow& row) {
  std::ostringstream out;
  const auto cells = census_cells(row);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out << ',';
    out << cells[i];
  }
  return out.str();
}

json census_json(const CensusRow& row) {
  static const char* const kNames[] = {"p", "q", "r", "s", "verdict", "obstruction",
                                       "k", "companion_a", "companion_b",
                                       "check_components", "check_linking", "check_split"};
  const auto cells = census_cells(row);
  json out = json::object();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string& cell = cells[i];
    if (cell.empty()) {
      out[kNames[i]] = nullptr;
    } else if (i >= 9) {
      out[kNames[i]] = cell == "true";
    } else if (i == 4 || i == 5) {
      out[kNames[i]] = cell;
    } else {
      out[kNames[i]] = std::stoll(cell);
    }
  }
  return out;
}

}  // namespace ttl::cli
