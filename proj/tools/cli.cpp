#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

namespace ttl::cli {

namespace {

struct TupleArgs {
  Int p = 0;
  Int q = 0;
  Int r = 0;
  Int s = 0;
};

void add_tuple(CLI::App& cmd, TupleArgs& args) {
  cmd.add_option("p", args.p, "meridional winding of the torus link")->required();
  cmd.add_option("q", args.q, "longitudinal winding of the torus link")->required();
  cmd.add_option("r", args.r, "number of adjacent strands twisted")->required();
  cmd.add_option("s", args.s, "number of full twists (may be negative)")->required();
}

std::string join_rewrites(const NormalForm& nf) {
  if (nf.rewrites.empty()) return "none";
  std::string out;
  for (const Rewrite rw : nf.rewrites) {
    if (!out.empty()) out += ", ";
    out += to_string(rw);
  }
  return out;
}

int cmd_classify(const TupleArgs& a, bool as_json, std::ostream& out) {
  const TwistedTorusParams params(a.p, a.q, a.r, a.s);
  const Classification c = classify_detailed(params);
  if (as_json) {
    out << to_json(c, params).dump() << '\n';
    return kOk;
  }
  out << describe(c.verdict) << '\n';
  out << "input: " << params.to_string() << '\n';
  if (const auto* t = c.normal_form.twisted()) {
    out << "normalized: " << t->to_string() << '\n';
  } else {
    out << "normalized: torus link " << c.normal_form.torus_link()->to_string() << '\n';
  }
  out << "rewrites: " << join_rewrites(c.normal_form) << '\n';
  return kOk;
}

int cmd_braid(const TupleArgs& a, const std::string& format_name, std::ostream& out) {
  const DiagramFormat format = parse_format(format_name);
  const TwistedTorusParams params(a.p, a.q, a.r, a.s);
  out << export_code(twisted_torus_braid(params), format);
  return kOk;
}

void companions_json(const Obstruction& o, json& list) {
  if (const auto* adj = std::get_if<obstruction::AdjacentCount>(&o)) {
    list.push_back({{"role", "adjacent"}, {"link", to_json(adj->companion.knot)},
                    {"trivial", adj->companion.trivial}});
  } else if (const auto* kq = std::get_if<obstruction::KqForm>(&o)) {
    list.push_back({{"role", "core"}, {"k", kq->data.k}, {"link", to_json(kq->data.torus_core)}});
    list.push_back({{"role", "cable"}, {"k", kq->data.k},
                    {"link", to_json(kq->data.cabled_component)}});
  }
}

int cmd_invariants(const TupleArgs& a, bool as_json, std::ostream& out) {
  const TwistedTorusParams input(a.p, a.q, a.r, a.s);
  const TwistedTorusParams params = canonical_orientation(input);
  const Int p = params.p();
  const Int q = params.q();
  const Int r = params.r();
  const Int components = component_count(p, q);

  std::optional<LinkingReport> linking;
  if (components >= 2) linking = linking_report(p, q);
  std::optional<TwistRegionSplit> split;
  if (components == 2 && r % 2 == 1) split = twist_region_split(p, q, r);
  std::optional<TLinkParams> t_link;
  try {
    t_link = to_t_link(params);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotApplicable) throw;
  }
  const Classification c = classify_detailed(input);

  json companions = json::array();
  if (const auto* nh = std::get_if<verdict::NotHyperbolic>(&c.verdict)) {
    companions_json(nh->primary, companions);
    for (const auto& extra : nh->secondary) companions_json(extra, companions);
  }

  if (as_json) {
    json doc;
    doc["input"] = to_json(input);
    doc["components"] = components;
    doc["linking"] = nullptr;
    if (linking) {
      doc["linking"] = {{"gcd", linking->gcd},
                        {"closed_form", linking->closed_form.to_string()},
                        {"parallel_curve", linking->parallel_curve.to_string()},
                        {"discrepant", linking->discrepant}};
    }
    doc["split"] = split ? json{{"r1", split->r1}, {"r2", split->r2}} : json(nullptr);
    doc["t_link"] = nullptr;
    if (t_link) {
      json pairs = json::array();
      for (const auto& pair : t_link->pairs()) pairs.push_back({pair.r, pair.s});
      doc["t_link"] = std::move(pairs);
    }
    doc["companions"] = std::move(companions);
    doc["classification"] = to_json(c, input);
    doc["note"] = components == 1 ? json("knot case: gcd(p,q) = 1") : json(nullptr);
    out << doc.dump() << '\n';
    return kOk;
  }

  out << params.to_string() << '\n';
  out << "components: " << components << '\n';
  if (!linking) {
    out << "linking number: n/a (knot case, gcd(p,q) = 1)\n";
  } else if (!linking->discrepant) {
    out << "linking number: " << linking->closed_form.to_string() << '\n';
  } else {
    out << "linking number: " << linking->closed_form.to_string()
        << " [closed form (p/d)(q-q/d); parallel-curve value p*q/d^2 = "
        << linking->parallel_curve.to_string() << " differs for d = " << linking->gcd << "]\n";
  }
  if (split) out << "twist-region split: (" << split->r1 << "," << split->r2 << ")\n";
  if (t_link) out << "t-link: " << t_link->to_string() << '\n';
  for (const auto& comp : companions) {
    const auto& link = comp["link"];
    out << "companion " << comp["role"].get<std::string>() << ": T(" << link["a"].get<Int>()
        << "," << link["b"].get<Int>() << ")";
    if (comp.contains("trivial") && comp["trivial"].get<bool>()) out << " (trivial)";
    out << '\n';
  }
  out << "verdict: " << describe(c.verdict) << '\n';
  return kOk;
}

int cmd_census(const CensusOptions& options, const std::string& format, std::ostream& out,
               std::ostream& err) {
  const std::vector<CensusRow> rows = build_census(options);
  std::size_t failures = 0;
  if (format == "csv") {
    out << kCensusCsvHeader << '\n';
    for (const auto& row : rows) out << census_csv_line(row) << '\n';
  } else {
    out << "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << (i == 0 ? "\n" : ",\n") << census_json(rows[i]).dump();
    }
    out << "\n]\n";
  }
  for (const auto& row : rows) {
    if (row.checks && !(row.checks->components && row.checks->linking && row.checks->split)) {
      err << "oracle mismatch: " << row.params.to_string() << '\n';
      ++failures;
    }
  }
  if (failures > 0) {
    err << failures << " census row(s) failed oracle verification\n";
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace

std::vector<Int> parse_s_set(const std::string& text) {
  std::vector<Int> values;
  std::stringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    Int value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad --s-set entry '" + token + "'");
    }
    if (used != token.size()) throw Error(ErrorKind::Parse, "bad --s-set entry '" + token + "'");
    if (value == 0) {
      throw Error(ErrorKind::Parse, "--s-set entries must be nonzero (use classify for s = 0)");
    }
    values.push_back(value);
  }
  if (values.empty()) throw Error(ErrorKind::Parse, "--s-set is empty");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<CensusRow> build_census(const CensusOptions& options) {
  if (options.p_max < 2 || options.q_max < 2) {
    throw Error(ErrorKind::OutOfRange, "census bounds must be at least 2");
  }
  std::vector<TwistedTorusParams> tuples;
  for (Int p = 2; p <= options.p_max; ++p) {
    for (Int q = 2; q <= std::min(p, options.q_max); ++q) {
      for (Int r = 2; r <= p + q; ++r) {
        for (const Int s : options.s_set) tuples.emplace_back(p, q, r, s);
      }
    }
  }
  std::sort(tuples.begin(), tuples.end());

  std::vector<std::optional<CensusRow>> slots(tuples.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < tuples.size(); i += stride) {
      CensusRow row{tuples[i], classify(tuples[i]), std::nullopt};
      if (options.verify) row.checks = verify_against_oracle(tuples[i]);
      slots[i] = std::move(row);
    }
  };
  unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, tuples.size())));
  {
    std::vector<std::jthread> workers;
    for (unsigned j = 1; j < jobs; ++j) workers.emplace_back(work, j, jobs);
    work(0, jobs);
  }

  std::vector<CensusRow> rows;
  rows.reserve(slots.size());
  for (auto& slot : slots) rows.push_back(std::move(*slot));
  return rows;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric classification of twisted torus links T(p, q; r, s)", "ttl"};
  app.require_subcommand(1);

  TupleArgs tuple;
  bool as_json = false;

  auto* classify_cmd = app.add_subcommand("classify", "classify one tuple p q r s");
  add_tuple(*classify_cmd, tuple);
  classify_cmd->add_flag("--json", as_json, "emit a single JSON object");

  auto* invariants_cmd = app.add_subcommand("invariants", "print closed-form invariants");
  add_tuple(*invariants_cmd, tuple);
  invariants_cmd->add_flag("--json", as_json, "emit a single JSON object");

  std::string braid_format = "braid-word";
  auto* braid_cmd = app.add_subcommand("braid", "emit a braid-closure diagram code (r <= p)");
  add_tuple(*braid_cmd, tuple);
  braid_cmd->add_option("--format", braid_format, "braid-word, gauss or pd")
      ->check(CLI::IsMember({"braid-word", "gauss", "pd"}));

  CensusOptions census;
  std::string s_set_text = "4";
  std::string census_format = "csv";
  auto* census_cmd = app.add_subcommand("census", "sweep 2 <= q <= p and every r");
  census_cmd->add_option("--p-max", census.p_max, "largest p")->capture_default_str();
  census_cmd->add_option("--q-max", census.q_max, "largest q")->capture_default_str();
  census_cmd->add_option("--s-set", s_set_text, "comma list of nonzero twists, e.g. -4,4")
      ->capture_default_str();
  census_cmd->add_option("--format", census_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  census_cmd->add_flag("--verify", census.verify, "cross-check every applicable row with the braid oracle");
  census_cmd->add_option("--jobs", census.jobs, "worker threads (0 = all cores)");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("ttl");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) return cmd_classify(tuple, as_json, out);
    if (*invariants_cmd) return cmd_invariants(tuple, as_json, out);
    if (*braid_cmd) return cmd_braid(tuple, braid_format, out);
    if (*census_cmd) {
      census.s_set = parse_s_set(s_set_text);
      return cmd_census(census, census_format, out, err);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Internal) {
      err << "internal error: " << e.what() << '\n';
      return kVerificationFailed;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ttl::cli
