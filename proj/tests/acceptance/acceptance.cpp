// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Every check is exact; wall-clock limits are below.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ttl/ttl.hpp"

namespace {

using ttl::Int;
using ttl::new_params;

struct Criterion {
  int id;
  const char* name;
  std::optional<double> limit_seconds;
  // Returns the number of disagreements; detail receives the first one.
  std::function<long(std::string& detail)> run;
};

// Condition checker coded straight from the hyperbolicity statement, with no
// reuse of the classifier: gcd 2, r odd, r not within one of p, and for q > 2
// r avoids every kq - 1 and kq + 1.
bool expected_hyperbolic(Int p, Int q, Int r) {
  Int a = p, b = q;
  while (b != 0) {
    const Int t = a % b;
    a = b;
    b = t;
  }
  if (a != 2) return false;
  if (r % 2 == 0) return false;
  if (r == p - 1 || r == p || r == p + 1) return false;
  if (q > 2) {
    for (Int k = 1; k * q - 1 <= r; ++k) {
      if (r == k * q - 1 || r == k * q + 1) return false;
    }
  }
  return true;
}

template <class... Args>
void note(std::string& detail, const char* fmt, Args... args) {
  if (!detail.empty()) return;
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, args...);
  detail = buf;
}

long c1_truth_table(std::string& detail) {
  long bad = 0;
  for (Int p = 2; p <= 30; ++p) {
    for (Int q = 2; q <= p; ++q) {
      for (Int r = 2; r <= p + q; ++r) {
        for (Int s : {-5, -4, 4, 5}) {
          const bool got = std::holds_alternative<ttl::verdict::Hyperbolic>(
              ttl::classify(new_params(p, q, r, s)));
          if (got != expected_hyperbolic(p, q, r)) {
            ++bad;
            note(detail, "(%ld,%ld,%ld,%ld) hyperbolic=%d", p, q, r, s, got);
          }
        }
      }
    }
  }
  return bad;
}

long c2_components(std::string& detail) {
  long bad = 0;
  for (Int p = 2; p <= 24; ++p) {
    for (Int q = 2; q <= 24; ++q) {
      const int n = ttl::closure_analysis(ttl::torus_braid(p, q)).component_count;
      if (n != ttl::gcd(p, q)) {
        ++bad;
        note(detail, "T(%ld,%ld) components=%d", p, q, n);
      }
    }
  }
  return bad;
}

long c3_linking(std::string& detail) {
  long bad = 0;
  for (Int p = 2; p <= 24; ++p) {
    for (Int q = 2; q <= 24; ++q) {
      if (ttl::gcd(p, q) != 2) continue;
      const Int expected = (p / 2) * (q - q / 2);
      const Int oracle = ttl::closure_analysis(ttl::torus_braid(p, q)).linking(0, 1);
      const ttl::Rational formula = ttl::pairwise_linking_number(p, q);
      if (oracle != expected || formula != ttl::Rational(expected)) {
        ++bad;
        note(detail, "T(%ld,%ld) oracle=%ld expected=%ld", p, q, oracle, expected);
      }
    }
  }
  return bad;
}

long c4_split(std::string& detail) {
  long bad = 0;
  for (Int p = 2; p <= 20; ++p) {
    for (Int q = 2; q <= 20; ++q) {
      if (ttl::gcd(p, q) != 2) continue;
      for (Int r = 3; r <= p; r += 2) {
        const auto got = ttl::twist_region_count(p, q, r);
        const bool ok = got.r1 == (r + 1) / 2 && got.r2 == r / 2 && got.r1 + got.r2 == r &&
                        got.r1 - got.r2 == 1;
        if (!ok) {
          ++bad;
          note(detail, "(%ld,%ld,%ld) split=(%ld,%ld)", p, q, r, got.r1, got.r2);
        }
      }
    }
  }
  return bad;
}

long c5_known_cases(std::string& detail) {
  long bad = 0;
  for (Int r : {3, 5}) {
    for (Int s = -6; s <= 6; ++s) {
      if (s == 0) continue;
      const auto c = ttl::classify(new_params(4, 2, r, s));
      const auto* nh = std::get_if<ttl::verdict::NotHyperbolic>(&c);
      if (!nh || !std::holds_alternative<ttl::obstruction::AdjacentCount>(nh->primary)) {
        ++bad;
        note(detail, "(4,2,%ld,%ld) -> %s", r, s, ttl::describe(c).c_str());
      }
    }
  }
  for (Int p = 2; p <= 30; ++p) {
    for (Int q = 2; q <= 30; ++q) {
      for (Int s = -6; s <= 6; ++s) {
        if (s == 0) continue;  // zero twist is the plain torus link, not this reduction
        const auto c = ttl::classify(new_params(p, q, p, s));
        const auto* t = std::get_if<ttl::verdict::TorusLink>(&c);
        if (!t || !(t->link == ttl::TorusLinkParams(p, q + p * s))) {
          ++bad;
          note(detail, "(%ld,%ld,%ld,%ld) -> %s", p, q, p, s, ttl::describe(c).c_str());
        }
      }
    }
  }
  return bad;
}

long c6_symmetry(std::string& detail) {
  long bad = 0;
  for (Int p = 2; p <= 30; ++p) {
    for (Int q = 2; q <= p; ++q) {
      for (Int r = 2; r <= p + q; ++r) {
        for (Int s : {-5, -4, 4, 5}) {
          if (!(ttl::classify(new_params(p, q, r, s)) == ttl::classify(new_params(q, p, r, s)))) {
            ++bad;
            note(detail, "(%ld,%ld,%ld,%ld)", p, q, r, s);
          }
        }
      }
    }
  }
  return bad;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

long c7_companions(std::string& detail) {
  std::ifstream in(TTL_FIXTURE_DIR "/companions.csv");
  if (!in) {
    detail = "fixture file missing";
    return 1;
  }
  std::string line;
  std::getline(in, line);
  long bad = 0;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++rows;
    const auto f = split_csv(line);
    auto num = [&](int i) { return static_cast<Int>(std::stoll(f.at(i))); };
    const Int p = num(0), q = num(1), r = num(2), s = num(3);
    const std::string& kind = f.at(4);
    const auto c = ttl::classify(new_params(p, q, r, s));
    const auto* nh = std::get_if<ttl::verdict::NotHyperbolic>(&c);
    bool ok = false;
    if (nh) {
      std::vector<ttl::Obstruction> all{nh->primary};
      all.insert(all.end(), nh->secondary.begin(), nh->secondary.end());
      for (const auto& o : all) {
        if (kind == "AdjacentCount") {
          if (const auto* adj = std::get_if<ttl::obstruction::AdjacentCount>(&o)) {
            ok = ok || adj->companion.knot == ttl::TorusLinkParams(num(6), num(7));
          }
        } else if (const auto* kq = std::get_if<ttl::obstruction::KqForm>(&o)) {
          ok = ok || (kq->data.k == num(5) && kq->data.torus_core == ttl::TorusLinkParams(num(6), num(7)) &&
               kq->data.cabled_component == ttl::TorusLinkParams(num(8), num(9)));
        }
      }
    }
    if (!ok) {
      ++bad;
      note(detail, "%s -> %s", line.c_str(), ttl::describe(c).c_str());
    }
  }
  if (rows != 20) {
    note(detail, "expected 20 fixture rows, read %d", rows);
    ++bad;
  }
  return bad;
}

long c8_additivity(std::string& detail) {
  long bad = 0;
  for (Int p = 2; p <= 16; ++p) {
    for (Int q = 2; q <= 16; ++q) {
      if (ttl::gcd(p, q) != 2) continue;
      const Int base = ttl::closure_analysis(ttl::torus_braid(p, q)).linking(0, 1);
      for (Int r = 3; r <= p; r += 2) {
        const auto split = ttl::twist_region_split(p, q, r);
        for (Int s = -5; s <= 5; ++s) {
          const Int got =
              ttl::closure_analysis(ttl::twisted_torus_braid(new_params(p, q, r, s))).linking(0, 1);
          if (got != base + s * split.r1 * split.r2) {
            ++bad;
            note(detail, "(%ld,%ld,%ld,%ld) lk=%ld", p, q, r, s, got);
          }
        }
      }
    }
  }
  return bad;
}

long c9_round_trip(std::string& detail) {
  std::mt19937_64 rng(20240611);
  long bad = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 40)(rng);
    std::vector<int> letters(std::uniform_int_distribution<int>(0, 200)(rng));
    for (int& l : letters) {
      l = std::uniform_int_distribution<int>(1, n - 1)(rng) * (rng() % 2 ? 1 : -1);
    }
    const std::string once = ttl::export_code(ttl::BraidWord(n, letters), ttl::DiagramFormat::BraidWord);
    const std::string twice =
        ttl::export_code(ttl::parse_braid_word(once), ttl::DiagramFormat::BraidWord);
    if (once != twice) {
      ++bad;
      note(detail, "trial %d", trial);
    }
  }
  return bad;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "truth table 2<=q<=p<=30, s in {-5,-4,4,5}", 10.0, c1_truth_table},
      {2, "component count = gcd, p,q<=24", 5.0, c2_components},
      {3, "gcd-2 linking = (p/2)(q-q/2), p,q<=24", 10.0, c3_linking},
      {4, "twist region count (ceil r/2, floor r/2), p,q<=20", std::nullopt, c4_split},
      {5, "known adjacent cases and r=p torus reduction", std::nullopt, c5_known_cases},
      {6, "swap symmetry over the truth-table grid", std::nullopt, c6_symmetry},
      {7, "companion payloads vs fixtures", std::nullopt, c7_companions},
      {8, "twist additivity p<=16, odd r<=p, |s|<=5", 30.0, c8_additivity},
      {9, "braid-word round trip, 100 words", std::nullopt, c9_round_trip},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::string detail;
    long bad = 0;
    const auto start = std::chrono::steady_clock::now();
    try {
      bad = c.run(detail);
    } catch (const std::exception& e) {
      bad = 1;
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool slow = c.limit_seconds && secs >= *c.limit_seconds;
    const bool pass = bad == 0 && !slow;
    if (!pass) ++failures;

    std::printf("%s criterion %d: %s (mismatches=%ld, %.3fs", pass ? "PASS" : "FAIL", c.id, c.name,
                bad, secs);
    if (c.limit_seconds) std::printf(" / limit %.0fs", *c.limit_seconds);
    std::printf(")");
    if (!detail.empty()) std::printf(" first: %s", detail.c_str());
    if (slow) std::printf(" too slow");
    std::printf("\n");
  }
  return failures == 0 ? 0 : 1;
}
