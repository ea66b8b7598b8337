#pragma once

#include <array>
#include <vector>

#include "ttl/braid.hpp"

namespace ttl::detail {

// One passage of a strand through a crossing.
struct Visit {
  int crossing;  // index into the word
  bool left;     // entered from position i (left) rather than i + 1
};

// Strands of the closure grouped into components, each component listed as
// the ordered visits of a single traversal starting at its smallest strand.
struct ClosureTrace {
  // permutation[k] is the bottom position of the strand that starts at top
  // position k.
  std::vector<int> permutation;
  // strands_in[t] = {left strand, right strand} entering crossing t.
  std::vector<std::array<int, 2>> strands_in;
  std::vector<int> component_of;
  int component_count = 0;
  std::vector<std::vector<Visit>> component_visits;
};

ClosureTrace trace_closure(const BraidWord& word);

}  // namespace ttl::detail
