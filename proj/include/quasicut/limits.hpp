#pragma once

namespace quasicut {

// Size caps for the cubic all-pairs relaxation and the LP path.
// The QUASICUT_MAX_N environment variable overrides both when set
// to a positive integer.
struct Limits {
  int max_n = 512;      // all-pairs shortest path
  int lp_max_n = 64;    // sparsest-cut LP
};

const Limits& limits();

}  // namespace quasicut
