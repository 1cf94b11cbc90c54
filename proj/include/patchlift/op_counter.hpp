#pragma once

#include <cstdint>

namespace patchlift {

// Arithmetic-operation tally used by the benchmark harness and the
// complexity tests. Counters only grow during a run; reset() between runs.
struct OpCounter {
  std::uint64_t adds = 0;
  std::uint64_t muls = 0;
  std::uint64_t exps = 0;
  std::uint64_t clamps = 0;  // negative-distance clamp events (diagnostic)

  void reset() { *this = OpCounter{}; }

  OpCounter& operator+=(const OpCounter& o) {
    adds += o.adds;
    muls += o.muls;
    exps += o.exps;
    clamps += o.clamps;
    return *this;
  }
};

}  // namespace patchlift
