#pragma once

#include <atomic>
#include <cstdint>

namespace fbpc::instrument {

// Counts live parameter-sized buffers (ParameterVector instances). Lets tests
// assert the working-set contrast between the function-space estimator
// (bounded number of anchors) and the weight-space one (S simultaneous draws).
struct ParamBufferStats {
  static std::atomic<int64_t>& live() {
    static std::atomic<int64_t> v{0};
    return v;
  }
  static std::atomic<int64_t>& peak() {
    static std::atomic<int64_t> v{0};
    return v;
  }
  static void acquire() {
    int64_t now = ++live();
    int64_t prev = peak().load();
    while (now > prev && !peak().compare_exchange_weak(prev, now)) {
    }
  }
  static void release() { --live(); }
  static int64_t live_count() { return live().load(); }
  static int64_t peak_count() { return peak().load(); }
  static void reset_peak() { peak().store(live().load()); }
};

}  // namespace fbpc::instrument
