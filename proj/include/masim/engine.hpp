#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "masim/types.hpp"

namespace masim {

struct TraceRecord {
  Duration time = 0;
  NodeId node = 0;
  std::string event;
  Bytes bytes = 0;
  Cost cost = 0;
};

// Ordered run log. Totals fold over the records, so any report built from a
// run can be cross-checked against its trace.
struct Trace {
  std::vector<TraceRecord> records;

  void append(TraceRecord record);  // rejects a time earlier than the last record
  Bytes total_bytes() const;
  Cost total_cost() const;
  // One record per line: time <TAB> node <TAB> event <TAB> bytes <TAB> cost.
  std::string to_text() const;
};

// Deterministic single-threaded event loop: virtual clock, (fire_time,
// sequence)-ordered queue, run trace and one seeded generator. Identical
// inputs and seed give byte-identical traces. Distinct engines are
// independent; one engine must not be shared across threads.
class Engine {
 public:
  using Action = std::function<void()>;

  explicit Engine(std::uint64_t seed = 0, std::uint64_t event_ceiling = 10'000'000);

  Duration now() const { return clock_; }

  // Scheduling into the past is a logic error and aborts the run.
  void schedule_at(Duration fire_time, Action action);
  void schedule_after(Duration delay, Action action);

  // Appends a trace record stamped with the current clock.
  void record(NodeId node, std::string event, Bytes bytes, Cost cost);

  // Processes events in (fire_time, sequence) order until the queue drains;
  // returns the final clock. Throws std::runtime_error once the event ceiling
  // is exceeded (runaway simulation).
  Duration run_until_idle();

  const Trace& trace() const { return trace_; }
  std::uint64_t events_processed() const { return events_processed_; }

  // Seeded randomness with a stable seed-to-sequence mapping; raw engine
  // output is mapped to [0,1) directly rather than through a distribution.
  std::uint64_t next_u64();
  double uniform01();

 private:
  struct Pending {
    Duration fire_time;
    std::uint64_t sequence;
    Action action;
  };

  std::vector<Pending> heap_;
  Duration clock_ = 0;
  std::uint64_t next_sequence_ = 0;
  std::uint64_t events_processed_ = 0;
  std::uint64_t event_ceiling_;
  std::uint64_t rng_state_;
  Trace trace_;
};

}  // namespace masim
