#include "masim/engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace masim {

void Trace::append(TraceRecord record) {
  if (!records.empty() && record.time < records.back().time) {
    throw std::logic_error("trace time went backwards");
  }
  records.push_back(std::move(record));
}

Bytes Trace::total_bytes() const {
  Bytes total = 0;
  for (const auto& r : records) total += r.bytes;
  return total;
}

Cost Trace::total_cost() const {
  Cost total = 0;
  for (const auto& r : records) total += r.cost;
  return total;
}

std::string Trace::to_text() const {
  std::string out;
  for (const auto& r : records) {
    out += format_number(r.time);
    out += '\t';
    out += std::to_string(r.node);
    out += '\t';
    out += r.event;
    out += '\t';
    out += format_number(r.bytes);
    out += '\t';
    out += format_number(r.cost);
    out += '\n';
  }
  return out;
}

namespace {

// Min-heap on (fire_time, sequence): ties pop in scheduling order.
struct Later {
  template <typename P>
  bool operator()(const P& a, const P& b) const {
    if (a.fire_time != b.fire_time) return a.fire_time > b.fire_time;
    return a.sequence > b.sequence;
  }
};

}  // namespace

Engine::Engine(std::uint64_t seed, std::uint64_t event_ceiling)
    : event_ceiling_(event_ceiling), rng_state_(seed ^ 0x2545f4914f6cdd1dULL) {}

void Engine::schedule_at(Duration fire_time, Action action) {
  if (fire_time < clock_) {
    throw std::logic_error("event scheduled in the past: t=" + format_number(fire_time) +
                           " clock=" + format_number(clock_));
  }
  heap_.push_back(Pending{fire_time, next_sequence_++, std::move(action)});
  std::push_heap(heap_.begin(), heap_.end(), Later{});
}

void Engine::schedule_after(Duration delay, Action action) {
  schedule_at(clock_ + delay, std::move(action));
}

void Engine::record(NodeId node, std::string event, Bytes bytes, Cost cost) {
  trace_.append(TraceRecord{clock_, node, std::move(event), bytes, cost});
}

Duration Engine::run_until_idle() {
  while (!heap_.empty()) {
    if (++events_processed_ > event_ceiling_) {
      throw std::runtime_error("event ceiling exceeded (" + std::to_string(event_ceiling_) +
                               " events): runaway simulation");
    }
    std::pop_heap(heap_.begin(), heap_.end(), Later{});
    Pending next = std::move(heap_.back());
    heap_.pop_back();
    clock_ = next.fire_time;
    next.action();
  }
  return clock_;
}

std::uint64_t Engine::next_u64() {
  // splitmix64: stable across platforms and builds.
  std::uint64_t z = (rng_state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Engine::uniform01() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

}  // namespace masim
