#pragma once

#include <cstdint>
#include <string>

namespace masim {

// Abstract model units. Durations and costs are double-precision reals;
// byte sizes are reals too so sweep axes can be scaled freely.
using Duration = double;
using Cost = double;
using Bytes = double;
using NodeId = int;

// Shortest decimal form that round-trips through strtod. Used everywhere a
// number is written to CSV, trace text or tables so repeated runs emit
// byte-identical output.
std::string format_number(double value);

// splitmix64 step; used to derive independent per-run seeds from one master
// seed without coupling runs to each other.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace masim
