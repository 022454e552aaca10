#pragma once

#include <cstdint>

#include "splitspecies/json_io.hpp"

namespace splitspecies::cli {

/// Round trips and relabeling equivariance of every bijection on random
/// split graphs of 1..max_n vertices. Returns the JSON report; "passed" is
/// false when any check failed.
Json run_random_suite(std::uint64_t seed, int samples, int max_n);

}  // namespace splitspecies::cli
