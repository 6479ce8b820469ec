#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace binpack::cli {

/// Worker count: BINPACK_JOBS when set to a positive integer, else `requested`,
/// else the hardware concurrency (at least 1).
unsigned resolve_jobs(std::optional<unsigned> requested);

/// Calls body(i) for every i in [0, count) on up to `jobs` threads. Bodies
/// must write only to their own slot of any shared output.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body);

}  // namespace binpack::cli
