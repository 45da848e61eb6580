#ifndef SEQCPD_PARALLEL_HPP
#define SEQCPD_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace seqcpd {

/// Runs fn(i) for i in [0, count) on a pool of worker threads.  Callers
/// must write results into per-index slots so the outcome is identical
/// for any worker count.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace seqcpd

#endif  // SEQCPD_PARALLEL_HPP
