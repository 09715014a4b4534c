#ifndef COEP_BATCH_HPP
#define COEP_BATCH_HPP

#include <cstddef>
#include <vector>

namespace coep {

// Apply fn(i) for i in [0, count) and collect the results by index, so the
// output is identical whatever the thread count.  run_serial is the
// reference the OpenMP path is tested and benchmarked against.

template <typename Fn>
auto run_serial(std::size_t count, Fn&& fn) {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
}

template <typename Fn>
auto run_parallel(std::size_t count, Fn&& fn) {
    using R = decltype(fn(std::size_t{0}));
    std::vector<R> out(count);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < (long long)count; ++i) out[i] = fn(std::size_t(i));
    return out;
}

} // namespace coep

#endif
