#ifndef PERIODIC_ALEX_SEARCH_HPP
#define PERIODIC_ALEX_SEARCH_HPP

#include "periodic_alex/polycore.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace palex {

/// Number of points of the cube [-height, height]^dimension. Throws if the
/// count does not fit in 64 bits.
std::uint64_t cube_size(std::size_t dimension, std::uint64_t height);

/// Decodes a mixed-radix index into cube coordinates; index 0 is (-h, ..., -h)
/// and the first coordinate varies fastest.
void cube_point(std::uint64_t index, std::uint64_t height, std::vector<Integer>& out);

unsigned resolve_jobs(unsigned jobs);

/// Splits [0, total) into `jobs` contiguous slices, runs work(begin, end)
/// for each slice on its own thread and returns the per-slice results in
/// slice order, so callers can merge deterministically.
template <class Result>
std::vector<Result> run_partitioned(std::uint64_t total, unsigned jobs,
                                    const std::function<Result(std::uint64_t, std::uint64_t)>& work) {
    jobs = resolve_jobs(jobs);
    const std::uint64_t slices = std::max<std::uint64_t>(1, std::min<std::uint64_t>(jobs, total));
    std::vector<Result> results(slices);
    if (slices == 1) {
        results[0] = work(0, total);
        return results;
    }
    std::vector<std::exception_ptr> errors(slices);
    {
        std::vector<std::jthread> threads;
        threads.reserve(slices);
        for (std::uint64_t s = 0; s < slices; ++s) {
            const std::uint64_t begin = total * s / slices;
            const std::uint64_t end = total * (s + 1) / slices;
            threads.emplace_back([&, s, begin, end] {
                try {
                    results[s] = work(begin, end);
                } catch (...) {
                    errors[s] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace palex

#endif  // PERIODIC_ALEX_SEARCH_HPP
