#include "periodic_alex/search.hpp"

#include <limits>

namespace palex {

std::uint64_t cube_size(std::size_t dimension, std::uint64_t height) {
    if (height > std::numeric_limits<std::uint64_t>::max() / 2 - 1) throw MathError("height too large");
    const std::uint64_t side = 2 * height + 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dimension; ++i) {
        if (total > std::numeric_limits<std::uint64_t>::max() / side) throw MathError("search box too large");
        total *= side;
    }
    return total;
}

void cube_point(std::uint64_t index, std::uint64_t height, std::vector<Integer>& out) {
    const std::uint64_t side = 2 * height + 1;
    const auto h = static_cast<long>(height);
    for (auto& c : out) {
        c = static_cast<long>(index % side) - h;
        index /= side;
    }
}

unsigned resolve_jobs(unsigned jobs) {
    if (jobs != 0) return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace palex
