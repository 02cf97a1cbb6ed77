#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace ivif {

/// Indices sorted by value, best first. Equal values keep their input order.
inline std::vector<std::size_t> rank_descending(const std::vector<double>& values) {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    return idx;
}

inline std::vector<std::size_t> rank_ascending(const std::vector<double>& values) {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    return idx;
}

}  // namespace ivif
