#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "annigraph/error.hpp"

namespace annigraph {

/// Non-increasing sequence of non-negative integers with Ferrers conjugation.
struct IntPartition {
    std::vector<std::int64_t> parts;  // non-increasing

    IntPartition() = default;
    explicit IntPartition(std::vector<std::int64_t> p) : parts(std::move(p)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0 || (i > 0 && parts[i] > parts[i - 1]))
                throw Error(ErrorKind::InvalidGroup, "partition must be non-increasing and non-negative");
        }
    }

    static IntPartition from_unsorted(std::vector<std::int64_t> p) {
        std::sort(p.begin(), p.end(), std::greater<>());
        return IntPartition(std::move(p));
    }

    std::int64_t box_count() const {
        return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
    }

    bool operator==(const IntPartition&) const = default;
};

/// Ferrers transpose: x*_j = #{ i : x_i >= j } for j = 1..x_1.
inline IntPartition conjugate(const IntPartition& x) {
    std::vector<std::int64_t> out;
    if (!x.parts.empty() && x.parts.front() > 0) {
        out.resize(static_cast<std::size_t>(x.parts.front()), 0);
        for (std::int64_t part : x.parts) {
            for (std::int64_t j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
        }
    }
    return IntPartition(std::move(out));
}

}  // namespace annigraph
