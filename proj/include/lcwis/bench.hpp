#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <vector>

#include "lcwis/error.hpp"
#include "lcwis/random.hpp"
#include "lcwis/solvers.hpp"

namespace cwis::bench {

struct Row {
    std::size_t size = 0;
    double median_seconds = 0;
    std::optional<double> ratio;  // against the previous row
};

/// Times value-only lcwis on random pairs of each size (symbols drawn from
/// [0, size)). Each repeat uses a fresh pair; the median is reported.
inline std::vector<Row> run(const std::vector<std::size_t>& sizes, std::size_t repeats, std::uint64_t seed = 0) {
    if (repeats < 1) throw InvalidArgument("repeats must be >= 1");
    if (!std::is_sorted(sizes.begin(), sizes.end())) throw InvalidArgument("sizes must be ascending");
    Rng rng(seed);
    std::vector<Row> rows;
    for (std::size_t size : sizes) {
        std::vector<double> times;
        const auto top = static_cast<Symbol>(std::max<std::size_t>(size, 1) - 1);
        for (std::size_t r = 0; r < repeats; ++r) {
            const auto a = random_sequence(rng, size, 0, top);
            const auto b = random_sequence(rng, size, 0, top);
            const auto start = std::chrono::steady_clock::now();
            volatile Weight sink = lcwis(a, b).value;
            (void)sink;
            times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
        }
        std::sort(times.begin(), times.end());
        const std::size_t mid = times.size() / 2;
        const double median = times.size() % 2 ? times[mid] : 0.5 * (times[mid - 1] + times[mid]);
        Row row{size, median, std::nullopt};
        if (!rows.empty() && rows.back().median_seconds > 0) row.ratio = median / rows.back().median_seconds;
        rows.push_back(row);
    }
    return rows;
}

inline void print(std::ostream& out, const std::vector<Row>& rows) {
    out << std::setw(10) << "size" << std::setw(14) << "median_ms" << std::setw(10) << "ratio" << "\n";
    for (const auto& row : rows) {
        out << std::setw(10) << row.size << std::setw(14) << std::fixed << std::setprecision(3)
            << row.median_seconds * 1e3 << std::setw(10);
        if (row.ratio) {
            out << std::setprecision(2) << *row.ratio;
        } else {
            out << "-";
        }
        out << "\n";
    }
}

}  // namespace cwis::bench
