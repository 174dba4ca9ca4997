#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lcwis/error.hpp"
#include "lcwis/sequence.hpp"

namespace cwis {

/// Value of an LCWIS/WLCWIS solve. `value` is a length for the unweighted
/// problem and a total weight for the weighted one. The witness, when asked
/// for, is one optimal common weakly increasing subsequence.
struct SolveResult {
    Weight value = 0;
    std::optional<Sequence> witness;
};

/// Inputs longer than this (the shorter side) are refused by the brute-force
/// oracles.
inline constexpr std::size_t kOracleMaxLength = 14;

namespace detail {

inline std::vector<Weight> weights_of(std::span<const Symbol> s, const WeightedAlphabet* w) {
    if (w == nullptr) return std::vector<Weight>(s.size(), 1);
    std::vector<Weight> out;
    out.reserve(s.size());
    Weight sum = 0;
    for (Symbol x : s) {
        out.push_back(w->weight(x));
        if (out.back() > kWeightBudget - sum) throw Overflow("total weight exceeds 2^62");
        sum += out.back();
    }
    return out;
}

// Row-by-row DP over `a`, one cell per position of `b`.
//
// best[j] holds the maximum weight of a common weakly increasing subsequence
// of a[0..i) and b[0..j] whose last symbol is matched to b[j]. When row i
// is processed, `run` carries the maximum of best[j'] over j' < j with
// b[j'] <= a[i], taken from the previous row. Cells are updated in place, so
// the old value of best[j] must feed `run` to keep a[i] from being used
// twice when b repeats it.
inline Weight dp_value(std::span<const Symbol> a, std::span<const Weight> wa, std::span<const Symbol> b) {
    std::vector<Weight> best(b.size(), 0);
    Weight answer = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Symbol x = a[i];
        const Weight gain = wa[i];
        Weight run = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            const Symbol y = b[j];
            if (y > x) continue;
            const Weight old = best[j];
            if (y == x && run + gain > old) {
                best[j] = run + gain;
                answer = std::max(answer, best[j]);
            }
            run = std::max(run, old);
        }
    }
    return answer;
}

// Full-table variant used when a witness is requested. Row 0 is all zeros;
// row i+1 is the state after consuming a[i].
inline SolveResult dp_witness(std::span<const Symbol> a, std::span<const Weight> wa, std::span<const Symbol> b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    std::vector<Weight> table((n + 1) * m, 0);
    auto cell = [&](std::size_t row, std::size_t col) -> Weight& { return table[row * m + col]; };

    for (std::size_t i = 0; i < n; ++i) {
        const Symbol x = a[i];
        Weight run = 0;
        for (std::size_t j = 0; j < m; ++j) {
            const Weight old = cell(i, j);
            Weight now = old;
            if (b[j] == x) now = std::max(old, run + wa[i]);
            if (b[j] <= x) run = std::max(run, old);
            cell(i + 1, j) = now;
        }
    }

    SolveResult result;
    result.witness.emplace();
    std::optional<std::size_t> end_col;
    for (std::size_t j = 0; j < m; ++j) {
        if (cell(n, j) > result.value) {
            result.value = cell(n, j);
            end_col = j;
        }
    }
    if (!end_col) return result;

    // Walk back: each element is attributed to the earliest row of `a` at
    // which its cell reached the current value, and its predecessor to the
    // leftmost admissible column.
    std::size_t row = n;
    std::size_t col = *end_col;
    Weight remaining = result.value;
    auto& witness = *result.witness;
    while (remaining > 0) {
        std::size_t r = 1;
        while (cell(r, col) != remaining) ++r;
        witness.push_back(b[col]);
        remaining -= wa[r - 1];
        row = r - 1;
        if (remaining == 0) break;
        std::size_t prev = 0;
        while (!(b[prev] <= b[col] && cell(row, prev) == remaining)) ++prev;
        col = prev;
    }
    std::reverse(witness.begin(), witness.end());
    return result;
}

inline SolveResult solve(std::span<const Symbol> a, std::span<const Symbol> b, const WeightedAlphabet* w,
                         bool want_witness) {
    auto wa = weights_of(a, w);
    if (w != nullptr) (void)weights_of(b, w);
    if (want_witness) return dp_witness(a, wa, b);
    // Value-only memory is linear in the shorter input.
    if (b.size() > a.size()) {
        auto wb = weights_of(b, w);
        return SolveResult{dp_value(b, wb, a), std::nullopt};
    }
    return SolveResult{dp_value(a, wa, b), std::nullopt};
}

inline Weight oracle(std::span<const Symbol> a, std::span<const Symbol> b, const WeightedAlphabet* w) {
    if (a.size() > b.size()) std::swap(a, b);
    if (a.size() > kOracleMaxLength) {
        throw BudgetExceeded("oracle input has " + std::to_string(a.size()) + " symbols, limit is " +
                             std::to_string(kOracleMaxLength));
    }
    auto wa = weights_of(a, w);
    if (w != nullptr) (void)weights_of(b, w);

    Weight best = 0;
    Sequence picked;
    const std::uint32_t subsets = std::uint32_t{1} << a.size();
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        picked.clear();
        Weight weight = 0;
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (mask & (std::uint32_t{1} << k)) {
                picked.push_back(a[k]);
                weight += wa[k];
            }
        }
        if (weight <= best) continue;
        if (is_weakly_increasing(picked) && is_subsequence(picked, b)) best = weight;
    }
    return best;
}

}  // namespace detail

/// Longest common weakly increasing subsequence, O(|a|·|b|) time.
inline SolveResult lcwis(std::span<const Symbol> a, std::span<const Symbol> b, bool want_witness = false) {
    return detail::solve(a, b, nullptr, want_witness);
}

/// Weighted variant: maximizes the total weight instead of the length.
inline SolveResult wlcwis(std::span<const Symbol> a, std::span<const Symbol> b, const WeightedAlphabet& w,
                          bool want_witness = false) {
    return detail::solve(a, b, &w, want_witness);
}

/// Exhaustive ground truth: every weakly increasing subsequence of the
/// shorter input is tried against the longer one. Requires
/// min(|a|, |b|) <= kOracleMaxLength.
inline Weight lcwis_oracle(std::span<const Symbol> a, std::span<const Symbol> b) {
    return detail::oracle(a, b, nullptr);
}

inline Weight wlcwis_oracle(std::span<const Symbol> a, std::span<const Symbol> b, const WeightedAlphabet& w) {
    return detail::oracle(a, b, &w);
}

}  // namespace cwis
