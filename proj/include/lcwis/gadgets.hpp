#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcwis/error.hpp"
#include "lcwis/sequence.hpp"

namespace cwis {

enum class GadgetSide { one, two };

/// A 0/1 vector.
using BitVector = std::vector<std::uint8_t>;

/// Sequence encoding coordinate `i` (1-based) of a vector. Coordinate i only
/// uses the band {3i, 3i+1, 3i+2}, so bands for different i are disjoint and
/// ordered by i. The two sides share an LCWIS of 1 unless both bits are 1.
inline Sequence coordinate_gadget(GadgetSide side, int bit, std::uint64_t i) {
    if (i < 1) throw InvalidArgument("coordinate index must be >= 1");
    if (bit != 0 && bit != 1) throw InvalidArgument("bit must be 0 or 1");
    if (3 * i + 2 > std::numeric_limits<Symbol>::max()) throw Overflow("coordinate index too large");
    const auto base = static_cast<Symbol>(3 * i);
    if (side == GadgetSide::one) {
        return bit == 0 ? Sequence{base, base + 1} : Sequence{base + 2};
    }
    return bit == 0 ? Sequence{base, base + 2} : Sequence{base + 1};
}

/// Concatenation of the coordinate gadgets of `u` in coordinate order. The
/// LCWIS of VG(one, u) and VG(two, v) is d - u·v.
inline Sequence vector_gadget(GadgetSide side, std::span<const std::uint8_t> u) {
    if (u.empty()) throw InvalidArgument("vector gadget needs dimension >= 1");
    Sequence out;
    out.reserve(2 * u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        auto cg = coordinate_gadget(side, u[k], k + 1);
        out.insert(out.end(), cg.begin(), cg.end());
    }
    return out;
}

/// Symbol values of the four separators. A < B < every payload symbol < Y < Z.
struct SpecialSymbols {
    Symbol a = 1;
    Symbol b = 2;
    Symbol y = 0;
    Symbol z = 0;

    friend bool operator==(const SpecialSymbols&, const SpecialSymbols&) = default;
};

/// Smallest symbol a payload alphabet may use; 1 and 2 are taken by A and B.
inline constexpr Symbol kMinPayloadSymbol = 3;

/// Two sequences whose WLCWIS is offset + max_{i,j} WLCWIS(s_i, t_j).
struct CombinedInstance {
    Sequence p1;
    Sequence p2;
    WeightedAlphabet weights;
    SpecialSymbols special;
    Weight ell = 1;
    Weight offset = 0;
    std::size_t n = 0;

    friend bool operator==(const CombinedInstance&, const CombinedInstance&) = default;
};

/// Token counts of P1 and P2 implied by the construction pattern.
inline std::pair<std::size_t, std::size_t> combined_token_counts(std::size_t n, std::size_t sum_s,
                                                                 std::size_t sum_t) {
    return {2 * n + sum_s + 2 * (n - 1) + 2 * n, 4 * n + sum_t + 4 * (n - 1) + 4 * n};
}

/// Embeds n payload pairs into two sequences.
///
///   P1 = A^{2n} s_1 YB s_2 YB ... YB s_n Z^{2n}
///   P2 = (ZYBA)^n t_1 ZYBA t_2 ... ZYBA t_n (ZYBA)^n
///
/// with w(A) = w(Z) = ell and w(B) = w(Y) = 2·ell, where ell is the largest
/// payload total weight (at least 1). Then
///
///   WLCWIS(P1, P2) = max_{i,j} WLCWIS(s_i, t_j) + (4n - 2)·ell.
///
/// A and B are 1 and 2; Y and Z sit directly above the largest symbol of
/// `payload_weights`, which must not weight anything below 3.
inline CombinedInstance combine(std::span<const Sequence> s, std::span<const Sequence> t,
                                const WeightedAlphabet& payload_weights) {
    if (s.empty() || t.empty()) throw InvalidArgument("combine needs at least one sequence per side");
    if (s.size() != t.size()) {
        throw InvalidArgument("combine needs equally many sequences per side, got " + std::to_string(s.size()) +
                              " and " + std::to_string(t.size()));
    }
    if (!payload_weights.empty() && payload_weights.min_symbol() < kMinPayloadSymbol) {
        throw InvalidArgument("payload symbol " + std::to_string(payload_weights.min_symbol()) +
                              " collides with the reserved separators 1 and 2");
    }

    CombinedInstance out;
    out.n = s.size();
    const std::uint64_t top = payload_weights.empty() ? 2 : payload_weights.max_symbol();
    if (top + 2 > std::numeric_limits<Symbol>::max()) throw Overflow("no room for separators above payload");
    out.special.y = static_cast<Symbol>(top + 1);
    out.special.z = static_cast<Symbol>(top + 2);

    Weight ell = 1;
    for (const auto& seq : s) ell = std::max(ell, total_weight(seq, payload_weights));
    for (const auto& seq : t) ell = std::max(ell, total_weight(seq, payload_weights));
    const Weight n = static_cast<Weight>(out.n);
    // Largest quantity derived below is the weight of P2 (~ 6·ell·3n).
    if (ell > kWeightBudget / (24 * n)) throw Overflow("combined instance weight exceeds 2^62");
    out.ell = ell;
    out.offset = (4 * n - 2) * ell;

    out.weights = payload_weights;
    const auto& sp = out.special;
    out.weights.set(sp.a, ell);
    out.weights.set(sp.z, ell);
    out.weights.set(sp.b, 2 * ell);
    out.weights.set(sp.y, 2 * ell);

    std::size_t sum_s = 0;
    std::size_t sum_t = 0;
    for (const auto& seq : s) sum_s += seq.size();
    for (const auto& seq : t) sum_t += seq.size();
    const auto [len1, len2] = combined_token_counts(out.n, sum_s, sum_t);
    out.p1.reserve(len1);
    out.p2.reserve(len2);

    out.p1.insert(out.p1.end(), 2 * out.n, sp.a);
    for (std::size_t i = 0; i < out.n; ++i) {
        if (i > 0) {
            out.p1.push_back(sp.y);
            out.p1.push_back(sp.b);
        }
        out.p1.insert(out.p1.end(), s[i].begin(), s[i].end());
    }
    out.p1.insert(out.p1.end(), 2 * out.n, sp.z);

    auto zyba = [&](std::size_t times) {
        for (std::size_t k = 0; k < times; ++k) {
            out.p2.insert(out.p2.end(), {sp.z, sp.y, sp.b, sp.a});
        }
    };
    zyba(out.n);
    for (std::size_t j = 0; j < out.n; ++j) {
        if (j > 0) zyba(1);
        out.p2.insert(out.p2.end(), t[j].begin(), t[j].end());
    }
    zyba(out.n);
    return out;
}

/// Replaces every symbol x by w(x) consecutive copies of itself. LCWIS of
/// the expanded pair equals WLCWIS of the original pair.
inline Sequence expand_weights(std::span<const Symbol> a, const WeightedAlphabet& w) {
    const Weight length = total_weight(a, w);
    if (static_cast<std::uint64_t>(length) > Sequence().max_size()) throw Overflow("expanded sequence too long");
    Sequence out;
    out.reserve(static_cast<std::size_t>(length));
    for (Symbol x : a) out.insert(out.end(), static_cast<std::size_t>(w.weight(x)), x);
    return out;
}

inline Sequence shift_alphabet(std::span<const Symbol> a, std::uint64_t delta) {
    Sequence out;
    out.reserve(a.size());
    for (Symbol x : a) {
        const std::uint64_t shifted = std::uint64_t{x} + delta;
        if (shifted > std::numeric_limits<Symbol>::max()) {
            throw Overflow("shifting symbol " + std::to_string(x) + " by " + std::to_string(delta) +
                           " leaves 32 bits");
        }
        out.push_back(static_cast<Symbol>(shifted));
    }
    return out;
}

using SequencePair = std::pair<Sequence, Sequence>;

inline std::uint64_t max_symbol_of(const SequencePair& p) {
    std::uint64_t top = 0;
    for (Symbol x : p.first) top = std::max<std::uint64_t>(top, x);
    for (Symbol x : p.second) top = std::max<std::uint64_t>(top, x);
    return top;
}

/// Concatenates two instances with the second one's alphabet moved above the
/// first one's. LCWIS of the result is the sum of the two LCWIS values.
inline SequencePair and_gadget(const SequencePair& first, const SequencePair& second) {
    const bool first_empty = first.first.empty() && first.second.empty();
    const std::uint64_t delta = first_empty ? 0 : max_symbol_of(first) + 1;
    SequencePair out = first;
    auto hi1 = shift_alphabet(second.first, delta);
    auto hi2 = shift_alphabet(second.second, delta);
    out.first.insert(out.first.end(), hi1.begin(), hi1.end());
    out.second.insert(out.second.end(), hi2.begin(), hi2.end());
    return out;
}

/// Moves pair k into its own symbol band [3 + k·width, 3 + (k+1)·width),
/// with width = (largest symbol over all pairs) + 1, gives every used symbol
/// weight 1, and combines the first components against the second ones.
/// WLCWIS(P1, P2) - offset is then max_k LCWIS(pairs[k]).
///
/// Only one level is supported: feeding the output of or_gadget into another
/// or_gadget would need weighted payloads whose offsets compose, which this
/// construction does not track.
inline CombinedInstance or_gadget(std::span<const SequencePair> pairs) {
    if (pairs.empty()) throw InvalidArgument("or_gadget needs at least one pair");
    std::uint64_t width = 0;
    for (const auto& p : pairs) width = std::max(width, max_symbol_of(p));
    width += 1;
    if (width > (std::uint64_t{std::numeric_limits<Symbol>::max()} - kMinPayloadSymbol) / pairs.size()) {
        throw Overflow("or_gadget bands do not fit in 32 bits");
    }

    std::vector<Sequence> s;
    std::vector<Sequence> t;
    WeightedAlphabet unit;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        const std::uint64_t delta = kMinPayloadSymbol + k * width;
        s.push_back(shift_alphabet(pairs[k].first, delta));
        t.push_back(shift_alphabet(pairs[k].second, delta));
        for (Symbol x : s.back()) unit.set(x, 1);
        for (Symbol x : t.back()) unit.set(x, 1);
    }
    return combine(s, t, unit);
}

}  // namespace cwis
