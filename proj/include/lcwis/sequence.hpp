#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lcwis/error.hpp"

namespace cwis {

/// Alphabet symbol. The alphabet order is the integer order.
using Symbol = std::uint32_t;

/// An ordered list of symbols; the empty sequence is valid.
using Sequence = std::vector<Symbol>;

/// Weights and every accumulated DP value are 64-bit signed integers.
using Weight = std::int64_t;

/// Upper limit for any total weight the library computes (2^62). Anything
/// larger is reported as Overflow instead of wrapping.
inline constexpr Weight kWeightBudget = Weight{1} << 62;

/// Builds a sequence from signed input, rejecting values outside [0, 2^32).
inline Sequence make_sequence(std::span<const std::int64_t> values) {
    Sequence out;
    out.reserve(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        const auto v = values[k];
        if (v < 0 || v > std::int64_t{std::numeric_limits<Symbol>::max()}) {
            throw InvalidArgument("value " + std::to_string(v) + " at position " +
                                  std::to_string(k) + " is not a 32-bit symbol");
        }
        out.push_back(static_cast<Symbol>(v));
    }
    return out;
}

inline Sequence make_sequence(std::initializer_list<std::int64_t> values) {
    return make_sequence(std::span<const std::int64_t>(values.begin(), values.size()));
}

inline bool is_weakly_increasing(std::span<const Symbol> s) {
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (s[k - 1] > s[k]) return false;
    }
    return true;
}

/// Greedy left-to-right embedding test, O(|host|).
inline bool is_subsequence(std::span<const Symbol> candidate, std::span<const Symbol> host) {
    std::size_t next = 0;
    for (Symbol h : host) {
        if (next == candidate.size()) break;
        if (candidate[next] == h) ++next;
    }
    return next == candidate.size();
}

/// Positive weights per symbol. Lookups of unweighted symbols throw
/// MissingWeight.
class WeightedAlphabet {
public:
    WeightedAlphabet() = default;

    /// Every symbol in [first, last] gets weight 1.
    static WeightedAlphabet unit(Symbol first, Symbol last) {
        WeightedAlphabet w;
        for (std::uint64_t s = first; s <= last; ++s) w.set(static_cast<Symbol>(s), 1);
        return w;
    }

    /// Every symbol occurring in `s` gets weight 1.
    static WeightedAlphabet unit_for(std::span<const Symbol> s) {
        WeightedAlphabet w;
        for (Symbol x : s) w.set(x, 1);
        return w;
    }

    void set(Symbol symbol, Weight weight) {
        if (weight < 1) {
            throw InvalidArgument("weight of symbol " + std::to_string(symbol) + " must be >= 1, got " +
                                  std::to_string(weight));
        }
        if (weight > kWeightBudget) {
            throw Overflow("weight of symbol " + std::to_string(symbol) + " exceeds 2^62");
        }
        weights_[symbol] = weight;
    }

    Weight weight(Symbol symbol) const {
        auto it = weights_.find(symbol);
        if (it == weights_.end()) throw MissingWeight(symbol);
        return it->second;
    }

    bool contains(Symbol symbol) const { return weights_.count(symbol) != 0; }
    std::size_t size() const noexcept { return weights_.size(); }
    bool empty() const noexcept { return weights_.empty(); }

    /// Largest weighted symbol; precondition: !empty().
    Symbol max_symbol() const { return weights_.rbegin()->first; }
    Symbol min_symbol() const { return weights_.begin()->first; }

    auto begin() const noexcept { return weights_.begin(); }
    auto end() const noexcept { return weights_.end(); }

    friend bool operator==(const WeightedAlphabet&, const WeightedAlphabet&) = default;

private:
    std::map<Symbol, Weight> weights_;
};

/// Sum of weights, checked against kWeightBudget.
inline Weight total_weight(std::span<const Symbol> s, const WeightedAlphabet& w) {
    Weight sum = 0;
    for (Symbol x : s) {
        const Weight wx = w.weight(x);
        if (wx > kWeightBudget - sum) throw Overflow("total weight exceeds 2^62");
        sum += wx;
    }
    return sum;
}

/// Throws MissingWeight for the first unweighted symbol of `s`.
inline void require_weighted(std::span<const Symbol> s, const WeightedAlphabet& w) {
    for (Symbol x : s) (void)w.weight(x);
}

}  // namespace cwis
