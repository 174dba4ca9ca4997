#pragma once

#include <algorithm>
#include <cstdint>
#include <random>

#include "lcwis/gadgets.hpp"
#include "lcwis/reductions.hpp"
#include "lcwis/sequence.hpp"

namespace cwis {

/// Seeded source for random instances (std::mt19937_64, default seed 0).
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

    /// Uniform in [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(engine_);
    }

    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(uniform(0, static_cast<std::uint64_t>(hi - lo)));
    }

    bool coin() { return uniform(0, 1) == 1; }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

inline Sequence random_sequence(Rng& rng, std::size_t length, Symbol lo, Symbol hi) {
    Sequence s(length);
    for (auto& x : s) x = static_cast<Symbol>(rng.uniform(lo, hi));
    return s;
}

inline WeightedAlphabet random_weights(Rng& rng, Symbol lo, Symbol hi, Weight max_weight) {
    WeightedAlphabet w;
    for (std::uint64_t s = lo; s <= hi; ++s) {
        w.set(static_cast<Symbol>(s), static_cast<Weight>(rng.uniform(1, static_cast<std::uint64_t>(max_weight))));
    }
    return w;
}

inline BitVector random_bits(Rng& rng, std::size_t d) {
    BitVector v(d);
    for (auto& b : v) b = rng.coin() ? 1 : 0;
    return v;
}

inline BitVectorSet random_vector_set(Rng& rng, std::size_t count, std::size_t d) {
    BitVectorSet set;
    set.dim = d;
    for (std::size_t k = 0; k < count; ++k) set.vectors.push_back(random_bits(rng, d));
    return set;
}

/// Clauses of width 1..3 over distinct variables, random polarities.
inline CnfFormula random_cnf(Rng& rng, int num_vars, int num_clauses) {
    CnfFormula f;
    f.num_vars = num_vars;
    for (int c = 0; c < num_clauses; ++c) {
        const int width = rng.uniform_int(1, std::min(3, num_vars));
        Clause clause;
        while (static_cast<int>(clause.size()) < width) {
            const int var = rng.uniform_int(1, num_vars);
            if (std::find(clause.begin(), clause.end(), var) != clause.end() ||
                std::find(clause.begin(), clause.end(), -var) != clause.end()) {
                continue;
            }
            clause.push_back(rng.coin() ? var : -var);
        }
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

}  // namespace cwis
