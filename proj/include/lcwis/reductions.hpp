#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcwis/error.hpp"
#include "lcwis/gadgets.hpp"
#include "lcwis/sequence.hpp"
#include "lcwis/solvers.hpp"

namespace cwis {

using Clause = std::vector<int>;

/// CNF over variables 1..num_vars. A literal is a signed variable index.
struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Throws InvalidArgument on zero literals, out-of-range variables, or a
/// clause containing both x and -x.
inline void validate(const CnfFormula& f) {
    if (f.num_vars < 0) throw InvalidArgument("negative variable count");
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
        const auto& clause = f.clauses[c];
        for (int lit : clause) {
            if (lit == 0 || lit == std::numeric_limits<int>::min() || std::abs(lit) > f.num_vars) {
                throw InvalidArgument("clause " + std::to_string(c + 1) + ": literal " + std::to_string(lit) +
                                      " out of range");
            }
            if (std::find(clause.begin(), clause.end(), -lit) != clause.end()) {
                throw InvalidArgument("clause " + std::to_string(c + 1) + " contains both " +
                                      std::to_string(lit) + " and " + std::to_string(-lit));
            }
        }
    }
}

/// Bit k of `assignment` is the value of variable first_var + k.
inline bool satisfies(const Clause& clause, std::uint64_t assignment, int first_var, int count) {
    for (int lit : clause) {
        const int var = std::abs(lit);
        if (var < first_var || var >= first_var + count) continue;
        const bool value = (assignment >> (var - first_var)) & 1U;
        if (value == (lit > 0)) return true;
    }
    return false;
}

struct BitVectorSet {
    std::size_t dim = 0;
    std::vector<BitVector> vectors;

    friend bool operator==(const BitVectorSet&, const BitVectorSet&) = default;
};

inline void validate(const BitVectorSet& set) {
    if (set.dim < 1) throw InvalidArgument("vector dimension must be >= 1");
    for (const auto& v : set.vectors) {
        if (v.size() != set.dim) throw InvalidArgument("vector of dimension " + std::to_string(v.size()) +
                                                       " in a set of dimension " + std::to_string(set.dim));
        for (auto bit : v) {
            if (bit > 1) throw InvalidArgument("vector entries must be 0 or 1");
        }
    }
}

inline std::int64_t inner_product(const BitVector& u, const BitVector& v) {
    std::int64_t sum = 0;
    for (std::size_t k = 0; k < u.size(); ++k) sum += u[k] & v[k];
    return sum;
}

/// Bookkeeping needed to turn an LCWIS value of a reduced instance back into
/// a minimum inner product (and, for CNF input, a MAX-SAT value).
struct ReductionCertificate {
    std::size_t n = 0;
    std::size_t d = 0;
    Weight ell = 1;
    Weight offset = 0;
    std::optional<std::size_t> num_clauses;

    friend bool operator==(const ReductionCertificate&, const ReductionCertificate&) = default;
};

/// Split-and-list encoding: the first ceil(N/2) variables feed U, the rest
/// feed V. Coordinate i of a half-assignment's vector is 0 iff that half
/// already satisfies clause i, so u·v counts the clauses the joint
/// assignment leaves unsatisfied.
inline std::pair<BitVectorSet, BitVectorSet> vectors_from_cnf(const CnfFormula& f) {
    validate(f);
    if (f.num_vars < 1 || f.clauses.empty()) throw InvalidArgument("formula needs >= 1 variable and >= 1 clause");
    if (f.num_vars > 62) throw BudgetExceeded("too many variables to enumerate half-assignments");

    const int first_half = (f.num_vars + 1) / 2;
    const int second_half = f.num_vars - first_half;
    auto list = [&](int first_var, int count) {
        BitVectorSet set;
        set.dim = f.clauses.size();
        const std::uint64_t total = std::uint64_t{1} << count;
        set.vectors.reserve(total);
        for (std::uint64_t alpha = 0; alpha < total; ++alpha) {
            BitVector v(set.dim);
            for (std::size_t i = 0; i < set.dim; ++i) {
                v[i] = satisfies(f.clauses[i], alpha, first_var, count) ? 0 : 1;
            }
            set.vectors.push_back(std::move(v));
        }
        return set;
    };
    return {list(1, first_half), list(1 + first_half, second_half)};
}

struct OvpAnswer {
    bool found = false;
    std::int64_t min_inner_product = 0;
};

/// Brute-force Most-Orthogonal Vectors: is there a pair with u·v <= r, and
/// what is the smallest u·v.
inline OvpAnswer ovp_oracle(const BitVectorSet& u, const BitVectorSet& v, std::int64_t r) {
    if (u.dim != v.dim) throw InvalidArgument("vector sets have different dimensions");
    if (u.vectors.empty() || v.vectors.empty()) throw InvalidArgument("vector sets must be non-empty");
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& a : u.vectors) {
        for (const auto& b : v.vectors) best = std::min(best, inner_product(a, b));
    }
    return {best <= r, best};
}

struct LcwisInstance {
    Sequence a;
    Sequence b;
    ReductionCertificate certificate;
};

/// Vector gadgets for both sets (the smaller set padded by repeating its
/// first vector), unit payload weights, the combining construction, then
/// weight expansion. LCWIS of the result is offset + d - min u·v.
inline LcwisInstance ovp_to_lcwis_instance(const BitVectorSet& u, const BitVectorSet& v) {
    validate(u);
    validate(v);
    if (u.dim != v.dim) throw InvalidArgument("vector sets have different dimensions");
    if (u.vectors.empty() || v.vectors.empty()) throw InvalidArgument("vector sets must be non-empty");
    if (3 * u.dim + 4 > std::numeric_limits<Symbol>::max()) throw Overflow("dimension too large for 32-bit symbols");

    const std::size_t n = std::max(u.vectors.size(), v.vectors.size());
    std::vector<Sequence> s;
    std::vector<Sequence> t;
    s.reserve(n);
    t.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        s.push_back(vector_gadget(GadgetSide::one, k < u.vectors.size() ? u.vectors[k] : u.vectors.front()));
        t.push_back(vector_gadget(GadgetSide::two, k < v.vectors.size() ? v.vectors[k] : v.vectors.front()));
    }
    const auto unit = WeightedAlphabet::unit(3, static_cast<Symbol>(3 * u.dim + 2));
    const auto combined = combine(s, t, unit);

    LcwisInstance out;
    out.a = expand_weights(combined.p1, combined.weights);
    out.b = expand_weights(combined.p2, combined.weights);
    out.certificate = {n, u.dim, combined.ell, combined.offset, std::nullopt};
    return out;
}

/// Minimum inner product encoded by `lcwis_value`. Values outside
/// [offset, offset + d] cannot come from a correct solve.
inline std::int64_t decode(const ReductionCertificate& cert, Weight lcwis_value) {
    const Weight d = static_cast<Weight>(cert.d);
    if (lcwis_value < cert.offset || lcwis_value > cert.offset + d) {
        throw InvariantViolation("LCWIS value " + std::to_string(lcwis_value) + " outside feasible band [" +
                                 std::to_string(cert.offset) + ", " + std::to_string(cert.offset + d) + "]");
    }
    return d - (lcwis_value - cert.offset);
}

/// M - min u·v; requires a certificate produced from a CNF formula.
inline std::int64_t decode_maxsat(const ReductionCertificate& cert, Weight lcwis_value) {
    if (!cert.num_clauses) throw InvalidArgument("certificate carries no clause count");
    return static_cast<std::int64_t>(*cert.num_clauses) - decode(cert, lcwis_value);
}

inline LcwisInstance cnf_to_lcwis_instance(const CnfFormula& f) {
    auto [u, v] = vectors_from_cnf(f);
    auto out = ovp_to_lcwis_instance(u, v);
    out.certificate.num_clauses = f.clauses.size();
    return out;
}

inline constexpr int kDefaultMaxsatBudget = 12;

/// Maximum number of simultaneously satisfiable clauses, computed by a
/// single LCWIS solve on the reduced instance.
inline std::int64_t maxsat_via_lcwis(const CnfFormula& f, int budget = kDefaultMaxsatBudget) {
    if (f.num_vars > budget) {
        throw BudgetExceeded(std::to_string(f.num_vars) + " variables exceed the budget of " +
                             std::to_string(budget));
    }
    const auto inst = cnf_to_lcwis_instance(f);
    return decode_maxsat(inst.certificate, lcwis(inst.a, inst.b).value);
}

inline constexpr int kMaxsatOracleBudget = 20;

inline std::int64_t maxsat_oracle(const CnfFormula& f) {
    validate(f);
    if (f.num_vars > kMaxsatOracleBudget) {
        throw BudgetExceeded("maxsat oracle is limited to " + std::to_string(kMaxsatOracleBudget) + " variables");
    }
    std::int64_t best = 0;
    const std::uint64_t total = std::uint64_t{1} << f.num_vars;
    for (std::uint64_t alpha = 0; alpha < total; ++alpha) {
        std::int64_t sat = 0;
        for (const auto& clause : f.clauses) sat += satisfies(clause, alpha, 1, f.num_vars);
        best = std::max(best, sat);
    }
    return best;
}

}  // namespace cwis
