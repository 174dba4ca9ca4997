#pragma once

// Randomized and exhaustive property suites for the solvers, every gadget
// identity, and the reduction chain. Each suite compares the solver under
// test against an independent brute-force oracle or a closed form.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lcwis/gadgets.hpp"
#include "lcwis/io.hpp"
#include "lcwis/random.hpp"
#include "lcwis/reductions.hpp"
#include "lcwis/sequence.hpp"
#include "lcwis/solvers.hpp"

namespace cwis::verify {

/// The solvers a run checks. Tests swap in broken implementations to make
/// sure the suites notice.
struct SolverSet {
    std::function<SolveResult(std::span<const Symbol>, std::span<const Symbol>, bool)> lcwis;
    std::function<SolveResult(std::span<const Symbol>, std::span<const Symbol>, const WeightedAlphabet&, bool)>
        wlcwis;

    static SolverSet reference() {
        return {[](auto a, auto b, bool wit) { return ::cwis::lcwis(a, b, wit); },
                [](auto a, auto b, const WeightedAlphabet& w, bool wit) { return ::cwis::wlcwis(a, b, w, wit); }};
    }
};

struct Config {
    std::uint64_t seed = 0;
    /// Overrides the number of random trials of every suite.
    std::optional<std::size_t> trials;
};

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::string counterexample;

    bool ok() const { return failed == 0; }
};

namespace detail {

using Check = std::optional<std::string>;

class Fail {
public:
    template <class T>
    Fail& operator<<(const T& value) {
        std::ostringstream out;
        out << value;
        text_ += out.str();
        return *this;
    }
    Fail& operator<<(const Sequence& s) {
        text_ += '[' + io::serialize_sequence(s) + ']';
        return *this;
    }
    Fail& operator<<(const BitVector& v) {
        text_ += '(';
        for (std::size_t k = 0; k < v.size(); ++k) text_ += (k ? "," : "") + std::to_string(int(v[k]));
        text_ += ')';
        return *this;
    }
    operator Check() const { return text_; }

private:
    std::string text_;
};

class Runner {
public:
    explicit Runner(std::string name) { result_.name = std::move(name); }

    void record(const Check& failure) {
        if (!failure) {
            ++result_.passed;
            return;
        }
        if (result_.failed++ == 0) result_.counterexample = *failure;
    }

    SuiteResult result() const { return result_; }

private:
    SuiteResult result_;
};

inline Check witness_problem(const SolveResult& r, const Sequence& a, const Sequence& b,
                             const WeightedAlphabet* w) {
    if (!r.witness) return Fail() << "witness missing";
    const auto& c = *r.witness;
    if (!is_weakly_increasing(c)) return Fail() << "witness " << c << " not weakly increasing";
    if (!is_subsequence(c, a) || !is_subsequence(c, b)) {
        return Fail() << "witness " << c << " is not a common subsequence";
    }
    const Weight measured = w ? total_weight(c, *w) : static_cast<Weight>(c.size());
    if (measured != r.value) return Fail() << "witness " << c << " measures " << measured << " != " << r.value;
    return std::nullopt;
}

inline std::size_t trials_or(const Config& cfg, std::size_t fallback) { return cfg.trials.value_or(fallback); }

}  // namespace detail

// Exhaustive over x, y in {0,1} and i in 1..8.
inline SuiteResult coordinate_suite(const Config&, const SolverSet& solve) {
    detail::Runner run("coordinate");
    for (std::uint64_t i = 1; i <= 8; ++i) {
        for (int x = 0; x <= 1; ++x) {
            for (int y = 0; y <= 1; ++y) {
                const auto g1 = coordinate_gadget(GadgetSide::one, x, i);
                const auto g2 = coordinate_gadget(GadgetSide::two, y, i);
                const Weight expected = (x == 1 && y == 1) ? 0 : 1;
                const Weight got = solve.lcwis(g1, g2, false).value;
                auto in_band = [&](const Sequence& g) {
                    return std::all_of(g.begin(), g.end(), [&](Symbol s) { return s >= 3 * i && s <= 3 * i + 2; });
                };
                if (got != expected) {
                    run.record(detail::Fail() << "CG1(" << x << "," << i << ")=" << g1 << " CG2(" << y << "," << i
                                              << ")=" << g2 << " lcwis=" << got << " expected " << expected);
                } else if (!in_band(g1) || !in_band(g2)) {
                    run.record(detail::Fail() << "coordinate " << i << " leaves its symbol band");
                } else {
                    run.record(std::nullopt);
                }
            }
        }
    }
    return run.result();
}

inline detail::Check check_vector_pair(const SolverSet& solve, const BitVector& u, const BitVector& v) {
    const auto g1 = vector_gadget(GadgetSide::one, u);
    const auto g2 = vector_gadget(GadgetSide::two, v);
    const Weight expected = static_cast<Weight>(u.size()) - inner_product(u, v);
    const Weight got = solve.lcwis(g1, g2, false).value;
    if (got == expected) return std::nullopt;
    return detail::Fail() << "u=" << u << " v=" << v << " lcwis(VG1,VG2)=" << got << " expected d-u.v=" << expected;
}

// All pairs for d <= 4, then random pairs with d <= 12.
inline SuiteResult vector_suite(const Config& cfg, const SolverSet& solve) {
    detail::Runner run("vector");
    for (std::size_t d = 1; d <= 4; ++d) {
        for (std::uint32_t mu = 0; mu < (1U << d); ++mu) {
            for (std::uint32_t mv = 0; mv < (1U << d); ++mv) {
                BitVector u(d), v(d);
                for (std::size_t k = 0; k < d; ++k) {
                    u[k] = (mu >> k) & 1U;
                    v[k] = (mv >> k) & 1U;
                }
                run.record(check_vector_pair(solve, u, v));
            }
        }
    }
    Rng rng(cfg.seed);
    for (std::size_t t = 0, n = detail::trials_or(cfg, 500); t < n; ++t) {
        const auto d = static_cast<std::size_t>(rng.uniform(1, 12));
        const auto u = random_bits(rng, d);
        const auto v = random_bits(rng, d);
        run.record(check_vector_pair(solve, u, v));
    }
    return run.result();
}

inline detail::Check check_token_counts(const CombinedInstance& inst, std::span<const Sequence> s,
                                        std::span<const Sequence> t) {
    std::size_t sum_s = 0, sum_t = 0;
    for (const auto& x : s) sum_s += x.size();
    for (const auto& x : t) sum_t += x.size();
    const std::size_t n = s.size();
    const std::size_t want1 = 2 * n + sum_s + 2 * (n - 1) + 2 * n;
    const std::size_t want2 = 4 * n + sum_t + 4 * (n - 1) + 4 * n;
    if (inst.p1.size() != want1 || inst.p2.size() != want2) {
        return detail::Fail() << "token counts |P1|=" << inst.p1.size() << " |P2|=" << inst.p2.size()
                              << " expected " << want1 << " and " << want2;
    }
    return std::nullopt;
}

// Combined-instance equality on random payloads drawn from 3..11 with unit
// weights, cross-checked with the brute-force oracle where it fits.
inline SuiteResult main_lemma_suite(const Config& cfg, const SolverSet& solve) {
    detail::Runner run("main-lemma");
    Rng rng(cfg.seed);
    const auto unit = WeightedAlphabet::unit(3, 11);
    for (std::size_t trial = 0, count = detail::trials_or(cfg, 500); trial < count; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        std::vector<Sequence> s, t;
        for (std::size_t k = 0; k < n; ++k) {
            s.push_back(random_sequence(rng, rng.uniform(0, 6), 3, 11));
            t.push_back(random_sequence(rng, rng.uniform(0, 6), 3, 11));
        }
        const auto inst = combine(s, t, unit);

        Weight best = 0;
        Weight best_oracle = 0;
        for (const auto& si : s) {
            for (const auto& tj : t) {
                best = std::max(best, solve.wlcwis(si, tj, unit, false).value);
                best_oracle = std::max(best_oracle, wlcwis_oracle(si, tj, unit));
            }
        }
        const Weight got = solve.wlcwis(inst.p1, inst.p2, inst.weights, false).value;
        const Weight expected = best_oracle + inst.offset;

        auto describe = [&]() {
            detail::Fail f;
            f << "n=" << n << " ell=" << inst.ell << " S=";
            for (const auto& x : s) f << x;
            f << " T=";
            for (const auto& x : t) f << x;
            return f;
        };
        if (best != best_oracle) {
            run.record(describe() << " pairwise max " << best << " != oracle " << best_oracle);
        } else if (got != expected) {
            run.record(describe() << " WLCWIS(P1,P2)=" << got << " expected " << expected);
        } else if (std::min(inst.p1.size(), inst.p2.size()) <= kOracleMaxLength &&
                   wlcwis_oracle(inst.p1, inst.p2, inst.weights) != expected) {
            run.record(describe() << " oracle on P1,P2 disagrees with " << expected);
        } else {
            run.record(check_token_counts(inst, s, t));
        }
    }
    return run.result();
}

// LCWIS of the expanded pair against WLCWIS of the weighted pair.
inline SuiteResult expansion_suite(const Config& cfg, const SolverSet& solve) {
    detail::Runner run("expansion");
    Rng rng(cfg.seed);
    for (std::size_t trial = 0, count = detail::trials_or(cfg, 500); trial < count; ++trial) {
        const auto top = static_cast<Symbol>(rng.uniform(0, 6));
        const auto w = random_weights(rng, 0, top, 4);
        const auto a = random_sequence(rng, rng.uniform(0, 8), 0, top);
        const auto b = random_sequence(rng, rng.uniform(0, 8), 0, top);
        const auto ea = expand_weights(a, w);
        const auto eb = expand_weights(b, w);
        const Weight expanded = solve.lcwis(ea, eb, false).value;
        const Weight weighted = solve.wlcwis(a, b, w, false).value;
        const Weight oracle = wlcwis_oracle(a, b, w);
        if (expanded != weighted || weighted != oracle) {
            run.record(detail::Fail() << "A=" << a << " B=" << b << " w=" << io::serialize_weights(w)
                                      << " lcwis(expanded)=" << expanded << " wlcwis=" << weighted
                                      << " oracle=" << oracle);
        } else if (ea.size() != static_cast<std::size_t>(total_weight(a, w))) {
            run.record(detail::Fail() << "expanded length mismatch for A=" << a);
        } else {
            run.record(std::nullopt);
        }
    }
    return run.result();
}

// Solver against brute force, plus symmetry, bounds, witness validity and
// the unit-weight degeneracy.
inline SuiteResult oracle_suite(const Config& cfg, const SolverSet& solve) {
    detail::Runner run("oracle");
    Rng rng(cfg.seed);
    for (std::size_t trial = 0, count = detail::trials_or(cfg, 1000); trial < count; ++trial) {
        const auto alphabet = static_cast<Symbol>(rng.uniform(1, 5));
        const auto a = random_sequence(rng, rng.uniform(0, 12), 0, alphabet - 1);
        const auto b = random_sequence(rng, rng.uniform(0, 12), 0, alphabet - 1);
        const auto w = random_weights(rng, 0, alphabet - 1, 5);
        const auto unit = WeightedAlphabet::unit(0, alphabet - 1);

        auto fail = [&]() { return detail::Fail() << "A=" << a << " B=" << b << " w=" << io::serialize_weights(w); };

        const auto plain = solve.lcwis(a, b, true);
        const auto weighted = solve.wlcwis(a, b, w, true);
        const Weight plain_oracle = lcwis_oracle(a, b);
        const Weight weighted_oracle = wlcwis_oracle(a, b, w);

        if (plain.value != plain_oracle) {
            run.record(fail() << " lcwis=" << plain.value << " oracle=" << plain_oracle);
        } else if (weighted.value != weighted_oracle) {
            run.record(fail() << " wlcwis=" << weighted.value << " oracle=" << weighted_oracle);
        } else if (auto bad = detail::witness_problem(plain, a, b, nullptr)) {
            run.record(fail() << " lcwis " << *bad);
        } else if (auto bad_w = detail::witness_problem(weighted, a, b, &w)) {
            run.record(fail() << " wlcwis " << *bad_w);
        } else if (solve.lcwis(b, a, false).value != plain.value ||
                   solve.wlcwis(b, a, w, false).value != weighted.value) {
            run.record(fail() << " not symmetric");
        } else if (plain.value < 0 || plain.value > static_cast<Weight>(std::min(a.size(), b.size())) ||
                   weighted.value > std::min(total_weight(a, w), total_weight(b, w))) {
            run.record(fail() << " value out of bounds");
        } else if (solve.wlcwis(a, b, unit, false).value != plain.value) {
            run.record(fail() << " unit-weight wlcwis differs from lcwis");
        } else {
            run.record(std::nullopt);
        }
    }
    return run.result();
}

inline SuiteResult and_or_suite(const Config& cfg, const SolverSet& solve) {
    detail::Runner run("and-or");
    Rng rng(cfg.seed);
    const std::size_t count = detail::trials_or(cfg, 200);
    auto random_pair = [&](std::size_t max_len, Symbol top) {
        return SequencePair{random_sequence(rng, rng.uniform(0, max_len), 0, top),
                            random_sequence(rng, rng.uniform(0, max_len), 0, top)};
    };
    auto describe = [](detail::Fail& f, const SequencePair& p) -> detail::Fail& {
        return f << "(" << p.first << "," << p.second << ")";
    };

    for (std::size_t trial = 0; trial < count; ++trial) {
        const auto p = random_pair(8, static_cast<Symbol>(rng.uniform(0, 6)));
        const auto q = random_pair(8, static_cast<Symbol>(rng.uniform(0, 6)));
        const auto joined = and_gadget(p, q);
        const Weight got = solve.lcwis(joined.first, joined.second, false).value;
        const Weight expected = lcwis_oracle(p.first, p.second) + lcwis_oracle(q.first, q.second);
        if (got != expected) {
            detail::Fail f;
            f << "AND ";
            describe(f, p) << " & ";
            run.record(describe(f, q) << " lcwis=" << got << " expected " << expected);
        } else {
            run.record(std::nullopt);
        }
    }

    for (std::size_t trial = 0; trial < count; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        std::vector<SequencePair> pairs;
        Weight expected = 0;
        for (std::size_t k = 0; k < n; ++k) {
            pairs.push_back(random_pair(5, static_cast<Symbol>(rng.uniform(0, 4))));
            expected = std::max(expected, lcwis_oracle(pairs.back().first, pairs.back().second));
        }
        const auto inst = or_gadget(pairs);
        const Weight got = solve.wlcwis(inst.p1, inst.p2, inst.weights, false).value - inst.offset;
        if (got != expected) {
            detail::Fail f;
            f << "OR";
            for (const auto& p : pairs) describe(f << " ", p);
            run.record(f << " decoded=" << got << " expected " << expected);
        } else {
            run.record(std::nullopt);
        }
    }
    return run.result();
}

// Random vector sets through the full instance construction.
inline SuiteResult ovp_suite(const Config& cfg, const SolverSet& solve) {
    detail::Runner run("ovp");
    Rng rng(cfg.seed);
    for (std::size_t trial = 0, count = detail::trials_or(cfg, 200); trial < count; ++trial) {
        const auto d = static_cast<std::size_t>(rng.uniform(1, 4));
        const auto u = random_vector_set(rng, rng.uniform(1, 4), d);
        const auto v = random_vector_set(rng, rng.uniform(1, 4), d);
        const auto inst = ovp_to_lcwis_instance(u, v);
        const auto expected = ovp_oracle(u, v, 0).min_inner_product;
        const Weight value = solve.lcwis(inst.a, inst.b, false).value;
        std::optional<std::int64_t> decoded;
        try {
            decoded = decode(inst.certificate, value);
        } catch (const InvariantViolation&) {
        }
        if (decoded != expected) {
            run.record(detail::Fail() << "U=" << io::serialize_vectors(u) << "V=" << io::serialize_vectors(v)
                                      << "lcwis=" << value << " offset=" << inst.certificate.offset
                                      << " expected min u.v=" << expected);
        } else {
            run.record(std::nullopt);
        }
    }
    return run.result();
}

inline std::size_t emitted_size_bound(const ReductionCertificate& c) { return 60 * c.n * c.d; }

// CNF formulas through the whole chain against exhaustive MAX-SAT.
inline SuiteResult pipeline_suite(const Config& cfg, const SolverSet& solve) {
    detail::Runner run("pipeline");
    Rng rng(cfg.seed);
    for (std::size_t trial = 0, count = detail::trials_or(cfg, 100); trial < count; ++trial) {
        const int num_vars = rng.uniform_int(1, 8);
        const int num_clauses = rng.uniform_int(1, 12);
        const auto f = random_cnf(rng, num_vars, num_clauses);
        const auto inst = cnf_to_lcwis_instance(f);
        const Weight value = solve.lcwis(inst.a, inst.b, false).value;
        std::optional<std::int64_t> got;
        try {
            got = decode_maxsat(inst.certificate, value);
        } catch (const InvariantViolation&) {
        }
        const auto expected = maxsat_oracle(f);
        const auto bound = emitted_size_bound(inst.certificate);
        if (got != expected) {
            run.record(detail::Fail() << io::serialize_dimacs(f) << "maxsat via lcwis "
                                      << (got ? std::to_string(*got) : "undecodable") << " expected " << expected);
        } else if (inst.a.size() > bound || inst.b.size() > bound) {
            run.record(detail::Fail() << io::serialize_dimacs(f) << "instance lengths " << inst.a.size() << ","
                                      << inst.b.size() << " exceed 60nd=" << bound);
        } else {
            run.record(std::nullopt);
        }
    }
    return run.result();
}

// Closed-form token counts before and after expansion, and the 60nd bound
// of the CNF chain.
inline SuiteResult size_suite(const Config& cfg, const SolverSet&) {
    detail::Runner run("size");
    Rng rng(cfg.seed);
    for (std::size_t trial = 0, count = detail::trials_or(cfg, 200); trial < count; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 8));
        std::vector<Sequence> s, t;
        std::size_t sum_s = 0, sum_t = 0;
        for (std::size_t k = 0; k < n; ++k) {
            s.push_back(random_sequence(rng, rng.uniform(0, 10), 3, 20));
            t.push_back(random_sequence(rng, rng.uniform(0, 10), 3, 20));
            sum_s += s.back().size();
            sum_t += t.back().size();
        }
        const auto inst = combine(s, t, WeightedAlphabet::unit(3, 20));
        if (auto bad = check_token_counts(inst, s, t)) {
            run.record(bad);
            continue;
        }
        const auto ell = static_cast<std::size_t>(inst.ell);
        const auto e1 = expand_weights(inst.p1, inst.weights).size();
        const auto e2 = expand_weights(inst.p2, inst.weights).size();
        const std::size_t want1 = 4 * n * ell + 4 * ell * (n - 1) + sum_s;
        const std::size_t want2 = 6 * ell * (3 * n - 1) + sum_t;
        if (e1 != want1 || e2 != want2) {
            run.record(detail::Fail() << "n=" << n << " ell=" << ell << " expanded lengths " << e1 << "," << e2
                                      << " expected " << want1 << "," << want2);
            continue;
        }

        const auto f = random_cnf(rng, rng.uniform_int(1, 8), rng.uniform_int(1, 12));
        const auto chain = cnf_to_lcwis_instance(f);
        const auto bound = emitted_size_bound(chain.certificate);
        if (chain.a.size() > bound || chain.b.size() > bound) {
            run.record(detail::Fail() << io::serialize_dimacs(f) << "lengths " << chain.a.size() << ","
                                      << chain.b.size() << " exceed 60nd=" << bound);
        } else {
            run.record(std::nullopt);
        }
    }
    return run.result();
}

struct Suite {
    const char* name;
    SuiteResult (*run)(const Config&, const SolverSet&);
};

inline const std::vector<Suite>& suites() {
    static const std::vector<Suite> all = {
        {"coordinate", coordinate_suite}, {"vector", vector_suite},     {"main-lemma", main_lemma_suite},
        {"expansion", expansion_suite},   {"oracle", oracle_suite},     {"and-or", and_or_suite},
        {"ovp", ovp_suite},               {"pipeline", pipeline_suite}, {"size", size_suite},
    };
    return all;
}

/// Runs the named suites (all of them when `selected` is empty). Unknown
/// names throw InvalidArgument.
inline std::vector<SuiteResult> run(const Config& cfg, const std::vector<std::string>& selected,
                                    const SolverSet& solve = SolverSet::reference()) {
    for (const auto& name : selected) {
        const bool known = std::any_of(suites().begin(), suites().end(), [&](const Suite& s) { return name == s.name; });
        if (!known) throw InvalidArgument("unknown suite '" + name + "'");
    }
    std::vector<SuiteResult> results;
    for (const auto& suite : suites()) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), suite.name) == selected.end()) continue;
        results.push_back(suite.run(cfg, solve));
    }
    return results;
}

inline void report(std::ostream& out, const std::vector<SuiteResult>& results) {
    for (const auto& r : results) {
        out << "suite=" << r.name << " passed=" << r.passed << " failed=" << r.failed << "\n";
        if (!r.ok()) out << "counterexample[" << r.name << "]: " << r.counterexample << "\n";
    }
}

}  // namespace cwis::verify
