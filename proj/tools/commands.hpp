#pragma once

// Subcommand bodies for the `lcwis` binary. They take their streams as
// arguments and return the process exit code so tests can drive them
// in-process.
//
// Exit codes:
//   0  success
//   1  internal invariant breach, verification failure, oracle mismatch
//   2  unreadable or malformed input
//   3  budget exceeded

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcwis/lcwis.hpp"

namespace cwis::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;

class IoError : public Error {
public:
    using Error::Error;
};

struct RunConfig {
    std::uint64_t seed = 0;
    std::optional<std::size_t> trials;
    int budget_n = kDefaultMaxsatBudget;
    bool witness = false;
    std::optional<std::string> output_path;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
    if (!out) throw IoError("failed writing '" + path + "'");
}

// Parses `text` with `parse`, prefixing diagnostics with the file name.
template <class Parse>
auto parse_file(const std::string& path, Parse parse) {
    const auto text = read_file(path);
    try {
        return parse(text);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.message(), path);
    }
}

inline int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InvariantViolation& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const MissingWeight& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const Overflow& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

inline std::vector<Sequence> read_pair(const std::string& path) {
    auto seqs = parse_file(path, io::parse_sequences);
    if (seqs.size() != 2) {
        throw ParseError(seqs.size() + 1, "expected exactly two sequence lines, got " + std::to_string(seqs.size()),
                         path);
    }
    return seqs;
}

inline void print_result(std::ostream& out, const SolveResult& r, const Sequence& a, const Sequence& b,
                         const WeightedAlphabet* w) {
    if (r.witness) {
        const auto& c = *r.witness;
        const Weight measured = w ? total_weight(c, *w) : static_cast<Weight>(c.size());
        if (!is_weakly_increasing(c) || !is_subsequence(c, a) || !is_subsequence(c, b) || measured != r.value) {
            throw InvariantViolation("solver returned an invalid witness");
        }
    }
    out << "value=" << r.value << "\n";
    if (r.witness) out << "witness=" << io::serialize_sequence(*r.witness) << "\n";
}

inline int cmd_solve_lcwis(const std::string& pair_path, const RunConfig& cfg, std::ostream& out,
                           std::ostream& err) {
    return guarded(err, [&] {
        const auto seqs = read_pair(pair_path);
        print_result(out, lcwis(seqs[0], seqs[1], cfg.witness), seqs[0], seqs[1], nullptr);
        return kExitOk;
    });
}

inline int cmd_solve_wlcwis(const std::string& pair_path, const std::string& weights_path, const RunConfig& cfg,
                            std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto seqs = read_pair(pair_path);
        const auto w = parse_file(weights_path, io::parse_weights);
        print_result(out, wlcwis(seqs[0], seqs[1], w, cfg.witness), seqs[0], seqs[1], &w);
        return kExitOk;
    });
}

inline CnfFormula read_cnf_within_budget(const std::string& path, int budget) {
    auto f = parse_file(path, io::parse_dimacs);
    if (f.num_vars > budget) {
        throw BudgetExceeded(std::to_string(f.num_vars) + " variables exceed the budget of " +
                             std::to_string(budget) + " (raise it with --unsafe-budget)");
    }
    return f;
}

// Emits `artifacts` (suffix, contents) either as files next to the output
// prefix or, without --output, to stdout in order.
inline void emit(const RunConfig& cfg, const std::vector<std::pair<std::string, std::string>>& artifacts,
                 const std::string& sizes, std::ostream& out, std::ostream& err) {
    if (cfg.output_path) {
        for (const auto& [suffix, text] : artifacts) write_file(*cfg.output_path + suffix, text);
        out << sizes;
        for (const auto& [suffix, text] : artifacts) out << "wrote " << *cfg.output_path + suffix << "\n";
        return;
    }
    for (const auto& [suffix, text] : artifacts) out << text;
    err << sizes;
}

inline void emit_lcwis_instance(const LcwisInstance& inst, const RunConfig& cfg, std::ostream& out,
                                std::ostream& err) {
    const auto& c = inst.certificate;
    std::ostringstream sizes;
    sizes << "n=" << c.n << " d=" << c.d << " ell=" << c.ell << " offset=" << c.offset
          << " len_a=" << inst.a.size() << " len_b=" << inst.b.size() << "\n";
    const std::vector<Sequence> pair = {inst.a, inst.b};
    emit(cfg, {{".seq", io::serialize_sequences(pair)}, {".cert", io::serialize_certificate(c)}}, sizes.str(), out,
         err);
}

inline int cmd_reduce_cnf_to_ovp(const std::string& cnf_path, const RunConfig& cfg, std::ostream& out,
                                 std::ostream& err) {
    return guarded(err, [&] {
        const auto f = read_cnf_within_budget(cnf_path, cfg.budget_n);
        const auto [u, v] = vectors_from_cnf(f);
        std::ostringstream sizes;
        sizes << "vars=" << f.num_vars << " clauses=" << f.clauses.size() << " |U|=" << u.vectors.size()
              << " |V|=" << v.vectors.size() << " d=" << u.dim << "\n";
        emit(cfg, {{".u.vec", io::serialize_vectors(u)}, {".v.vec", io::serialize_vectors(v)}}, sizes.str(), out,
             err);
        return kExitOk;
    });
}

inline int cmd_reduce_ovp_to_lcwis(const std::string& u_path, const std::string& v_path, const RunConfig& cfg,
                                   std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto u = parse_file(u_path, io::parse_vectors);
        const auto v = parse_file(v_path, io::parse_vectors);
        emit_lcwis_instance(ovp_to_lcwis_instance(u, v), cfg, out, err);
        return kExitOk;
    });
}

inline int cmd_reduce_cnf_to_lcwis(const std::string& cnf_path, const RunConfig& cfg, std::ostream& out,
                                   std::ostream& err) {
    return guarded(err, [&] {
        const auto f = read_cnf_within_budget(cnf_path, cfg.budget_n);
        emit_lcwis_instance(cnf_to_lcwis_instance(f), cfg, out, err);
        return kExitOk;
    });
}

inline int cmd_decode(const std::string& cert_path, Weight lcwis_value, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto cert = parse_file(cert_path, io::parse_certificate);
        const auto min_ip = decode(cert, lcwis_value);
        out << "min_inner_product=" << min_ip << "\n";
        if (cert.num_clauses) out << "maxsat=" << decode_maxsat(cert, lcwis_value) << "\n";
        return kExitOk;
    });
}

inline int cmd_maxsat(const std::string& cnf_path, bool check_oracle, const RunConfig& cfg, std::ostream& out,
                      std::ostream& err) {
    return guarded(err, [&] {
        const auto f = read_cnf_within_budget(cnf_path, cfg.budget_n);
        const auto value = maxsat_via_lcwis(f, cfg.budget_n);
        out << "maxsat=" << value << "\n";
        if (check_oracle) {
            const auto expected = maxsat_oracle(f);
            out << "oracle=" << expected << "\n";
            if (expected != value) {
                err << "mismatch: lcwis pipeline gives " << value << ", oracle gives " << expected << "\n";
                return kExitInternal;
            }
        }
        return kExitOk;
    });
}

inline int cmd_verify(const std::vector<std::string>& suites, const RunConfig& cfg, std::ostream& out,
                      std::ostream& err, const verify::SolverSet& solvers = verify::SolverSet::reference()) {
    return guarded(err, [&] {
        const auto results = verify::run({cfg.seed, cfg.trials}, suites, solvers);
        verify::report(out, results);
        const bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.ok(); });
        out << (ok ? "all suites passed" : "verification FAILED") << "\n";
        return ok ? kExitOk : kExitInternal;
    });
}

inline int cmd_bench(const std::vector<std::size_t>& sizes, std::size_t repeats, const RunConfig& cfg,
                     std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        bench::print(out, bench::run(sizes, repeats, cfg.seed));
        return kExitOk;
    });
}

}  // namespace cwis::cli
