#pragma once

// Line-oriented ASCII formats. Every writer ends its output with a newline;
// every reader reports rejections as ParseError with a 1-based line number.
//
//   sequences    one sequence per line, symbols as space-separated decimals
//   weights      whitespace-separated `symbol:weight` tokens
//   vectors      `d=<d>` then one vector per line, d space-separated 0/1
//   DIMACS CNF   `c` comments, `p cnf N M`, 0-terminated clauses
//   instance     `n=<n> ell=<l> offset=<o>`, P1, P2, weights, `A B Y Z`
//   certificate  `n=<n> d=<d> ell=<l> offset=<o> clauses=<M|->`

#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcwis/error.hpp"
#include "lcwis/gadgets.hpp"
#include "lcwis/reductions.hpp"
#include "lcwis/sequence.hpp"

namespace cwis::io {

namespace detail {

struct Line {
    std::size_t number;
    std::string_view text;
};

// A trailing newline terminates the last line rather than opening a new one.
inline std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t start = 0;
    std::size_t number = 1;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({number++, line});
        start = end + 1;
    }
    return lines;
}

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

inline std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && is_space(line[k])) ++k;
        const std::size_t start = k;
        while (k < line.size() && !is_space(line[k])) ++k;
        if (k > start) out.push_back(line.substr(start, k - start));
    }
    return out;
}

inline std::string quoted(std::string_view token) {
    std::string out = "'";
    for (char c : token.substr(0, 32)) {
        out += (c >= 0x20 && c < 0x7f) ? c : '?';
    }
    if (token.size() > 32) out += "...";
    return out + "'";
}

template <class Int>
std::optional<Int> to_int(std::string_view token) {
    Int value{};
    if (token.size() > 1 && token.front() == '+') return std::nullopt;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
    return value;
}

inline std::int64_t parse_int(std::string_view token, std::size_t line, const char* what) {
    auto v = to_int<std::int64_t>(token);
    if (!v) throw ParseError(line, std::string("expected integer ") + what + ", got " + quoted(token));
    return *v;
}

inline Symbol parse_symbol(std::string_view token, std::size_t line) {
    const auto v = parse_int(token, line, "symbol");
    if (v < 0) throw ParseError(line, "negative symbol " + std::to_string(v));
    if (v > std::int64_t{std::numeric_limits<Symbol>::max()}) {
        throw ParseError(line, "symbol " + std::to_string(v) + " does not fit in 32 bits");
    }
    return static_cast<Symbol>(v);
}

inline Sequence parse_sequence_line(const Line& line) {
    Sequence seq;
    for (auto tok : tokens(line.text)) seq.push_back(parse_symbol(tok, line.number));
    return seq;
}

inline WeightedAlphabet parse_weights_line(const Line& line) {
    WeightedAlphabet w;
    for (auto tok : tokens(line.text)) {
        const auto colon = tok.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(line.number, "expected symbol:weight, got " + quoted(tok));
        }
        const Symbol s = parse_symbol(tok.substr(0, colon), line.number);
        const auto weight = parse_int(tok.substr(colon + 1), line.number, "weight");
        if (weight < 1) throw ParseError(line.number, "weight of symbol " + std::to_string(s) + " must be >= 1");
        if (weight > kWeightBudget) throw ParseError(line.number, "weight exceeds 2^62");
        if (w.contains(s)) throw ParseError(line.number, "symbol " + std::to_string(s) + " weighted twice");
        w.set(s, weight);
    }
    return w;
}

// Parses `k1=v1 k2=v2 ...` with exactly the given keys in order.
inline std::vector<std::string_view> key_values(const Line& line, std::initializer_list<const char*> keys) {
    auto toks = tokens(line.text);
    if (toks.size() != keys.size()) {
        throw ParseError(line.number, "expected " + std::to_string(keys.size()) + " key=value fields, got " +
                                          std::to_string(toks.size()));
    }
    std::vector<std::string_view> values;
    std::size_t k = 0;
    for (const char* key : keys) {
        const std::string_view tok = toks[k++];
        const std::string prefix = std::string(key) + "=";
        if (tok.substr(0, prefix.size()) != prefix) {
            throw ParseError(line.number, "expected field '" + std::string(key) + "=', got " + quoted(tok));
        }
        values.push_back(tok.substr(prefix.size()));
    }
    return values;
}

inline std::int64_t non_negative(std::string_view token, std::size_t line, const char* what) {
    const auto v = parse_int(token, line, what);
    if (v < 0) throw ParseError(line, std::string(what) + " must be non-negative");
    return v;
}

}  // namespace detail

// ---------------------------------------------------------------- sequences

inline std::string serialize_sequence(std::span<const Symbol> s) {
    std::string out;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k > 0) out += ' ';
        out += std::to_string(s[k]);
    }
    return out;
}

inline std::string serialize_sequences(std::span<const Sequence> seqs) {
    std::string out;
    for (const auto& s : seqs) out += serialize_sequence(s) + "\n";
    return out;
}

/// One sequence per line; an empty line is an empty sequence.
inline std::vector<Sequence> parse_sequences(std::string_view text) {
    std::vector<Sequence> out;
    for (const auto& line : detail::split_lines(text)) out.push_back(detail::parse_sequence_line(line));
    return out;
}

// ------------------------------------------------------------------ weights

inline std::string serialize_weights(const WeightedAlphabet& w) {
    std::string out;
    for (const auto& [s, weight] : w) {
        if (!out.empty()) out += ' ';
        out += std::to_string(s) + ":" + std::to_string(weight);
    }
    return out + "\n";
}

inline WeightedAlphabet parse_weights(std::string_view text) {
    WeightedAlphabet w;
    for (const auto& line : detail::split_lines(text)) {
        for (const auto& [s, weight] : detail::parse_weights_line(line)) {
            if (w.contains(s)) throw ParseError(line.number, "symbol " + std::to_string(s) + " weighted twice");
            w.set(s, weight);
        }
    }
    return w;
}

// ------------------------------------------------------------------ vectors

inline std::string serialize_vectors(const BitVectorSet& set) {
    std::string out = "d=" + std::to_string(set.dim) + "\n";
    for (const auto& v : set.vectors) {
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (k > 0) out += ' ';
            out += v[k] ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

inline BitVectorSet parse_vectors(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.empty()) throw ParseError(1, "missing 'd=<d>' header");
    BitVectorSet set;
    const auto header = detail::key_values(lines.front(), {"d"});
    const auto d = detail::non_negative(header[0], 1, "dimension");
    if (d < 1) throw ParseError(1, "dimension must be >= 1");
    if (d > (std::int64_t{1} << 24)) throw ParseError(1, "dimension too large");
    set.dim = static_cast<std::size_t>(d);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& line = lines[k];
        const auto toks = detail::tokens(line.text);
        if (toks.size() != set.dim) {
            throw ParseError(line.number, "ragged row: expected " + std::to_string(set.dim) + " entries, got " +
                                              std::to_string(toks.size()));
        }
        BitVector v;
        v.reserve(set.dim);
        for (auto tok : toks) {
            if (tok != "0" && tok != "1") throw ParseError(line.number, "non-binary entry " + detail::quoted(tok));
            v.push_back(tok == "1" ? 1 : 0);
        }
        set.vectors.push_back(std::move(v));
    }
    return set;
}

// ------------------------------------------------------------------- DIMACS

inline std::string serialize_dimacs(const CnfFormula& f) {
    std::string out = "p cnf " + std::to_string(f.num_vars) + " " + std::to_string(f.clauses.size()) + "\n";
    for (const auto& clause : f.clauses) {
        for (int lit : clause) out += std::to_string(lit) + " ";
        out += "0\n";
    }
    return out;
}

/// DIMACS CNF subset: `c` comment lines, a single `p cnf N M` header and
/// 0-terminated clauses that may span lines. Clauses containing a literal
/// and its negation are rejected.
inline CnfFormula parse_dimacs(std::string_view text) {
    const auto lines = detail::split_lines(text);
    CnfFormula f;
    std::optional<std::int64_t> declared;
    Clause pending;
    bool open = false;
    std::size_t open_line = 0;

    for (const auto& line : lines) {
        const auto toks = detail::tokens(line.text);
        if (toks.empty()) continue;
        if (toks.front().front() == 'c') continue;
        if (toks.front() == "p") {
            if (declared) throw ParseError(line.number, "duplicate problem header");
            if (toks.size() != 4 || toks[1] != "cnf") throw ParseError(line.number, "expected 'p cnf <vars> <clauses>'");
            const auto n = detail::non_negative(toks[2], line.number, "variable count");
            const auto m = detail::non_negative(toks[3], line.number, "clause count");
            if (n > std::numeric_limits<int>::max() / 2) throw ParseError(line.number, "variable count too large");
            f.num_vars = static_cast<int>(n);
            declared = m;
            continue;
        }
        if (!declared) throw ParseError(line.number, "missing 'p cnf' header before clauses");
        for (auto tok : toks) {
            const auto lit = detail::parse_int(tok, line.number, "literal");
            if (lit == 0) {
                for (int x : pending) {
                    if (std::find(pending.begin(), pending.end(), -x) != pending.end()) {
                        throw ParseError(line.number, "tautological clause contains " + std::to_string(x) +
                                                          " and " + std::to_string(-x));
                    }
                }
                f.clauses.push_back(std::move(pending));
                pending.clear();
                open = false;
                if (static_cast<std::int64_t>(f.clauses.size()) > *declared) {
                    throw ParseError(line.number, "clause-count mismatch: more than " + std::to_string(*declared) +
                                                      " clauses");
                }
                continue;
            }
            if (lit < -f.num_vars || lit > f.num_vars) {
                throw ParseError(line.number, "literal " + std::to_string(lit) + " out of range for " +
                                                  std::to_string(f.num_vars) + " variables");
            }
            if (!open) open_line = line.number;
            open = true;
            pending.push_back(static_cast<int>(lit));
        }
    }
    const std::size_t last = lines.empty() ? 1 : lines.back().number;
    if (!declared) throw ParseError(last, "missing 'p cnf' header");
    if (open) throw ParseError(open_line, "clause not terminated by 0");
    if (static_cast<std::int64_t>(f.clauses.size()) != *declared) {
        throw ParseError(last, "clause-count mismatch at end of input: header declares " + std::to_string(*declared) +
                                   ", found " + std::to_string(f.clauses.size()));
    }
    return f;
}

// ------------------------------------------------------ combined instances

inline std::string serialize_instance(const CombinedInstance& inst) {
    std::string out = "n=" + std::to_string(inst.n) + " ell=" + std::to_string(inst.ell) +
                      " offset=" + std::to_string(inst.offset) + "\n";
    out += serialize_sequence(inst.p1) + "\n";
    out += serialize_sequence(inst.p2) + "\n";
    out += serialize_weights(inst.weights);
    const auto& sp = inst.special;
    out += serialize_sequence(Sequence{sp.a, sp.b, sp.y, sp.z}) + "\n";
    return out;
}

inline CombinedInstance parse_instance(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.size() != 5) {
        throw ParseError(lines.empty() ? 1 : lines.back().number,
                         "instance needs 5 lines, got " + std::to_string(lines.size()));
    }
    CombinedInstance inst;
    const auto head = detail::key_values(lines[0], {"n", "ell", "offset"});
    const auto n = detail::non_negative(head[0], 1, "n");
    const auto ell = detail::non_negative(head[1], 1, "ell");
    const auto offset = detail::non_negative(head[2], 1, "offset");
    if (n < 1) throw ParseError(1, "n must be >= 1");
    if (ell < 1) throw ParseError(1, "ell must be >= 1");
    if (n > (std::int64_t{1} << 30) || ell > kWeightBudget / (24 * n)) throw ParseError(1, "instance too large");
    if (offset != (4 * n - 2) * ell) throw ParseError(1, "offset must equal (4n-2)*ell");
    inst.n = static_cast<std::size_t>(n);
    inst.ell = ell;
    inst.offset = offset;
    inst.p1 = detail::parse_sequence_line(lines[1]);
    inst.p2 = detail::parse_sequence_line(lines[2]);
    inst.weights = detail::parse_weights_line(lines[3]);
    const auto sp = detail::parse_sequence_line(lines[4]);
    if (sp.size() != 4) throw ParseError(5, "expected four separator symbols A B Y Z");
    inst.special = {sp[0], sp[1], sp[2], sp[3]};
    if (!(sp[0] < sp[1] && sp[2] < sp[3])) throw ParseError(5, "separators must satisfy A < B and Y < Z");
    for (const auto& [s, w] : inst.weights) {
        const bool is_special = s == sp[0] || s == sp[1] || s == sp[2] || s == sp[3];
        if (!is_special && !(sp[1] < s && s < sp[2])) {
            throw ParseError(4, "payload symbol " + std::to_string(s) + " not strictly between B and Y");
        }
    }
    auto expect_weight = [&](Symbol s, Weight w) {
        if (!inst.weights.contains(s) || inst.weights.weight(s) != w) {
            throw ParseError(4, "separator " + std::to_string(s) + " must have weight " + std::to_string(w));
        }
    };
    expect_weight(sp[0], ell);
    expect_weight(sp[3], ell);
    expect_weight(sp[1], 2 * ell);
    expect_weight(sp[2], 2 * ell);
    return inst;
}

// ------------------------------------------------------------- certificate

inline std::string serialize_certificate(const ReductionCertificate& c) {
    return "n=" + std::to_string(c.n) + " d=" + std::to_string(c.d) + " ell=" + std::to_string(c.ell) +
           " offset=" + std::to_string(c.offset) +
           " clauses=" + (c.num_clauses ? std::to_string(*c.num_clauses) : std::string("-")) + "\n";
}

inline ReductionCertificate parse_certificate(std::string_view text) {
    const auto lines = detail::split_lines(text);
    if (lines.size() != 1) throw ParseError(lines.empty() ? 1 : 2, "certificate is a single line");
    const auto f = detail::key_values(lines[0], {"n", "d", "ell", "offset", "clauses"});
    ReductionCertificate c;
    c.n = static_cast<std::size_t>(detail::non_negative(f[0], 1, "n"));
    c.d = static_cast<std::size_t>(detail::non_negative(f[1], 1, "d"));
    c.ell = detail::non_negative(f[2], 1, "ell");
    c.offset = detail::non_negative(f[3], 1, "offset");
    if (c.n < 1 || c.d < 1 || c.ell < 1) throw ParseError(1, "n, d and ell must be >= 1");
    if (c.n > (std::size_t{1} << 30) || c.d > (std::size_t{1} << 30) || c.ell > kWeightBudget / 64 / std::int64_t(c.n)) {
        throw ParseError(1, "certificate values too large");
    }
    if (c.offset != (4 * static_cast<Weight>(c.n) - 2) * c.ell) throw ParseError(1, "offset must equal (4n-2)*ell");
    if (f[4] != "-") c.num_clauses = static_cast<std::size_t>(detail::non_negative(f[4], 1, "clauses"));
    return c;
}

}  // namespace cwis::io
