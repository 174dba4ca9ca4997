#include <gtest/gtest.h>

#include <string>

#include "lcwis/gadgets.hpp"
#include "lcwis/io.hpp"
#include "lcwis/random.hpp"

using namespace cwis;

namespace {

template <class F>
std::size_t parse_error_line(F&& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.line();
    }
    ADD_FAILURE() << "expected ParseError";
    return 0;
}

}  // namespace

TEST(Dimacs, Basic) {
    const auto f = io::parse_dimacs("p cnf 3 2\n1 -2 0\n2 3 0\n");
    EXPECT_EQ(f.num_vars, 3);
    EXPECT_EQ(f.clauses, (std::vector<Clause>{{1, -2}, {2, 3}}));
}

TEST(Dimacs, CommentsAndSpanningClauses) {
    const auto f = io::parse_dimacs("c comment\np cnf 1 1\n1 0\n");
    EXPECT_EQ(f.num_vars, 1);
    EXPECT_EQ(f.clauses.size(), 1u);
    const auto g = io::parse_dimacs("c x\n\np cnf 4 2\n1 2\n-3 0 4\n0\n");
    EXPECT_EQ(g.clauses, (std::vector<Clause>{{1, 2, -3}, {4}}));
}

TEST(Dimacs, Errors) {
    EXPECT_EQ(parse_error_line([] { io::parse_dimacs("p cnf 1 2\n1 0\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { io::parse_dimacs("1 2 0\n"); }), 1u);
    EXPECT_EQ(parse_error_line([] { io::parse_dimacs(""); }), 1u);
    EXPECT_EQ(parse_error_line([] { io::parse_dimacs("p cnf 2 1\n1 3 0\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { io::parse_dimacs("p cnf 2 2\n1 2 0\n2 -2 0\n"); }), 3u);
    EXPECT_EQ(parse_error_line([] { io::parse_dimacs("p cnf 2 1\n1 2 0\n1 0\n"); }), 3u);
    EXPECT_EQ(parse_error_line([] { io::parse_dimacs("p cnf 2 1\n1 2\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { io::parse_dimacs("p cnf 2 1\np cnf 2 1\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { io::parse_dimacs("p sat 2 1\n"); }), 1u);
    EXPECT_EQ(parse_error_line([] { io::parse_dimacs("p cnf 2 1\n1 x 0\n"); }), 2u);
}

TEST(Dimacs, RoundTrip) {
    Rng rng(30);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_cnf(rng, rng.uniform_int(1, 10), rng.uniform_int(0, 15));
        ASSERT_EQ(io::parse_dimacs(io::serialize_dimacs(f)), f);
    }
}

TEST(Vectors, Parse) {
    const auto set = io::parse_vectors("d=2\n1 0\n0 1\n");
    EXPECT_EQ(set.dim, 2u);
    EXPECT_EQ(set.vectors, (std::vector<BitVector>{{1, 0}, {0, 1}}));
    EXPECT_EQ(parse_error_line([] { io::parse_vectors("d=2\n1 0 1\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { io::parse_vectors("d=2\n1 0\n1 2\n"); }), 3u);
    EXPECT_EQ(parse_error_line([] { io::parse_vectors("d=0\n"); }), 1u);
    EXPECT_EQ(parse_error_line([] { io::parse_vectors("dim=2\n"); }), 1u);
    EXPECT_EQ(parse_error_line([] { io::parse_vectors(""); }), 1u);
}

TEST(Vectors, RoundTrip) {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const auto set = random_vector_set(rng, rng.uniform(0, 6), rng.uniform(1, 9));
        const auto text = io::serialize_vectors(set);
        ASSERT_EQ(text.back(), '\n');
        ASSERT_EQ(io::parse_vectors(text), set);
    }
}

TEST(Sequences, Parse) {
    const auto seqs = io::parse_sequences("1 2 5 2 5 3\n2 4 5 2 3 4\n");
    ASSERT_EQ(seqs.size(), 2u);
    EXPECT_EQ(seqs[0], (Sequence{1, 2, 5, 2, 5, 3}));
    EXPECT_EQ(seqs[1], (Sequence{2, 4, 5, 2, 3, 4}));
    EXPECT_EQ(io::parse_sequences("\n"), std::vector<Sequence>{Sequence{}});
    EXPECT_EQ(io::parse_sequences("\n\n").size(), 2u);
    EXPECT_TRUE(io::parse_sequences("").empty());
    EXPECT_EQ(parse_error_line([] { io::parse_sequences("1 2\n3 -4\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { io::parse_sequences("1 a\n"); }), 1u);
    EXPECT_EQ(parse_error_line([] { io::parse_sequences("4294967296\n"); }), 1u);
}

TEST(Sequences, RoundTrip) {
    Rng rng(32);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Sequence> seqs;
        for (std::uint64_t k = 0, n = rng.uniform(0, 4); k < n; ++k) {
            seqs.push_back(random_sequence(rng, rng.uniform(0, 10), 0, 4000000000u));
        }
        ASSERT_EQ(io::parse_sequences(io::serialize_sequences(seqs)), seqs);
    }
}

TEST(Weights, ParseAndRoundTrip) {
    const auto w = io::parse_weights("3:1 4:2\n9:5\n");
    EXPECT_EQ(w.weight(3), 1);
    EXPECT_EQ(w.weight(4), 2);
    EXPECT_EQ(w.weight(9), 5);
    EXPECT_EQ(parse_error_line([] { io::parse_weights("3:1\n3:2\n"); }), 2u);
    EXPECT_EQ(parse_error_line([] { io::parse_weights("3:0\n"); }), 1u);
    EXPECT_EQ(parse_error_line([] { io::parse_weights("3\n"); }), 1u);
    Rng rng(33);
    for (int trial = 0; trial < 200; ++trial) {
        const auto lo = static_cast<Symbol>(rng.uniform(0, 100));
        const auto ws = random_weights(rng, lo, lo + static_cast<Symbol>(rng.uniform(0, 10)), 1000);
        ASSERT_EQ(io::parse_weights(io::serialize_weights(ws)), ws);
    }
}

TEST(Instance, RoundTrip) {
    Rng rng(34);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        const auto w = random_weights(rng, 3, 12, 4);
        std::vector<Sequence> s, t;
        for (std::size_t k = 0; k < n; ++k) {
            s.push_back(random_sequence(rng, rng.uniform(0, 6), 3, 12));
            t.push_back(random_sequence(rng, rng.uniform(0, 6), 3, 12));
        }
        const auto inst = combine(s, t, w);
        const auto text = io::serialize_instance(inst);
        ASSERT_EQ(io::parse_instance(text), inst);
        ASSERT_EQ(io::serialize_instance(io::parse_instance(text)), text);
    }
}

TEST(Instance, Format) {
    WeightedAlphabet unit;
    unit.set(3, 1);
    const std::vector<Sequence> s{{3}}, t{{3}};
    EXPECT_EQ(io::serialize_instance(combine(s, t, unit)),
              "n=1 ell=1 offset=2\n"
              "1 1 3 5 5\n"
              "5 4 2 1 3 5 4 2 1\n"
              "1:1 2:2 3:1 4:2 5:1\n"
              "1 2 4 5\n");
    EXPECT_EQ(parse_error_line([] { io::parse_instance("n=1 ell=1 offset=3\n1\n1\n1:1\n1 2 4 5\n"); }), 1u);
    EXPECT_EQ(parse_error_line([] { io::parse_instance("n=1 ell=1 offset=2\n1\n1\n"); }), 3u);
    EXPECT_EQ(parse_error_line([] { io::parse_instance("n=1 ell=1 offset=2\n1\n1\n1:1 2:2 4:2 5:1\n1 2 4\n"); }), 5u);
    EXPECT_EQ(parse_error_line([] { io::parse_instance("n=1 ell=1 offset=2\n1\n1\n1:1 2:2 4:2 5:2\n1 2 4 5\n"); }),
              4u);
}

TEST(Certificate, RoundTrip) {
    const ReductionCertificate with{4, 3, 6, 84, 3};
    EXPECT_EQ(io::serialize_certificate(with), "n=4 d=3 ell=6 offset=84 clauses=3\n");
    EXPECT_EQ(io::parse_certificate(io::serialize_certificate(with)), with);
    const ReductionCertificate without{1, 2, 3, 6, std::nullopt};
    EXPECT_EQ(io::serialize_certificate(without), "n=1 d=2 ell=3 offset=6 clauses=-\n");
    EXPECT_EQ(io::parse_certificate(io::serialize_certificate(without)), without);
    EXPECT_THROW(io::parse_certificate("n=1 d=2 ell=3 offset=7 clauses=-\n"), ParseError);
    EXPECT_THROW(io::parse_certificate("n=1 d=2 ell=3 clauses=-\n"), ParseError);
}

// Parsers must either return a value or throw ParseError, never anything
// else, on arbitrary input.
TEST(Parsers, NeverCrashOnArbitraryBytes) {
    Rng rng(35);
    const std::string alphabet = "0123456789 -:=\n\tpcnfdelo\r\x01\xff";
    auto mutate = [&](std::string text) {
        for (std::uint64_t k = 0, n = rng.uniform(0, 4); k < n && !text.empty(); ++k) {
            text[rng.uniform(0, text.size() - 1)] = alphabet[rng.uniform(0, alphabet.size() - 1)];
        }
        return text;
    };
    const std::vector<std::string> seeds = {
        "p cnf 3 2\n1 -2 0\n2 3 0\n", "d=2\n1 0\n0 1\n", "1 2 5\n2 4\n", "3:1 4:2\n",
        "n=1 ell=1 offset=2\n1 1 3 5 5\n5 4 2 1 3 5 4 2 1\n1:1 2:2 3:1 4:2 5:1\n1 2 4 5\n",
        "n=4 d=3 ell=6 offset=84 clauses=3\n"};
    for (int trial = 0; trial < 3000; ++trial) {
        std::string text;
        if (rng.coin()) {
            text = mutate(seeds[rng.uniform(0, seeds.size() - 1)]);
        } else {
            for (std::uint64_t k = 0, n = rng.uniform(0, 40); k < n; ++k) {
                text += alphabet[rng.uniform(0, alphabet.size() - 1)];
            }
        }
        auto attempt = [&](auto parse) {
            try {
                (void)parse(text);
            } catch (const ParseError&) {
            }
        };
        ASSERT_NO_THROW(attempt(io::parse_dimacs)) << text;
        ASSERT_NO_THROW(attempt(io::parse_vectors)) << text;
        ASSERT_NO_THROW(attempt(io::parse_sequences)) << text;
        ASSERT_NO_THROW(attempt(io::parse_weights)) << text;
        ASSERT_NO_THROW(attempt(io::parse_instance)) << text;
        ASSERT_NO_THROW(attempt(io::parse_certificate)) << text;
    }
}

TEST(ParseErrorText, SourcePrecedesLine) {
    EXPECT_STREQ(ParseError(3, "bad token").what(), "line 3: bad token");
    const ParseError e(3, "bad token", "in.cnf");
    EXPECT_STREQ(e.what(), "in.cnf: line 3: bad token");
    EXPECT_EQ(e.source(), "in.cnf");
    EXPECT_EQ(e.message(), "bad token");
}
