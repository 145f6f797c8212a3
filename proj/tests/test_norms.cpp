#include <gtest/gtest.h>

#include "corpus_fixtures.hpp"
#include "frobform/expression.hpp"
#include "frobform/norms.hpp"
#include "frobform/random.hpp"

using namespace frobform;
using fixtures::label;
using fixtures::lit;

namespace {

const FieldSpec Q = FieldSpec::rationals();

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

std::vector<std::string> strings(const std::vector<Scalar> &v) {
    std::vector<std::string> out;
    for (const auto &x : v)
        out.push_back(x.to_string());
    return out;
}

} // namespace

TEST(RootSeries, FrozenBinomialCoefficients) {
    // sqrt(1 + T/4) and (1 + T)^(1/3), from the binomial series
    EXPECT_EQ(strings(truncated_root_series(Scalar(Q, 1), 2, lit(Q, "1/4"), 4)),
              (std::vector<std::string>{"1", "1/8", "-1/128", "1/1024"}));
    EXPECT_EQ(strings(truncated_root_series(Scalar(Q, 1), 3, lit(Q, "1"), 4)),
              (std::vector<std::string>{"1", "1/3", "-1/9", "5/81"}));
    EXPECT_EQ(strings(truncated_root_series(lit(Q, "2"), 2, lit(Q, "1"), 3)),
              (std::vector<std::string>{"2", "1/4", "-1/64"}));
    EXPECT_EQ(code_of([] { truncated_root_series(Scalar(FieldSpec::prime(3), 1), 3, Scalar(FieldSpec::prime(3), 1), 3); }),
              ErrorCode::BadCharacteristic);
}

TEST(CentralSquareRoot, KnownValueInTruncatedPoly) {
    Algebra a = truncated_poly(Q, 4).algebra;
    auto [alpha, v] = central_square_root(a, parse_element("4 + t", a));
    EXPECT_EQ(alpha, Scalar(Q, 4));
    EXPECT_EQ(v, parse_element("1 + 1/8*t - 1/128*t2 + 1/1024*t3", a));
}

TEST(CentralSquareRoot, RandomUnits) {
    for (const auto &e : fixtures::local_corpus(false)) {
        if (e.algebra.field().characteristic() == 2)
            continue;
        auto local = local_structure(e.algebra);
        Rng rng(6);
        for (int t = 0; t < 30; ++t) {
            Element u = random_unit(e.algebra, rng, &*local);
            auto [alpha, v] = central_square_root(e.algebra, u);
            EXPECT_EQ(alpha * (v * v), u) << label(e);
            EXPECT_TRUE(local->residue(v).is_one());
        }
    }
}

TEST(CentralSquareRoot, Guards) {
    Algebra f2 = truncated_poly(FieldSpec::prime(2), 3).algebra;
    EXPECT_EQ(code_of([&] { central_square_root(f2, f2.one()); }), ErrorCode::BadCharacteristic);
    Algebra t = truncated_poly(Q, 3).algebra;
    EXPECT_EQ(code_of([&] { central_square_root(t, parse_element("t", t)); }), ErrorCode::NotAUnit);
    CorpusEntry c2 = group_algebra(Q, {{0, 1}, {1, 0}});
    EXPECT_EQ(code_of([&] { central_square_root(c2.algebra, c2.algebra.one()); }), ErrorCode::NotLocal);
}

TEST(FixedNthRoot, KnownValue) {
    Algebra a = truncated_poly(Q, 3).algebra;
    Element u = fixed_nth_root(a, parse_element("1 + t", a), Endo::identity(a), 3);
    EXPECT_EQ(u, parse_element("1 + 1/3*t - 1/9*t2", a));
}

TEST(FixedNthRoot, RandomFixedUnits) {
    for (const auto &e : fixtures::local_corpus(false)) {
        const Algebra &a = e.algebra;
        auto local = local_structure(a);
        Endo sigma = nakayama(e.form());
        Rng rng(19);
        int done = 0;
        for (int t = 0; t < 60 && done < 15; ++t) {
            // sigma-fixed units: norms over a finite-order sigma, or the identity map
            Element x = random_unit(a, rng, &*local);
            Endo fix = Endo::identity(a);
            if (auto n = automorphism_order(sigma, 8)) {
                x = partial_norm(sigma, x, *n);
                fix = sigma;
            }
            if (!(fix(x) == x))
                continue;
            std::size_t n = 1 + static_cast<std::size_t>(t % 4);
            if (a.field().characteristic() && n % a.field().characteristic() == 0)
                continue;
            if (!nth_root_in_k(local->residue(x), n))
                continue;
            Element u = fixed_nth_root(a, x, fix, n);
            EXPECT_EQ(u.pow(n), x) << label(e);
            EXPECT_EQ(fix(u), u);
            EXPECT_EQ(u * x, x * u);
            ++done;
        }
        EXPECT_GT(done, 0) << label(e);
    }
}

TEST(FixedNthRoot, Guards) {
    Algebra a = truncated_poly(Q, 3).algebra;
    Endo id = Endo::identity(a);
    EXPECT_EQ(code_of([&] { fixed_nth_root(a, a.one(), id, 0); }), ErrorCode::ZeroParameter);
    EXPECT_EQ(code_of([&] { fixed_nth_root(a, parse_element("2 + t", a), id, 2); }),
              ErrorCode::NoRootInResidueField);
    EXPECT_EQ(code_of([&] { fixed_nth_root(a, parse_element("t", a), id, 2); }), ErrorCode::NotAUnit);
    CorpusEntry nn = extended_nn(Q);
    Endo swap = nakayama(nn.form());
    EXPECT_EQ(code_of([&] { fixed_nth_root(nn.algebra, parse_element("1 + x", nn.algebra), swap, 2); }),
              ErrorCode::NotFixed);
    for (std::uint64_t p : {2, 3}) {
        Algebra ap = truncated_poly(FieldSpec::prime(p), 3).algebra;
        EXPECT_EQ(code_of([&] { fixed_nth_root(ap, ap.one(), Endo::identity(ap), p); }),
                  ErrorCode::BadCharacteristic);
    }
}

TEST(Norms, PartialNormsAndContext) {
    CorpusEntry e = extended_nn(Q);
    Endo sigma = nakayama(e.form());
    const Algebra &a = e.algebra;
    Element u = parse_element("1 + x", a);
    EXPECT_EQ(partial_norm(sigma, u, 0), a.one());
    EXPECT_EQ(partial_norm(sigma, u, 1), u);
    EXPECT_EQ(norm(NormContext(sigma, 2), u), parse_element("1 + x + y + xy", a));
    EXPECT_EQ(norm(NormContext(sigma, 2), parse_element("1 + x - y", a)), parse_element("1 + xy + yx", a));
    EXPECT_EQ(code_of([&] { NormContext(sigma, 0); }), ErrorCode::ZeroParameter);
    EXPECT_EQ(code_of([&] { norm(NormContext(sigma, 2), parse_element("x", a)); }), ErrorCode::NotAUnit);
    Matrix bad = Matrix::identity(6, Q);
    bad(1, 1) = Scalar(Q, 3);
    EXPECT_EQ(code_of([&] { NormContext(Endo(a, bad), 2); }), ErrorCode::NotAnAutomorphism);
}

TEST(Norms, NesbittGF7NormsAreCentral) {
    FieldSpec f = FieldSpec::prime(7);
    CorpusEntry e = nakayama_nesbitt(f, lit(f, "2"));
    Endo sigma = nakayama(e.form());
    EXPECT_EQ(norm(NormContext(sigma, 3), parse_element("1 + x", e.algebra)), e.algebra.one());
    Rng rng(1);
    auto local = local_structure(e.algebra);
    for (int t = 0; t < 30; ++t)
        EXPECT_TRUE(is_central(norm(NormContext(sigma, 3), random_unit(e.algebra, rng, &*local))));
}

TEST(Straighten, ExtendedNNTwistedByOnePlusX) {
    CorpusEntry e = extended_nn(Q);
    Form b = twist(e.form(), parse_element("1 + x", e.algebra));
    Endo sigma = nakayama(b);
    EXPECT_FALSE(sigma.pow(2).is_identity());
    StraightenedForm st = straighten_form(b);
    EXPECT_EQ(st.n, 2u);
    EXPECT_FALSE(is_central(st.a));
    EXPECT_TRUE(nakayama(st.form).pow(2).is_identity());
    EXPECT_EQ(norm(NormContext(sigma, 2), st.u), inverse(st.a));
}

TEST(Straighten, RandomTwistsOnCorpus) {
    for (const auto &e : fixtures::local_corpus(false)) {
        std::uint64_t ch = e.algebra.field().characteristic();
        auto local = local_structure(e.algebra);
        Rng rng(23);
        for (int t = 0; t < 5; ++t) {
            Form b = twist(e.form(), random_unit(e.algebra, rng, &*local));
            auto io = inner_order(nakayama(b), 16);
            if (!io) {
                EXPECT_EQ(code_of([&] { straighten_form(b, 16); }), ErrorCode::OrderBoundExceeded);
                continue;
            }
            if (ch && io->n % ch == 0)
                continue;
            StraightenedForm st = straighten_form(b, 16);
            EXPECT_TRUE(nakayama(st.form).pow(st.n).is_identity()) << label(e);
        }
    }
}
