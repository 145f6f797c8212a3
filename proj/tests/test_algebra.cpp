#include <gtest/gtest.h>

#include "corpus_fixtures.hpp"
#include "frobform/expression.hpp"
#include "frobform/random.hpp"

using namespace frobform;
using fixtures::label;
using fixtures::lit;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// k[x,y]/(x,y)^2: local, not Frobenius.
Algebra square_zero_plane(FieldSpec f) {
    AlgebraData d{f, {"1", "x", "y"}, unit_vector(f, 3, 0), {}, std::nullopt};
    for (std::size_t i = 0; i < 3; ++i) {
        d.mul.push_back({0, i, i, Scalar(f, 1)});
        if (i)
            d.mul.push_back({i, 0, i, Scalar(f, 1)});
    }
    if (f.characteristic() && f.characteristic() <= 3)
        d.radical_basis = std::vector<Vector>{unit_vector(f, 3, 1), unit_vector(f, 3, 2)};
    return Algebra::validate(d);
}

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

} // namespace

TEST(Validate, RejectsNonAssociativeTables) {
    AlgebraData d{Q, {"1", "a", "b"}, unit_vector(Q, 3, 0), {}, std::nullopt};
    for (std::size_t i = 0; i < 3; ++i) {
        d.mul.push_back({0, i, i, Scalar(Q, 1)});
        if (i)
            d.mul.push_back({i, 0, i, Scalar(Q, 1)});
    }
    d.mul.push_back({1, 1, 2, Scalar(Q, 1)}); // a a = b
    d.mul.push_back({2, 1, 1, Scalar(Q, 1)}); // b a = a, so (a a) a = a but a (a a) = a b = 0
    try {
        Algebra::validate(d);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotAssociative);
        EXPECT_NE(std::string(e.what()).find("basis"), std::string::npos);
    }
}

TEST(Validate, RejectsBadUnitAndRadical) {
    Algebra a = fixtures::extended_nn(Q).algebra;
    AlgebraData d = a.data();
    d.one = unit_vector(Q, 6, 1);
    EXPECT_EQ(code_of([&] { Algebra::validate(d); }), ErrorCode::BadUnit);
    d = a.data();
    d.radical_basis = std::vector<Vector>{unit_vector(Q, 6, 0)};
    EXPECT_EQ(code_of([&] { Algebra::validate(d); }), ErrorCode::BadRadical);
    d.radical_basis = std::vector<Vector>{unit_vector(Q, 6, 3)};
    EXPECT_EQ(code_of([&] { Algebra::validate(d); }), ErrorCode::BadRadical); // not an ideal
    d.radical_basis = std::vector<Vector>{unit_vector(Q, 6, 5), unit_vector(Q, 6, 5)};
    EXPECT_EQ(code_of([&] { Algebra::validate(d); }), ErrorCode::BadRadical);
}

TEST(Algebra, RingAxiomsOnCorpus) {
    for (const auto &e : fixtures::local_corpus()) {
        const Algebra &a = e.algebra;
        Rng rng(101);
        for (int t = 0; t < 20; ++t) {
            Element x = random_element(a, rng), y = random_element(a, rng), z = random_element(a, rng);
            EXPECT_EQ((x * y) * z, x * (y * z)) << label(e);
            EXPECT_EQ(a.one() * x, x);
            EXPECT_EQ(x * a.one(), x);
            EXPECT_EQ(left_mul(x) * right_mul(y), right_mul(y) * left_mul(x)) << label(e);
        }
    }
}

TEST(Algebra, RadicalIsNilpotentAndLocalUnitsAreOffM) {
    for (const auto &e : fixtures::local_corpus()) {
        const Algebra &a = e.algebra;
        for (const auto &v : radical(a)) {
            auto k = nilpotency_index(a.element(v));
            ASSERT_TRUE(k) << label(e);
            EXPECT_LE(*k, a.dim());
        }
        auto local = local_structure(a);
        ASSERT_TRUE(local) << label(e);
        Rng rng(7);
        for (int t = 0; t < 30; ++t) {
            Element x = random_element(a, rng);
            if (t % 3 == 0)
                x = random_in_maximal_ideal(a, *local, rng);
            EXPECT_EQ(try_inverse(x).has_value(), !local->in_maximal_ideal(x)) << label(e);
        }
    }
}

TEST(Algebra, CenterCommutesWithBasis) {
    for (const auto &e : fixtures::local_corpus()) {
        const Algebra &a = e.algebra;
        auto z = center(a);
        EXPECT_EQ(z.size() == a.dim(), a.is_commutative()) << label(e);
        for (const auto &v : z)
            for (std::size_t i = 0; i < a.dim(); ++i)
                EXPECT_EQ(a.element(v) * a.basis_element(i), a.basis_element(i) * a.element(v));
    }
}

TEST(Algebra, TraceFormRadicalAndGuard) {
    Algebra t4 = fixtures::truncated_poly(Q, 4).algebra;
    auto rad = trace_form_radical(t4);
    EXPECT_EQ(span_basis(Q, 4, rad).size(), 3u);
    for (const auto &v : rad)
        EXPECT_TRUE(v[0].is_zero());
    AlgebraData d = fixtures::truncated_poly(FieldSpec::prime(3), 3).algebra.data();
    d.radical_basis.reset();
    Algebra undeclared = Algebra::validate(d);
    EXPECT_EQ(code_of([&] { trace_form_radical(undeclared); }), ErrorCode::CharTooSmall);
    EXPECT_FALSE(try_local_structure(undeclared));
    EXPECT_TRUE(local_structure(fixtures::truncated_poly(FieldSpec::prime(3), 3).algebra));
}

TEST(Algebra, SemisimpleGroupAlgebraIsNotLocal) {
    CorpusEntry c2 = group_algebra(Q, {{0, 1}, {1, 0}});
    EXPECT_EQ(c2.algebra.dim(), 2u);
    EXPECT_TRUE(radical(c2.algebra).empty());
    EXPECT_FALSE(local_structure(c2.algebra));
    EXPECT_TRUE(c2.form().nondegenerate());
}

TEST(Algebra, GroupAlgebraRejectsNonGroups) {
    EXPECT_EQ(code_of([] { group_algebra(Q, {{0, 1}, {1, 1}}); }), ErrorCode::NotAGroup);
    EXPECT_EQ(code_of([] { group_algebra(Q, {{0, 1}, {0, 1}}); }), ErrorCode::NotAGroup);
    EXPECT_EQ(code_of([] { group_algebra(Q, {{0, 2}, {1, 0}}); }), ErrorCode::NotAGroup);
    // a Latin square with identity 0 that is not associative
    std::vector<std::vector<std::size_t>> loop{
        {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
    EXPECT_EQ(code_of([&] { group_algebra(Q, loop); }), ErrorCode::NotAGroup);
}

TEST(Algebra, LocalStructureOfExtendedNN) {
    Algebra a = fixtures::extended_nn(Q).algebra;
    auto local = local_structure(a);
    ASSERT_TRUE(local);
    EXPECT_EQ(local->nilpotency, 3u);
    ASSERT_EQ(local->powers.size(), 3u);
    EXPECT_EQ(local->powers[0].size(), 5u);
    EXPECT_EQ(local->powers[1].size(), 3u);
    EXPECT_EQ(local->powers[2].size(), 1u);
    EXPECT_EQ(a.element(local->filtered_basis.front()).to_string(), "xyx");
    EXPECT_TRUE(det(local->filtered_change) != Scalar(Q));
}

TEST(Corpus, EveryEntryValidatesAndIsFrobenius) {
    for (const auto &e : fixtures::local_corpus()) {
        Form b = e.form();
        EXPECT_TRUE(b.nondegenerate()) << label(e);
        EXPECT_TRUE(b.associative()) << label(e);
    }
}

TEST(Corpus, KnownAnswersRederive) {
    for (const auto &e : fixtures::local_corpus())
        for (const auto &k : e.answers)
            EXPECT_TRUE(check_known_answer(e, k)) << label(e) << ": " << k.label;
    for (const char *t : {"1/3", "-2", "5"}) {
        CorpusEntry e = nakayama_nesbitt(Q, lit(Q, t));
        for (const auto &k : e.answers)
            EXPECT_TRUE(check_known_answer(e, k)) << label(e) << ": " << k.label;
    }
}

TEST(Corpus, BuilderGuards) {
    EXPECT_EQ(code_of([] { nakayama_nesbitt(Q, Scalar(Q)); }), ErrorCode::ZeroParameter);
    EXPECT_EQ(code_of([] { quartic_companion(Q, Scalar(Q)); }), ErrorCode::ZeroParameter);
    EXPECT_EQ(code_of([] { planar_quartic(Q, lit(Q, "1"), lit(Q, "2"), lit(Q, "4")); }),
              ErrorCode::DegenerateParameters);
    EXPECT_EQ(code_of([] { planar_quartic(Q, lit(Q, "0"), lit(Q, "2"), lit(Q, "4")); }),
              ErrorCode::DegenerateParameters);
    EXPECT_EQ(code_of([] { truncated_poly(Q, 0); }), ErrorCode::ZeroParameter);
}

TEST(Corpus, TableFacts) {
    Algebra nn = fixtures::extended_nn(Q).algebra;
    EXPECT_EQ((parse_element("xy", nn) * parse_element("x", nn)).to_string(), "xyx");
    EXPECT_EQ((parse_element("y*x*y", nn)).to_string(), "xyx");
    Algebra comp = quartic_companion(Q, lit(Q, "2")).algebra;
    EXPECT_TRUE((parse_element("u*v", comp)).is_zero());
    EXPECT_EQ(parse_element("u^2 + 2*v^2", comp).to_string(), "0");
    Algebra h = heisenberg27(FieldSpec::prime(3)).algebra;
    EXPECT_FALSE(h.is_commutative());
    EXPECT_TRUE(local_structure(h));
    EXPECT_TRUE(fixtures::truncated_poly(Q, 3).algebra.is_commutative());
}

TEST(Corpus, HeisenbergFormIsSymmetricTrace) {
    CorpusEntry e = heisenberg27(FieldSpec::prime(3));
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
        Element r = random_element(e.algebra, rng), s = random_element(e.algebra, rng);
        EXPECT_EQ(e.functional(r * s), e.functional(s * r));
    }
}

TEST(Frobenius, SquareZeroPlaneHasNoFrobeniusFunctionalOverGF3) {
    FieldSpec f = FieldSpec::prime(3);
    Algebra a = square_zero_plane(f);
    // all 27 covectors, by enumeration
    std::size_t nondegenerate = 0;
    for (long c0 = 0; c0 < 3; ++c0)
        for (long c1 = 0; c1 < 3; ++c1)
            for (long c2 = 0; c2 < 3; ++c2) {
                Functional l(a, {Scalar(f, c0), Scalar(f, c1), Scalar(f, c2)});
                nondegenerate += !det(gram_matrix(l)).is_zero();
            }
    EXPECT_EQ(nondegenerate, 0u);
    EXPECT_FALSE(find_frobenius_functional(a, 1));
    Functional l(a, {Scalar(f), Scalar(f), Scalar(f, 1)});
    try {
        form_from_functional(l);
        FAIL();
    } catch (const DegenerateError &e) {
        EXPECT_EQ(e.code(), ErrorCode::Degenerate);
        Vector w = e.witness();
        EXPECT_TRUE(is_zero_vector(gram_matrix(l).apply(w)));
    }
}

TEST(Frobenius, FindsFunctionalsOnCorpus) {
    for (const auto &e : fixtures::local_corpus()) {
        auto l = find_frobenius_functional(e.algebra, 3);
        ASSERT_TRUE(l) << label(e);
        EXPECT_TRUE(form_from_functional(*l).nondegenerate());
    }
}

TEST(Expression, Examples) {
    Algebra nn = fixtures::extended_nn(Q).algebra;
    Element e = parse_element("1 + x - y", nn);
    Vector expect{lit(Q, "1"), lit(Q, "1"), lit(Q, "-1"), lit(Q, "0"), lit(Q, "0"), lit(Q, "0")};
    EXPECT_EQ(e.coords(), expect);
    EXPECT_TRUE(parse_element("x^2", nn).is_zero());
    EXPECT_NE(parse_element("x*y", nn), parse_element("y*x", nn));

    FieldSpec f7 = FieldSpec::prime(7);
    Algebra r2 = nakayama_nesbitt(f7, lit(f7, "2")).algebra;
    EXPECT_EQ(parse_element("x*y - y*x", r2), lit(f7, "-1") * parse_element("xy", r2));
}

TEST(Expression, PrecedenceAndLiterals) {
    Algebra nn = fixtures::extended_nn(Q).algebra;
    EXPECT_EQ(parse_element("-x*y", nn), -parse_element("xy", nn));
    EXPECT_EQ(parse_element("(1 + x)^2", nn), parse_element("1 + 2*x", nn));
    EXPECT_EQ(parse_element("1/2*x - -x", nn), parse_element("3/2 * x", nn));
    EXPECT_EQ(parse_element("2^3", nn), parse_element("8", nn));
    EXPECT_EQ(parse_element("x^0", nn), nn.one());
    EXPECT_EQ(parse_element("x*y*x - y*x*y", nn), nn.zero());
}

TEST(Expression, Errors) {
    Algebra nn = fixtures::extended_nn(Q).algebra;
    for (const char *bad : {"", "1 +", "(x", "x^", "x^-1", "x y", "1/", "x)", "#"}) {
        ErrorCode c = code_of([&] { parse_element(bad, nn); });
        EXPECT_EQ(c, ErrorCode::SyntaxError) << bad;
    }
    EXPECT_EQ(code_of([&] { parse_element("1 + z", nn); }), ErrorCode::UnknownBasisName);
    try {
        parse_element("x + ?", nn);
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find("position 4"), std::string::npos) << e.what();
    }
}

TEST(Expression, PrintedElementsReparse) {
    for (const auto &e : fixtures::local_corpus()) {
        Rng rng(77);
        for (int t = 0; t < 20; ++t) {
            Element x = random_element(e.algebra, rng);
            EXPECT_EQ(parse_element(x.to_string(), e.algebra), x) << x.to_string();
        }
    }
}
