#include <gtest/gtest.h>

#include "corpus_fixtures.hpp"
#include "frobform/expression.hpp"
#include "frobform/homothety.hpp"
#include "frobform/random.hpp"

using namespace frobform;
using fixtures::label;
using fixtures::lit;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F7 = FieldSpec::prime(7);

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::Internal;
}

bool has_check(const ObstructionReport &r, const std::string &name, CheckOutcome outcome) {
    for (const auto &c : r.checks)
        if (c.name == name && c.outcome == outcome)
            return true;
    return false;
}

} // namespace

TEST(Probe, ExtendedNNOnePlusXIsObstructed) {
    CorpusEntry e = extended_nn(Q);
    Form b0 = e.form();
    Form b1 = twist(b0, parse_element("1 + x", e.algebra));
    ObstructionReport r = homothety_probe(b0, b1);
    EXPECT_EQ(r.verdict, Verdict::Obstructed);
    EXPECT_EQ(r.reason, ObstructionReason::CentralNorm);
    EXPECT_EQ(r.u, parse_element("1 + x", e.algebra));
    EXPECT_EQ(r.failures,
              (std::vector<ObstructionReason>{ObstructionReason::CentralNorm, ObstructionReason::NakayamaSimilarity}));
    EXPECT_EQ(nakayama_similarity(b0, b1), Similarity::NotSimilar);
}

TEST(Probe, ExtendedNNCentralNormIsInconclusive) {
    CorpusEntry e = extended_nn(Q);
    Form b0 = e.form();
    ObstructionReport r = homothety_probe(b0, twist(b0, parse_element("1 + x - y", e.algebra)));
    EXPECT_EQ(r.verdict, Verdict::Inconclusive);
    EXPECT_TRUE(r.failures.empty());
}

TEST(Probe, RejectsNonTwistsAndForeignForms) {
    CorpusEntry e = extended_nn(Q);
    Form b0 = e.form();
    Matrix m = b0.matrix();
    // a nondegenerate form that is not associative
    Form odd(e.algebra, m + Matrix::identity(6, Q));
    EXPECT_THROW(homothety_probe(b0, odd), Error);
    CorpusEntry t = truncated_poly(Q, 6);
    EXPECT_EQ(code_of([&] { homothety_probe(b0, t.form()); }), ErrorCode::AlgebraMismatch);
}

TEST(Probe, SoundnessOnRandomTwists) {
    for (const auto &e : fixtures::local_corpus(false)) {
        Form b = e.form();
        auto local = local_structure(e.algebra);
        Rng rng(12);
        for (int t = 0; t < 10; ++t) {
            Element u = random_unit(e.algebra, rng, &*local);
            Form b2 = twist(b, u);
            ObstructionReport r = homothety_probe(b, b2);
            EXPECT_EQ(r.u, u);
            if (r.verdict == Verdict::WitnessFound) {
                ASSERT_TRUE(r.witness);
                EXPECT_TRUE(verify_witness(b, b2, *r.witness)) << label(e);
            }
            for (ObstructionReason reason : r.failures) {
                switch (reason) {
                case ObstructionReason::CentralNorm: {
                    if (b.symmetric() && !is_central(u)) {
                        EXPECT_FALSE(b2.symmetric());
                        break;
                    }
                    auto cn = central_norm_test(b, u);
                    EXPECT_EQ(cn.outcome, CentralNorm::Fails) << label(e);
                    break;
                }
                case ObstructionReason::NakayamaSimilarity:
                    EXPECT_FALSE(is_similar(nakayama(b).matrix(), nakayama(b2).matrix()));
                    break;
                case ObstructionReason::DetClass:
                    EXPECT_FALSE(det_class(b) == det_class(b2));
                    break;
                case ObstructionReason::SymmetryMismatch:
                    EXPECT_NE(b.symmetric(), b2.symmetric());
                    break;
                }
            }
            EXPECT_EQ(r.verdict == Verdict::Obstructed, !r.failures.empty());
        }
    }
}

TEST(Probe, CommutativeLocalAlgebrasAlwaysHaveWitnesses) {
    for (FieldSpec f : {Q, FieldSpec::prime(5)}) {
        CorpusEntry e = truncated_poly(f, 4);
        Form b = e.form();
        auto local = local_structure(e.algebra);
        Rng rng(3);
        for (int t = 0; t < 25; ++t) {
            Form b2 = twist(b, random_unit(e.algebra, rng, &*local));
            ObstructionReport r = homothety_probe(b, b2);
            ASSERT_EQ(r.verdict, Verdict::WitnessFound);
            EXPECT_TRUE(verify_witness(b, b2, *r.witness));
            EXPECT_TRUE(has_check(r, "symmetric-witness", CheckOutcome::Pass));
        }
    }
}

TEST(Probe, HeisenbergHasObstructedUnits) {
    CorpusEntry e = heisenberg27(FieldSpec::prime(3));
    Form b = e.form();
    ASSERT_TRUE(b.symmetric());
    auto local = local_structure(e.algebra);
    Rng rng(5);
    bool found = false;
    for (int t = 0; t < 10 && !found; ++t) {
        Element u = random_unit(e.algebra, rng, &*local);
        if (is_central(u))
            continue;
        ObstructionReport r = homothety_probe(b, twist(b, u));
        found = r.verdict == Verdict::Obstructed && r.reason == ObstructionReason::CentralNorm;
    }
    EXPECT_TRUE(found);
    // a central unit gives a witness
    Element z = parse_element("1 + h001", e.algebra);
    ASSERT_TRUE(is_central(z));
    EXPECT_EQ(homothety_probe(b, twist(b, z)).verdict, Verdict::WitnessFound);
}

TEST(Witness, SymmetricWitnessGuards) {
    CorpusEntry nn = extended_nn(Q);
    EXPECT_EQ(code_of([&] { symmetric_witness(nn.form(), nn.algebra.one()); }), ErrorCode::NotSymmetric);
    CorpusEntry r1 = nakayama_nesbitt(Q, lit(Q, "1"));
    Element u = parse_element("2 + x", r1.algebra);
    HomothetyWitness w = symmetric_witness(r1.form(), u);
    EXPECT_EQ(w.alpha, Scalar(Q, 2));
    EXPECT_TRUE(verify_witness(r1.form(), twist(r1.form(), u), w));
    w.alpha = Scalar(Q, 3);
    EXPECT_FALSE(verify_witness(r1.form(), twist(r1.form(), u), w));
}

TEST(Witness, ConstructedHomotheticPairsPassCentralNorm) {
    for (const auto &e : fixtures::local_corpus(false)) {
        if (!e.form().symmetric() || e.algebra.field().characteristic() == 2)
            continue;
        auto local = local_structure(e.algebra);
        Rng rng(41);
        for (int t = 0; t < 10; ++t) {
            Element c = random_unit(e.algebra, rng, &*local);
            if (!is_central(c))
                continue;
            auto [alpha, v] = central_square_root(e.algebra, c);
            Element u = alpha * (v * v);
            EXPECT_EQ(central_norm_test(e.form(), u).outcome, CentralNorm::Passes) << label(e);
        }
    }
}

TEST(DetClass, PlanarQuarticFormula) {
    struct Triple {
        const char *a, *b, *c;
    };
    for (FieldSpec f : {Q, F7})
        for (Triple t : {Triple{"1", "1", "2"}, Triple{"2", "3", "5"}, Triple{"-1", "2", "5"}, Triple{"3", "1", "1"},
                         Triple{"1/2", "1", "4"}}) {
            Scalar a = lit(f, t.a), b = lit(f, t.b), c = lit(f, t.c);
            CorpusEntry e = planar_quartic(f, a, b, c);
            EXPECT_EQ(det_class(e.form()), square_class(a * c * (a * c - b * b))) << label(e);
        }
    EXPECT_EQ(det_class(planar_quartic(Q, lit(Q, "1"), lit(Q, "1"), lit(Q, "2")).form()).to_string(), "2");
}

TEST(DetClass, CompanionIsomorphism) {
    Scalar a = lit(Q, "1"), b = lit(Q, "1"), c = lit(Q, "2");
    CorpusEntry planar = planar_quartic(Q, a, b, c);
    CorpusEntry companion = quartic_companion(Q, lit(Q, "2"));
    Matrix v = quartic_isomorphism(Q, a, b, c);
    EXPECT_TRUE(verify_morphism(v, companion.algebra, planar.algebra));
    Matrix perturbed = v;
    perturbed(1, 2) += Scalar(Q, 1);
    EXPECT_FALSE(verify_morphism(perturbed, companion.algebra, planar.algebra));
    // scaling delta by a square keeps the class
    EXPECT_EQ(det_class(quartic_companion(Q, lit(Q, "2")).form()),
              det_class(quartic_companion(Q, lit(Q, "18")).form()));
    EXPECT_EQ(det_class(companion.form()), det_class(planar.form()));
}

TEST(DetClass, InvariantUnderTwistsAndUnipotence) {
    for (const auto &e : fixtures::local_corpus(false)) {
        auto local = local_structure(e.algebra);
        Rng rng(2);
        for (int t = 0; t < 20; ++t) {
            Element u = random_unit(e.algebra, rng, &*local);
            if (e.algebra.dim() % 2 == 0)
                EXPECT_EQ(det_class(e.form()), det_class(twist(e.form(), u))) << label(e);
            Element one_plus_m = local->residue(u).inverse() * u;
            EXPECT_TRUE(unipotence_check(e.algebra, one_plus_m)) << label(e);
        }
        EXPECT_EQ(code_of([&] { unipotence_check(e.algebra, e.algebra.scalar(Scalar(e.algebra.field(), 2))); }),
                  e.algebra.field().characteristic() == 2 ? ErrorCode::Internal : ErrorCode::BadResidue);
    }
}

TEST(Conjecture, DeterministicAcrossThreadCounts) {
    CorpusEntry e = extended_nn(Q);
    ConjectureSummary one = conjecture_probe(e.form(), 24, 99, kDefaultOrderBound, 1);
    ConjectureSummary four = conjecture_probe(e.form(), 24, 99, kDefaultOrderBound, 4);
    EXPECT_EQ(one.central_unobstructed, four.central_unobstructed);
    EXPECT_EQ(one.noncentral_obstructed, four.noncentral_obstructed);
    EXPECT_EQ(one.noncentral_inconclusive, four.noncentral_inconclusive);
    EXPECT_EQ(one.candidates.size(), 0u);
    EXPECT_EQ(one.order, 2u);
    EXPECT_EQ(one.central_unobstructed + one.central_obstructed + one.noncentral_obstructed +
                  one.noncentral_inconclusive,
              24u);
}

TEST(Conjecture, InfiniteOrderIsRejected) {
    CorpusEntry e = nakayama_nesbitt(Q, lit(Q, "2"));
    EXPECT_EQ(code_of([&] { conjecture_probe(e.form(), 4, 1, 32); }), ErrorCode::InfiniteOrder);
}
