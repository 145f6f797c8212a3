#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "frobform/error.hpp"
#include "frobform/matrix.hpp"
#include "frobform/polynomial.hpp"
#include "frobform/random.hpp"

using namespace frobform;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F7 = FieldSpec::prime(7);

// Determinant by the Leibniz permutation sum.
Scalar leibniz_det(const Matrix &a) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar total(a.field());
    do {
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                inversions += perm[i] > perm[j];
        Scalar term(a.field(), inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n; ++i)
            term *= a(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

Matrix evaluate(const Polynomial &p, const Matrix &a) {
    Matrix acc(a.rows(), a.cols(), a.field());
    for (long i = p.degree(); i >= 0; --i)
        acc = acc * a + p.coefficient(static_cast<std::size_t>(i)) * Matrix::identity(a.rows(), a.field());
    return acc;
}

// Minimal polynomial by searching for the first linear dependence among
// vec(I), vec(A), vec(A^2), ...
Polynomial brute_minimal_polynomial(const Matrix &a) {
    const std::size_t n = a.rows();
    std::vector<Vector> powers;
    Matrix p = Matrix::identity(n, a.field());
    for (std::size_t d = 0; d <= n; ++d) {
        Vector flat;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                flat.push_back(p(i, j));
        powers.push_back(flat);
        auto ker = kernel_basis(Matrix::from_columns(a.field(), n * n, powers));
        if (!ker.empty())
            return Polynomial(a.field(), ker.front()).monic();
        p = p * a;
    }
    ADD_FAILURE() << "no dependence found";
    return Polynomial(a.field());
}

Matrix jordan_block(FieldSpec f, long eigenvalue, std::size_t size) {
    Matrix m(size, size, f);
    for (std::size_t i = 0; i < size; ++i) {
        m(i, i) = Scalar(f, eigenvalue);
        if (i + 1 < size)
            m(i, i + 1) = Scalar(f, 1);
    }
    return m;
}

Matrix block_diagonal(FieldSpec f, const std::vector<Matrix> &blocks) {
    std::size_t n = 0;
    for (const auto &b : blocks)
        n += b.rows();
    Matrix m(n, n, f);
    std::size_t off = 0;
    for (const auto &b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                m(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return m;
}

// Matrices with repeated eigenvalues, hidden by a random change of basis.
Matrix structured_random(FieldSpec f, Rng &rng) {
    std::vector<Matrix> blocks;
    std::size_t total = 0;
    while (total < 5) {
        std::size_t size = 1 + rng() % 3;
        blocks.push_back(jordan_block(f, static_cast<long>(rng() % 3) - 1, size));
        total += size;
    }
    Matrix d = block_diagonal(f, blocks);
    Matrix p = random_invertible(f, d.rows(), rng);
    return inverse(p) * d * p;
}

} // namespace

TEST(Matrix, DeterminantMatchesLeibniz) {
    for (FieldSpec f : {Q, F7, FieldSpec::prime(2)}) {
        Rng rng(11);
        for (int t = 0; t < 60; ++t) {
            std::size_t n = 1 + t % 5;
            Matrix a(n, n, f);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    a(i, j) = random_scalar(f, rng);
            EXPECT_EQ(det(a), leibniz_det(a));
        }
    }
}

TEST(Matrix, InverseAndSolve) {
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        Matrix a = random_invertible(Q, 4, rng);
        Matrix ai = inverse(a);
        EXPECT_TRUE((a * ai).is_identity());
        EXPECT_TRUE((ai * a).is_identity());
        Vector b = random_vector(Q, 4, rng);
        auto x = solve(a, b);
        ASSERT_TRUE(x);
        EXPECT_EQ(a.apply(*x), b);
    }
    Matrix singular = Matrix::parse(Q, {{"1", "2"}, {"2", "4"}});
    EXPECT_FALSE(try_inverse(singular));
    EXPECT_THROW(inverse(singular), Error);
    EXPECT_FALSE(solve(singular, {Scalar(Q, 1), Scalar(Q, 0)}));
    EXPECT_THROW(det(Matrix(2, 3, Q)), Error);
}

TEST(Matrix, RankNullity) {
    Rng rng(9);
    for (int t = 0; t < 50; ++t) {
        Matrix a(4, 6, F7);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 6; ++j)
                a(i, j) = random_scalar(F7, rng);
        auto ker = kernel_basis(a);
        EXPECT_EQ(rank(a) + ker.size(), 6u);
        for (const auto &v : ker)
            EXPECT_TRUE(is_zero_vector(a.apply(v)));
    }
}

TEST(Matrix, ParsePrintsAligned) {
    Matrix a = Matrix::parse(Q, {{"1", "-1/2"}, {"10", "0"}});
    EXPECT_EQ(a.to_string(), "[ 1 -1/2]\n[10    0]\n");
}

TEST(CharacteristicPolynomial, CayleyHamiltonAndKnownValues) {
    Matrix a = Matrix::parse(Q, {{"0", "1"}, {"1", "0"}});
    EXPECT_EQ(characteristic_polynomial(a).to_string(), "x^2 - 1");
    Rng rng(21);
    for (FieldSpec f : {Q, F7})
        for (int t = 0; t < 40; ++t) {
            Matrix m(5, 5, f);
            for (std::size_t i = 0; i < 5; ++i)
                for (std::size_t j = 0; j < 5; ++j)
                    m(i, j) = random_scalar(f, rng);
            Polynomial chi = characteristic_polynomial(m);
            EXPECT_EQ(chi.degree(), 5);
            EXPECT_TRUE(evaluate(chi, m).is_zero());
            EXPECT_EQ(chi.evaluate(Scalar(f)), Scalar(f, -1) * det(m));
        }
}

TEST(InvariantFactors, MatchOracles) {
    Rng rng(33);
    for (FieldSpec f : {Q, F7})
        for (int t = 0; t < 40; ++t) {
            Matrix m = structured_random(f, rng);
            auto inv = invariant_factors(m);
            ASSERT_FALSE(inv.empty());
            Polynomial product = Polynomial::constant(Scalar(f, 1));
            for (std::size_t i = 0; i < inv.size(); ++i) {
                EXPECT_TRUE(inv[i].leading().is_one());
                product = product * inv[i];
                if (i + 1 < inv.size())
                    EXPECT_TRUE(inv[i + 1].divmod(inv[i]).second.is_zero());
            }
            EXPECT_EQ(product, characteristic_polynomial(m));
            EXPECT_EQ(inv.back(), brute_minimal_polynomial(m));
        }
}

TEST(InvariantFactors, JordanStructure) {
    // diag(J_1(1), J_1(1), J_2(-1)) against diag(J_1(1), J_1(-1), J_1(1), J_1(-1))
    Matrix a = block_diagonal(Q, {jordan_block(Q, 1, 1), jordan_block(Q, 1, 1), jordan_block(Q, -1, 2)});
    Matrix b = block_diagonal(Q, {jordan_block(Q, 1, 1), jordan_block(Q, -1, 1), jordan_block(Q, 1, 1),
                                  jordan_block(Q, -1, 1)});
    EXPECT_EQ(characteristic_polynomial(a), characteristic_polynomial(b));
    EXPECT_FALSE(is_similar(a, b));
    auto inv = invariant_factors(b);
    ASSERT_EQ(inv.size(), 2u);
    EXPECT_EQ(inv[0].to_string(), "x^2 - 1");
    EXPECT_EQ(inv[1].to_string(), "x^2 - 1");
}

TEST(InvariantFactors, SimilarityUnderConjugation) {
    Rng rng(44);
    for (int t = 0; t < 40; ++t) {
        Matrix m = structured_random(F7, rng);
        Matrix p = random_invertible(F7, m.rows(), rng);
        EXPECT_TRUE(is_similar(m, inverse(p) * m * p));
        EXPECT_EQ(is_similar(m, m.transpose()), true);
    }
}

TEST(Polynomial, DivisionAlgorithm) {
    Rng rng(2);
    for (int t = 0; t < 50; ++t) {
        Polynomial a(Q, random_vector(Q, 6, rng)), b(Q, random_vector(Q, 3, rng));
        if (b.is_zero())
            continue;
        auto [quo, rem] = a.divmod(b);
        EXPECT_EQ(quo * b + rem, a);
        EXPECT_LT(rem.degree(), b.degree());
    }
    EXPECT_EQ(Polynomial::linear(Scalar(Q, 2)).to_string(), "x - 2");
}

TEST(Matrix, DeterminantIsMultiplicative) {
    Rng rng(12);
    for (int t = 0; t < 50; ++t) {
        Matrix a(4, 4, Q), b(4, 4, Q);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                a(i, j) = random_scalar(Q, rng);
                b(i, j) = random_scalar(Q, rng);
            }
        EXPECT_EQ(det(a * b), det(a) * det(b));
    }
}

TEST(InvariantFactors, SimilarityIsAnEquivalence) {
    Rng rng(45);
    for (int t = 0; t < 30; ++t) {
        Matrix a = structured_random(Q, rng);
        Matrix b = inverse(random_invertible(Q, a.rows(), rng)) * a * random_invertible(Q, a.rows(), rng);
        Matrix c = structured_random(Q, rng);
        if (a.rows() != c.rows())
            continue;
        EXPECT_TRUE(is_similar(a, a));
        EXPECT_EQ(is_similar(a, b), is_similar(b, a));
        if (is_similar(a, b) && is_similar(b, c))
            EXPECT_TRUE(is_similar(a, c));
    }
}
