#include <gtest/gtest.h>

#include <limits>

#include "hcohom/errors.hpp"
#include "hcohom/linalg.hpp"
#include "support.hpp"

using namespace hcohom;
using hcohom::testing::vec;

TEST(Rational, NormalizesSignAndGcd) {
    Rational r(6, -4);
    EXPECT_EQ(r, Rational(-3, 2));
    EXPECT_EQ(r.to_string(), "-3/2");
    EXPECT_EQ(Rational(4, 2).to_string(), "2");
}

TEST(Rational, ZeroDenominatorThrows) { EXPECT_THROW(Rational(1, 0), std::domain_error); }

TEST(Rational, PromotesToBigOnOverflowAndDemotesBack) {
    Rational big(std::numeric_limits<long long>::max());
    Rational sq = big * big;
    EXPECT_FALSE(sq.is_small());
    mpz_class m(std::to_string(std::numeric_limits<long long>::max()), 10);
    EXPECT_EQ(sq.to_mpq(), mpq_class(m * m));
    Rational back = sq / big;
    EXPECT_TRUE(back.is_small());
    EXPECT_EQ(back, big);
}

TEST(Rational, ParsesFractionsAndIntegers) {
    EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
    EXPECT_EQ(Rational::parse("12"), Rational(12));
    EXPECT_THROW(Rational::parse("1/x"), InputError);
    EXPECT_THROW(Rational::parse("1/0"), InputError);
}

TEST(Rational, OrderingIsExact) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
}

TEST(GaussianRational, MultiplicationAndInverse) {
    Scalar z(Rational(1), Rational(2));
    Scalar w = z * z.conj();
    EXPECT_EQ(w, Scalar(5));
    EXPECT_EQ(z * z.inverse(), Scalar(1));
    EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
}

TEST(SparseVec, ArithmeticDropsZeros) {
    SparseVec a = vec({1, 0, 2});
    SparseVec b = vec({1, 5, 2});
    SparseVec d = sub(a, b);
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d[0].index, 1u);
    EXPECT_EQ(d[0].value, Scalar(-5));
    EXPECT_TRUE(sub(a, a).empty());
}

TEST(Matrix, ProductAndTranspose) {
    Matrix a = Matrix::from_dense({{1, 2}, {3, 4}}, 2);
    Matrix b = Matrix::from_dense({{0, 1}, {1, 0}}, 2);
    EXPECT_EQ(a * b, Matrix::from_dense({{2, 1}, {4, 3}}, 2));
    EXPECT_EQ(a.transpose().transpose(), a);
    EXPECT_TRUE((b * b).is_identity());
}

TEST(Matrix, KroneckerPowerZeroIsScalarOne) {
    Matrix a = Matrix::from_dense({{1, 2}, {3, 4}}, 2);
    EXPECT_TRUE(kron_power(a, 0).is_identity());
    EXPECT_EQ(kron_power(a, 0).rows(), 1u);
    EXPECT_EQ(kron_power(a, 2), kron(a, a));
}

TEST(Linalg, RankOfSingularMatrix) {
    Matrix m = Matrix::from_dense({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
    EXPECT_EQ(rank(m), 2u);
    EXPECT_EQ(nullspace(m).dim(), 1u);
    EXPECT_EQ(column_space(m).dim(), 2u);
}

TEST(Linalg, NullspaceVectorsAreKilled) {
    Matrix m = Matrix::from_dense({{1, 1, 0, 0}, {0, 0, 1, -1}}, 4);
    Subspace k = nullspace(m);
    EXPECT_EQ(k.dim(), 2u);
    for (const auto& v : k.basis()) EXPECT_TRUE(m.apply(v).empty());
}

TEST(Linalg, InverseRoundTrip) {
    Matrix m = Matrix::from_dense({{2, 1}, {7, 4}}, 2);
    EXPECT_TRUE((m * inverse(m)).is_identity());
    EXPECT_THROW(inverse(Matrix::from_dense({{1, 2}, {2, 4}}, 2)), PreconditionError);
}

TEST(Linalg, SolverReportsInconsistentSystems) {
    Matrix m = Matrix::from_dense({{1, 1}, {2, 2}}, 2);
    LinearSolver s(m);
    auto x = s.solve(vec({3, 6}));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m.apply(*x), vec({3, 6}));
    EXPECT_FALSE(s.solve(vec({1, 0})).has_value());
}

TEST(Linalg, SubspaceSumIntersectionDimensions) {
    Subspace u = Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})});
    Subspace v = Subspace::span(3, {vec({0, 1, 0}), vec({0, 0, 1})});
    EXPECT_EQ(sum(u, v).dim(), 3u);
    EXPECT_EQ(intersection(u, v).dim(), 1u);
    EXPECT_EQ(quotient_dim(sum(u, v), u), 1u);
    EXPECT_TRUE(u.contains(vec({5, -2, 0})));
    EXPECT_FALSE(u.contains(vec({0, 0, 1})));
}

TEST(Linalg, CoordinatesReconstructVector) {
    Subspace u = Subspace::span(3, {vec({1, 2, 0}), vec({0, 1, 1})});
    SparseVec x = vec({2, 5, 1});
    auto c = u.coordinates(x);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(u.vector(*c), x);
    EXPECT_THROW(u.coordinates_or_throw(vec({0, 0, 1})), ContainmentError);
}

TEST(Linalg, EntriesGrowPastMachineWordsWithoutError) {
    std::vector<std::vector<Scalar>> rows(8, std::vector<Scalar>(8));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) rows[i][j] = Rational(1, static_cast<long long>(i + j + 1));
    Matrix hilbert = Matrix::from_dense(rows, 8);
    EXPECT_EQ(rank(hilbert), 8u);
    EXPECT_TRUE((hilbert * inverse(hilbert)).is_identity());
}
