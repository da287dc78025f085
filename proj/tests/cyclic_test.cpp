#include <gtest/gtest.h>

#include <chrono>

#include "hcohom/cyclic.hpp"
#include "hcohom/errors.hpp"
#include "support.hpp"

using namespace hcohom;
using hcohom::testing::all_of;
using hcohom::testing::h_dims;
using V = std::vector<std::size_t>;

namespace {

const Limits kLimits{};

V hc(const Algebra& a, std::size_t n) { return h_dims(cyclic_cohomology(a, unit_subalgebra(a), n, kLimits)); }

Matrix power(const Matrix& m, std::size_t k) {
    Matrix out = Matrix::identity(m.rows());
    for (std::size_t i = 0; i < k; ++i) out = out * m;
    return out;
}

}  // namespace

TEST(CyclicOperators, RotationHasOrderNPlusOne) {
    for (std::size_t n = 0; n <= 3; ++n) {
        Matrix t = cyclic_t(2, n);
        EXPECT_TRUE(power(t, n + 1).is_identity()) << n;
        if (n > 0 && n % 2 == 0) EXPECT_FALSE(power(t, n).is_identity()) << n;
    }
}

TEST(CyclicOperators, RotationSignAndDirection) {
    // d = 2, n = 1: (t f)(a0, a1) = -f(a1, a0); coordinate of tuple (0,1) is 1.
    Matrix t = cyclic_t(2, 1);
    EXPECT_EQ(t.at(1, 2), Scalar(-1));
    EXPECT_EQ(t.at(0, 0), Scalar(-1));
}

TEST(CyclicOperators, NormAnnihilatesImageOfM) {
    Algebra ut = upper_triangular(2);
    for (std::size_t n = 0; n <= 2; ++n) EXPECT_TRUE((cyclic_norm(ut, n) * cyclic_m(ut, n)).is_zero()) << n;
}

TEST(CyclicOperators, MWithInverseRotationIsAChainMap) {
    for (const Algebra& a : {matrix_algebra(2), dual_numbers(), upper_triangular(2)})
        for (std::size_t n = 0; n <= 2; ++n)
            EXPECT_EQ(bar_delta(a, n) * cyclic_m(a, n), cyclic_m(a, n + 1) * cyclic_delta(a, n)) << n;
}

TEST(CyclicOperators, MWithForwardRotationIsNotAChainMap) {
    Algebra d = dual_numbers();
    bool commutes_everywhere = true;
    for (std::size_t n = 1; n <= 2; ++n) {
        Matrix m_n = Matrix::identity(functional_dim(d, n)) - cyclic_t(d, n);
        Matrix m_n1 = Matrix::identity(functional_dim(d, n + 1)) - cyclic_t(d, n + 1);
        commutes_everywhere = commutes_everywhere && bar_delta(d, n) * m_n == m_n1 * cyclic_delta(d, n);
    }
    EXPECT_FALSE(commutes_everywhere);
}

TEST(CyclicOperators, NIsAChainMapFromBarToCyclic) {
    Algebra a = matrix_algebra(2);
    for (std::size_t n = 0; n <= 2; ++n)
        EXPECT_EQ(cyclic_delta(a, n) * cyclic_norm(a, n), cyclic_norm(a, n + 1) * bar_delta(a, n)) << n;
}

TEST(CyclicDifferentials, SquareToZero) {
    for (const Algebra& a : {matrix_algebra(2), upper_triangular(2), truncated_polynomials(3)})
        for (std::size_t n = 0; n <= 2; ++n) {
            EXPECT_TRUE((cyclic_delta(a, n + 1) * cyclic_delta(a, n)).is_zero());
            EXPECT_TRUE((bar_delta(a, n + 1) * bar_delta(a, n)).is_zero());
        }
}

TEST(CyclicDifferentials, PreserveCyclicCochains) {
    Algebra ut = upper_triangular(2);
    for (std::size_t n = 0; n <= 2; ++n) {
        auto from = cyclic_spaces(ut, unit_subalgebra(ut), n).cyclic;
        auto to = cyclic_spaces(ut, unit_subalgebra(ut), n + 1).cyclic;
        Matrix d = cyclic_delta(ut, n);
        for (const auto& v : from.basis()) EXPECT_TRUE(to.contains(d.apply(v))) << n;
    }
}

TEST(CyclicSpaces, CyclicInsideRelative) {
    Algebra ut = upper_triangular(2);
    SubalgebraSpec diag = idempotent_subalgebra(ut);
    for (std::size_t n = 0; n <= 2; ++n) {
        auto s = cyclic_spaces(ut, diag, n);
        EXPECT_TRUE(s.relative.contains(s.cyclic));
        EXPECT_LT(s.relative.dim(), s.ambient_dim);
    }
}

TEST(CyclicCohomology, Scalars) { EXPECT_EQ(hc(scalars(), 4), (V{1, 0, 1, 0, 1})); }

TEST(CyclicCohomology, MatrixAlgebras) {
    EXPECT_EQ(hc(matrix_algebra(1), 3), (V{1, 0, 1, 0}));
    EXPECT_EQ(hc(matrix_algebra(2), 3), (V{1, 0, 1, 0}));
}

TEST(CyclicCohomology, TwoDimensionalAlgebras) {
    EXPECT_EQ(hc(dual_numbers(), 3), (V{2, 0, 2, 0}));
    EXPECT_EQ(hc(direct_sum({scalars(), scalars()}).algebra, 3), (V{2, 0, 2, 0}));
}

TEST(CyclicCohomology, UpperTriangular) { EXPECT_EQ(hc(upper_triangular(2), 3), (V{2, 0, 2, 0})); }

TEST(CyclicCohomology, DirectSums) {
    EXPECT_EQ(hc(direct_sum({matrix_algebra(2), scalars()}).algebra, 2), (V{2, 0, 2}));
    EXPECT_EQ(hc(direct_sum({matrix_algebra(2), dual_numbers()}).algebra, 3), (V{3, 0, 3, 0}));
}

TEST(CyclicCohomology, DegreeZeroIsTraceSpace) {
    for (const Algebra& a : {matrix_algebra(2), upper_triangular(2), truncated_polynomials(3)})
        EXPECT_EQ(hc(a, 0)[0], trace_space(a).dim());
}

TEST(BarCohomology, VanishesForUnitalAlgebras) {
    for (const Algebra& a : {matrix_algebra(2), dual_numbers(), upper_triangular(2)})
        EXPECT_EQ(h_dims(hr_cohomology(a, unit_subalgebra(a), 2, kLimits)), (V{0, 0, 0}));
}

TEST(BarCohomology, ZeroAlgebraDoesNotVanish) {
    Algebra z = zero_algebra(1);
    EXPECT_EQ(h_dims(hr_cohomology(z, unit_subalgebra(z), 2, kLimits)), (V{1, 1, 1}));
}

TEST(BarCohomology, VanishesRelativeToSeparableSubalgebra) {
    Algebra m2 = matrix_algebra(2);
    EXPECT_EQ(h_dims(hr_cohomology(m2, idempotent_subalgebra(m2), 2, kLimits)), (V{0, 0, 0}));
}

TEST(SBI, ExactForStandardExamples) {
    for (const Algebra& a : {matrix_algebra(2), dual_numbers(), upper_triangular(2), zero_algebra(1)}) {
        CyclicData data = cyclic_data(a, unit_subalgebra(a), 3, kLimits);
        for (const auto& r : sbi_exactness(data)) EXPECT_TRUE(r.exact());
    }
}

TEST(SBI, ExactRelativeToDiagonal) {
    Algebra ut = upper_triangular(2);
    CyclicData data = cyclic_data(ut, idempotent_subalgebra(ut), 3, kLimits);
    for (const auto& r : sbi_exactness(data)) EXPECT_TRUE(r.exact());
}

TEST(ConnesTsygan, MatrixAlgebraExactWithInvertibleEta) {
    auto start = std::chrono::steady_clock::now();
    CTReport r = connes_tsygan(matrix_algebra(2), unit_subalgebra(matrix_algebra(2)), 4, kLimits);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    EXPECT_TRUE(r.exactness.exact());
    EXPECT_TRUE(r.eta_invertible);
    EXPECT_EQ(r.hc_dims(), (V{1, 0, 1, 0, 1}));
    EXPECT_EQ(r.h_dims(), (V{1, 0, 0, 0, 0}));
    EXPECT_GE(r.exactness.checked_nodes(), 12u);
    EXPECT_LT(secs, 60.0);
}

TEST(ConnesTsygan, DualNumbersExact) {
    CTReport r = connes_tsygan(dual_numbers(), unit_subalgebra(dual_numbers()), 3, kLimits);
    EXPECT_TRUE(r.exactness.exact());
    EXPECT_EQ(r.h_dims(), (V{2, 1, 1, 1}));
    EXPECT_EQ(r.hc_dims(), (V{2, 0, 2, 0}));
}

TEST(ConnesTsygan, MapShapesFollowTheSequence) {
    CTReport r = connes_tsygan(upper_triangular(2), unit_subalgebra(upper_triangular(2)), 3, kLimits);
    for (std::size_t n = 0; n <= 3; ++n) {
        EXPECT_EQ(r.maps_i[n].rows(), r.h[n].dim());
        EXPECT_EQ(r.maps_i[n].cols(), r.hc[n].dim());
        EXPECT_EQ(r.maps_b[n].cols(), r.h[n].dim());
    }
    for (std::size_t n = 0; n < r.eta.size(); ++n) EXPECT_TRUE(is_invertible(r.eta[n]));
}

TEST(ConnesTsygan, RejectsNonUnitalAlgebras) {
    Algebra z = zero_algebra(1);
    EXPECT_THROW(connes_tsygan(z, unit_subalgebra(z), 2, kLimits), PreconditionError);
}

TEST(ConnesTsygan, MorphismFromDiagonalRelativeIsIso) {
    Algebra ut = upper_triangular(2);
    CTMorphismReport m = ct_morphism(ut, idempotent_subalgebra(ut), 3, kLimits);
    EXPECT_TRUE(m.commutes());
    EXPECT_TRUE(all_of(m.f_iso));
    EXPECT_TRUE(all_of(m.g_iso));
}

TEST(ConnesTsygan, MorphismAlongProjectionToSummand) {
    DirectSum ds = direct_sum({matrix_algebra(2), scalars()});
    CTMorphismReport m = ct_morphism_hom(ds.algebra, scalars(), ds.projection(1), 3, kLimits);
    EXPECT_TRUE(m.commutes());
    EXPECT_EQ(m.f_iso, (std::vector<bool>{false, true, true, true}));
    EXPECT_EQ(m.g_iso, (std::vector<bool>{false, true, false, true}));
}

TEST(FunctionalPullback, QuotientByMatrixSummand) {
    DirectSum ds = direct_sum({matrix_algebra(2), dual_numbers()});
    IdealSpec i = make_ideal(ds.algebra, {unit_vector(0), unit_vector(1), unit_vector(2), unit_vector(3)});
    Quotient q = quotient(ds.algebra, i);
    FunctionalPullback p = functional_pullback(ds.algebra, q.algebra, q.theta, 3, kLimits);
    EXPECT_EQ(p.h.target_dims, (V{3, 1, 1, 1}));
    EXPECT_EQ(p.h.source_dims, (V{2, 1, 1, 1}));
    EXPECT_TRUE(p.h.iso[2] && p.h.iso[3] && p.h.surjective[1]);
    EXPECT_TRUE(p.hc.injective[0] && p.hc.surjective[1] && p.hc.injective[2] && p.hc.surjective[3]);
}

TEST(CombinedPullback, DirectSumCyclicIsSumOfParts) {
    DirectSum ds = direct_sum({scalars(), scalars()});
    std::vector<PullbackPart> parts{{&ds.parts[0], ds.projection(0)}, {&ds.parts[1], ds.projection(1)}};
    ComparisonResult r = combined_pullback(ds.algebra, parts, 3, true, kLimits);
    EXPECT_TRUE(all_of(r.iso));
    EXPECT_EQ(r.target_dims, (V{2, 0, 2, 0}));
}
