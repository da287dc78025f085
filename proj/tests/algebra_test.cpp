#include <gtest/gtest.h>

#include "hcohom/bimodule.hpp"
#include "hcohom/errors.hpp"
#include "support.hpp"

using namespace hcohom;
using hcohom::testing::vec;

TEST(Builtins, AllValidateAndHaveExpectedUnits) {
    for (const char* name : {"scalars", "dual_numbers", "matrix:2", "matrix:3", "upper_triangular:2", "upper_triangular:3",
                             "truncated_poly:3", "zero:2"}) {
        Algebra a = builtin_algebra(name);
        EXPECT_TRUE(validate(a).valid()) << name;
        std::string n = name;
        EXPECT_EQ(a.is_unital(), n.rfind("zero", 0) != 0) << name;
        if (a.is_unital()) EXPECT_EQ(find_unit(a), a.unit()) << name;
    }
}

TEST(Builtins, UnknownNameIsInputError) {
    EXPECT_THROW(builtin_algebra("octonions"), InputError);
    EXPECT_THROW(builtin_algebra("matrix:x"), InputError);
}

TEST(Validate, ReportsFirstAssociativityViolation) {
    // e0 e0 = e1, e1 e0 = e0, everything else 0: (e0 e0) e0 = e0 but e0 (e0 e0) = 0.
    std::vector<SparseVec> p(4);
    p[0] = vec({0, 1});
    p[2] = vec({1, 0});
    Algebra a(2, Field::Q, p);
    ValidationReport r = validate(a);
    EXPECT_FALSE(r.associative);
    ASSERT_TRUE(r.violation.has_value());
    EXPECT_THROW(require_valid(a), InputError);
}

TEST(Validate, RejectsWrongDeclaredUnit) {
    Algebra a = dual_numbers();
    a.set_unit(vec({0, 1}));
    EXPECT_FALSE(validate(a).unit_ok);
}

TEST(Validate, RejectsComplexConstantsOverQ) {
    std::vector<SparseVec> p{SparseVec{{0, Scalar::i()}}};
    Algebra a(1, Field::Q, p);
    EXPECT_FALSE(validate(a).field_ok);
    Algebra b(1, Field::Qi, p);
    EXPECT_TRUE(validate(b).field_ok);
}

TEST(Unitization, AddsUnitAsLastCoordinate) {
    Algebra z = zero_algebra(2);
    Algebra u = unitize(z);
    EXPECT_EQ(u.dim(), 3u);
    ASSERT_TRUE(u.is_unital());
    EXPECT_EQ(*u.unit(), vec({0, 0, 1}));
    EXPECT_TRUE(validate(u).valid());
}

TEST(DirectSum, IdempotentsAreCentralAndSumToUnit) {
    DirectSum ds = direct_sum({matrix_algebra(2), scalars()});
    const Algebra& a = ds.algebra;
    EXPECT_EQ(a.dim(), 5u);
    SparseVec total;
    for (const auto& e : ds.idempotents) {
        EXPECT_EQ(a.multiply(e, e), e);
        for (std::size_t i = 0; i < a.dim(); ++i)
            EXPECT_EQ(a.multiply(e, unit_vector(i)), a.multiply(unit_vector(i), e));
        total = add(total, e);
    }
    EXPECT_EQ(total, *a.unit());
    EXPECT_TRUE((ds.projection(0) * ds.embedding(0)).is_identity());
    EXPECT_TRUE((ds.projection(1) * ds.embedding(0)).is_zero());
}

TEST(DirectSum, RejectsNonUnitalParts) { EXPECT_THROW(direct_sum({scalars(), zero_algebra(1)}), PreconditionError); }

TEST(Triangular, QQQIsUpperTriangular) {
    Triangular u = triangular(scalars(), scalars(), regular_bimodule(scalars()));
    EXPECT_EQ(u.algebra.dim(), 3u);
    EXPECT_TRUE(validate(u.algebra).valid());
    ASSERT_TRUE(u.algebra.is_unital());
    EXPECT_EQ(add(u.e11, u.e22), *u.algebra.unit());
    EXPECT_TRUE(is_homomorphism(u.algebra, scalars(), u.projection1()));
    EXPECT_TRUE(is_homomorphism(u.algebra, scalars(), u.projection2()));
}

TEST(Subalgebras, IdempotentSpanAndContainment) {
    Algebra ut = upper_triangular(2);
    SubalgebraSpec diag = idempotent_subalgebra(ut);
    EXPECT_EQ(diag.basis.dim(), 2u);
    EXPECT_TRUE(subalgebra_contains(whole_subalgebra(ut), diag));
    EXPECT_FALSE(subalgebra_contains(diag, whole_subalgebra(ut)));
}

TEST(Subalgebras, NonClosedSpanIsRejected) {
    Algebra m2 = matrix_algebra(2);
    // e12 alone is closed (e12^2 = 0); e12 with e21 is not.
    EXPECT_NO_THROW(make_subalgebra(m2, {unit_vector(1)}, false));
    EXPECT_THROW(make_subalgebra(m2, {unit_vector(1), unit_vector(2)}, false), Error);
}

TEST(Ideals, StrictUpperIsAnIdealAndDiagonalIsNot) {
    Algebra ut = upper_triangular(2);
    EXPECT_NO_THROW(make_ideal(ut, {unit_vector(1)}));
    EXPECT_THROW(make_ideal(ut, {unit_vector(0)}), IdealError);
}

TEST(Ideals, QuotientOfUpperTriangularByRadicalIsQQ) {
    Algebra ut = upper_triangular(2);
    Quotient q = quotient(ut, make_ideal(ut, {unit_vector(1)}));
    EXPECT_EQ(q.algebra.dim(), 2u);
    EXPECT_TRUE(validate(q.algebra).valid());
    EXPECT_TRUE(is_homomorphism(ut, q.algebra, q.theta));
    EXPECT_EQ(trace_space(q.algebra).dim(), 2u);
}

TEST(Separability, FoundForSemisimpleAlgebras) {
    for (const Algebra& a : {scalars(), matrix_algebra(2), direct_sum({scalars(), scalars()}).algebra}) {
        auto u = separability_idempotent(a);
        ASSERT_TRUE(u.has_value());
        EXPECT_TRUE(verify_separability_idempotent(a, *u));
    }
}

TEST(Separability, AbsentForDualNumbersAndUpperTriangular) {
    EXPECT_FALSE(separability_idempotent(dual_numbers()).has_value());
    EXPECT_FALSE(separability_idempotent(upper_triangular(2)).has_value());
}

TEST(TraceSpace, KnownDimensions) {
    EXPECT_EQ(trace_space(matrix_algebra(2)).dim(), 1u);
    EXPECT_EQ(trace_space(upper_triangular(2)).dim(), 2u);
    EXPECT_EQ(trace_space(direct_sum({matrix_algebra(2), dual_numbers()}).algebra).dim(), 3u);
}

TEST(ChangeBasis, PreservesInvariants) {
    std::mt19937 rng(7);
    Algebra ut = upper_triangular(2);
    Algebra moved = change_basis(ut, hcohom::testing::random_invertible(rng, 3));
    EXPECT_TRUE(validate(moved).valid());
    EXPECT_EQ(trace_space(moved).dim(), 2u);
    ASSERT_TRUE(moved.is_unital());
    EXPECT_EQ(find_unit(moved), moved.unit());
}

TEST(Homomorphism, DetectsNonMultiplicativeMaps) {
    Algebra q = scalars();
    Algebra d = dual_numbers();
    EXPECT_TRUE(is_homomorphism(d, q, Matrix::from_dense({{1, 0}}, 2)));
    EXPECT_FALSE(is_homomorphism(d, q, Matrix::from_dense({{1, 1}}, 2)));
}

TEST(Bimodules, DualAndRegularSatisfyAxioms) {
    for (const Algebra& a : {matrix_algebra(2), upper_triangular(2), dual_numbers(), zero_algebra(2)}) {
        EXPECT_FALSE(bimodule_violation(a, dual_bimodule(a)).has_value());
        EXPECT_FALSE(bimodule_violation(a, regular_bimodule(a)).has_value());
    }
}

TEST(Bimodules, BrokenActionIsReported) {
    Algebra d = dual_numbers();
    Bimodule m = regular_bimodule(d);
    Bimodule bad(m.dim(), {m.left_action(unit_vector(0)), Matrix::identity(2)},
                 {m.right_action(unit_vector(0)), m.right_action(unit_vector(1))});
    EXPECT_TRUE(bimodule_violation(d, bad).has_value());
}

TEST(Bimodules, CenterOfUpperTriangularDualOverDiagonalIsTwoDimensional) {
    Algebra ut = upper_triangular(2);
    EXPECT_EQ(center(dual_bimodule(ut), idempotent_subalgebra(ut)).dim(), 2u);
}

TEST(Bimodules, CenterOverWholeAlgebraIsTraceSpace) {
    for (const Algebra& a : {matrix_algebra(2), upper_triangular(2), dual_numbers()})
        EXPECT_EQ(center(dual_bimodule(a), whole_subalgebra(a)).dim(), trace_space(a).dim());
}

TEST(Bimodules, CornersOfDirectSumDual) {
    DirectSum ds = direct_sum({matrix_algebra(2), scalars()});
    Bimodule m = dual_bimodule(ds.algebra);
    Corner c0 = corner(ds.algebra, m, ds.idempotents[0], ds.embedding(0));
    EXPECT_EQ(c0.module.dim(), 4u);
    EXPECT_FALSE(bimodule_violation(ds.parts[0], c0.module).has_value());
}

TEST(Bimodules, InflationThroughQuotientIsABimodule) {
    DirectSum ds = direct_sum({matrix_algebra(2), dual_numbers()});
    IdealSpec i = make_ideal(ds.algebra, {unit_vector(0), unit_vector(1), unit_vector(2), unit_vector(3)});
    Quotient q = quotient(ds.algebra, i);
    Bimodule m = inflate(dual_bimodule(q.algebra), q.theta);
    EXPECT_FALSE(bimodule_violation(ds.algebra, m).has_value());
}

TEST(Bimodules, IdealDualIsABimoduleOverTheAlgebra) {
    Algebra m2 = matrix_algebra(2);
    IdealSpec whole = make_ideal(m2, {unit_vector(0), unit_vector(1), unit_vector(2), unit_vector(3)});
    Bimodule x = ideal_dual(m2, whole);
    EXPECT_EQ(x.dim(), 4u);
    EXPECT_FALSE(bimodule_violation(m2, x).has_value());
}
