#include <gtest/gtest.h>

#include "hcohom/errors.hpp"
#include "hcohom/io.hpp"
#include "properties.hpp"

using namespace hcohom;
using namespace hcohom::testing;

namespace {

constexpr int kAlgebras = 120;
const Limits kLimits{};

}  // namespace

TEST(Properties, StructuralIdentitiesOnRandomAlgebras) {
    std::mt19937 rng(1009);
    for (int i = 0; i < kAlgebras; ++i) {
        Algebra a = random_algebra(rng);
        ASSERT_TRUE(validate(a).valid());
        auto bad = structural_violations(a, 3, kLimits);
        for (const auto& b : bad) ADD_FAILURE() << "algebra " << i << " " << algebra_to_json(a).dump() << ": " << b;
    }
}

TEST(Properties, SbiExactOnRandomAlgebras) {
    std::mt19937 rng(2017);
    for (int i = 0; i < 40; ++i) {
        Algebra a = random_algebra(rng);
        for (const auto& s : {unit_subalgebra(a), whole_subalgebra(a)})
            for (const auto& b : sbi_violations(a, s, 2, kLimits)) ADD_FAILURE() << algebra_to_json(a).dump() << ": " << b;
    }
}

TEST(Properties, CyclicCohomologyIsBasisIndependent) {
    std::mt19937 rng(3);
    for (const Algebra& base : {upper_triangular(2), dual_numbers(), truncated_polynomials(3)}) {
        auto expected = h_dims(cyclic_cohomology(base, unit_subalgebra(base), 3, kLimits));
        for (int k = 0; k < 3; ++k) {
            Algebra moved = change_basis(base, random_invertible(rng, base.dim()));
            EXPECT_EQ(h_dims(cyclic_cohomology(moved, unit_subalgebra(moved), 3, kLimits)), expected);
        }
    }
}

TEST(Properties, UnitalBarComplexIsAcyclic) {
    std::mt19937 rng(11);
    int checked = 0;
    while (checked < 25) {
        Algebra a = random_algebra(rng);
        if (!a.is_unital()) continue;
        ++checked;
        for (std::size_t d : h_dims(hr_cohomology(a, unit_subalgebra(a), 2, kLimits))) EXPECT_EQ(d, 0u);
    }
}

TEST(Properties, RandomStructureConstantsFailingAssociativityAreRejected) {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick(-1, 1);
    int rejected = 0;
    for (int i = 0; i < 200; ++i) {
        json c = json::array();
        for (int p = 0; p < 2; ++p) {
            json row = json::array();
            for (int q = 0; q < 2; ++q) row.push_back(json::array({pick(rng), pick(rng)}));
            c.push_back(row);
        }
        json j{{"field", "Q"}, {"dim", 2}, {"structure_constants", c}};
        std::vector<std::vector<std::vector<Scalar>>> table(2, std::vector<std::vector<Scalar>>(2, std::vector<Scalar>(2)));
        for (int p = 0; p < 2; ++p)
            for (int q = 0; q < 2; ++q)
                for (int r = 0; r < 2; ++r) table[p][q][r] = c[p][q][r].get<int>();
        bool associative = validate(algebra_from_table(Field::Q, table)).associative;
        if (associative) {
            EXPECT_NO_THROW(algebra_from_json(j));
        } else {
            EXPECT_THROW(algebra_from_json(j), InputError);
            ++rejected;
        }
    }
    EXPECT_GT(rejected, 0);
}
