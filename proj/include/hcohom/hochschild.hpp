#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hcohom/bimodule.hpp"
#include "hcohom/complex.hpp"
#include "hcohom/limits.hpp"

namespace hcohom {

/// Coordinates of C^n(A, X) are tuples (i_1, ..., i_n; k) in lexicographic
/// order with the output coordinate k last: dim = (dim A)^n dim X.
std::size_t cochain_dim(const Algebra& a, const Bimodule& x, std::size_t n);

/// delta^n : C^n(A, X) -> C^{n+1}(A, X).
Matrix hochschild_delta(const Algebra& a, const Bimodule& x, std::size_t n);

/// C_S^n(A, X); for n = 0 this is Cen_S X.
Subspace relative_cochains(const Algebra& a, const Bimodule& x, const SubalgebraSpec& s, std::size_t n);

/// The complex through degree top (absolute, or S-relative when s is given).
CochainComplex hochschild_complex(const Algebra& a, const Bimodule& x, std::size_t top, const Limits& limits,
                                  const SubalgebraSpec* s = nullptr);

struct CohomologyResult {
    std::size_t degree = 0;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;
    std::size_t dim_cohomology = 0;
    std::vector<SparseVec> representatives;
};

CohomologyResult summarize(const Cohomology& h);
std::vector<CohomologyResult> summarize(const std::vector<Cohomology>& h);

/// Cohomology of C(A, X) or C_S(A, X) in degrees 0..max_n.
std::vector<CohomologyResult> hochschild_cohomology(const Algebra& a, const Bimodule& x, std::size_t max_n,
                                                    const Limits& limits, const SubalgebraSpec* s = nullptr);

struct ComparisonResult {
    std::vector<Matrix> maps;  // per degree, on cohomology
    std::vector<bool> iso;
    std::vector<bool> injective;
    std::vector<bool> surjective;
    std::vector<std::size_t> source_dims;
    std::vector<std::size_t> target_dims;
};

/// Classifies each induced map.
ComparisonResult compare(const std::vector<Cohomology>& source, const std::vector<Cohomology>& target,
                         const std::vector<Matrix>& chain_map, std::size_t max_n);

/// H_S^n(A, X) -> H^n(A, X) induced by the subcomplex inclusion.
ComparisonResult comparison_inclusion(const Algebra& a, const Bimodule& x, const SubalgebraSpec& s,
                                      std::size_t max_n, const Limits& limits);

/// Cochain pullback C^n(Q, M) -> C^n(A, inflate(M)) along theta : A -> Q.
Matrix cochain_pullback(const Matrix& theta, std::size_t module_dim, std::size_t n);

/// H^n(A/I, M) -> H^n(A, M) for a bimodule m over A/I.
ComparisonResult quotient_comparison(const Algebra& a, const IdealSpec& ideal, const Bimodule& m, std::size_t max_n,
                                     const Limits& limits);

struct DirectSumMaps {
    Matrix j;  // C_B^n(A, M) -> ⊕ C^n(A_i, e_i M e_i)
    Matrix g;  // inverse direction
    std::size_t relative_dim = 0;
    std::vector<std::size_t> part_dims;
};

std::vector<Corner> corners(const DirectSum& ds, const Bimodule& m);
DirectSumMaps direct_sum_maps(const DirectSum& ds, const Bimodule& m, std::size_t n, const Limits& limits);

}  // namespace hcohom
