#pragma once

#include <cstddef>
#include <vector>

#include "hcohom/hochschild.hpp"

namespace hcohom {

/// Degree-n cochains here are (n+1)-linear functionals f(a_0, ..., a_n),
/// indexed by tuples (i_0, ..., i_n) with i_0 most significant.
std::size_t functional_dim(const Algebra& a, std::size_t n);

/// (t_n f)(a_0, ..., a_n) = (-1)^n f(a_1, ..., a_n, a_0).
Matrix cyclic_t(std::size_t dim, std::size_t n);
Matrix cyclic_t(const Algebra& a, std::size_t n);
/// N_n = id + t_n + ... + t_n^n.
Matrix cyclic_norm(const Algebra& a, std::size_t n);
/// M_n = id - t_n^{-1}, the orientation that commutes with the differentials
/// (M delta = delta_r M); id - t_n does not once n >= 1.
Matrix cyclic_m(const Algebra& a, std::size_t n);

/// Differential with the wrap-around term f(a_{n+1} a_0, a_1, ..., a_n).
Matrix cyclic_delta(const Algebra& a, std::size_t n);
/// The same differential without the wrap-around term.
Matrix bar_delta(const Algebra& a, std::size_t n);

struct CyclicCochainSpace {
    std::size_t degree = 0;
    std::size_t ambient_dim = 0;
    Subspace relative;
    Subspace cyclic;
};

CyclicCochainSpace cyclic_spaces(const Algebra& a, const SubalgebraSpec& s, std::size_t n);

/// The complexes C_S, CC_S, CR_S through degree top, in subspace coordinates,
/// with the chain maps i: CC -> C, M: C -> CR, N: CR -> CC.
struct CyclicData {
    std::vector<CyclicCochainSpace> spaces;
    CochainComplex c;
    CochainComplex cc;
    CochainComplex cr;
    std::vector<Matrix> i;
    std::vector<Matrix> m;
    std::vector<Matrix> n;

    std::size_t top() const { return c.top(); }
};

CyclicData cyclic_data(const Algebra& a, const SubalgebraSpec& s, std::size_t top, const Limits& limits);

/// Degreewise exactness of 0 -> CC -> C -> CR -> CC -> 0, one report per degree.
std::vector<ExactnessReport> sbi_exactness(const CyclicData& data);

std::vector<CohomologyResult> hr_cohomology(const Algebra& a, const SubalgebraSpec& s, std::size_t max_n,
                                            const Limits& limits);
std::vector<CohomologyResult> cyclic_cohomology(const Algebra& a, const SubalgebraSpec& s, std::size_t max_n,
                                                const Limits& limits);

struct CTReport {
    std::size_t max_n = 0;
    std::vector<Cohomology> h;
    std::vector<Cohomology> hc;
    std::vector<Cohomology> hs;
    std::vector<Matrix> hm;     // H^n(M): H^n -> HS^n, n <= max_n
    std::vector<Matrix> zeta;   // HS^n -> HC^{n+1}, n < max_n
    std::vector<Matrix> eta;    // HC^n -> HS^{n+1}, n < max_n
    std::vector<Matrix> maps_i; // I^n: HC^n -> H^n, n <= max_n
    std::vector<Matrix> maps_b; // B^n: H^n -> HC^{n-1}, n <= max_n
    std::vector<Matrix> maps_s; // S^n: HC^{n-1} -> HC^{n+1}, n < max_n
    ExactnessReport exactness;
    bool eta_invertible = true;

    std::vector<std::size_t> h_dims() const { return cohomology_dims(h); }
    std::vector<std::size_t> hc_dims() const { return cohomology_dims(hc); }
};

/// PreconditionError for non-unital A; ExactnessError if some eta^n is singular.
CTReport connes_tsygan(const Algebra& a, const SubalgebraSpec& s, std::size_t max_n, const Limits& limits);

struct CTMorphismReport {
    CTReport source;
    CTReport target;
    std::vector<Matrix> f;  // on H^n
    std::vector<Matrix> g;  // on HC^n
    std::vector<bool> f_iso;
    std::vector<bool> g_iso;
    std::vector<bool> square_i;
    std::vector<bool> square_b;
    std::vector<bool> square_s;

    bool commutes() const;
};

/// Relative (over s) to absolute sequences, verticals induced by inclusion.
CTMorphismReport ct_morphism(const Algebra& a, const SubalgebraSpec& s, std::size_t max_n, const Limits& limits);

/// Sequences of D to those of A, verticals induced by pulling back along kappa : A -> D.
CTMorphismReport ct_morphism_hom(const Algebra& a, const Algebra& d, const Matrix& kappa, std::size_t max_n,
                                 const Limits& limits);

struct FunctionalPullback {
    ComparisonResult h;
    ComparisonResult hc;
};

/// H^n(D) -> H^n(A) and HC^n(D) -> HC^n(A) along kappa : A -> D.
FunctionalPullback functional_pullback(const Algebra& a, const Algebra& d, const Matrix& kappa, std::size_t max_n,
                                       const Limits& limits);

struct PullbackPart {
    const Algebra* algebra;
    Matrix kappa;  // A -> part
};

/// The sum of pullbacks from several algebras, as one map out of the direct
/// sum of their H (cyclic = false) or HC (cyclic = true).
ComparisonResult combined_pullback(const Algebra& a, const std::vector<PullbackPart>& parts, std::size_t max_n,
                                   bool cyclic, const Limits& limits);

}  // namespace hcohom
