#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcohom/algebra.hpp"

namespace hcohom {

/// Bimodule given by action matrices of basis elements. For an A1-A2
/// bimodule, left has dim A1 entries and right has dim A2 entries.
class Bimodule {
public:
    Bimodule() = default;
    Bimodule(std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right);

    std::size_t dim() const { return dim_; }
    const std::vector<Matrix>& left() const { return left_; }
    const std::vector<Matrix>& right() const { return right_; }
    const Matrix& left(std::size_t i) const { return left_[i]; }
    const Matrix& right(std::size_t i) const { return right_[i]; }
    /// Action of a general element a = sum a_i e_i.
    Matrix left_action(const SparseVec& a) const;
    Matrix right_action(const SparseVec& a) const;

    friend bool operator==(const Bimodule&, const Bimodule&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Matrix> left_;
    std::vector<Matrix> right_;
};

/// First violated axiom, or nullopt.
std::optional<std::string> bimodule_violation(const Algebra& left_alg, const Algebra& right_alg, const Bimodule& m);
std::optional<std::string> bimodule_violation(const Algebra& a, const Bimodule& m);
/// InputError unless m is a bimodule over a.
void require_bimodule(const Algebra& a, const Bimodule& m);
/// Unit of each algebra (if any) acts as identity on its side.
bool is_unital_bimodule(const Algebra& left_alg, const Algebra& right_alg, const Bimodule& m);

/// A* with (a.f)(x) = f(xa), (f.a)(x) = f(ax) in the dual basis.
Bimodule dual_bimodule(const Algebra& a);
/// A acting on itself by multiplication.
Bimodule regular_bimodule(const Algebra& a);
/// I* as an A-bimodule, in the dual basis of the ideal's RREF basis.
Bimodule ideal_dual(const Algebra& a, const IdealSpec& i);

struct Corner {
    Bimodule module;   // over the part algebra
    Subspace image;    // e M e inside M
};

/// e M e as a bimodule over the part embedded by `embedding` (dim A x dim part).
Corner corner(const Algebra& a, const Bimodule& m, const SparseVec& e, const Matrix& embedding);

/// An A/I-bimodule regarded as an A-bimodule through theta (dim A/I x dim A).
Bimodule inflate(const Bimodule& m, const Matrix& theta);

/// Cen_S X = {x : s.x = x.s for s in S}; e_+ acts as the identity.
Subspace center(const Bimodule& x, const SubalgebraSpec& s);

}  // namespace hcohom
