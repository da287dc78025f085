#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hcohom/linalg.hpp"

namespace hcohom {

enum class Field { Q, Qi };

std::string field_name(Field f);
Field parse_field(const std::string& name);

/// Finite-dimensional associative algebra given by structure constants.
class Algebra {
public:
    Algebra() = default;
    /// products[i * dim + j] = e_i e_j. No validation is performed here.
    Algebra(std::size_t dim, Field field, std::vector<SparseVec> products);

    std::size_t dim() const { return dim_; }
    Field field() const { return field_; }
    const SparseVec& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
    Scalar c(std::size_t i, std::size_t j, std::size_t k) const { return value_at(product(i, j), static_cast<Index>(k)); }
    SparseVec multiply(const SparseVec& a, const SparseVec& b) const;

    /// x -> e_i x and x -> x e_i.
    Matrix left_mult(std::size_t i) const;
    Matrix right_mult(std::size_t i) const;
    Matrix left_mult(const SparseVec& a) const;
    Matrix right_mult(const SparseVec& a) const;

    const std::optional<SparseVec>& unit() const { return unit_; }
    bool is_unital() const { return unit_.has_value(); }
    void set_unit(std::optional<SparseVec> u) { unit_ = std::move(u); }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::string label(std::size_t i) const;

    /// Distinguished orthogonal idempotents (direct-sum components, triangular
    /// corners, diagonal matrix units). Metadata only.
    const std::vector<SparseVec>& idempotents() const { return idempotents_; }
    void set_idempotents(std::vector<SparseVec> e) { idempotents_ = std::move(e); }

    friend bool operator==(const Algebra&, const Algebra&) = default;

private:
    std::size_t dim_ = 0;
    Field field_ = Field::Q;
    std::vector<SparseVec> products_;
    std::optional<SparseVec> unit_;
    std::vector<std::string> labels_;
    std::vector<SparseVec> idempotents_;
};

/// Builds an algebra from a dense d x d x d table c[i][j][k].
Algebra algebra_from_table(Field field, const std::vector<std::vector<std::vector<Scalar>>>& c,
                           std::optional<SparseVec> unit = std::nullopt);

struct ValidationReport {
    bool associative = true;
    bool unit_ok = true;
    bool field_ok = true;
    /// First (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k).
    std::optional<std::array<std::size_t, 3>> violation;
    std::optional<std::size_t> unit_violation;
    std::string message;

    bool valid() const { return associative && unit_ok && field_ok; }
};

ValidationReport validate(const Algebra& a);
/// InputError unless valid.
void require_valid(const Algebra& a);

/// Searches for a two-sided identity.
std::optional<SparseVec> find_unit(const Algebra& a);

/// A_+ = A ⊕ K e_+ with e_+ at index dim(A).
Algebra unitize(const Algebra& a);

struct DirectSum {
    Algebra algebra;
    std::vector<Algebra> parts;
    std::vector<std::size_t> offsets;
    /// Component identities in the sum's coordinates.
    std::vector<SparseVec> idempotents;
    /// Inclusion A_i -> A and projection A -> A_i.
    Matrix embedding(std::size_t i) const;
    Matrix projection(std::size_t i) const;
};

/// PreconditionError unless all parts are unital and share a field.
DirectSum direct_sum(const std::vector<Algebra>& parts);

class Bimodule;

struct Triangular {
    Algebra algebra;  // basis order: A1, then Y, then A2
    std::size_t dim1 = 0;
    std::size_t dim_y = 0;
    std::size_t dim2 = 0;
    SparseVec e11;
    SparseVec e22;
    Matrix projection1() const;
    Matrix projection2() const;
};

/// y is an A1-A2 bimodule: y.left has dim A1 matrices, y.right dim A2.
Triangular triangular(const Algebra& a1, const Algebra& a2, const Bimodule& y);

/// Subalgebra of A or of A_+, stored in A_+ coordinates (length dim A + 1).
struct SubalgebraSpec {
    std::size_t parent_dim = 0;
    bool in_unitization = false;
    Subspace basis;  // ambient parent_dim + 1

    /// Parts of the basis vectors lying in A (the e_+ coordinate dropped).
    std::vector<SparseVec> a_parts() const;
    /// True when the subalgebra is span{e_+}.
    bool is_unit_span() const;
};

/// Product in A_+ of vectors of length dim A + 1.
SparseVec unitized_product(const Algebra& a, const SparseVec& x, const SparseVec& y);

/// ContainmentError if the span is not multiplicatively closed.
SubalgebraSpec make_subalgebra(const Algebra& a, const std::vector<SparseVec>& vectors, bool in_unitization);
SubalgebraSpec unit_subalgebra(const Algebra& a);
SubalgebraSpec whole_subalgebra(const Algebra& a);
/// Span of a's distinguished idempotents; PreconditionError if it has none.
SubalgebraSpec idempotent_subalgebra(const Algebra& a);
bool subalgebra_contains(const SubalgebraSpec& big, const SubalgebraSpec& small);

/// The subalgebra as an algebra on its RREF basis, unit found if present.
Algebra subalgebra_as_algebra(const Algebra& a, const SubalgebraSpec& s);

struct IdealSpec {
    std::size_t parent_dim = 0;
    Subspace basis;
};

/// IdealError unless the span absorbs multiplication on both sides.
IdealSpec make_ideal(const Algebra& a, const std::vector<SparseVec>& vectors);
Algebra ideal_as_algebra(const Algebra& a, const IdealSpec& i);
SubalgebraSpec ideal_as_subalgebra(const Algebra& a, const IdealSpec& i);

struct Quotient {
    Algebra algebra;
    Matrix theta;    // dim(A/I) x dim(A)
    Matrix section;  // dim(A) x dim(A/I), complement basis vectors
};

/// A/I on the complement of the ideal's pivot coordinates.
Quotient quotient(const Algebra& a, const IdealSpec& i);

/// Matrix kappa (dim D x dim A) is multiplicative; unital if both are.
bool is_homomorphism(const Algebra& a, const Algebra& d, const Matrix& kappa, bool check_unit = true);

/// Separability idempotent u in A ⊗ A (index i * dim + j); PreconditionError
/// unless unital.
std::optional<SparseVec> separability_idempotent(const Algebra& a);
bool verify_separability_idempotent(const Algebra& a, const SparseVec& u);

/// Functionals f with f(xy) = f(yx), as a subspace of A* (dual basis).
Subspace trace_space(const Algebra& a);

/// New basis f_j = sum_i p[i][j] e_i; p must be invertible.
Algebra change_basis(const Algebra& a, const Matrix& p);

Algebra matrix_algebra(std::size_t n, Field field = Field::Q);
Algebra scalars(Field field = Field::Q);
Algebra dual_numbers(Field field = Field::Q);
Algebra upper_triangular(std::size_t n, Field field = Field::Q);
Algebra zero_algebra(std::size_t dim, Field field = Field::Q);
/// K[x]/(x^k), basis 1, x, ..., x^{k-1}.
Algebra truncated_polynomials(std::size_t k, Field field = Field::Q);

/// "matrix:n", "scalars", "dual_numbers", "upper_triangular:n", "zero:d",
/// "truncated_poly:k". InputError for unknown names.
Algebra builtin_algebra(const std::string& name, Field field = Field::Q);
std::vector<std::string> builtin_algebra_names();

}  // namespace hcohom
