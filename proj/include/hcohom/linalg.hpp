#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hcohom/matrix.hpp"

namespace hcohom {

/// Incremental row echelon basis of a subspace of K^dim.
///
/// Every stored row has leading entry 1 at its pivot column and no entries to
/// the left of it. When tagging is enabled each stored row also remembers the
/// combination of inserted vectors it came from.
class Echelon {
public:
    explicit Echelon(std::size_t dim, bool track_tags = false);

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Index>& pivots() const { return pivot_of_row_; }

    /// Reduces v against the stored rows. If tags are tracked, tag receives
    /// the combination c with v - residual = sum c_k * (inserted vector k).
    SparseVec reduce(const SparseVec& v, SparseVec* tag = nullptr) const;

    /// Inserts v (as inserted vector number `inserted()`); returns true if it
    /// was independent of the previous ones. With tags tracked and v
    /// dependent, *relation (if given) receives a combination of inserted
    /// vectors that sums to zero and has coefficient 1 on v.
    bool insert(const SparseVec& v, SparseVec* relation = nullptr);
    std::size_t inserted() const { return inserted_; }

    bool contains(const SparseVec& v) const { return reduce(v).empty(); }

    /// Reduced row echelon rows sorted by pivot (the stored rows are not
    /// modified).
    std::vector<SparseVec> rref_rows() const;

private:
    std::size_t dim_;
    bool track_tags_;
    std::size_t inserted_ = 0;
    std::vector<SparseVec> rows_;
    std::vector<SparseVec> tags_;
    std::vector<Index> pivot_of_row_;
    std::vector<int> row_of_pivot_;  // -1 when the column is free
};

struct RrefResult {
    Matrix rref;  // nonzero rows only
    std::vector<Index> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Subspace of K^ambient stored by its reduced row echelon basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    /// Span of arbitrary vectors.
    static Subspace span(std::size_t ambient, const std::vector<SparseVec>& vectors);
    static Subspace full(std::size_t ambient);
    static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<SparseVec>& basis() const { return basis_; }
    const std::vector<Index>& pivots() const { return pivots_; }
    /// Basis as a matrix whose rows are the basis vectors.
    Matrix basis_rows() const { return Matrix::from_rows(basis_, ambient_); }
    /// Inclusion map K^dim -> K^ambient (basis vectors as columns).
    Matrix inclusion() const;

    bool contains(const SparseVec& v) const;
    bool contains(const Subspace& other) const;
    /// Coordinates of v in the RREF basis; nullopt if v is not in the span.
    std::optional<SparseVec> coordinates(const SparseVec& v) const;
    /// Coordinates or ContainmentError.
    SparseVec coordinates_or_throw(const SparseVec& v) const;
    /// Vector with given coordinates.
    SparseVec vector(const SparseVec& coords) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<SparseVec> basis_;
    std::vector<Index> pivots_;
};

Subspace nullspace(const Matrix& m);
/// Column space of m as a subspace of K^rows.
Subspace column_space(const Matrix& m);
Subspace row_space(const Matrix& m);
Subspace intersection(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
/// dim(big) - dim(small); ContainmentError unless small is inside big.
std::size_t quotient_dim(const Subspace& big, const Subspace& small);

/// Solves m x = b for many right-hand sides. The returned solution is the
/// canonical one produced by column elimination in column order.
class LinearSolver {
public:
    explicit LinearSolver(const Matrix& m);
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t rank() const { return echelon_.rank(); }
    std::optional<SparseVec> solve(const SparseVec& b) const;
    SparseVec solve_or_throw(const SparseVec& b) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    Echelon echelon_;
};

/// Exact inverse of a square matrix; PreconditionError if singular.
Matrix inverse(const Matrix& m);
bool is_injective(const Matrix& m);
bool is_surjective(const Matrix& m);
bool is_invertible(const Matrix& m);

}  // namespace hcohom
