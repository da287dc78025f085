#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hcohom/scalar.hpp"

namespace hcohom {

using Index = std::uint32_t;

struct Entry {
    Index index;
    Scalar value;
    friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse vector: entries sorted by index, no explicit zeros.
using SparseVec = std::vector<Entry>;

SparseVec sparse_from_dense(std::span<const Scalar> dense);
std::vector<Scalar> dense_from_sparse(const SparseVec& v, std::size_t dim);
SparseVec unit_vector(Index i);
SparseVec scaled(const SparseVec& v, const Scalar& c);
SparseVec add(const SparseVec& a, const SparseVec& b);
SparseVec sub(const SparseVec& a, const SparseVec& b);
/// a + c * b
SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b);
Scalar value_at(const SparseVec& v, Index i);
Scalar dot(const SparseVec& a, const SparseVec& b);

/// Dense scratch row with a touched-index list, for repeated sparse updates.
class Accumulator {
public:
    explicit Accumulator(std::size_t dim = 0) : values_(dim), touched_flag_(dim, 0) {}

    void resize(std::size_t dim);
    std::size_t dim() const { return values_.size(); }
    void load(const SparseVec& v);
    void add(Index i, const Scalar& c);
    /// this += c * v
    void add_scaled(const Scalar& c, const SparseVec& v);
    const Scalar& operator[](Index i) const { return values_[i]; }
    /// Extracts the nonzero entries (sorted) and clears the accumulator.
    SparseVec take();
    void clear();

private:
    std::vector<Scalar> values_;
    std::vector<char> touched_flag_;
    std::vector<Index> touched_;
};

/// Row-major sparse matrix. A matrix of a linear map V -> W has dim W rows and
/// dim V columns and acts on column vectors.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static Matrix from_dense(const std::vector<std::vector<Scalar>>& rows, std::size_t cols);
    static Matrix from_rows(std::vector<SparseVec> rows, std::size_t cols);
    /// Matrix whose columns are the given vectors.
    static Matrix from_columns(const std::vector<SparseVec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    std::size_t nonzeros() const;

    const SparseVec& row(std::size_t i) const { return rows_[i]; }
    const std::vector<SparseVec>& row_vectors() const { return rows_; }
    void set_row(std::size_t i, SparseVec v) { rows_[i] = std::move(v); }
    void append_row(SparseVec v) { rows_.push_back(std::move(v)); }

    Scalar at(std::size_t i, std::size_t j) const;
    std::vector<SparseVec> columns() const;
    std::vector<std::vector<Scalar>> to_dense() const;

    Matrix transpose() const;
    /// this * v for a column vector v of length cols().
    SparseVec apply(const SparseVec& v) const;
    bool is_zero() const;
    bool is_identity() const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(const Scalar& c) const;
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    std::string to_string() const;

private:
    std::size_t cols_ = 0;
    std::vector<SparseVec> rows_;
};

/// Accumulates (row, col, value) triplets; duplicates are summed.
class MatrixBuilder {
public:
    MatrixBuilder(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}
    void add(std::size_t row, std::size_t col, const Scalar& value);
    Matrix build();

private:
    std::size_t cols_;
    std::vector<SparseVec> rows_;
};

Matrix kron(const Matrix& a, const Matrix& b);
/// a ⊗ a ⊗ ... (power factors); power 0 is the 1x1 identity.
Matrix kron_power(const Matrix& a, std::size_t power);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block-diagonal sum.
Matrix direct_sum(const std::vector<Matrix>& blocks);

}  // namespace hcohom
