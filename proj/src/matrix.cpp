#include "hcohom/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "hcohom/errors.hpp"

namespace hcohom {

SparseVec sparse_from_dense(std::span<const Scalar> dense) {
    SparseVec out;
    for (std::size_t i = 0; i < dense.size(); ++i)
        if (!dense[i].is_zero()) out.push_back({static_cast<Index>(i), dense[i]});
    return out;
}

std::vector<Scalar> dense_from_sparse(const SparseVec& v, std::size_t dim) {
    std::vector<Scalar> out(dim);
    for (const auto& e : v) out.at(e.index) = e.value;
    return out;
}

SparseVec unit_vector(Index i) { return {{i, Scalar(1)}}; }

SparseVec scaled(const SparseVec& v, const Scalar& c) {
    if (c.is_zero()) return {};
    SparseVec out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back({e.index, e.value * c});
    return out;
}

SparseVec axpy(const SparseVec& a, const Scalar& c, const SparseVec& b) {
    if (c.is_zero()) return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].index < a[i].index) {
            out.push_back({b[j].index, c * b[j].value});
            ++j;
        } else {
            Scalar s = a[i].value + c * b[j].value;
            if (!s.is_zero()) out.push_back({a[i].index, std::move(s)});
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec add(const SparseVec& a, const SparseVec& b) { return axpy(a, Scalar(1), b); }
SparseVec sub(const SparseVec& a, const SparseVec& b) { return axpy(a, Scalar(-1), b); }

Scalar value_at(const SparseVec& v, Index i) {
    auto it = std::lower_bound(v.begin(), v.end(), i, [](const Entry& e, Index k) { return e.index < k; });
    if (it != v.end() && it->index == i) return it->value;
    return {};
}

Scalar dot(const SparseVec& a, const SparseVec& b) {
    Scalar s;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].index < b[j].index) {
            ++i;
        } else if (b[j].index < a[i].index) {
            ++j;
        } else {
            s += a[i].value * b[j].value;
            ++i;
            ++j;
        }
    }
    return s;
}

void Accumulator::resize(std::size_t dim) {
    clear();
    values_.assign(dim, Scalar());
    touched_flag_.assign(dim, 0);
}

void Accumulator::load(const SparseVec& v) {
    for (const auto& e : v) add(e.index, e.value);
}

void Accumulator::add(Index i, const Scalar& c) {
    if (!touched_flag_[i]) {
        touched_flag_[i] = 1;
        touched_.push_back(i);
    }
    values_[i] += c;
}

void Accumulator::add_scaled(const Scalar& c, const SparseVec& v) {
    if (c.is_zero()) return;
    for (const auto& e : v) add(e.index, c * e.value);
}

SparseVec Accumulator::take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec out;
    out.reserve(touched_.size());
    for (Index i : touched_) {
        if (!values_[i].is_zero()) out.push_back({i, std::move(values_[i])});
        values_[i] = Scalar();
        touched_flag_[i] = 0;
    }
    touched_.clear();
    return out;
}

void Accumulator::clear() {
    for (Index i : touched_) {
        values_[i] = Scalar();
        touched_flag_[i] = 0;
    }
    touched_.clear();
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i] = unit_vector(static_cast<Index>(i));
    return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("ragged dense matrix");
        m.rows_[i] = sparse_from_dense(rows[i]);
    }
    return m;
}

Matrix Matrix::from_rows(std::vector<SparseVec> rows, std::size_t cols) {
    Matrix m;
    m.cols_ = cols;
    for (const auto& r : rows)
        if (!r.empty() && r.back().index >= cols) throw DimensionError("row entry beyond column count");
    m.rows_ = std::move(rows);
    return m;
}

Matrix Matrix::from_columns(const std::vector<SparseVec>& cols, std::size_t rows) {
    MatrixBuilder b(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& e : cols[j]) b.add(e.index, j, e.value);
    return b.build();
}

std::size_t Matrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

Scalar Matrix::at(std::size_t i, std::size_t j) const { return value_at(rows_.at(i), static_cast<Index>(j)); }

std::vector<SparseVec> Matrix::columns() const { return transpose().rows_; }

std::vector<std::vector<Scalar>> Matrix::to_dense() const {
    std::vector<std::vector<Scalar>> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(dense_from_sparse(r, cols_));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_.size());
    std::vector<std::size_t> counts(cols_, 0);
    for (const auto& r : rows_)
        for (const auto& e : r) ++counts[e.index];
    for (std::size_t j = 0; j < cols_; ++j) t.rows_[j].reserve(counts[j]);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (const auto& e : rows_[i]) t.rows_[e.index].push_back({static_cast<Index>(i), e.value});
    return t;
}

SparseVec Matrix::apply(const SparseVec& v) const {
    if (!v.empty() && v.back().index >= cols_) throw DimensionError("vector longer than matrix column count");
    SparseVec out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Scalar s = dot(rows_[i], v);
        if (!s.is_zero()) out.push_back({static_cast<Index>(i), std::move(s)});
    }
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const SparseVec& r) { return r.empty(); });
}

bool Matrix::is_identity() const {
    if (rows_.size() != cols_) return false;
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].size() != 1 || rows_[i][0].index != i || !rows_[i][0].value.is_one()) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows()) throw DimensionError("matrix product shape mismatch");
    Matrix out(rows_.size(), rhs.cols());
    Accumulator acc(rhs.cols());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (const auto& e : rows_[i]) acc.add_scaled(e.value, rhs.rows_[e.index]);
        out.rows_[i] = acc.take();
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows() != rhs.rows() || cols_ != rhs.cols_) throw DimensionError("matrix sum shape mismatch");
    Matrix out(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i) out.rows_[i] = add(rows_[i], rhs.rows_[i]);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows() != rhs.rows() || cols_ != rhs.cols_) throw DimensionError("matrix difference shape mismatch");
    Matrix out(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i) out.rows_[i] = sub(rows_[i], rhs.rows_[i]);
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i) out.rows_[i] = hcohom::scaled(rows_[i], c);
    return out;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows(); ++i) {
        os << (i ? ", [" : "[");
        auto dense = dense_from_sparse(rows_[i], cols_);
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << dense[j];
        os << "]";
    }
    os << "]";
    return os.str();
}

void MatrixBuilder::add(std::size_t row, std::size_t col, const Scalar& value) {
    if (row >= rows_.size() || col >= cols_) throw DimensionError("builder index out of range");
    if (value.is_zero()) return;
    rows_[row].push_back({static_cast<Index>(col), value});
}

Matrix MatrixBuilder::build() {
    for (auto& r : rows_) {
        std::stable_sort(r.begin(), r.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
        SparseVec merged;
        merged.reserve(r.size());
        for (auto& e : r) {
            if (!merged.empty() && merged.back().index == e.index) {
                merged.back().value += e.value;
            } else {
                if (!merged.empty() && merged.back().value.is_zero()) merged.pop_back();
                merged.push_back(std::move(e));
            }
        }
        if (!merged.empty() && merged.back().value.is_zero()) merged.pop_back();
        r = std::move(merged);
    }
    return Matrix::from_rows(std::move(rows_), cols_);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<SparseVec> rows(a.rows() * b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < b.rows(); ++k) {
            SparseVec r;
            r.reserve(a.row(i).size() * b.row(k).size());
            for (const auto& ea : a.row(i))
                for (const auto& eb : b.row(k))
                    r.push_back({static_cast<Index>(ea.index * b.cols() + eb.index), ea.value * eb.value});
            rows[i * b.rows() + k] = std::move(r);
        }
    }
    return Matrix::from_rows(std::move(rows), a.cols() * b.cols());
}

Matrix kron_power(const Matrix& a, std::size_t power) {
    Matrix out = Matrix::identity(1);
    for (std::size_t p = 0; p < power; ++p) out = kron(out, a);
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
    std::vector<SparseVec> rows(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        rows[i] = a.row(i);
        for (const auto& e : b.row(i)) rows[i].push_back({static_cast<Index>(e.index + a.cols()), e.value});
    }
    return Matrix::from_rows(std::move(rows), a.cols() + b.cols());
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
    std::vector<SparseVec> rows = a.row_vectors();
    rows.insert(rows.end(), b.row_vectors().begin(), b.row_vectors().end());
    return Matrix::from_rows(std::move(rows), a.cols());
}

Matrix direct_sum(const std::vector<Matrix>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) {
        r += b.rows();
        c += b.cols();
    }
    std::vector<SparseVec> rows;
    rows.reserve(r);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (const auto& row : b.row_vectors()) {
            SparseVec shifted;
            shifted.reserve(row.size());
            for (const auto& e : row) shifted.push_back({static_cast<Index>(e.index + off), e.value});
            rows.push_back(std::move(shifted));
        }
        off += b.cols();
    }
    return Matrix::from_rows(std::move(rows), c);
}

}  // namespace hcohom
