#include "hcohom/linalg.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "hcohom/errors.hpp"

namespace hcohom {
namespace {

// Dense scratch with a min-heap of touched indices so that elimination can
// always pick the smallest live column.
class HeapScratch {
public:
    void prepare(std::size_t dim) {
        if (values_.size() < dim) {
            values_.resize(dim);
            flags_.resize(dim, 0);
        }
    }
    void add(Index i, const Scalar& c) {
        if (!flags_[i]) {
            flags_[i] = 1;
            heap_.push(i);
        }
        values_[i] += c;
    }
    void add_scaled(const Scalar& c, const SparseVec& v, std::size_t skip_below) {
        for (const auto& e : v)
            if (e.index >= skip_below) add(e.index, c * e.value);
    }
    bool empty() const { return heap_.empty(); }
    Index pop() {
        Index i = heap_.top();
        heap_.pop();
        flags_[i] = 0;
        return i;
    }
    Scalar take_value(Index i) {
        Scalar s = std::move(values_[i]);
        values_[i] = Scalar();
        return s;
    }

private:
    std::vector<Scalar> values_;
    std::vector<char> flags_;
    std::priority_queue<Index, std::vector<Index>, std::greater<>> heap_;
};

HeapScratch& scratch() {
    thread_local HeapScratch s;
    return s;
}

Accumulator& tag_scratch(std::size_t dim) {
    thread_local Accumulator acc;
    if (acc.dim() < dim) acc.resize(dim);
    return acc;
}

}  // namespace

Echelon::Echelon(std::size_t dim, bool track_tags)
    : dim_(dim), track_tags_(track_tags), row_of_pivot_(dim, -1) {}

SparseVec Echelon::reduce(const SparseVec& v, SparseVec* tag) const {
    HeapScratch& s = scratch();
    if (!v.empty() && v.back().index >= dim_) throw DimensionError("vector exceeds echelon dimension");
    s.prepare(dim_);
    for (const auto& e : v) s.add(e.index, e.value);
    Accumulator* tags = nullptr;
    if (tag && track_tags_) {
        tags = &tag_scratch(inserted_ + 1);
        tags->clear();
    }
    SparseVec residual;
    while (!s.empty()) {
        Index c = s.pop();
        Scalar val = s.take_value(c);
        if (val.is_zero()) continue;
        int r = row_of_pivot_[c];
        if (r < 0) {
            residual.push_back({c, std::move(val)});
            continue;
        }
        // row r has a 1 at c and nothing left of it
        Scalar neg = -val;
        s.add_scaled(neg, rows_[r], c + 1);
        if (tags) tags->add_scaled(val, tags_[r]);
    }
    if (tag) *tag = tags ? tags->take() : SparseVec{};
    return residual;
}

bool Echelon::insert(const SparseVec& v, SparseVec* relation) {
    SparseVec tag;
    SparseVec residual = reduce(v, track_tags_ ? &tag : nullptr);
    Index self = static_cast<Index>(inserted_++);
    if (residual.empty()) {
        if (relation && track_tags_) {
            // v - sum tag_k ins_k = 0
            *relation = axpy(unit_vector(self), Scalar(-1), tag);
        }
        return false;
    }
    Scalar lead_inv = residual.front().value.inverse();
    Index pivot = residual.front().index;
    SparseVec row = scaled(residual, lead_inv);
    row.front().value = Scalar(1);
    row_of_pivot_[pivot] = static_cast<int>(rows_.size());
    pivot_of_row_.push_back(pivot);
    rows_.push_back(std::move(row));
    if (track_tags_) {
        // residual = v - sum tag_k ins_k
        tags_.push_back(scaled(axpy(unit_vector(self), Scalar(-1), tag), lead_inv));
    }
    return true;
}

std::vector<SparseVec> Echelon::rref_rows() const {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivot_of_row_[a] < pivot_of_row_[b]; });
    std::vector<SparseVec> reduced(rows_.size());
    std::vector<int> reduced_of_pivot(dim_, -1);
    Accumulator acc(dim_);
    for (std::size_t k = order.size(); k-- > 0;) {
        const SparseVec& row = rows_[order[k]];
        Index p = pivot_of_row_[order[k]];
        acc.load(row);
        for (const auto& e : row) {
            if (e.index == p) continue;
            int r = reduced_of_pivot[e.index];
            if (r >= 0) acc.add_scaled(-e.value, reduced[r]);
        }
        reduced[k] = acc.take();
        reduced_of_pivot[p] = static_cast<int>(k);
    }
    return reduced;
}

RrefResult rref(const Matrix& m) {
    Echelon e(m.cols());
    for (const auto& r : m.row_vectors()) e.insert(r);
    auto rows = e.rref_rows();
    RrefResult out;
    for (const auto& r : rows) out.pivots.push_back(r.front().index);
    out.rref = Matrix::from_rows(std::move(rows), m.cols());
    return out;
}

std::size_t rank(const Matrix& m) {
    // eliminate along the shorter side
    if (m.rows() > m.cols() * 2) {
        Echelon e(m.rows());
        for (const auto& c : m.columns()) e.insert(c);
        return e.rank();
    }
    Echelon e(m.cols());
    for (const auto& r : m.row_vectors()) e.insert(r);
    return e.rank();
}

Subspace Subspace::span(std::size_t ambient, const std::vector<SparseVec>& vectors) {
    Echelon e(ambient);
    for (const auto& v : vectors) e.insert(v);
    Subspace s(ambient);
    s.basis_ = e.rref_rows();
    for (const auto& r : s.basis_) s.pivots_.push_back(r.front().index);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        s.basis_.push_back(unit_vector(static_cast<Index>(i)));
        s.pivots_.push_back(static_cast<Index>(i));
    }
    return s;
}

Matrix Subspace::inclusion() const { return Matrix::from_columns(basis_, ambient_); }

std::optional<SparseVec> Subspace::coordinates(const SparseVec& v) const {
    if (!v.empty() && v.back().index >= ambient_) throw DimensionError("vector exceeds ambient dimension");
    SparseVec coords;
    Accumulator acc(ambient_);
    acc.load(v);
    // pivots are increasing, and so are v's indices
    std::size_t j = 0;
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        while (j < v.size() && v[j].index < pivots_[k]) ++j;
        if (j < v.size() && v[j].index == pivots_[k]) {
            coords.push_back({static_cast<Index>(k), v[j].value});
            acc.add_scaled(-v[j].value, basis_[k]);
        }
    }
    if (!acc.take().empty()) return std::nullopt;
    return coords;
}

SparseVec Subspace::coordinates_or_throw(const SparseVec& v) const {
    auto c = coordinates(v);
    if (!c) throw ContainmentError("vector is not in the subspace");
    return std::move(*c);
}

SparseVec Subspace::vector(const SparseVec& coords) const {
    Accumulator acc(ambient_);
    for (const auto& e : coords) acc.add_scaled(e.value, basis_.at(e.index));
    return acc.take();
}

bool Subspace::contains(const SparseVec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("subspace ambient mismatch");
    return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const SparseVec& v) { return contains(v); });
}

Subspace nullspace(const Matrix& m) {
    RrefResult r = rref(m);
    std::size_t n = m.cols();
    std::vector<char> is_pivot(n, 0);
    for (Index p : r.pivots) is_pivot[p] = 1;
    std::vector<SparseVec> kernel(n);
    for (std::size_t f = 0; f < n; ++f)
        if (!is_pivot[f]) kernel[f].push_back({static_cast<Index>(f), Scalar(1)});
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
        for (const auto& e : r.rref.row(k))
            if (!is_pivot[e.index]) kernel[e.index].push_back({r.pivots[k], -e.value});
    std::vector<SparseVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        auto& v = kernel[f];
        std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
        basis.push_back(std::move(v));
    }
    return Subspace::span(n, basis);
}

Subspace column_space(const Matrix& m) { return Subspace::span(m.rows(), m.columns()); }

Subspace row_space(const Matrix& m) { return Subspace::span(m.cols(), m.row_vectors()); }

Subspace intersection(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("subspace ambient mismatch");
    std::size_t n = u.ambient_dim();
    Echelon e(2 * n);
    for (const auto& b : u.basis()) {
        SparseVec row = b;
        for (const auto& x : b) row.push_back({static_cast<Index>(x.index + n), x.value});
        e.insert(row);
    }
    for (const auto& b : v.basis()) e.insert(b);
    std::vector<SparseVec> meet;
    for (const auto& r : e.rref_rows()) {
        if (r.front().index < n) continue;
        SparseVec w;
        for (const auto& x : r) w.push_back({static_cast<Index>(x.index - n), x.value});
        meet.push_back(std::move(w));
    }
    return Subspace::span(n, meet);
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("subspace ambient mismatch");
    std::vector<SparseVec> all = u.basis();
    all.insert(all.end(), v.basis().begin(), v.basis().end());
    return Subspace::span(u.ambient_dim(), all);
}

std::size_t quotient_dim(const Subspace& big, const Subspace& small) {
    if (!big.contains(small)) throw ContainmentError("quotient of a subspace by a non-contained subspace");
    return big.dim() - small.dim();
}

LinearSolver::LinearSolver(const Matrix& m) : rows_(m.rows()), cols_(m.cols()), echelon_(m.rows(), true) {
    for (const auto& c : m.columns()) echelon_.insert(c);
}

std::optional<SparseVec> LinearSolver::solve(const SparseVec& b) const {
    SparseVec tag;
    SparseVec residual = echelon_.reduce(b, &tag);
    if (!residual.empty()) return std::nullopt;
    return tag;
}

SparseVec LinearSolver::solve_or_throw(const SparseVec& b) const {
    auto x = solve(b);
    if (!x) throw ExactnessError("linear system has no solution");
    return std::move(*x);
}

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("inverse of a non-square matrix");
    LinearSolver s(m);
    if (s.rank() != m.rows()) throw PreconditionError("inverse of a singular matrix");
    std::vector<SparseVec> cols;
    cols.reserve(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) cols.push_back(s.solve_or_throw(unit_vector(static_cast<Index>(i))));
    return Matrix::from_columns(cols, m.cols());
}

bool is_injective(const Matrix& m) { return rank(m) == m.cols(); }
bool is_surjective(const Matrix& m) { return rank(m) == m.rows(); }
bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

}  // namespace hcohom
