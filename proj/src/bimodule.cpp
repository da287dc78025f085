#include "hcohom/bimodule.hpp"

#include "hcohom/errors.hpp"

namespace hcohom {

Bimodule::Bimodule(std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right)
    : dim_(dim), left_(std::move(left)), right_(std::move(right)) {
    for (const auto& m : left_)
        if (m.rows() != dim_ || m.cols() != dim_) throw DimensionError("left action matrix has wrong shape");
    for (const auto& m : right_)
        if (m.rows() != dim_ || m.cols() != dim_) throw DimensionError("right action matrix has wrong shape");
}

Matrix Bimodule::left_action(const SparseVec& a) const {
    Matrix m(dim_, dim_);
    for (const auto& e : a) m = m + left_.at(e.index).scaled(e.value);
    return m;
}

Matrix Bimodule::right_action(const SparseVec& a) const {
    Matrix m(dim_, dim_);
    for (const auto& e : a) m = m + right_.at(e.index).scaled(e.value);
    return m;
}

std::optional<std::string> bimodule_violation(const Algebra& left_alg, const Algebra& right_alg, const Bimodule& m) {
    if (m.left().size() != left_alg.dim()) return "left action count differs from algebra dimension";
    if (m.right().size() != right_alg.dim()) return "right action count differs from algebra dimension";
    for (std::size_t i = 0; i < left_alg.dim(); ++i)
        for (std::size_t j = 0; j < left_alg.dim(); ++j)
            if (!(m.left(i) * m.left(j) == m.left_action(left_alg.product(i, j))))
                return "left module axiom fails for (" + left_alg.label(i) + ", " + left_alg.label(j) + ")";
    for (std::size_t i = 0; i < right_alg.dim(); ++i)
        for (std::size_t j = 0; j < right_alg.dim(); ++j)
            if (!(m.right(j) * m.right(i) == m.right_action(right_alg.product(i, j))))
                return "right module axiom fails for (" + right_alg.label(i) + ", " + right_alg.label(j) + ")";
    for (std::size_t i = 0; i < left_alg.dim(); ++i)
        for (std::size_t j = 0; j < right_alg.dim(); ++j)
            if (!(m.left(i) * m.right(j) == m.right(j) * m.left(i)))
                return "left and right actions do not commute for (" + left_alg.label(i) + ", " + right_alg.label(j) + ")";
    return std::nullopt;
}

std::optional<std::string> bimodule_violation(const Algebra& a, const Bimodule& m) { return bimodule_violation(a, a, m); }

void require_bimodule(const Algebra& a, const Bimodule& m) {
    if (auto v = bimodule_violation(a, m)) throw InputError("invalid bimodule: " + *v);
}

bool is_unital_bimodule(const Algebra& left_alg, const Algebra& right_alg, const Bimodule& m) {
    if (left_alg.unit() && !m.left_action(*left_alg.unit()).is_identity()) return false;
    if (right_alg.unit() && !m.right_action(*right_alg.unit()).is_identity()) return false;
    return true;
}

Bimodule dual_bimodule(const Algebra& a) {
    std::size_t d = a.dim();
    std::vector<MatrixBuilder> left(d, MatrixBuilder(d, d));
    std::vector<MatrixBuilder> right(d, MatrixBuilder(d, d));
    // L_i[k][l] = c[k][i][l], R_i[k][l] = c[i][k][l]
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i) {
            for (const auto& e : a.product(k, i)) left[i].add(k, e.index, e.value);
            for (const auto& e : a.product(i, k)) right[i].add(k, e.index, e.value);
        }
    std::vector<Matrix> l, r;
    for (auto& b : left) l.push_back(b.build());
    for (auto& b : right) r.push_back(b.build());
    return Bimodule(d, std::move(l), std::move(r));
}

Bimodule regular_bimodule(const Algebra& a) {
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        l.push_back(a.left_mult(i));
        r.push_back(a.right_mult(i));
    }
    return Bimodule(a.dim(), std::move(l), std::move(r));
}

Bimodule ideal_dual(const Algebra& a, const IdealSpec& ideal) {
    std::size_t d = a.dim();
    std::size_t k = ideal.basis.dim();
    std::vector<Matrix> l, r;
    for (std::size_t i = 0; i < d; ++i) {
        SparseVec e = unit_vector(static_cast<Index>(i));
        MatrixBuilder lb(k, k), rb(k, k);
        for (std::size_t row = 0; row < k; ++row) {
            const SparseVec& v = ideal.basis.basis()[row];
            for (const auto& x : ideal.basis.coordinates_or_throw(a.multiply(v, e))) lb.add(row, x.index, x.value);
            for (const auto& x : ideal.basis.coordinates_or_throw(a.multiply(e, v))) rb.add(row, x.index, x.value);
        }
        l.push_back(lb.build());
        r.push_back(rb.build());
    }
    return Bimodule(k, std::move(l), std::move(r));
}

Corner corner(const Algebra& a, const Bimodule& m, const SparseVec& e, const Matrix& embedding) {
    if (a.multiply(e, e) != e) throw PreconditionError("corner requires an idempotent");
    if (embedding.rows() != a.dim()) throw DimensionError("embedding does not land in the algebra");
    Matrix proj = m.left_action(e) * m.right_action(e);
    Corner out;
    out.image = column_space(proj);
    auto restrict_action = [&](const Matrix& act) {
        std::vector<SparseVec> cols;
        for (const auto& v : out.image.basis()) cols.push_back(out.image.coordinates_or_throw(act.apply(v)));
        return Matrix::from_columns(cols, out.image.dim());
    };
    std::vector<Matrix> l, r;
    for (const auto& col : embedding.columns()) {
        l.push_back(restrict_action(m.left_action(col)));
        r.push_back(restrict_action(m.right_action(col)));
    }
    out.module = Bimodule(out.image.dim(), std::move(l), std::move(r));
    return out;
}

Bimodule inflate(const Bimodule& m, const Matrix& theta) {
    if (theta.rows() != m.left().size()) throw DimensionError("theta does not map onto the module's algebra");
    std::vector<Matrix> l, r;
    for (const auto& col : theta.columns()) {
        l.push_back(m.left_action(col));
        r.push_back(m.right_action(col));
    }
    return Bimodule(m.dim(), std::move(l), std::move(r));
}

Subspace center(const Bimodule& x, const SubalgebraSpec& s) {
    if (x.left().size() != s.parent_dim) throw DimensionError("subalgebra and bimodule live over different algebras");
    Matrix stacked(0, x.dim());
    for (const auto& a : s.a_parts()) {
        if (a.empty()) continue;
        stacked = vstack(stacked, x.left_action(a) - x.right_action(a));
    }
    return nullspace(stacked);
}

}  // namespace hcohom
