#include "hcohom/algebra.hpp"

#include <algorithm>
#include <charconv>

#include "hcohom/bimodule.hpp"
#include "hcohom/errors.hpp"

namespace hcohom {

std::string field_name(Field f) { return f == Field::Q ? "Q" : "Qi"; }

Field parse_field(const std::string& name) {
    if (name == "Q") return Field::Q;
    if (name == "Qi") return Field::Qi;
    throw InputError("unknown field '" + name + "' (expected Q or Qi)");
}

Algebra::Algebra(std::size_t dim, Field field, std::vector<SparseVec> products)
    : dim_(dim), field_(field), products_(std::move(products)) {
    if (products_.size() != dim * dim) throw DimensionError("structure constant table has wrong size");
    for (const auto& p : products_)
        if (!p.empty() && p.back().index >= dim) throw DimensionError("product coordinate out of range");
}

SparseVec Algebra::multiply(const SparseVec& a, const SparseVec& b) const {
    Accumulator acc(dim_);
    for (const auto& x : a)
        for (const auto& y : b) acc.add_scaled(x.value * y.value, product(x.index, y.index));
    return acc.take();
}

Matrix Algebra::left_mult(std::size_t i) const {
    MatrixBuilder b(dim_, dim_);
    for (std::size_t l = 0; l < dim_; ++l)
        for (const auto& e : product(i, l)) b.add(e.index, l, e.value);
    return b.build();
}

Matrix Algebra::right_mult(std::size_t i) const {
    MatrixBuilder b(dim_, dim_);
    for (std::size_t l = 0; l < dim_; ++l)
        for (const auto& e : product(l, i)) b.add(e.index, l, e.value);
    return b.build();
}

Matrix Algebra::left_mult(const SparseVec& a) const {
    Matrix m(dim_, dim_);
    for (const auto& e : a) m = m + left_mult(e.index).scaled(e.value);
    return m;
}

Matrix Algebra::right_mult(const SparseVec& a) const {
    Matrix m(dim_, dim_);
    for (const auto& e : a) m = m + right_mult(e.index).scaled(e.value);
    return m;
}

void Algebra::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != dim_) throw InputError("label count does not match dimension");
    labels_ = std::move(labels);
}

std::string Algebra::label(std::size_t i) const {
    if (i < labels_.size()) return labels_[i];
    return "e" + std::to_string(i);
}

Algebra algebra_from_table(Field field, const std::vector<std::vector<std::vector<Scalar>>>& c,
                           std::optional<SparseVec> unit) {
    std::size_t d = c.size();
    std::vector<SparseVec> products(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        if (c[i].size() != d) throw InputError("structure constants must be d x d x d");
        for (std::size_t j = 0; j < d; ++j) {
            if (c[i][j].size() != d) throw InputError("structure constants must be d x d x d");
            products[i * d + j] = sparse_from_dense(c[i][j]);
        }
    }
    Algebra a(d, field, std::move(products));
    a.set_unit(std::move(unit));
    return a;
}

ValidationReport validate(const Algebra& a) {
    ValidationReport r;
    std::size_t d = a.dim();
    if (a.field() == Field::Q) {
        for (std::size_t i = 0; i < d * d && r.field_ok; ++i)
            for (const auto& e : a.product(i / d, i % d))
                if (!e.value.is_real()) {
                    r.field_ok = false;
                    r.message = "non-real structure constant over field Q";
                    break;
                }
    }
    for (std::size_t i = 0; i < d && r.associative; ++i)
        for (std::size_t j = 0; j < d && r.associative; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                SparseVec lhs = a.multiply(a.product(i, j), unit_vector(static_cast<Index>(k)));
                SparseVec rhs = a.multiply(unit_vector(static_cast<Index>(i)), a.product(j, k));
                if (lhs != rhs) {
                    r.associative = false;
                    r.violation = {i, j, k};
                    r.message = "associativity fails: (" + a.label(i) + " " + a.label(j) + ") " + a.label(k) + " != " +
                                a.label(i) + " (" + a.label(j) + " " + a.label(k) + ")";
                    break;
                }
            }
    if (a.unit()) {
        const SparseVec& u = *a.unit();
        if (!u.empty() && u.back().index >= d) {
            r.unit_ok = false;
            r.message = "unit vector has wrong length";
            return r;
        }
        for (std::size_t j = 0; j < d; ++j) {
            SparseVec e = unit_vector(static_cast<Index>(j));
            if (a.multiply(u, e) != e || a.multiply(e, u) != e) {
                r.unit_ok = false;
                r.unit_violation = j;
                if (r.message.empty()) r.message = "declared unit does not act as identity on " + a.label(j);
                break;
            }
        }
    }
    return r;
}

void require_valid(const Algebra& a) {
    ValidationReport r = validate(a);
    if (!r.valid()) throw InputError("invalid algebra: " + r.message);
}

std::optional<SparseVec> find_unit(const Algebra& a) {
    std::size_t d = a.dim();
    if (d == 0) return std::nullopt;
    // unknown u: u e_j = e_j and e_j u = e_j for all j (2 d^2 equations)
    MatrixBuilder m(2 * d * d, d);
    SparseVec rhs;
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            for (const auto& e : a.product(i, j)) m.add(j * d + e.index, i, e.value);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            for (const auto& e : a.product(j, i)) m.add(d * d + j * d + e.index, i, e.value);
    for (std::size_t j = 0; j < d; ++j) rhs.push_back({static_cast<Index>(j * d + j), Scalar(1)});
    for (std::size_t j = 0; j < d; ++j) rhs.push_back({static_cast<Index>(d * d + j * d + j), Scalar(1)});
    LinearSolver s(m.build());
    return s.solve(rhs);
}

Algebra unitize(const Algebra& a) {
    std::size_t d = a.dim();
    std::size_t n = d + 1;
    std::vector<SparseVec> products(n * n);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) products[i * n + j] = a.product(i, j);
    for (std::size_t i = 0; i < n; ++i) {
        products[d * n + i] = unit_vector(static_cast<Index>(i));
        products[i * n + d] = unit_vector(static_cast<Index>(i));
    }
    Algebra u(n, a.field(), std::move(products));
    u.set_unit(unit_vector(static_cast<Index>(d)));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d; ++i) labels.push_back(a.label(i));
    labels.push_back("e+");
    u.set_labels(std::move(labels));
    return u;
}

Matrix DirectSum::embedding(std::size_t i) const {
    MatrixBuilder b(algebra.dim(), parts.at(i).dim());
    for (std::size_t k = 0; k < parts[i].dim(); ++k) b.add(offsets[i] + k, k, Scalar(1));
    return b.build();
}

Matrix DirectSum::projection(std::size_t i) const { return embedding(i).transpose(); }

DirectSum direct_sum(const std::vector<Algebra>& parts) {
    if (parts.empty()) throw PreconditionError("direct sum of no algebras");
    DirectSum out;
    out.parts = parts;
    std::size_t total = 0;
    for (const auto& p : parts) {
        if (!p.is_unital()) throw PreconditionError("direct sum parts must be unital");
        if (p.field() != parts[0].field()) throw PreconditionError("direct sum parts must share a field");
        out.offsets.push_back(total);
        total += p.dim();
    }
    std::vector<SparseVec> products(total * total);
    std::vector<std::string> labels;
    SparseVec unit;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const Algebra& p = parts[k];
        Index off = static_cast<Index>(out.offsets[k]);
        for (std::size_t i = 0; i < p.dim(); ++i) {
            for (std::size_t j = 0; j < p.dim(); ++j) {
                SparseVec v;
                for (const auto& e : p.product(i, j)) v.push_back({e.index + off, e.value});
                products[(off + i) * total + off + j] = std::move(v);
            }
            labels.push_back(p.label(i) + "_" + std::to_string(k + 1));
        }
        SparseVec e;
        for (const auto& x : *p.unit()) e.push_back({x.index + off, x.value});
        unit.insert(unit.end(), e.begin(), e.end());
        out.idempotents.push_back(std::move(e));
    }
    out.algebra = Algebra(total, parts[0].field(), std::move(products));
    out.algebra.set_unit(unit);
    out.algebra.set_labels(std::move(labels));
    out.algebra.set_idempotents(out.idempotents);
    return out;
}

Matrix Triangular::projection1() const {
    MatrixBuilder b(dim1, algebra.dim());
    for (std::size_t k = 0; k < dim1; ++k) b.add(k, k, Scalar(1));
    return b.build();
}

Matrix Triangular::projection2() const {
    MatrixBuilder b(dim2, algebra.dim());
    for (std::size_t k = 0; k < dim2; ++k) b.add(k, dim1 + dim_y + k, Scalar(1));
    return b.build();
}

Triangular triangular(const Algebra& a1, const Algebra& a2, const Bimodule& y) {
    if (!a1.is_unital() || !a2.is_unital()) throw PreconditionError("triangular algebra needs unital corners");
    if (a1.field() != a2.field()) throw PreconditionError("triangular corners must share a field");
    if (y.left().size() != a1.dim() || y.right().size() != a2.dim())
        throw DimensionError("bimodule action counts do not match the corner algebras");
    if (auto v = bimodule_violation(a1, a2, y)) throw PreconditionError("Y is not a bimodule: " + *v);
    if (!is_unital_bimodule(a1, a2, y)) throw PreconditionError("Y must be a unital bimodule");
    Triangular t;
    t.dim1 = a1.dim();
    t.dim_y = y.dim();
    t.dim2 = a2.dim();
    std::size_t oy = t.dim1;
    std::size_t o2 = t.dim1 + t.dim_y;
    std::size_t n = o2 + t.dim2;
    std::vector<SparseVec> products(n * n);
    auto shifted = [](const SparseVec& v, std::size_t off) {
        SparseVec out;
        for (const auto& e : v) out.push_back({static_cast<Index>(e.index + off), e.value});
        return out;
    };
    for (std::size_t i = 0; i < t.dim1; ++i)
        for (std::size_t j = 0; j < t.dim1; ++j) products[i * n + j] = a1.product(i, j);
    for (std::size_t i = 0; i < t.dim2; ++i)
        for (std::size_t j = 0; j < t.dim2; ++j) products[(o2 + i) * n + o2 + j] = shifted(a2.product(i, j), o2);
    // (r1, 0, 0)(0, z, 0) = (0, r1.z, 0) and (0, y, 0)(0, 0, d2) = (0, y.d2, 0)
    for (std::size_t i = 0; i < t.dim1; ++i)
        for (std::size_t k = 0; k < t.dim_y; ++k)
            products[i * n + oy + k] = shifted(y.left(i).transpose().row(k), oy);
    for (std::size_t k = 0; k < t.dim_y; ++k)
        for (std::size_t j = 0; j < t.dim2; ++j)
            products[(oy + k) * n + o2 + j] = shifted(y.right(j).transpose().row(k), oy);
    t.algebra = Algebra(n, a1.field(), std::move(products));
    t.e11 = *a1.unit();
    t.e22 = shifted(*a2.unit(), o2);
    SparseVec unit = t.e11;
    unit.insert(unit.end(), t.e22.begin(), t.e22.end());
    t.algebra.set_unit(unit);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < t.dim1; ++i) labels.push_back(a1.label(i) + "_11");
    for (std::size_t i = 0; i < t.dim_y; ++i) labels.push_back("y" + std::to_string(i) + "_12");
    for (std::size_t i = 0; i < t.dim2; ++i) labels.push_back(a2.label(i) + "_22");
    t.algebra.set_labels(std::move(labels));
    t.algebra.set_idempotents({t.e11, t.e22});
    return t;
}

std::vector<SparseVec> SubalgebraSpec::a_parts() const {
    std::vector<SparseVec> out;
    for (const auto& v : basis.basis()) {
        SparseVec a;
        for (const auto& e : v)
            if (e.index < parent_dim) a.push_back(e);
        out.push_back(std::move(a));
    }
    return out;
}

bool SubalgebraSpec::is_unit_span() const {
    return basis.dim() == 1 && basis.basis()[0].size() == 1 && basis.basis()[0][0].index == parent_dim;
}

SparseVec unitized_product(const Algebra& a, const SparseVec& x, const SparseVec& y) {
    Index d = static_cast<Index>(a.dim());
    auto split = [d](const SparseVec& v, SparseVec& part, Scalar& plus) {
        for (const auto& e : v) {
            if (e.index == d) plus = e.value;
            else part.push_back(e);
        }
    };
    SparseVec xa, ya;
    Scalar xp, yp;
    split(x, xa, xp);
    split(y, ya, yp);
    SparseVec out = a.multiply(xa, ya);
    out = axpy(out, xp, ya);
    out = axpy(out, yp, xa);
    Scalar pp = xp * yp;
    if (!pp.is_zero()) out.push_back({d, pp});
    return out;
}

SubalgebraSpec make_subalgebra(const Algebra& a, const std::vector<SparseVec>& vectors, bool in_unitization) {
    SubalgebraSpec s;
    s.parent_dim = a.dim();
    s.in_unitization = in_unitization;
    for (const auto& v : vectors) {
        if (!v.empty() && v.back().index > a.dim()) throw InputError("subalgebra vector longer than dim A + 1");
        if (!in_unitization && !v.empty() && v.back().index == a.dim())
            throw InputError("subalgebra of A has a nonzero e+ coordinate");
    }
    s.basis = Subspace::span(a.dim() + 1, vectors);
    for (const auto& x : s.basis.basis())
        for (const auto& y : s.basis.basis())
            if (!s.basis.contains(unitized_product(a, x, y)))
                throw ContainmentError("subalgebra span is not closed under multiplication");
    return s;
}

SubalgebraSpec unit_subalgebra(const Algebra& a) {
    return make_subalgebra(a, {unit_vector(static_cast<Index>(a.dim()))}, true);
}

SubalgebraSpec whole_subalgebra(const Algebra& a) {
    std::vector<SparseVec> vs;
    for (std::size_t i = 0; i < a.dim(); ++i) vs.push_back(unit_vector(static_cast<Index>(i)));
    return make_subalgebra(a, vs, false);
}

SubalgebraSpec idempotent_subalgebra(const Algebra& a) {
    if (a.idempotents().empty()) throw PreconditionError("algebra carries no distinguished idempotents");
    return make_subalgebra(a, a.idempotents(), false);
}

bool subalgebra_contains(const SubalgebraSpec& big, const SubalgebraSpec& small) {
    return big.basis.contains(small.basis);
}

namespace {

// Structure constants of the span of `basis` (vectors in `ambient`
// coordinates) under `mul`.
template <class Mul>
Algebra span_algebra(Field field, const Subspace& basis, Mul mul) {
    std::size_t k = basis.dim();
    std::vector<SparseVec> products(k * k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) products[i * k + j] = basis.coordinates_or_throw(mul(basis.basis()[i], basis.basis()[j]));
    Algebra out(k, field, std::move(products));
    out.set_unit(find_unit(out));
    return out;
}

}  // namespace

Algebra subalgebra_as_algebra(const Algebra& a, const SubalgebraSpec& s) {
    return span_algebra(a.field(), s.basis, [&](const SparseVec& x, const SparseVec& y) { return unitized_product(a, x, y); });
}

IdealSpec make_ideal(const Algebra& a, const std::vector<SparseVec>& vectors) {
    IdealSpec out;
    out.parent_dim = a.dim();
    for (const auto& v : vectors)
        if (!v.empty() && v.back().index >= a.dim()) throw InputError("ideal vector longer than dim A");
    out.basis = Subspace::span(a.dim(), vectors);
    for (const auto& x : out.basis.basis())
        for (std::size_t i = 0; i < a.dim(); ++i) {
            SparseVec e = unit_vector(static_cast<Index>(i));
            if (!out.basis.contains(a.multiply(e, x)) || !out.basis.contains(a.multiply(x, e)))
                throw IdealError("span does not absorb multiplication by " + a.label(i));
        }
    return out;
}

Algebra ideal_as_algebra(const Algebra& a, const IdealSpec& i) {
    return span_algebra(a.field(), i.basis, [&](const SparseVec& x, const SparseVec& y) { return a.multiply(x, y); });
}

SubalgebraSpec ideal_as_subalgebra(const Algebra& a, const IdealSpec& i) {
    return make_subalgebra(a, i.basis.basis(), false);
}

Quotient quotient(const Algebra& a, const IdealSpec& ideal) {
    std::size_t d = a.dim();
    std::vector<char> pivot(d, 0);
    for (Index p : ideal.basis.pivots()) pivot[p] = 1;
    std::vector<std::size_t> complement;
    for (std::size_t k = 0; k < d; ++k)
        if (!pivot[k]) complement.push_back(k);
    std::size_t q = complement.size();
    // theta(v) = complement coordinates of v minus its ideal component
    Matrix theta(q, d);
    {
        MatrixBuilder b(q, d);
        for (std::size_t k = 0; k < d; ++k) {
            SparseVec v = unit_vector(static_cast<Index>(k));
            // subtract the ideal row with pivot k, if any
            for (std::size_t r = 0; r < ideal.basis.dim(); ++r)
                if (ideal.basis.pivots()[r] == k) v = sub(v, ideal.basis.basis()[r]);
            for (const auto& e : v)
                if (!pivot[e.index]) {
                    auto pos = std::lower_bound(complement.begin(), complement.end(), e.index) - complement.begin();
                    b.add(pos, k, e.value);
                }
        }
        theta = b.build();
    }
    MatrixBuilder sb(d, q);
    for (std::size_t j = 0; j < q; ++j) sb.add(complement[j], j, Scalar(1));
    Matrix section = sb.build();
    std::vector<SparseVec> products(q * q);
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            products[i * q + j] = theta.apply(a.product(complement[i], complement[j]));
    Quotient out{Algebra(q, a.field(), std::move(products)), theta, section};
    if (a.unit()) out.algebra.set_unit(theta.apply(*a.unit()));
    std::vector<std::string> labels;
    for (std::size_t k : complement) labels.push_back(a.label(k));
    out.algebra.set_labels(std::move(labels));
    if (!is_homomorphism(a, out.algebra, theta)) throw IdealError("quotient projection is not multiplicative");
    return out;
}

bool is_homomorphism(const Algebra& a, const Algebra& d, const Matrix& kappa, bool check_unit) {
    if (kappa.rows() != d.dim() || kappa.cols() != a.dim()) return false;
    auto col = kappa.columns();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (kappa.apply(a.product(i, j)) != d.multiply(col[i], col[j])) return false;
    if (check_unit && a.unit() && d.unit() && kappa.apply(*a.unit()) != *d.unit()) return false;
    return true;
}

std::optional<SparseVec> separability_idempotent(const Algebra& a) {
    if (!a.is_unital()) throw PreconditionError("separability idempotent requires a unital algebra");
    std::size_t d = a.dim();
    if (d == 0) return SparseVec{};
    std::size_t dd = d * d;
    // rows 0..d-1: multiplication map; then for each basis b: (b⊗1)u - u(1⊗b)
    MatrixBuilder m(d + d * dd, dd);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::size_t col = i * d + j;
            for (const auto& e : a.product(i, j)) m.add(e.index, col, e.value);
            for (std::size_t b = 0; b < d; ++b) {
                std::size_t base = d + b * dd;
                for (const auto& e : a.product(b, i)) m.add(base + e.index * d + j, col, e.value);
                for (const auto& e : a.product(j, b)) m.add(base + i * d + e.index, col, -e.value);
            }
        }
    LinearSolver s(m.build());
    auto u = s.solve(*a.unit());
    if (u && !verify_separability_idempotent(a, *u)) throw Error("separability certificate failed verification");
    return u;
}

bool verify_separability_idempotent(const Algebra& a, const SparseVec& u) {
    if (!a.is_unital()) return false;
    std::size_t d = a.dim();
    Accumulator acc(d);
    for (const auto& e : u) acc.add_scaled(e.value, a.product(e.index / d, e.index % d));
    if (acc.take() != *a.unit()) return false;
    for (std::size_t b = 0; b < d; ++b) {
        Accumulator t(d * d);
        for (const auto& e : u) {
            std::size_t i = e.index / d, j = e.index % d;
            for (const auto& x : a.product(b, i)) t.add(static_cast<Index>(x.index * d + j), e.value * x.value);
            for (const auto& x : a.product(j, b)) t.add(static_cast<Index>(i * d + x.index), -(e.value * x.value));
        }
        if (!t.take().empty()) return false;
    }
    return true;
}

Subspace trace_space(const Algebra& a) {
    std::size_t d = a.dim();
    std::vector<SparseVec> rows;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            SparseVec r = sub(a.product(i, j), a.product(j, i));
            if (!r.empty()) rows.push_back(std::move(r));
        }
    return nullspace(Matrix::from_rows(rows, d));
}

Algebra change_basis(const Algebra& a, const Matrix& p) {
    std::size_t d = a.dim();
    if (p.rows() != d || p.cols() != d) throw DimensionError("change of basis must be square");
    Matrix pinv = inverse(p);
    auto cols = p.columns();
    std::vector<SparseVec> products(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) products[i * d + j] = pinv.apply(a.multiply(cols[i], cols[j]));
    Algebra out(d, a.field(), std::move(products));
    if (a.unit()) out.set_unit(pinv.apply(*a.unit()));
    std::vector<SparseVec> idem;
    for (const auto& e : a.idempotents()) idem.push_back(pinv.apply(e));
    out.set_idempotents(std::move(idem));
    return out;
}

Algebra matrix_algebra(std::size_t n, Field field) {
    if (n == 0) throw InputError("matrix algebra size must be positive");
    std::size_t d = n * n;
    std::vector<SparseVec> products(d * d);
    std::vector<std::string> labels;
    SparseVec unit;
    std::vector<SparseVec> diag;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
            for (std::size_t l = 0; l < n; ++l) products[(i * n + j) * d + j * n + l] = unit_vector(static_cast<Index>(i * n + l));
        }
    for (std::size_t i = 0; i < n; ++i) {
        unit.push_back({static_cast<Index>(i * n + i), Scalar(1)});
        diag.push_back(unit_vector(static_cast<Index>(i * n + i)));
    }
    Algebra a(d, field, std::move(products));
    a.set_unit(unit);
    a.set_labels(std::move(labels));
    a.set_idempotents(std::move(diag));
    return a;
}

Algebra scalars(Field field) {
    Algebra a(1, field, {unit_vector(0)});
    a.set_unit(unit_vector(0));
    a.set_labels({"1"});
    return a;
}

Algebra dual_numbers(Field field) {
    // basis 1, eps
    Algebra a(2, field, {unit_vector(0), unit_vector(1), unit_vector(1), {}});
    a.set_unit(unit_vector(0));
    a.set_labels({"1", "eps"});
    return a;
}

Algebra upper_triangular(std::size_t n, Field field) {
    if (n == 0) throw InputError("upper triangular size must be positive");
    std::vector<std::pair<std::size_t, std::size_t>> units;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) units.push_back({i, j});
    std::size_t d = units.size();
    auto index_of = [&](std::size_t i, std::size_t j) {
        return static_cast<Index>(std::find(units.begin(), units.end(), std::make_pair(i, j)) - units.begin());
    };
    std::vector<SparseVec> products(d * d);
    std::vector<std::string> labels;
    SparseVec unit;
    std::vector<SparseVec> diag;
    for (std::size_t x = 0; x < d; ++x) {
        auto [i, j] = units[x];
        labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
        for (std::size_t y = 0; y < d; ++y)
            if (units[y].first == j) products[x * d + y] = unit_vector(index_of(i, units[y].second));
        if (i == j) {
            unit.push_back({static_cast<Index>(x), Scalar(1)});
            diag.push_back(unit_vector(static_cast<Index>(x)));
        }
    }
    Algebra a(d, field, std::move(products));
    a.set_unit(unit);
    a.set_labels(std::move(labels));
    a.set_idempotents(std::move(diag));
    return a;
}

Algebra zero_algebra(std::size_t dim, Field field) { return Algebra(dim, field, std::vector<SparseVec>(dim * dim)); }

Algebra truncated_polynomials(std::size_t k, Field field) {
    if (k == 0) throw InputError("truncated polynomial degree must be positive");
    std::vector<SparseVec> products(k * k);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < k; ++i) {
        labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
        for (std::size_t j = 0; j < k; ++j)
            if (i + j < k) products[i * k + j] = unit_vector(static_cast<Index>(i + j));
    }
    Algebra a(k, field, std::move(products));
    a.set_unit(unit_vector(0));
    a.set_labels(std::move(labels));
    return a;
}

namespace {

std::size_t parse_size_arg(const std::string& name, const std::string& arg) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), v);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || arg.empty())
        throw InputError("builtin '" + name + "' needs a numeric argument");
    return v;
}

}  // namespace

Algebra builtin_algebra(const std::string& name, Field field) {
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : name.substr(colon + 1);
    if (head == "scalars" && arg.empty()) return scalars(field);
    if (head == "dual_numbers" && arg.empty()) return dual_numbers(field);
    if (head == "matrix") return matrix_algebra(parse_size_arg(name, arg), field);
    if (head == "upper_triangular") return upper_triangular(arg.empty() ? 2 : parse_size_arg(name, arg), field);
    if (head == "zero") return zero_algebra(parse_size_arg(name, arg), field);
    if (head == "truncated_poly") return truncated_polynomials(parse_size_arg(name, arg), field);
    throw InputError("unknown builtin algebra '" + name + "'");
}

std::vector<std::string> builtin_algebra_names() {
    return {"matrix:n", "scalars", "dual_numbers", "upper_triangular:n", "zero:d", "truncated_poly:k"};
}

}  // namespace hcohom
