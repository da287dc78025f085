#include "hcohom/hochschild.hpp"

#include "hcohom/errors.hpp"

namespace hcohom {
namespace {

struct TupleShape {
    std::size_t d;
    std::size_t n;
    std::vector<std::size_t> place;  // place[p] = d^(n-1-p)

    TupleShape(std::size_t d_, std::size_t n_) : d(d_), n(n_), place(n_) {
        std::size_t w = 1;
        for (std::size_t p = n; p-- > 0;) {
            place[p] = w;
            w *= d;
        }
    }
    std::size_t count() const { return saturating_power(d, n); }
    std::size_t digit(std::size_t t, std::size_t p) const { return (t / place[p]) % d; }
    std::size_t replace(std::size_t t, std::size_t p, std::size_t v) const { return t + (v - digit(t, p)) * place[p]; }
};

}  // namespace

std::size_t cochain_dim(const Algebra& a, const Bimodule& x, std::size_t n) {
    return saturating_power(a.dim(), n, x.dim());
}

Matrix hochschild_delta(const Algebra& a, const Bimodule& x, std::size_t n) {
    std::size_t d = a.dim();
    std::size_t m = x.dim();
    if (x.left().size() != d || x.right().size() != d) throw DimensionError("bimodule is over a different algebra");
    TupleShape out(d, n + 1);
    std::size_t dn = saturating_power(d, n);
    MatrixBuilder b(out.count() * m, dn * m);
    Scalar last_sign = (n + 1) % 2 == 0 ? Scalar(1) : Scalar(-1);
    std::vector<std::pair<std::size_t, Scalar>> middle;
    for (std::size_t t = 0; t < out.count(); ++t) {
        std::size_t first = t / dn;
        std::size_t tail = t % dn;
        std::size_t front = t / d;
        std::size_t last = t % d;
        middle.clear();
        for (std::size_t i = 1; i <= n; ++i) {
            std::size_t p = i - 1;
            std::size_t ji = out.digit(t, p);
            std::size_t jn = out.digit(t, p + 1);
            std::size_t before = t / (out.place[p] * d);
            std::size_t after = t % out.place[p + 1];
            std::size_t slot_place = out.place[p + 1];
            Scalar sign = i % 2 == 0 ? Scalar(1) : Scalar(-1);
            for (const auto& e : a.product(ji, jn))
                middle.push_back({(before * d + e.index) * slot_place + after, sign * e.value});
        }
        for (std::size_t k = 0; k < m; ++k) {
            std::size_t row = t * m + k;
            for (const auto& e : x.left(first).row(k)) b.add(row, tail * m + e.index, e.value);
            for (const auto& [col, v] : middle) b.add(row, col * m + k, v);
            for (const auto& e : x.right(last).row(k)) b.add(row, front * m + e.index, last_sign * e.value);
        }
    }
    return b.build();
}

Subspace relative_cochains(const Algebra& a, const Bimodule& x, const SubalgebraSpec& s, std::size_t n) {
    if (s.parent_dim != a.dim()) throw DimensionError("subalgebra belongs to a different algebra");
    if (n == 0) return center(x, s);
    std::size_t d = a.dim();
    std::size_t m = x.dim();
    TupleShape shape(d, n);
    std::size_t tuples = shape.count();
    std::size_t cols = tuples * m;
    std::vector<SparseVec> parts;
    for (auto& p : s.a_parts())
        if (!p.empty()) parts.push_back(std::move(p));
    MatrixBuilder b(parts.size() * (n + 1) * cols, cols);
    std::size_t row = 0;
    for (const auto& sa : parts) {
        Matrix lm = x.left_action(sa);
        Matrix rm = x.right_action(sa);
        std::vector<SparseVec> left_prod(d), right_prod(d);  // s e_j and e_j s
        for (std::size_t j = 0; j < d; ++j) {
            left_prod[j] = a.multiply(sa, unit_vector(static_cast<Index>(j)));
            right_prod[j] = a.multiply(unit_vector(static_cast<Index>(j)), sa);
        }
        for (std::size_t t = 0; t < tuples; ++t) {
            for (std::size_t k = 0; k < m; ++k) {
                // rho(s a_1, ...) = s . rho(a_1, ...)
                for (const auto& e : left_prod[shape.digit(t, 0)]) b.add(row, shape.replace(t, 0, e.index) * m + k, e.value);
                for (const auto& e : lm.row(k)) b.add(row, t * m + e.index, -e.value);
                ++row;
                // rho(..., a_p s, a_{p+1}, ...) = rho(..., a_p, s a_{p+1}, ...)
                for (std::size_t p = 0; p + 1 < n; ++p) {
                    for (const auto& e : right_prod[shape.digit(t, p)]) b.add(row, shape.replace(t, p, e.index) * m + k, e.value);
                    for (const auto& e : left_prod[shape.digit(t, p + 1)])
                        b.add(row, shape.replace(t, p + 1, e.index) * m + k, -e.value);
                    ++row;
                }
                // rho(..., a_n s) = rho(...) . s
                for (const auto& e : right_prod[shape.digit(t, n - 1)]) b.add(row, shape.replace(t, n - 1, e.index) * m + k, e.value);
                for (const auto& e : rm.row(k)) b.add(row, t * m + e.index, -e.value);
                ++row;
            }
        }
    }
    return nullspace(b.build());
}

CochainComplex hochschild_complex(const Algebra& a, const Bimodule& x, std::size_t top, const Limits& limits,
                                  const SubalgebraSpec* s) {
    for (std::size_t n = 0; n <= top + 1; ++n)
        check_budget(cochain_dim(a, x, n), limits, "Hochschild cochain space C^" + std::to_string(n));
    CochainComplex c;
    for (std::size_t n = 0; n <= top; ++n) {
        c.dims.push_back(cochain_dim(a, x, n));
        c.d.push_back(hochschild_delta(a, x, n));
    }
    if (!s) return c;
    std::vector<Subspace> rel;
    for (std::size_t n = 0; n <= top; ++n) rel.push_back(relative_cochains(a, x, *s, n));
    return CochainComplex::restrict(c, rel);
}

CohomologyResult summarize(const Cohomology& h) {
    return {h.degree(), h.dim_cocycles(), h.dim_coboundaries(), h.dim(), h.representatives()};
}

std::vector<CohomologyResult> summarize(const std::vector<Cohomology>& h) {
    std::vector<CohomologyResult> out;
    for (const auto& x : h) out.push_back(summarize(x));
    return out;
}

std::vector<CohomologyResult> hochschild_cohomology(const Algebra& a, const Bimodule& x, std::size_t max_n,
                                                    const Limits& limits, const SubalgebraSpec* s) {
    return summarize(all_cohomology(hochschild_complex(a, x, max_n, limits, s)));
}

ComparisonResult compare(const std::vector<Cohomology>& source, const std::vector<Cohomology>& target,
                         const std::vector<Matrix>& chain_map, std::size_t max_n) {
    ComparisonResult r;
    for (std::size_t n = 0; n <= max_n; ++n) {
        Matrix m = induced_map(source.at(n), target.at(n), chain_map.at(n));
        std::size_t rk = rank(m);
        r.source_dims.push_back(source[n].dim());
        r.target_dims.push_back(target[n].dim());
        r.injective.push_back(rk == source[n].dim());
        r.surjective.push_back(rk == target[n].dim());
        r.iso.push_back(r.injective.back() && r.surjective.back());
        r.maps.push_back(std::move(m));
    }
    return r;
}

ComparisonResult comparison_inclusion(const Algebra& a, const Bimodule& x, const SubalgebraSpec& s,
                                      std::size_t max_n, const Limits& limits) {
    CochainComplex full = hochschild_complex(a, x, max_n, limits);
    std::vector<Subspace> rel;
    std::vector<Matrix> incl;
    for (std::size_t n = 0; n <= max_n; ++n) {
        rel.push_back(relative_cochains(a, x, s, n));
        incl.push_back(rel.back().inclusion());
    }
    CochainComplex sub = CochainComplex::restrict(full, rel);
    return compare(all_cohomology(sub), all_cohomology(full), incl, max_n);
}

Matrix cochain_pullback(const Matrix& theta, std::size_t module_dim, std::size_t n) {
    return kron(kron_power(theta.transpose(), n), Matrix::identity(module_dim));
}

ComparisonResult quotient_comparison(const Algebra& a, const IdealSpec& ideal, const Bimodule& m, std::size_t max_n,
                                     const Limits& limits) {
    Quotient q = quotient(a, ideal);
    if (auto v = bimodule_violation(q.algebra, m)) throw InputError("module is not a bimodule over the quotient: " + *v);
    Bimodule inflated = inflate(m, q.theta);
    CochainComplex cq = hochschild_complex(q.algebra, m, max_n, limits);
    CochainComplex ca = hochschild_complex(a, inflated, max_n, limits);
    std::vector<Matrix> pull;
    for (std::size_t n = 0; n <= max_n; ++n) pull.push_back(cochain_pullback(q.theta, m.dim(), n));
    check_chain_map(cq, ca, pull);
    return compare(all_cohomology(cq), all_cohomology(ca), pull, max_n);
}

std::vector<Corner> corners(const DirectSum& ds, const Bimodule& m) {
    std::vector<Corner> out;
    for (std::size_t i = 0; i < ds.parts.size(); ++i)
        out.push_back(corner(ds.algebra, m, ds.idempotents[i], ds.embedding(i)));
    return out;
}

DirectSumMaps direct_sum_maps(const DirectSum& ds, const Bimodule& m, std::size_t n, const Limits& limits) {
    const Algebra& a = ds.algebra;
    check_budget(cochain_dim(a, m, n), limits, "Hochschild cochain space C^" + std::to_string(n));
    Subspace rel = relative_cochains(a, m, idempotent_subalgebra(a), n);
    std::vector<Corner> cs = corners(ds, m);
    DirectSumMaps out;
    out.relative_dim = rel.dim();
    std::vector<std::size_t> part_offset;
    std::size_t total = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        part_offset.push_back(total);
        std::size_t di = saturating_power(ds.parts[i].dim(), n, cs[i].image.dim());
        out.part_dims.push_back(di);
        total += di;
    }
    std::size_t d = a.dim();
    std::size_t md = m.dim();
    TupleShape global(d, n);

    // local tuple of part i -> global tuple index
    auto global_tuple = [&](std::size_t i, std::size_t local) {
        TupleShape loc(ds.parts[i].dim(), n);
        std::size_t g = 0;
        for (std::size_t p = 0; p < n; ++p) g = g * d + ds.offsets[i] + loc.digit(local, p);
        return g;
    };

    std::vector<SparseVec> jcols;
    for (const auto& rho : rel.basis()) {
        SparseVec col;
        std::vector<Scalar> dense = dense_from_sparse(rho, rel.ambient_dim());
        for (std::size_t i = 0; i < cs.size(); ++i) {
            std::size_t ci = cs[i].image.dim();
            std::size_t locals = saturating_power(ds.parts[i].dim(), n);
            if (n == 0) {
                Matrix proj = m.left_action(ds.idempotents[i]) * m.right_action(ds.idempotents[i]);
                for (const auto& e : cs[i].image.coordinates_or_throw(proj.apply(rho)))
                    col.push_back({static_cast<Index>(part_offset[i] + e.index), e.value});
                continue;
            }
            for (std::size_t t = 0; t < locals; ++t) {
                std::size_t g = global_tuple(i, t);
                SparseVec value = sparse_from_dense(std::span<const Scalar>(dense.data() + g * md, md));
                auto coords = cs[i].image.coordinates(value);
                if (!coords) throw ContainmentError("relative cochain value leaves the corner e_i M e_i");
                for (const auto& e : *coords)
                    col.push_back({static_cast<Index>(part_offset[i] + t * ci + e.index), e.value});
            }
        }
        jcols.push_back(std::move(col));
    }
    out.j = Matrix::from_columns(jcols, total);

    std::vector<SparseVec> gcols;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        std::size_t locals = saturating_power(ds.parts[i].dim(), n);
        for (std::size_t t = 0; t < locals; ++t) {
            std::size_t g = n == 0 ? 0 : global_tuple(i, t);
            for (const auto& v : cs[i].image.basis()) {
                SparseVec amb;
                for (const auto& e : v) amb.push_back({static_cast<Index>(g * md + e.index), e.value});
                auto coords = rel.coordinates(amb);
                if (!coords) throw ContainmentError("assembled cochain is not relative to the idempotents");
                gcols.push_back(std::move(*coords));
            }
        }
    }
    out.g = Matrix::from_columns(gcols, rel.dim());
    return out;
}

}  // namespace hcohom
