#include "hcohom/cyclic.hpp"

#include "hcohom/errors.hpp"

namespace hcohom {
namespace {

std::size_t place_of(std::size_t d, std::size_t slots, std::size_t p) { return saturating_power(d, slots - 1 - p); }

std::size_t digit(std::size_t t, std::size_t d, std::size_t place) { return (t / place) % d; }

// d^{n+2} x d^{n+1}; the sum over adjacent products, plus the wrap-around term when wrap is set.
Matrix functional_delta(const Algebra& a, std::size_t n, bool wrap) {
    std::size_t d = a.dim();
    std::size_t slots = n + 2;
    std::size_t rows = saturating_power(d, slots);
    std::size_t dn = saturating_power(d, n);
    std::vector<std::size_t> place(slots);
    for (std::size_t p = 0; p < slots; ++p) place[p] = place_of(d, slots, p);
    MatrixBuilder b(rows, saturating_power(d, n + 1));
    Scalar wrap_sign = (n + 1) % 2 == 0 ? Scalar(1) : Scalar(-1);
    for (std::size_t t = 0; t < rows; ++t) {
        for (std::size_t i = 0; i <= n; ++i) {
            std::size_t before = t / (place[i] * d);
            std::size_t after = t % place[i + 1];
            Scalar sign = i % 2 == 0 ? Scalar(1) : Scalar(-1);
            for (const auto& e : a.product(digit(t, d, place[i]), digit(t, d, place[i + 1])))
                b.add(t, (before * d + e.index) * place[i + 1] + after, sign * e.value);
        }
        if (!wrap) continue;
        std::size_t middle = (t / d) % dn;
        for (const auto& e : a.product(t % d, t / place[0]))
            b.add(t, e.index * dn + middle, wrap_sign * e.value);
    }
    return b.build();
}

Subspace relative_functionals(const Algebra& a, const SubalgebraSpec& s, std::size_t n) {
    if (s.parent_dim != a.dim()) throw DimensionError("subalgebra belongs to a different algebra");
    std::size_t d = a.dim();
    std::size_t slots = n + 1;
    std::size_t dim = saturating_power(d, slots);
    std::vector<std::size_t> place(slots);
    for (std::size_t p = 0; p < slots; ++p) place[p] = place_of(d, slots, p);
    auto replace = [&](std::size_t t, std::size_t p, std::size_t v) { return t + (v - digit(t, d, place[p])) * place[p]; };
    std::vector<SparseVec> parts;
    for (auto& p : s.a_parts())
        if (!p.empty()) parts.push_back(std::move(p));
    MatrixBuilder b(parts.size() * slots * dim, dim);
    std::size_t row = 0;
    for (const auto& sa : parts) {
        std::vector<SparseVec> left_prod(d), right_prod(d);
        for (std::size_t j = 0; j < d; ++j) {
            left_prod[j] = a.multiply(sa, unit_vector(static_cast<Index>(j)));
            right_prod[j] = a.multiply(unit_vector(static_cast<Index>(j)), sa);
        }
        for (std::size_t t = 0; t < dim; ++t) {
            // f(s a_0, ..., a_n) = f(a_0, ..., a_n s)
            for (const auto& e : left_prod[digit(t, d, place[0])]) b.add(row, replace(t, 0, e.index), e.value);
            for (const auto& e : right_prod[digit(t, d, place[n])]) b.add(row, replace(t, n, e.index), -e.value);
            ++row;
            // f(..., a_p s, a_{p+1}, ...) = f(..., a_p, s a_{p+1}, ...)
            for (std::size_t p = 0; p < n; ++p) {
                for (const auto& e : right_prod[digit(t, d, place[p])]) b.add(row, replace(t, p, e.index), e.value);
                for (const auto& e : left_prod[digit(t, d, place[p + 1])]) b.add(row, replace(t, p + 1, e.index), -e.value);
                ++row;
            }
        }
    }
    return nullspace(b.build());
}

// Matrix of x -> to.coords(f(from.vector(x))).
Matrix between(const Subspace& from, const Subspace& to, const Matrix* f = nullptr) {
    std::vector<SparseVec> cols;
    cols.reserve(from.dim());
    for (const auto& u : from.basis()) cols.push_back(to.coordinates_or_throw(f ? f->apply(u) : u));
    return Matrix::from_columns(cols, to.dim());
}

// Matrix of the map induced by m on coordinates of a subspace, landing in target.
Matrix on_coordinates(const Subspace& space, const Matrix& m, const Subspace& target) { return between(space, target, &m); }

std::vector<Matrix> ambient_pullbacks(const Matrix& kappa, std::size_t top) {
    std::vector<Matrix> out;
    Matrix kt = kappa.transpose();
    for (std::size_t n = 0; n <= top; ++n) out.push_back(kron_power(kt, n + 1));
    return out;
}

void require_unital(const Algebra& a) {
    if (!a.is_unital() && !find_unit(a))
        throw PreconditionError("the Connes-Tsygan sequence is assembled only for unital algebras");
}

CTMorphismReport morphism(CTReport source, CTReport target, const std::vector<Matrix>& ambient,
                          const std::vector<CyclicCochainSpace>& source_spaces,
                          const std::vector<CyclicCochainSpace>& target_spaces) {
    CTMorphismReport r;
    std::size_t top = source.max_n;
    for (std::size_t n = 0; n <= top; ++n) {
        Matrix fc = between(source_spaces[n].relative, target_spaces[n].relative, &ambient[n]);
        Matrix gc = between(source_spaces[n].cyclic, target_spaces[n].cyclic, &ambient[n]);
        r.f.push_back(induced_map(source.h[n], target.h[n], fc));
        r.g.push_back(induced_map(source.hc[n], target.hc[n], gc));
        r.f_iso.push_back(is_invertible(r.f.back()));
        r.g_iso.push_back(is_invertible(r.g.back()));
    }
    for (std::size_t n = 0; n <= top; ++n) {
        r.square_i.push_back(target.maps_i[n] * r.g[n] == r.f[n] * source.maps_i[n]);
        r.square_b.push_back(n == 0 || r.g[n - 1] * source.maps_b[n] == target.maps_b[n] * r.f[n]);
        if (n < top) r.square_s.push_back(n == 0 || r.g[n + 1] * source.maps_s[n] == target.maps_s[n] * r.g[n - 1]);
    }
    r.source = std::move(source);
    r.target = std::move(target);
    return r;
}

CTReport connes_tsygan_impl(const Algebra& a, const SubalgebraSpec& s, std::size_t max_n, const Limits& limits,
                            std::vector<CyclicCochainSpace>* spaces) {
    require_unital(a);
    CyclicData data = cyclic_data(a, s, max_n, limits);
    std::vector<Subspace> cs;
    std::vector<Matrix> onto_cs;
    for (std::size_t n = 0; n <= max_n; ++n) {
        cs.push_back(column_space(data.m[n]));
        std::vector<SparseVec> cols;
        for (const auto& col : data.m[n].columns()) cols.push_back(cs.back().coordinates_or_throw(col));
        onto_cs.push_back(Matrix::from_columns(cols, cs.back().dim()));
    }
    CochainComplex cs_complex = CochainComplex::restrict(data.cr, cs);

    ComplexSES first{data.cc, data.c, cs_complex, data.i, onto_cs};
    std::vector<Matrix> j;
    for (const auto& sub : cs) j.push_back(sub.inclusion());
    ComplexSES second{cs_complex, data.cr, data.cc, j, data.n};
    first.check();
    second.check();

    CTReport r;
    r.max_n = max_n;
    r.h = all_cohomology(data.c);
    r.hc = all_cohomology(data.cc);
    r.hs = all_cohomology(cs_complex);
    for (std::size_t n = 0; n < max_n; ++n) {
        r.zeta.push_back(connecting_map(first, r.hs[n], r.hc[n + 1], n));
        r.eta.push_back(connecting_map(second, r.hc[n], r.hs[n + 1], n));
        if (!is_invertible(r.eta.back())) {
            r.eta_invertible = false;
            throw ExactnessError("eta^" + std::to_string(n) + " is not invertible");
        }
    }
    std::vector<Matrix> eta_inv;
    for (const auto& e : r.eta) eta_inv.push_back(inverse(e));
    for (std::size_t n = 0; n <= max_n; ++n) {
        r.maps_i.push_back(induced_map(r.hc[n], r.h[n], data.i[n]));
        r.hm.push_back(induced_map(r.h[n], r.hs[n], onto_cs[n]));
        r.maps_b.push_back(n == 0 ? Matrix(0, r.h[0].dim()) : eta_inv[n - 1] * r.hm[n]);
        if (n < max_n) r.maps_s.push_back(n == 0 ? Matrix(r.hc[1].dim(), 0) : r.zeta[n] * r.eta[n - 1]);
    }

    std::vector<SequenceNode> nodes;
    std::vector<SequenceMap> maps;
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::string k = std::to_string(n);
        nodes.push_back({"HC^" + k, r.hc[n].dim()});
        maps.push_back({"I^" + k, r.maps_i[n]});
        nodes.push_back({"H^" + k, r.h[n].dim()});
        maps.push_back({"B^" + k, r.maps_b[n]});
        nodes.push_back({"HC^" + std::to_string(static_cast<long long>(n) - 1), n == 0 ? 0 : r.hc[n - 1].dim()});
        if (n < max_n) maps.push_back({"S^" + k, r.maps_s[n]});
        else maps.push_back({"S^" + k, std::nullopt});
    }
    r.exactness = exactness(nodes, maps);
    if (spaces) *spaces = std::move(data.spaces);
    return r;
}

}  // namespace

std::size_t functional_dim(const Algebra& a, std::size_t n) { return saturating_power(a.dim(), n + 1); }

Matrix cyclic_t(std::size_t dim, std::size_t n) {
    std::size_t rows = saturating_power(dim, n + 1);
    std::size_t dn = saturating_power(dim, n);
    Scalar sign = n % 2 == 0 ? Scalar(1) : Scalar(-1);
    MatrixBuilder b(rows, rows);
    for (std::size_t t = 0; t < rows; ++t) b.add(t, (t % dn) * dim + t / dn, sign);
    return b.build();
}

Matrix cyclic_t(const Algebra& a, std::size_t n) { return cyclic_t(a.dim(), n); }

Matrix cyclic_norm(const Algebra& a, std::size_t n) {
    Matrix t = cyclic_t(a, n);
    Matrix power = Matrix::identity(t.rows());
    Matrix sum = power;
    for (std::size_t k = 1; k <= n; ++k) {
        power = t * power;
        sum = sum + power;
    }
    return sum;
}

Matrix cyclic_m(const Algebra& a, std::size_t n) {
    Matrix t = cyclic_t(a, n);
    Matrix inv = Matrix::identity(t.rows());
    for (std::size_t k = 0; k < n; ++k) inv = t * inv;
    return Matrix::identity(t.rows()) - inv;
}

Matrix cyclic_delta(const Algebra& a, std::size_t n) { return functional_delta(a, n, true); }

Matrix bar_delta(const Algebra& a, std::size_t n) { return functional_delta(a, n, false); }

CyclicCochainSpace cyclic_spaces(const Algebra& a, const SubalgebraSpec& s, std::size_t n) {
    CyclicCochainSpace out;
    out.degree = n;
    out.ambient_dim = functional_dim(a, n);
    out.relative = relative_functionals(a, s, n);
    Matrix fix = Matrix::identity(out.ambient_dim) - cyclic_t(a, n);
    out.cyclic = intersection(out.relative, nullspace(fix));
    return out;
}

CyclicData cyclic_data(const Algebra& a, const SubalgebraSpec& s, std::size_t top, const Limits& limits) {
    for (std::size_t n = 0; n <= top + 1; ++n)
        check_budget(functional_dim(a, n), limits, "cyclic cochain space of degree " + std::to_string(n));
    CyclicData out;
    CochainComplex full, bar;
    std::vector<Subspace> rel, cyc;
    for (std::size_t n = 0; n <= top; ++n) {
        out.spaces.push_back(cyclic_spaces(a, s, n));
        full.dims.push_back(functional_dim(a, n));
        full.d.push_back(cyclic_delta(a, n));
        bar.dims.push_back(functional_dim(a, n));
        bar.d.push_back(bar_delta(a, n));
        rel.push_back(out.spaces.back().relative);
        cyc.push_back(out.spaces.back().cyclic);
    }
    out.c = CochainComplex::restrict(full, rel);
    out.cr = CochainComplex::restrict(bar, rel);
    out.cc = CochainComplex::restrict(full, cyc);
    for (std::size_t n = 0; n <= top; ++n) {
        const auto& sp = out.spaces[n];
        Matrix m = cyclic_m(a, n);
        Matrix norm = cyclic_norm(a, n);
        out.i.push_back(between(sp.cyclic, sp.relative));
        out.m.push_back(on_coordinates(sp.relative, m, sp.relative));
        out.n.push_back(on_coordinates(sp.relative, norm, sp.cyclic));
    }
    return out;
}

std::vector<ExactnessReport> sbi_exactness(const CyclicData& data) {
    std::vector<ExactnessReport> out;
    for (std::size_t n = 0; n <= data.top(); ++n) {
        std::string k = std::to_string(n);
        std::size_t dc = data.spaces[n].cyclic.dim();
        std::size_t dr = data.spaces[n].relative.dim();
        std::vector<SequenceNode> nodes{{"CC^" + k, dc}, {"C^" + k, dr}, {"CR^" + k, dr}, {"CC^" + k, dc}};
        std::vector<SequenceMap> maps{{"i", data.i[n]}, {"M", data.m[n]}, {"N", data.n[n]}, {"0", Matrix(0, dc)}};
        out.push_back(exactness(nodes, maps));
    }
    return out;
}

std::vector<CohomologyResult> hr_cohomology(const Algebra& a, const SubalgebraSpec& s, std::size_t max_n,
                                            const Limits& limits) {
    return summarize(all_cohomology(cyclic_data(a, s, max_n, limits).cr));
}

std::vector<CohomologyResult> cyclic_cohomology(const Algebra& a, const SubalgebraSpec& s, std::size_t max_n,
                                                const Limits& limits) {
    return summarize(all_cohomology(cyclic_data(a, s, max_n, limits).cc));
}

CTReport connes_tsygan(const Algebra& a, const SubalgebraSpec& s, std::size_t max_n, const Limits& limits) {
    return connes_tsygan_impl(a, s, max_n, limits, nullptr);
}

bool CTMorphismReport::commutes() const {
    for (const auto* v : {&square_i, &square_b, &square_s})
        for (bool b : *v)
            if (!b) return false;
    return true;
}

CTMorphismReport ct_morphism(const Algebra& a, const SubalgebraSpec& s, std::size_t max_n, const Limits& limits) {
    std::vector<CyclicCochainSpace> rel_spaces, abs_spaces;
    CTReport rel = connes_tsygan_impl(a, s, max_n, limits, &rel_spaces);
    CTReport abs = connes_tsygan_impl(a, unit_subalgebra(a), max_n, limits, &abs_spaces);
    std::vector<Matrix> ident;
    for (std::size_t n = 0; n <= max_n; ++n) ident.push_back(Matrix::identity(functional_dim(a, n)));
    return morphism(std::move(rel), std::move(abs), ident, rel_spaces, abs_spaces);
}

CTMorphismReport ct_morphism_hom(const Algebra& a, const Algebra& d, const Matrix& kappa, std::size_t max_n,
                                 const Limits& limits) {
    if (kappa.rows() != d.dim() || kappa.cols() != a.dim()) throw DimensionError("kappa has the wrong shape");
    if (!is_homomorphism(a, d, kappa, false)) throw PreconditionError("kappa is not multiplicative");
    std::vector<CyclicCochainSpace> d_spaces, a_spaces;
    CTReport src = connes_tsygan_impl(d, unit_subalgebra(d), max_n, limits, &d_spaces);
    CTReport tgt = connes_tsygan_impl(a, unit_subalgebra(a), max_n, limits, &a_spaces);
    return morphism(std::move(src), std::move(tgt), ambient_pullbacks(kappa, max_n), d_spaces, a_spaces);
}

FunctionalPullback functional_pullback(const Algebra& a, const Algebra& d, const Matrix& kappa, std::size_t max_n,
                                       const Limits& limits) {
    if (kappa.rows() != d.dim() || kappa.cols() != a.dim()) throw DimensionError("kappa has the wrong shape");
    if (!is_homomorphism(a, d, kappa, false)) throw PreconditionError("kappa is not multiplicative");
    CyclicData src = cyclic_data(d, unit_subalgebra(d), max_n, limits);
    CyclicData tgt = cyclic_data(a, unit_subalgebra(a), max_n, limits);
    std::vector<Matrix> ambient = ambient_pullbacks(kappa, max_n);
    std::vector<Matrix> fc, gc;
    for (std::size_t n = 0; n <= max_n; ++n) {
        fc.push_back(between(src.spaces[n].relative, tgt.spaces[n].relative, &ambient[n]));
        gc.push_back(between(src.spaces[n].cyclic, tgt.spaces[n].cyclic, &ambient[n]));
    }
    check_chain_map(src.c, tgt.c, fc);
    check_chain_map(src.cc, tgt.cc, gc);
    FunctionalPullback out;
    out.h = compare(all_cohomology(src.c), all_cohomology(tgt.c), fc, max_n);
    out.hc = compare(all_cohomology(src.cc), all_cohomology(tgt.cc), gc, max_n);
    return out;
}

ComparisonResult combined_pullback(const Algebra& a, const std::vector<PullbackPart>& parts, std::size_t max_n,
                                   bool cyclic, const Limits& limits) {
    CyclicData tgt = cyclic_data(a, unit_subalgebra(a), max_n, limits);
    auto target_h = all_cohomology(cyclic ? tgt.cc : tgt.c);
    std::vector<Matrix> combined(max_n + 1);
    std::vector<std::size_t> source_dims(max_n + 1, 0);
    for (std::size_t n = 0; n <= max_n; ++n) combined[n] = Matrix(target_h[n].dim(), 0);
    for (const auto& part : parts) {
        if (part.kappa.rows() != part.algebra->dim() || part.kappa.cols() != a.dim())
            throw DimensionError("kappa has the wrong shape");
        if (!is_homomorphism(a, *part.algebra, part.kappa, false)) throw PreconditionError("kappa is not multiplicative");
        CyclicData src = cyclic_data(*part.algebra, unit_subalgebra(*part.algebra), max_n, limits);
        auto source_h = all_cohomology(cyclic ? src.cc : src.c);
        std::vector<Matrix> ambient = ambient_pullbacks(part.kappa, max_n);
        for (std::size_t n = 0; n <= max_n; ++n) {
            const Subspace& from = cyclic ? src.spaces[n].cyclic : src.spaces[n].relative;
            const Subspace& to = cyclic ? tgt.spaces[n].cyclic : tgt.spaces[n].relative;
            Matrix chain = between(from, to, &ambient[n]);
            combined[n] = hstack(combined[n], induced_map(source_h[n], target_h[n], chain));
            source_dims[n] += source_h[n].dim();
        }
    }
    ComparisonResult r;
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::size_t rk = rank(combined[n]);
        r.source_dims.push_back(source_dims[n]);
        r.target_dims.push_back(target_h[n].dim());
        r.injective.push_back(rk == source_dims[n]);
        r.surjective.push_back(rk == target_h[n].dim());
        r.iso.push_back(r.injective.back() && r.surjective.back());
        r.maps.push_back(std::move(combined[n]));
    }
    return r;
}

}  // namespace hcohom
