#include "hcohom/complex.hpp"

#include <algorithm>
#include <string>

#include "hcohom/errors.hpp"

namespace hcohom {

void CochainComplex::check() const {
    if (dims.empty() || d.size() != dims.size()) throw DimensionError("complex needs one differential per degree");
    for (std::size_t n = 0; n < d.size(); ++n) {
        if (d[n].cols() != dims[n]) throw DimensionError("differential source dimension mismatch at degree " + std::to_string(n));
        if (n + 1 < dims.size() && d[n].rows() != dims[n + 1])
            throw DimensionError("differential target dimension mismatch at degree " + std::to_string(n));
        if (n + 1 < d.size() && !(d[n + 1] * d[n]).is_zero())
            throw ChainMapError("d∘d is not zero at degree " + std::to_string(n));
    }
}

CochainComplex CochainComplex::restrict(const CochainComplex& parent, const std::vector<Subspace>& subspaces) {
    if (subspaces.size() != parent.dims.size()) throw DimensionError("one subspace per degree required");
    CochainComplex out;
    for (std::size_t n = 0; n < subspaces.size(); ++n) {
        if (subspaces[n].ambient_dim() != parent.dims[n]) throw DimensionError("subspace ambient mismatch at degree " + std::to_string(n));
        out.dims.push_back(subspaces[n].dim());
    }
    for (std::size_t n = 0; n < subspaces.size(); ++n) {
        std::vector<SparseVec> cols;
        cols.reserve(subspaces[n].dim());
        bool inner = n + 1 < subspaces.size();
        for (const auto& u : subspaces[n].basis()) {
            SparseVec y = parent.d[n].apply(u);
            if (inner) {
                auto c = subspaces[n + 1].coordinates(y);
                if (!c) throw ContainmentError("subspace family is not stable under the differential at degree " + std::to_string(n));
                cols.push_back(std::move(*c));
            } else {
                cols.push_back(std::move(y));
            }
        }
        std::size_t rows = inner ? subspaces[n + 1].dim() : parent.d[n].rows();
        out.d.push_back(Matrix::from_columns(cols, rows));
    }
    return out;
}

Cohomology::Cohomology(const CochainComplex& c, std::size_t n) : degree_(n) {
    if (n > c.top()) throw PreconditionError("cohomology degree beyond complex truncation");
    cocycles_ = nullspace(c.d[n]);
    coboundaries_ = n == 0 ? Subspace::zero(c.dims[0]) : column_space(c.d[n - 1]);
    if (!cocycles_.contains(coboundaries_))
        throw ContainmentError("coboundaries are not cocycles at degree " + std::to_string(n));
    Echelon e(c.dims[n]);
    for (const auto& b : coboundaries_.basis()) e.insert(b);
    for (const auto& z : cocycles_.basis())
        if (e.insert(z)) representatives_.push_back(z);
    std::vector<SparseVec> cols = coboundaries_.basis();
    cols.insert(cols.end(), representatives_.begin(), representatives_.end());
    solver_.emplace(Matrix::from_columns(cols, c.dims[n]));
}

SparseVec Cohomology::class_of(const SparseVec& v) const {
    auto x = solver_->solve(v);
    if (!x) throw ContainmentError("vector is not a cocycle in degree " + std::to_string(degree_));
    SparseVec out;
    Index shift = static_cast<Index>(coboundaries_.dim());
    for (const auto& e : *x)
        if (e.index >= shift) out.push_back({e.index - shift, e.value});
    return out;
}

std::vector<Cohomology> all_cohomology(const CochainComplex& c) {
    std::vector<Cohomology> out;
    out.reserve(c.dims.size());
    for (std::size_t n = 0; n <= c.top(); ++n) out.emplace_back(c, n);
    return out;
}

std::vector<std::size_t> cohomology_dims(const std::vector<Cohomology>& h) {
    std::vector<std::size_t> out;
    for (const auto& x : h) out.push_back(x.dim());
    return out;
}

void check_chain_map(const CochainComplex& source, const CochainComplex& target, const std::vector<Matrix>& f) {
    std::size_t top = std::min(source.top(), target.top());
    if (f.size() < top + 1) throw DimensionError("chain map needs a component per degree");
    for (std::size_t n = 0; n <= top; ++n) {
        if (f[n].cols() != source.dims[n] || f[n].rows() != target.dims[n])
            throw DimensionError("chain map component shape mismatch at degree " + std::to_string(n));
        if (n < top && !(target.d[n] * f[n] == f[n + 1] * source.d[n]))
            throw ChainMapError("chain map does not commute with differentials at degree " + std::to_string(n));
    }
}

Matrix induced_map(const Cohomology& source, const Cohomology& target, const Matrix& f_n) {
    std::vector<SparseVec> cols;
    cols.reserve(source.dim());
    for (const auto& r : source.representatives()) {
        try {
            cols.push_back(target.class_of(f_n.apply(r)));
        } catch (const ContainmentError&) {
            throw ChainMapError("map does not send cocycles to cocycles in degree " + std::to_string(source.degree()));
        }
    }
    return Matrix::from_columns(cols, target.dim());
}

void ComplexSES::check() const {
    sub.check();
    mid.check();
    quo.check();
    std::size_t top = std::min({sub.top(), mid.top(), quo.top()});
    if (i.size() < top + 1 || p.size() < top + 1) throw DimensionError("SES maps missing degrees");
    for (std::size_t n = 0; n <= top; ++n) {
        std::string at = " at degree " + std::to_string(n);
        if (i[n].cols() != sub.dims[n] || i[n].rows() != mid.dims[n] || p[n].cols() != mid.dims[n] ||
            p[n].rows() != quo.dims[n])
            throw DimensionError("SES map shape mismatch" + at);
        if (!(p[n] * i[n]).is_zero()) throw ExactnessError("p∘i is not zero" + at);
        std::size_t ri = rank(i[n]);
        std::size_t rp = rank(p[n]);
        if (ri != sub.dims[n]) throw ExactnessError("i is not injective" + at);
        if (rp != quo.dims[n]) throw ExactnessError("p is not surjective" + at);
        if (ri + rp != mid.dims[n]) throw ExactnessError("image of i differs from kernel of p" + at);
    }
    check_chain_map(sub, mid, i);
    check_chain_map(mid, quo, p);
}

Matrix connecting_map(const ComplexSES& ses, const Cohomology& quo_n, const Cohomology& sub_n1, std::size_t n) {
    if (n + 1 > ses.sub.top() || n + 1 > ses.mid.top()) throw PreconditionError("connecting map needs degree n+1 coordinates");
    LinearSolver lift(ses.p[n]);
    LinearSolver pull(ses.i[n + 1]);
    std::vector<SparseVec> cols;
    for (const auto& z : quo_n.representatives()) {
        auto x = lift.solve(z);
        if (!x) throw ExactnessError("representative does not lift through p in degree " + std::to_string(n));
        SparseVec y = ses.mid.d[n].apply(*x);
        auto w = pull.solve(y);
        if (!w) throw ExactnessError("coboundary of the lift is not in the image of i in degree " + std::to_string(n + 1));
        cols.push_back(sub_n1.class_of(*w));
    }
    return Matrix::from_columns(cols, sub_n1.dim());
}

bool ExactnessReport::exact() const {
    for (const auto& d : defects)
        if (d && *d != 0) return false;
    return true;
}

std::size_t ExactnessReport::checked_nodes() const {
    std::size_t k = 0;
    for (const auto& d : defects)
        if (d) ++k;
    return k;
}

std::size_t exactness_defect(const Matrix& f, const Matrix& g) {
    if (f.rows() != g.cols()) throw DimensionError("sequence maps do not compose");
    Subspace im = column_space(f);
    Subspace ker = nullspace(g);
    Subspace meet = intersection(im, ker);
    return (ker.dim() - meet.dim()) + (im.dim() - meet.dim());
}

ExactnessReport exactness(const std::vector<SequenceNode>& nodes, const std::vector<SequenceMap>& maps) {
    if (maps.size() + 1 < nodes.size()) throw DimensionError("sequence needs a map between consecutive nodes");
    ExactnessReport r;
    r.nodes = nodes;
    for (const auto& m : maps) r.maps.push_back(m.name);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        Matrix in = k == 0 ? Matrix(nodes[0].dim, 0) : Matrix();
        bool have_in = k == 0 || maps[k - 1].matrix.has_value();
        if (k > 0 && have_in) in = *maps[k - 1].matrix;
        bool have_out = k < maps.size() && maps[k].matrix.has_value();
        if (!have_in || !have_out) {
            r.defects.push_back(std::nullopt);
            continue;
        }
        r.defects.push_back(exactness_defect(in, *maps[k].matrix));
    }
    return r;
}

ExactnessReport long_exact_sequence(const ComplexSES& ses, std::size_t max_n) {
    if (max_n > std::min({ses.sub.top(), ses.mid.top(), ses.quo.top()})) throw PreconditionError("degree beyond truncation");
    auto hs = all_cohomology(ses.sub);
    auto hm = all_cohomology(ses.mid);
    auto hq = all_cohomology(ses.quo);
    std::vector<SequenceNode> nodes;
    std::vector<SequenceMap> maps;
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::string k = std::to_string(n);
        nodes.push_back({"H" + k + "(sub)", hs[n].dim()});
        maps.push_back({"i*" + k, induced_map(hs[n], hm[n], ses.i[n])});
        nodes.push_back({"H" + k + "(mid)", hm[n].dim()});
        maps.push_back({"p*" + k, induced_map(hm[n], hq[n], ses.p[n])});
        nodes.push_back({"H" + k + "(quo)", hq[n].dim()});
        if (n + 1 <= ses.sub.top() && n + 1 <= ses.mid.top())
            maps.push_back({"d" + k, connecting_map(ses, hq[n], hs[n + 1], n)});
        else
            maps.push_back({"d" + k, std::nullopt});
    }
    if (max_n + 1 <= ses.sub.top()) nodes.push_back({"H" + std::to_string(max_n + 1) + "(sub)", hs[max_n + 1].dim()});
    else maps.pop_back();
    return exactness(nodes, maps);
}

}  // namespace hcohom
