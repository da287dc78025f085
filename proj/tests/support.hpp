#pragma once

#include <random>
#include <string>
#include <vector>

#include "hcohom/cyclic.hpp"

namespace hcohom::testing {

inline SparseVec vec(std::initializer_list<long long> dense) {
    std::vector<Scalar> v(dense.begin(), dense.end());
    return sparse_from_dense(v);
}

inline std::vector<std::size_t> h_dims(const std::vector<CohomologyResult>& r) {
    std::vector<std::size_t> out;
    for (const auto& x : r) out.push_back(x.dim_cohomology);
    return out;
}

inline bool all_of(const std::vector<bool>& v) {
    for (bool b : v)
        if (!b) return false;
    return true;
}

inline Matrix random_invertible(std::mt19937& rng, std::size_t d) {
    std::uniform_int_distribution<int> pick(-2, 2);
    while (true) {
        std::vector<std::vector<Scalar>> rows(d, std::vector<Scalar>(d));
        for (auto& r : rows)
            for (auto& x : r) x = Scalar(pick(rng));
        Matrix p = Matrix::from_dense(rows, d);
        if (is_invertible(p)) return p;
    }
}

/// Subalgebra of k x k matrices generated by a few random elements (and
/// optionally the identity), returned only when its dimension is 1..max_dim.
inline std::optional<Algebra> random_matrix_subalgebra(std::mt19937& rng, std::size_t k, std::size_t max_dim,
                                                       bool upper) {
    std::uniform_int_distribution<int> entry(-1, 1);
    std::uniform_int_distribution<int> gens(1, 2);
    std::size_t amb = k * k;
    auto mul = [&](const SparseVec& x, const SparseVec& y) {
        std::vector<Scalar> dx = dense_from_sparse(x, amb), dy = dense_from_sparse(y, amb), out(amb);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l)
                for (std::size_t j = 0; j < k; ++j) out[i * k + j] += dx[i * k + l] * dy[l * k + j];
        return sparse_from_dense(out);
    };
    std::vector<SparseVec> span;
    if (std::bernoulli_distribution(0.5)(rng)) {
        std::vector<Scalar> id(amb);
        for (std::size_t i = 0; i < k; ++i) id[i * k + i] = 1;
        span.push_back(sparse_from_dense(id));
    }
    for (int g = gens(rng); g > 0; --g) {
        std::vector<Scalar> m(amb);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = upper ? i : 0; j < k; ++j) m[i * k + j] = entry(rng);
        span.push_back(sparse_from_dense(m));
    }
    Subspace s = Subspace::span(amb, span);
    if (s.dim() == 0) return std::nullopt;
    for (bool grew = true; grew;) {
        grew = false;
        const auto basis = s.basis();
        std::vector<SparseVec> next = basis;
        for (const auto& x : basis)
            for (const auto& y : basis) next.push_back(mul(x, y));
        Subspace t = Subspace::span(amb, next);
        if (t.dim() > max_dim) return std::nullopt;
        grew = t.dim() > s.dim();
        s = std::move(t);
    }
    const auto& b = s.basis();
    std::size_t d = b.size();
    std::vector<SparseVec> products(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) products[i * d + j] = s.coordinates_or_throw(mul(b[i], b[j]));
    Algebra a(d, Field::Q, std::move(products));
    a.set_unit(find_unit(a));
    return a;
}

/// A random associative algebra of dimension <= max_dim: either a classical
/// one in a random basis or a random matrix subalgebra.
inline Algebra random_algebra(std::mt19937& rng, std::size_t max_dim = 3) {
    std::uniform_int_distribution<int> kind(0, 9);
    while (true) {
        int k = kind(rng);
        std::optional<Algebra> a;
        switch (k) {
            case 0: a = scalars(); break;
            case 1: a = dual_numbers(); break;
            case 2: a = upper_triangular(2); break;
            case 3: a = direct_sum({scalars(), scalars()}).algebra; break;
            case 4: a = truncated_polynomials(3); break;
            case 5: a = zero_algebra(1 + rng() % 2); break;
            case 6: a = direct_sum({scalars(), dual_numbers()}).algebra; break;
            default: a = random_matrix_subalgebra(rng, k == 7 ? 2 : 3, max_dim, k == 9); break;
        }
        if (!a || a->dim() > max_dim) continue;
        return change_basis(*a, random_invertible(rng, a->dim()));
    }
}

}  // namespace hcohom::testing
