#pragma once

#include <string>
#include <vector>

#include "support.hpp"

namespace hcohom::testing {

/// Checks the structural identities on one algebra through degree top and
/// returns a description of every violation found.
inline std::vector<std::string> structural_violations(const Algebra& a, std::size_t top, const Limits& limits) {
    std::vector<std::string> bad;
    auto report = [&](const std::string& what, std::size_t n) { bad.push_back(what + " at n=" + std::to_string(n)); };
    Bimodule m = dual_bimodule(a);
    std::vector<SubalgebraSpec> subs{unit_subalgebra(a), whole_subalgebra(a)};

    for (std::size_t n = 0; n < top; ++n) {
        if (!(hochschild_delta(a, m, n + 1) * hochschild_delta(a, m, n)).is_zero()) report("hochschild delta^2 != 0", n);
        if (!(cyclic_delta(a, n + 1) * cyclic_delta(a, n)).is_zero()) report("cyclic delta^2 != 0", n);
        if (!(bar_delta(a, n + 1) * bar_delta(a, n)).is_zero()) report("bar delta^2 != 0", n);
    }
    for (std::size_t n = 0; n <= top; ++n) {
        Matrix t = cyclic_t(a, n);
        Matrix p = Matrix::identity(t.rows());
        for (std::size_t k = 0; k <= n; ++k) p = p * t;
        if (!p.is_identity()) report("t^(n+1) != id", n);
    }
    for (const auto& s : subs) {
        std::string tag = s.is_unit_span() ? " (S = unit)" : " (S = A)";
        for (std::size_t n = 0; n < top; ++n) {
            Subspace from = relative_cochains(a, m, s, n);
            Subspace to = relative_cochains(a, m, s, n + 1);
            Matrix d = hochschild_delta(a, m, n);
            for (const auto& v : from.basis())
                if (!to.contains(d.apply(v))) {
                    report("hochschild delta leaves relative cochains" + tag, n);
                    break;
                }
            auto cf = cyclic_spaces(a, s, n);
            auto ct = cyclic_spaces(a, s, n + 1);
            Matrix cd = cyclic_delta(a, n), bd = bar_delta(a, n), t = cyclic_t(a, n);
            for (const auto& v : cf.relative.basis()) {
                if (!ct.relative.contains(cd.apply(v)) || !ct.relative.contains(bd.apply(v))) {
                    report("cyclic delta leaves relative cochains" + tag, n);
                    break;
                }
                if (!cf.relative.contains(t.apply(v))) {
                    report("t leaves relative cochains" + tag, n);
                    break;
                }
            }
            for (const auto& v : cf.cyclic.basis())
                if (!ct.cyclic.contains(cd.apply(v))) {
                    report("cyclic delta leaves cyclic cochains" + tag, n);
                    break;
                }
        }
    }
    for (const auto& s : subs) {
        CochainComplex c = hochschild_complex(a, m, top, limits, &s);
        for (std::size_t n = 0; n <= top; ++n) {
            Cohomology h(c, n);
            std::size_t r = rank(c.d[n]);
            if (h.dim_cocycles() + r != c.dims[n]) report("rank-nullity dim Z + rank d != dim C", n);
            if (h.dim() != h.dim_cocycles() - h.dim_coboundaries()) report("dim H != dim Z - dim B", n);
            if (n > 0 && h.dim_coboundaries() != rank(c.d[n - 1])) report("dim B != rank d", n);
        }
    }
    return bad;
}

/// Degreewise SBI exactness; empty when exact everywhere.
inline std::vector<std::string> sbi_violations(const Algebra& a, const SubalgebraSpec& s, std::size_t top,
                                               const Limits& limits) {
    std::vector<std::string> bad;
    auto reports = sbi_exactness(cyclic_data(a, s, top, limits));
    for (std::size_t n = 0; n < reports.size(); ++n)
        if (!reports[n].exact()) bad.push_back("SBI not exact at degree " + std::to_string(n));
    return bad;
}

/// A nontrivial subalgebra of a: the distinguished idempotents if present,
/// else the whole algebra.
inline SubalgebraSpec nontrivial_subalgebra(const Algebra& a) {
    return a.idempotents().empty() ? whole_subalgebra(a) : idempotent_subalgebra(a);
}

}  // namespace hcohom::testing
