#include "hcohom/theoremlab.hpp"

#include <random>

#include "hcohom/errors.hpp"

namespace hcohom {
namespace {

struct Instance {
    std::optional<DirectSum> ds;
    std::optional<Algebra> a;
};

Field case_field(const json& d) { return d.contains("field") ? parse_field(d.at("field").get<std::string>()) : Field::Q; }

Algebra algebra_from_spec(const json& j, Field f) {
    if (j.is_string()) return resolve_algebra(j.get<std::string>(), f);
    if (j.is_object()) return algebra_from_json(j);
    throw InputError("algebra must be a builtin name, file, or JSON object");
}

std::vector<Algebra> parts_from_spec(const json& j, Field f) {
    if (j.is_string()) return resolve_parts(j.get<std::string>(), f);
    if (!j.is_array() || j.empty()) throw InputError("parts must be a non-empty list");
    std::vector<Algebra> out;
    for (const auto& p : j) out.push_back(algebra_from_spec(p, f));
    return out;
}

Instance main_instance(const json& d) {
    Field f = case_field(d);
    Instance in;
    if (d.contains("parts")) {
        auto parts = parts_from_spec(d.at("parts"), f);
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (!parts[i].is_unital()) throw InputError("part " + std::to_string(i) + " of the direct sum is not unital");
        in.ds = direct_sum(parts);
        in.a = in.ds->algebra;
    } else if (d.contains("algebra")) {
        in.a = algebra_from_spec(d.at("algebra"), f);
    } else {
        throw InputError("case needs \"algebra\" or \"parts\"");
    }
    return in;
}

const json& required(const json& d, const char* key) {
    if (!d.contains(key)) throw InputError(std::string("case needs \"") + key + "\"");
    return d.at(key);
}

Hypothesis amenable(const std::string& name, const Algebra& b) {
    Hypothesis h{name, false, ""};
    if (!b.is_unital()) {
        h.detail = "not unital, so no separability idempotent exists";
        return h;
    }
    auto u = separability_idempotent(b);
    h.certified = u && verify_separability_idempotent(b, *u);
    h.detail = h.certified ? "separability idempotent found and verified" : "no separability idempotent (linear system infeasible)";
    return h;
}

Hypothesis unital(const std::string& name, const Algebra& a) {
    bool ok = a.is_unital();
    return {name, ok, ok ? "identity element found" : "no identity element"};
}

Hypothesis dual_module(const std::string& name) {
    return {name, true, "finite-dimensional, hence the dual of its own dual"};
}

bool all_certified(const std::vector<Hypothesis>& hs) {
    for (const auto& h : hs)
        if (!h.certified) return false;
    return true;
}

void add(Verdict& v, std::size_t n, const std::string& check, bool holds) { v.degrees.push_back({n, check, holds, Status::NotCertified}); }

void add_flags(Verdict& v, const ComparisonResult& r, std::size_t n, const std::string& check) {
    bool holds = check == "iso" ? r.iso[n] : check == "injective" ? r.injective[n] : r.surjective[n];
    add(v, n, check, holds);
}

void finalize(Verdict& v, bool skip) {
    v.skipped_certification = skip;
    bool cert = all_certified(v.hypotheses);
    for (auto& d : v.degrees) {
        if (d.check == "premise" || d.check == "not computed") d.status = Status::NotCertified;
        else if (!cert && !skip) d.status = Status::NotCertified;
        else d.status = d.holds ? Status::Pass : Status::Fail;
    }
}

// Hypotheses fail in a way that prevents the computation itself.
void uncomputable(Verdict& v, const std::string& reason) {
    v.notes.push_back(reason);
    for (std::size_t n = 0; n <= v.max_degree; ++n) add(v, n, "not computed", false);
}

std::vector<std::size_t> dims_of(const std::vector<CohomologyResult>& r) {
    std::vector<std::size_t> out;
    for (const auto& x : r) out.push_back(x.dim_cohomology);
    return out;
}

Bimodule corner_bimodule(const json& d, const Algebra& a1, const Algebra& a2) {
    json y = d.value("y", json("regular"));
    if (y.is_string() && y.get<std::string>() == "regular") {
        if (!(a1 == a2)) throw InputError("y = regular needs A1 = A2");
        return regular_bimodule(a1);
    }
    if (y.is_string()) y = read_json_file(y.get<std::string>());
    return bimodule_from_json(y, a1, a2);
}

Verdict verify_1_6(const TheoremCase& c, const Limits& limits) {
    Verdict v;
    Instance in = main_instance(c.data);
    const Algebra& a = *in.a;
    SubalgebraSpec b = resolve_subalgebra(c.data.value("subalgebra", json("idempotents")), a);
    Bimodule m = resolve_module(c.data.value("module", json("dual")), a);
    v.hypotheses = {amenable("B amenable", subalgebra_as_algebra(a, b)), dual_module("M dual")};
    v.lhs = "H^n(A,M)";
    v.rhs = "H_B^n(A,M)";
    ComparisonResult r = comparison_inclusion(a, m, b, c.max_degree, limits);
    v.lhs_dims = r.target_dims;
    v.rhs_dims = r.source_dims;
    for (std::size_t n = 0; n <= c.max_degree; ++n) add_flags(v, r, n, "iso");
    return v;
}

Verdict verify_1_7(const TheoremCase& c, const Limits& limits) {
    Verdict v;
    Instance in = main_instance(c.data);
    if (!in.ds) throw InputError("theorem 1.7 needs \"parts\"");
    const DirectSum& ds = *in.ds;
    const Algebra& a = ds.algebra;
    Bimodule m = resolve_module(c.data.value("module", json("dual")), a);
    for (std::size_t i = 0; i < ds.parts.size(); ++i) v.hypotheses.push_back(unital("A_" + std::to_string(i + 1) + " unital", ds.parts[i]));
    v.hypotheses.push_back(dual_module("M dual"));
    v.lhs = "H^n(A,M)";
    v.rhs = "sum of H^n(A_i, e_i M e_i)";
    std::size_t top = c.max_degree;
    SubalgebraSpec b = idempotent_subalgebra(a);
    ComparisonResult incl = comparison_inclusion(a, m, b, top, limits);
    CochainComplex rel = hochschild_complex(a, m, top, limits, &b);
    std::vector<Corner> cs = corners(ds, m);
    std::vector<CochainComplex> parts;
    std::vector<std::size_t> sum(top + 1, 0);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        parts.push_back(hochschild_complex(ds.parts[i], cs[i].module, top, limits));
        auto h = cohomology_dims(all_cohomology(parts.back()));
        for (std::size_t n = 0; n <= top; ++n) sum[n] += h[n];
    }
    std::vector<DirectSumMaps> jg;
    for (std::size_t n = 0; n <= top; ++n) jg.push_back(direct_sum_maps(ds, m, n, limits));
    v.lhs_dims = incl.target_dims;
    v.rhs_dims = sum;
    for (std::size_t n = 0; n <= top; ++n) {
        bool inverse_pair = (jg[n].j * jg[n].g).is_identity() && (jg[n].g * jg[n].j).is_identity();
        bool chain = true;
        if (n < top) {
            std::vector<Matrix> blocks;
            for (const auto& p : parts) blocks.push_back(p.d[n]);
            chain = jg[n + 1].j * rel.d[n] == direct_sum(blocks) * jg[n].j;
        }
        add(v, n, "iso", incl.iso[n] && inverse_pair && chain && incl.target_dims[n] == sum[n]);
    }
    return v;
}

Verdict verify_triangular(const TheoremCase& c, const Limits& limits, bool cyclic) {
    Verdict v;
    Field f = case_field(c.data);
    Algebra a1 = algebra_from_spec(required(c.data, "a1"), f);
    Algebra a2 = algebra_from_spec(required(c.data, "a2"), f);
    v.hypotheses = {unital("A_1 unital", a1), unital("A_2 unital", a2)};
    v.lhs = cyclic ? "HC^n(U)" : "H^n(U,U*)";
    v.rhs = cyclic ? "HC^n(A_1) + HC^n(A_2)" : "H^n(A_1,A_1*) + H^n(A_2,A_2*)";
    if (!a1.is_unital() || !a2.is_unital()) {
        uncomputable(v, "the triangular algebra is built only from unital corners");
        return v;
    }
    Bimodule y = corner_bimodule(c.data, a1, a2);
    bool y_unital = is_unital_bimodule(a1, a2, y);
    v.hypotheses.push_back({"Y unital bimodule", y_unital, y_unital ? "units act as identities" : "a unit acts non-trivially"});
    if (!y_unital) {
        uncomputable(v, "the triangular algebra needs a unital bimodule");
        return v;
    }
    Triangular u = triangular(a1, a2, y);
    ComparisonResult r = combined_pullback(u.algebra, {{&a1, u.projection1()}, {&a2, u.projection2()}}, c.max_degree, cyclic, limits);
    v.lhs_dims = r.target_dims;
    v.rhs_dims = r.source_dims;
    for (std::size_t n = 0; n <= c.max_degree; ++n) add_flags(v, r, n, "iso");
    return v;
}

Verdict verify_2_1(const TheoremCase& c, const Limits& limits) {
    Verdict v;
    Instance in = main_instance(c.data);
    const Algebra& a = *in.a;
    IdealSpec ideal = resolve_ideal(required(c.data, "ideal"), a, in.ds ? &*in.ds : nullptr);
    Quotient q = quotient(a, ideal);
    Bimodule m = resolve_module(c.data.value("module", json("dual")), q.algebra);
    v.hypotheses = {amenable("I amenable", ideal_as_algebra(a, ideal)), dual_module("M dual")};
    v.lhs = "H^n(A,M)";
    v.rhs = "H^n(A/I,M)";
    ComparisonResult r = quotient_comparison(a, ideal, m, c.max_degree, limits);
    v.lhs_dims = r.target_dims;
    v.rhs_dims = r.source_dims;
    for (std::size_t n = 0; n <= c.max_degree; ++n) add_flags(v, r, n, "iso");
    return v;
}

Verdict verify_2_2(const TheoremCase& c, const Limits& limits) {
    Verdict v;
    Instance in = main_instance(c.data);
    const Algebra& a = *in.a;
    IdealSpec ideal = resolve_ideal(c.data.value("ideal", json("algebra")), a, in.ds ? &*in.ds : nullptr);
    v.hypotheses = {unital("I has a bounded approximate identity", ideal_as_algebra(a, ideal))};
    v.lhs = "H_I^n(A,I*)";
    v.rhs = "Cen_I I* in degree 0, zero above";
    Bimodule x = ideal_dual(a, ideal);
    SubalgebraSpec s = ideal_as_subalgebra(a, ideal);
    std::size_t cen = center(x, s).dim();
    v.lhs_dims = dims_of(hochschild_cohomology(a, x, c.max_degree, limits, &s));
    v.rhs_dims.assign(c.max_degree + 1, 0);
    v.rhs_dims[0] = cen;
    for (std::size_t n = 0; n <= c.max_degree; ++n) add(v, n, n == 0 ? "equal" : "vanishing", v.lhs_dims[n] == v.rhs_dims[n]);
    return v;
}

Verdict verify_2_4(const TheoremCase& c, const Limits& limits) {
    Verdict v;
    Instance in = main_instance(c.data);
    const Algebra& a = *in.a;
    IdealSpec ideal = resolve_ideal(required(c.data, "ideal"), a, in.ds ? &*in.ds : nullptr);
    Quotient q = quotient(a, ideal);
    v.hypotheses = {amenable("I amenable", ideal_as_algebra(a, ideal))};
    v.lhs = "H^n(A,A*)";
    v.rhs = "H^n(A/I,(A/I)*)";
    std::size_t cen = center(ideal_dual(a, ideal), ideal_as_subalgebra(a, ideal)).dim();
    bool part2 = cen == 0;
    v.notes.push_back("Cen_I I* has dimension " + std::to_string(cen) +
                      (part2 ? "; isomorphism asserted in every degree" : "; only degrees >= 2 and degree-1 surjectivity asserted"));
    ComparisonResult r = functional_pullback(a, q.algebra, q.theta, c.max_degree, limits).h;
    v.lhs_dims = r.target_dims;
    v.rhs_dims = r.source_dims;
    for (std::size_t n = 0; n <= c.max_degree; ++n) {
        if (n == 0 && !part2) continue;
        add_flags(v, r, n, n == 1 && !part2 ? "surjective" : "iso");
    }
    return v;
}

Verdict verify_4_1(const TheoremCase& c, const Limits& limits) {
    Verdict v;
    Instance in = main_instance(c.data);
    const Algebra& a = *in.a;
    SubalgebraSpec b = resolve_subalgebra(c.data.value("subalgebra", json("idempotents")), a);
    v.hypotheses = {unital("A unital", a), amenable("B amenable", subalgebra_as_algebra(a, b))};
    v.lhs = "HC^n(A)";
    v.rhs = "HC_B^n(A)";
    if (!a.is_unital()) {
        uncomputable(v, "the Connes-Tsygan sequence is assembled only for unital algebras");
        return v;
    }
    CTMorphismReport mo = ct_morphism(a, b, c.max_degree, limits);
    v.lhs_dims = mo.target.hc_dims();
    v.rhs_dims = mo.source.hc_dims();
    for (std::size_t n = 0; n <= c.max_degree; ++n) {
        bool squares = mo.square_i[n] && mo.square_b[n] && (n >= mo.square_s.size() || mo.square_s[n]);
        add(v, n, "iso", mo.g_iso[n] && squares);
    }
    if (!mo.commutes()) v.notes.push_back("a square of the Connes-Tsygan morphism does not commute");
    return v;
}

Verdict verify_4_2(const TheoremCase& c, const Limits& limits) {
    Verdict v;
    Instance in = main_instance(c.data);
    const Algebra& a = *in.a;
    IdealSpec ideal = resolve_ideal(required(c.data, "ideal"), a, in.ds ? &*in.ds : nullptr);
    Quotient q = quotient(a, ideal);
    v.hypotheses = {unital("A unital", a), amenable("I amenable", ideal_as_algebra(a, ideal))};
    v.lhs = "HC^n(A)";
    v.rhs = "HC^n(A/I)";
    std::size_t tr = trace_space(ideal_as_algebra(a, ideal)).dim();
    bool part2 = tr == 0;
    v.notes.push_back("I^tr has dimension " + std::to_string(tr) +
                      (part2 ? "; isomorphism asserted in every degree" : "; injectivity at even and surjectivity at odd degrees asserted"));
    ComparisonResult r = functional_pullback(a, q.algebra, q.theta, c.max_degree, limits).hc;
    v.lhs_dims = r.target_dims;
    v.rhs_dims = r.source_dims;
    for (std::size_t n = 0; n <= c.max_degree; ++n) add_flags(v, r, n, part2 ? "iso" : n % 2 == 0 ? "injective" : "surjective");
    return v;
}

Verdict verify_4_3(const TheoremCase& c, const Limits& limits) {
    Verdict v;
    Instance in = main_instance(c.data);
    const Algebra& a = *in.a;
    std::optional<Algebra> d;
    Matrix kappa;
    if (c.data.contains("ideal")) {
        Quotient q = quotient(a, resolve_ideal(c.data.at("ideal"), a, in.ds ? &*in.ds : nullptr));
        d = q.algebra;
        kappa = q.theta;
    } else {
        d = algebra_from_spec(required(c.data, "target"), case_field(c.data));
        kappa = matrix_from_json(required(c.data, "kappa"), d->dim(), a.dim(), "kappa");
    }
    bool mult = is_homomorphism(a, *d, kappa, false);
    v.hypotheses = {unital("A unital", a), unital("D unital", *d),
                    {"kappa multiplicative", mult, mult ? "kappa(xy) = kappa(x)kappa(y) on the basis" : "kappa is not multiplicative"}};
    v.lhs = "HC^n(A)";
    v.rhs = "HC^n(D)";
    if (!a.is_unital() || !d->is_unital() || !mult) {
        uncomputable(v, "the Connes-Tsygan morphism needs unital algebras and a homomorphism");
        return v;
    }
    std::size_t top = c.max_degree;
    CTMorphismReport mo = ct_morphism_hom(a, *d, kappa, top, limits);
    v.lhs_dims = mo.target.hc_dims();
    v.rhs_dims = mo.source.hc_dims();
    auto all = [](const std::vector<bool>& x) {
        for (bool b : x)
            if (!b) return false;
        return true;
    };
    bool h_all = all(mo.f_iso);
    bool hc_all = all(mo.g_iso);
    v.notes.push_back("H^n(A,A*) dims " + json(mo.target.h_dims()).dump() + ", H^n(D,D*) dims " + json(mo.source.h_dims()).dump());
    if (!mo.commutes()) v.notes.push_back("a square of the Connes-Tsygan morphism does not commute");
    if (h_all)
        for (std::size_t n = 0; n < top; ++n) add(v, n, "iso (HC from H)", mo.g_iso[n] && mo.commutes());
    if (hc_all)
        for (std::size_t n = 0; n < top; ++n) add(v, n, "iso (H from HC)", mo.f_iso[n] && mo.commutes());
    if (!h_all && !hc_all) {
        v.notes.push_back("neither H nor HC maps are invertible through the top degree; nothing is asserted");
        for (std::size_t n = 0; n <= top; ++n) add(v, n, "premise", false);
    }
    return v;
}

Verdict verify_4_4(const TheoremCase& c, const Limits& limits) {
    Verdict v;
    Instance in = main_instance(c.data);
    if (!in.ds) throw InputError("theorem 4.4 needs \"parts\"");
    const DirectSum& ds = *in.ds;
    for (std::size_t i = 0; i < ds.parts.size(); ++i) v.hypotheses.push_back(unital("A_" + std::to_string(i + 1) + " unital", ds.parts[i]));
    v.lhs = "HC^n(A)";
    v.rhs = "sum of HC^n(A_i)";
    std::vector<PullbackPart> parts;
    for (std::size_t i = 0; i < ds.parts.size(); ++i) parts.push_back({&ds.parts[i], ds.projection(i)});
    ComparisonResult r = combined_pullback(ds.algebra, parts, c.max_degree, true, limits);
    v.lhs_dims = r.target_dims;
    v.rhs_dims = r.source_dims;
    for (std::size_t n = 0; n <= c.max_degree; ++n) add_flags(v, r, n, "iso");
    return v;
}

Verdict dispatch(const TheoremCase& c, const Limits& limits) {
    const std::string& t = c.theorem;
    if (t == "1.6") return verify_1_6(c, limits);
    if (t == "1.7") return verify_1_7(c, limits);
    if (t == "1.10") return verify_triangular(c, limits, false);
    if (t == "2.1") return verify_2_1(c, limits);
    if (t == "2.2") return verify_2_2(c, limits);
    if (t == "2.4") return verify_2_4(c, limits);
    if (t == "4.1") return verify_4_1(c, limits);
    if (t == "4.2") return verify_4_2(c, limits);
    if (t == "4.3") return verify_4_3(c, limits);
    if (t == "4.4") return verify_4_4(c, limits);
    if (t == "4.7") return verify_triangular(c, limits, true);
    throw InputError("unknown theorem id '" + t + "'");
}

// Random invertible integer matrix with entries in [-2, 2].
Matrix random_basis_change(std::mt19937& rng, std::size_t d) {
    std::uniform_int_distribution<int> pick(-2, 2);
    while (true) {
        std::vector<SparseVec> rows;
        for (std::size_t i = 0; i < d; ++i) {
            std::vector<Scalar> r;
            for (std::size_t j = 0; j < d; ++j) r.push_back(Scalar(pick(rng)));
            rows.push_back(sparse_from_dense(r));
        }
        Matrix p = Matrix::from_rows(rows, d);
        if (is_invertible(p)) return p;
    }
}

TheoremCase make_case(const std::string& theorem, const std::string& name, json data, std::size_t max_degree, Status expect) {
    TheoremCase c;
    c.theorem = theorem;
    c.name = name;
    c.data = std::move(data);
    c.max_degree = max_degree;
    c.expect = expect;
    return c;
}

}  // namespace

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::NotCertified: return "NOT-CERTIFIED";
    }
    return "NOT-CERTIFIED";
}

Status parse_status(const std::string& s) {
    if (s == "PASS") return Status::Pass;
    if (s == "FAIL") return Status::Fail;
    if (s == "NOT-CERTIFIED") return Status::NotCertified;
    throw InputError("unknown status '" + s + "'");
}

Status Verdict::overall() const {
    bool nc = false;
    for (const auto& d : degrees) {
        if (d.status == Status::Fail) return Status::Fail;
        if (d.status == Status::NotCertified) nc = true;
    }
    return nc ? Status::NotCertified : Status::Pass;
}

bool Verdict::certified() const { return all_certified(hypotheses); }

TheoremCase case_from_json(const json& j) {
    if (!j.is_object()) throw InputError("case must be a JSON object");
    TheoremCase c;
    const json& t = required(j, "theorem");
    if (!t.is_string()) throw InputError("case.theorem must be a string");
    c.theorem = t.get<std::string>();
    c.name = j.value("name", c.theorem);
    if (j.contains("max_degree")) {
        const json& m = j.at("max_degree");
        if (!m.is_number_integer() || m.get<long long>() < 0) throw InputError("case.max_degree must be a non-negative integer");
        c.max_degree = m.get<std::size_t>();
    }
    c.skip_certification = j.value("skip_certification", false);
    if (j.contains("expect")) c.expect = parse_status(j.at("expect").get<std::string>());
    c.data = j;
    return c;
}

json case_to_json(const TheoremCase& c) {
    json j = c.data.is_object() ? c.data : json::object();
    j["theorem"] = c.theorem;
    j["name"] = c.name;
    j["max_degree"] = c.max_degree;
    j["skip_certification"] = c.skip_certification;
    if (c.expect) j["expect"] = status_name(*c.expect);
    return j;
}

std::vector<std::string> theorem_ids() { return {"1.6", "1.7", "1.10", "2.1", "2.2", "2.4", "4.1", "4.2", "4.3", "4.4", "4.7"}; }

Verdict verify(const TheoremCase& c, const Limits& limits) {
    Verdict v;
    try {
        v = dispatch(c, limits);
    } catch (const IdealError& e) {
        throw InputError(std::string("invalid ideal: ") + e.what());
    } catch (const ContainmentError& e) {
        throw InputError(std::string("invalid instance: ") + e.what());
    } catch (const DimensionError& e) {
        throw InputError(std::string("invalid instance: ") + e.what());
    } catch (const PreconditionError& e) {
        throw InputError(std::string("invalid instance: ") + e.what());
    }
    v.theorem = c.theorem;
    v.name = c.name;
    v.max_degree = c.max_degree;
    finalize(v, c.skip_certification);
    return v;
}

json verdict_json(const Verdict& v) {
    json degrees = json::array(), status = json::array(), checks = json::array(), holds = json::array();
    for (const auto& d : v.degrees) {
        degrees.push_back(d.degree);
        status.push_back(status_name(d.status));
        checks.push_back(d.check);
        holds.push_back(d.holds);
    }
    json hyps = json::object();
    for (const auto& h : v.hypotheses) hyps[h.name] = json{{"certified", h.certified}, {"detail", h.detail}};
    return json{{"theorem", v.theorem},
                {"name", v.name},
                {"max_degree", v.max_degree},
                {"degrees", std::move(degrees)},
                {"checks", std::move(checks)},
                {"holds", std::move(holds)},
                {"status", std::move(status)},
                {"overall", status_name(v.overall())},
                {"hypotheses", std::move(hyps)},
                {"skipped_certification", v.skipped_certification},
                {"lhs", v.lhs},
                {"rhs", v.rhs},
                {"lhs_dims", v.lhs_dims},
                {"rhs_dims", v.rhs_dims},
                {"notes", v.notes}};
}

std::vector<TheoremCase> builtin_cases() {
    const Status pass = Status::Pass, nc = Status::NotCertified;
    std::vector<TheoremCase> out{
        make_case("1.6", "upper triangular over its diagonal", {{"algebra", "upper_triangular:2"}, {"subalgebra", "idempotents"}}, 3, pass),
        make_case("1.6", "matrix algebra over its diagonal", {{"algebra", "matrix:2"}, {"subalgebra", "idempotents"}}, 2, pass),
        make_case("1.6", "dual numbers over themselves", {{"algebra", "dual_numbers"}, {"subalgebra", "algebra"}}, 3, nc),
        make_case("1.7", "M2 + Q, dual module", {{"parts", "matrix:2,scalars"}, {"module", "dual"}}, 2, pass),
        make_case("1.7", "Q + Q, dual module", {{"parts", "scalars,scalars"}}, 3, pass),
        make_case("1.7", "M2 + dual numbers, dual module", {{"parts", "matrix:2,dual_numbers"}}, 2, pass),
        make_case("1.10", "triangular Q, Q, Y = Q", {{"a1", "scalars"}, {"a2", "scalars"}, {"y", "regular"}}, 3, pass),
        make_case("2.1", "M2 + Q modulo M2, dual of Q", {{"parts", "matrix:2,scalars"}, {"ideal", "part:0"}, {"module", "dual"}}, 3, pass),
        make_case("2.1", "M2 + dual numbers modulo M2", {{"parts", "matrix:2,dual_numbers"}, {"ideal", "part:0"}}, 3, pass),
        make_case("2.1", "upper triangular modulo strictly upper", {{"algebra", "upper_triangular:2"}, {"ideal", "strict_upper"}}, 3, nc),
        make_case("2.2", "M2 with I = M2", {{"algebra", "matrix:2"}, {"ideal", "algebra"}}, 3, pass),
        make_case("2.2", "M2 + Q with I = M2", {{"parts", "matrix:2,scalars"}, {"ideal", "part:0"}}, 2, pass),
        make_case("2.4", "M2 + dual numbers modulo M2", {{"parts", "matrix:2,dual_numbers"}, {"ideal", "part:0"}}, 3, pass),
        make_case("2.4", "M2 + Q modulo Q", {{"parts", "matrix:2,scalars"}, {"ideal", "part:1"}}, 3, pass),
        make_case("4.1", "upper triangular over its diagonal", {{"algebra", "upper_triangular:2"}, {"subalgebra", "idempotents"}}, 3, pass),
        make_case("4.1", "dual numbers over themselves", {{"algebra", "dual_numbers"}, {"subalgebra", "algebra"}}, 3, nc),
        make_case("4.2", "M2 + dual numbers modulo M2", {{"parts", "matrix:2,dual_numbers"}, {"ideal", "part:0"}}, 3, pass),
        make_case("4.2", "M2 + Q modulo M2", {{"parts", "matrix:2,scalars"}, {"ideal", "part:0"}}, 3, pass),
        make_case("4.3", "upper triangular onto Q + Q", {{"algebra", "upper_triangular:2"}, {"ideal", "strict_upper"}}, 3, pass),
        make_case("4.3", "M2 + Q onto Q", {{"parts", "matrix:2,scalars"}, {"ideal", "part:0"}}, 3, nc),
        make_case("4.4", "Q + Q", {{"parts", "scalars,scalars"}}, 3, pass),
        make_case("4.4", "M2 + Q", {{"parts", "matrix:2,scalars"}}, 2, pass),
        make_case("4.7", "triangular Q, Q, Y = Q", {{"a1", "scalars"}, {"a2", "scalars"}, {"y", "regular"}}, 3, pass),
    };

    std::mt19937 rng(20240611);
    for (int k = 0; k < 3; ++k) {
        Algebra ut = upper_triangular(2);
        Algebra moved = change_basis(ut, random_basis_change(rng, ut.dim()));
        json basis = json::array();
        for (const auto& e : moved.idempotents()) basis.push_back(vector_to_json(e, moved.dim()));
        json data{{"algebra", algebra_to_json(moved)}, {"subalgebra", {{"basis", basis}}}};
        std::string tag = " (random basis " + std::to_string(k + 1) + ")";
        out.push_back(make_case("1.6", "upper triangular over its diagonal" + tag, data, 3, pass));
        out.push_back(make_case("4.1", "upper triangular over its diagonal" + tag, data, 3, pass));
    }
    for (int k = 0; k < 2; ++k) {
        Algebra d = dual_numbers();
        Algebra moved = change_basis(d, random_basis_change(rng, d.dim()));
        std::string tag = " (random basis " + std::to_string(k + 1) + ")";
        out.push_back(make_case("4.4", "dual numbers + Q" + tag, {{"parts", json::array({algebra_to_json(moved), "scalars"})}}, 3, pass));
        out.push_back(make_case("1.7", "dual numbers + Q" + tag, {{"parts", json::array({algebra_to_json(moved), "scalars"})}}, 2, pass));
    }
    {
        Algebra m2 = matrix_algebra(2);
        Algebra moved = change_basis(m2, random_basis_change(rng, m2.dim()));
        out.push_back(make_case("2.2", "M2 with I = M2 (random basis)", {{"algebra", algebra_to_json(moved)}, {"ideal", "algebra"}}, 2, pass));
    }
    return out;
}

std::vector<SuiteEntry> run_suite(const std::vector<TheoremCase>& cases, const Limits& limits) {
    std::vector<SuiteEntry> out;
    for (const auto& c : cases) {
        SuiteEntry e{c, verify(c, limits), false};
        e.matches = !c.expect || e.verdict.overall() == *c.expect;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace hcohom
