#include "hcohom/hcohom.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "hcohom/errors.hpp"
#include "hcohom/theoremlab.hpp"

using namespace hcohom;

struct hc_algebra {
    Algebra algebra;
    std::optional<DirectSum> parts;
};

namespace {

thread_local std::string g_last_error;

hc_status fail(hc_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <class F>
hc_status guarded(F&& body) {
    try {
        g_last_error.clear();
        body();
        return HC_OK;
    } catch (const SizeBudgetError& e) {
        return fail(HC_ERR_BUDGET, e.what());
    } catch (const InputError& e) {
        return fail(HC_ERR_INPUT, e.what());
    } catch (const PreconditionError& e) {
        return fail(HC_ERR_PRECONDITION, e.what());
    } catch (const IdealError& e) {
        return fail(HC_ERR_INPUT, std::string("invalid ideal: ") + e.what());
    } catch (const ContainmentError& e) {
        return fail(HC_ERR_INPUT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(HC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(HC_ERR_INTERNAL, e.what());
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(const json& j, char** out) { *out = dup_string(j.dump(2)); }

Limits limits_of(const hc_options* opts) {
    Limits l;
    l.size_budget = opts && opts->size_budget ? opts->size_budget : default_size_budget();
    return l;
}

std::size_t degree_of(const hc_options* opts) { return opts ? opts->max_degree : kDefaultMaxDegree; }

Field field_of(const char* field) { return field && *field ? parse_field(field) : Field::Q; }

hc_algebra* make_handle(const std::string& spec, Field f) {
    auto h = std::make_unique<hc_algebra>();
    std::string t = spec;
    bool is_json = !t.empty() && (t.front() == '{' || t.front() == '[');
    if (!is_json && t.find(',') != std::string::npos) {
        auto parts = resolve_parts(t, f);
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (!parts[i].is_unital()) throw InputError("part " + std::to_string(i) + " of the direct sum is not unital");
        h->parts = direct_sum(parts);
        h->algebra = h->parts->algebra;
    } else {
        h->algebra = resolve_algebra(t, f);
    }
    return h.release();
}

json dims_json(const std::vector<CohomologyResult>& r) {
    json out = json::array();
    for (const auto& x : r) out.push_back(x.dim_cohomology);
    return out;
}

json cohomology_list(const std::vector<CohomologyResult>& r, bool relative) {
    json out = json::array();
    for (const auto& x : r) out.push_back(cohomology_json(x, relative));
    return out;
}

SubalgebraSpec subalgebra_of(const Algebra& a, const char* s) {
    return s && *s ? resolve_subalgebra(json(std::string(s)), a) : unit_subalgebra(a);
}

}  // namespace

extern "C" {

void hc_options_init(hc_options* opts) {
    if (!opts) return;
    opts->max_degree = kDefaultMaxDegree;
    opts->size_budget = 0;
    opts->skip_certification = 0;
}

const char* hc_last_error(void) { return g_last_error.c_str(); }

void hc_string_free(char* s) { std::free(s); }

hc_status hc_algebra_builtin(const char* name, const char* field, hc_algebra** out) {
    if (!name || !out) return fail(HC_ERR_NULL, "null argument");
    return guarded([&] {
        auto h = std::make_unique<hc_algebra>();
        h->algebra = builtin_algebra(name, field_of(field));
        *out = h.release();
    });
}

hc_status hc_algebra_from_json(const char* json_text, hc_algebra** out) {
    if (!json_text || !out) return fail(HC_ERR_NULL, "null argument");
    return guarded([&] {
        auto h = std::make_unique<hc_algebra>();
        h->algebra = algebra_from_json(parse_json_text(json_text, "<algebra>"));
        *out = h.release();
    });
}

hc_status hc_algebra_resolve(const char* spec, const char* field, hc_algebra** out) {
    if (!spec || !out) return fail(HC_ERR_NULL, "null argument");
    return guarded([&] { *out = make_handle(spec, field_of(field)); });
}

void hc_algebra_free(hc_algebra* a) { delete a; }

size_t hc_algebra_dim(const hc_algebra* a) { return a ? a->algebra.dim() : 0; }

int hc_algebra_is_unital(const hc_algebra* a) { return a && a->algebra.is_unital() ? 1 : 0; }

hc_status hc_algebra_to_json(const hc_algebra* a, char** out) {
    if (!a || !out) return fail(HC_ERR_NULL, "null argument");
    return guarded([&] { emit(algebra_to_json(a->algebra), out); });
}

hc_status hc_algebra_validate(const hc_algebra* a, char** out) {
    if (!a || !out) return fail(HC_ERR_NULL, "null argument");
    return guarded([&] {
        ValidationReport r = validate(a->algebra);
        json j{{"dim", a->algebra.dim()},
               {"field", field_name(a->algebra.field())},
               {"associative", r.associative},
               {"unital", a->algebra.is_unital()},
               {"unit_ok", r.unit_ok},
               {"field_ok", r.field_ok},
               {"message", r.message}};
        if (r.violation) j["violation"] = *r.violation;
        if (a->parts) j["parts"] = a->parts->parts.size();
        emit(j, out);
    });
}

hc_status hc_hochschild(const hc_algebra* a, const char* module, const char* subalgebra, const hc_options* opts,
                        char** out) {
    if (!a || !out) return fail(HC_ERR_NULL, "null argument");
    return guarded([&] {
        const Algebra& alg = a->algebra;
        Bimodule m = resolve_module(json(std::string(module && *module ? module : "dual")), alg);
        std::optional<SubalgebraSpec> s;
        if (subalgebra && *subalgebra) s = resolve_subalgebra(json(std::string(subalgebra)), alg);
        auto r = hochschild_cohomology(alg, m, degree_of(opts), limits_of(opts), s ? &*s : nullptr);
        emit(json{{"algebra_dim", alg.dim()},
                  {"module_dim", m.dim()},
                  {"relative", s.has_value()},
                  {"max_degree", degree_of(opts)},
                  {"H", dims_json(r)},
                  {"cohomology", cohomology_list(r, s.has_value())}},
             out);
    });
}

hc_status hc_cyclic(const hc_algebra* a, const char* subalgebra, const hc_options* opts, char** out) {
    if (!a || !out) return fail(HC_ERR_NULL, "null argument");
    return guarded([&] {
        SubalgebraSpec s = subalgebra_of(a->algebra, subalgebra);
        auto hc = cyclic_cohomology(a->algebra, s, degree_of(opts), limits_of(opts));
        auto hr = hr_cohomology(a->algebra, s, degree_of(opts), limits_of(opts));
        emit(json{{"algebra_dim", a->algebra.dim()},
                  {"max_degree", degree_of(opts)},
                  {"HC", dims_json(hc)},
                  {"HR", dims_json(hr)},
                  {"cohomology", cohomology_list(hc, true)}},
             out);
    });
}

hc_status hc_sbi(const hc_algebra* a, const char* subalgebra, const hc_options* opts, char** out) {
    if (!a || !out) return fail(HC_ERR_NULL, "null argument");
    return guarded([&] {
        SubalgebraSpec s = subalgebra_of(a->algebra, subalgebra);
        CyclicData data = cyclic_data(a->algebra, s, degree_of(opts), limits_of(opts));
        auto reports = sbi_exactness(data);
        json degrees = json::array();
        bool exact = true;
        for (std::size_t n = 0; n < reports.size(); ++n) {
            json r = exactness_json(reports[n]);
            r["degree"] = n;
            exact = exact && reports[n].exact();
            degrees.push_back(std::move(r));
        }
        emit(json{{"max_degree", degree_of(opts)}, {"exact", exact}, {"degrees", std::move(degrees)}}, out);
    });
}

hc_status hc_connes_tsygan(const hc_algebra* a, const char* subalgebra, const hc_options* opts, char** out) {
    if (!a || !out) return fail(HC_ERR_NULL, "null argument");
    return guarded([&] {
        SubalgebraSpec s = subalgebra_of(a->algebra, subalgebra);
        emit(ct_report_json(connes_tsygan(a->algebra, s, degree_of(opts), limits_of(opts))), out);
    });
}

hc_status hc_verify(const char* case_json, const hc_options* opts, char** out) {
    if (!case_json || !out) return fail(HC_ERR_NULL, "null argument");
    return guarded([&] {
        json j = parse_json_text(case_json, "<case>");
        if (opts && !j.contains("max_degree")) j["max_degree"] = opts->max_degree;
        if (opts && opts->skip_certification) j["skip_certification"] = true;
        emit(verdict_json(verify(case_from_json(j), limits_of(opts))), out);
    });
}

hc_status hc_suite(const char* cases_json, const hc_options* opts, char** out) {
    if (!out) return fail(HC_ERR_NULL, "null argument");
    return guarded([&] {
        std::vector<TheoremCase> cases;
        if (cases_json) {
            json arr = parse_json_text(cases_json, "<cases>");
            if (!arr.is_array()) throw InputError("cases must be a JSON array");
            for (const auto& c : arr) cases.push_back(case_from_json(c));
        } else {
            cases = builtin_cases();
        }
        if (opts && opts->skip_certification)
            for (auto& c : cases) c.skip_certification = true;
        auto entries = run_suite(cases, limits_of(opts));
        json list = json::array();
        std::size_t mismatches = 0, failures = 0;
        for (const auto& e : entries) {
            json v = verdict_json(e.verdict);
            v["expect"] = e.c.expect ? json(status_name(*e.c.expect)) : json(nullptr);
            v["matches"] = e.matches;
            mismatches += e.matches ? 0 : 1;
            failures += e.verdict.overall() == Status::Fail ? 1 : 0;
            list.push_back(std::move(v));
        }
        emit(json{{"cases", entries.size()}, {"mismatches", mismatches}, {"failures", failures}, {"verdicts", std::move(list)}},
             out);
    });
}

hc_status hc_builtin_cases(char** out) {
    if (!out) return fail(HC_ERR_NULL, "null argument");
    return guarded([&] {
        json arr = json::array();
        for (const auto& c : builtin_cases()) arr.push_back(case_to_json(c));
        emit(arr, out);
    });
}

hc_status hc_builtin_algebra_names(char** out) {
    if (!out) return fail(HC_ERR_NULL, "null argument");
    return guarded([&] { emit(json(builtin_algebra_names()), out); });
}

}  // extern "C"
