#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcohom/hcohom.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct Config {
    std::string algebra;
    std::string parts;
    std::string module;
    std::string subalgebra;
    std::string ideal;
    std::string field = "Q";
    std::string a1, a2, y, target, kappa;
    std::string case_path;
    std::string theorem;
    std::size_t max_degree = 3;
    std::size_t size_budget = 0;
    std::string format = "text";
    bool skip_certification = false;
};

struct Failure {
    int code;
    std::string message;
};

int exit_code(hc_status s) {
    switch (s) {
        case HC_OK: return 0;
        case HC_ERR_INPUT:
        case HC_ERR_PRECONDITION:
        case HC_ERR_NULL: return kExitInput;
        case HC_ERR_BUDGET: return kExitBudget;
        default: return kExitInternal;
    }
}

void check(hc_status s) {
    if (s != HC_OK) throw Failure{exit_code(s), hc_last_error()};
}

json take(char* raw) {
    json j = json::parse(raw);
    hc_string_free(raw);
    return j;
}

class Handle {
public:
    explicit Handle(const Config& c) {
        if (!c.algebra.empty() && !c.parts.empty()) throw Failure{kExitInput, "give either --algebra or --parts, not both"};
        const std::string& spec = c.parts.empty() ? c.algebra : c.parts;
        if (spec.empty()) throw Failure{kExitInput, "--algebra or --parts is required"};
        check(hc_algebra_resolve(spec.c_str(), c.field.c_str(), &a_));
    }
    ~Handle() { hc_algebra_free(a_); }
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    const hc_algebra* get() const { return a_; }

private:
    hc_algebra* a_ = nullptr;
};

hc_options options(const Config& c) {
    hc_options o;
    hc_options_init(&o);
    o.max_degree = c.max_degree;
    o.size_budget = c.size_budget;
    o.skip_certification = c.skip_certification ? 1 : 0;
    return o;
}

const char* opt(const std::string& s) { return s.empty() ? nullptr : s.c_str(); }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Failure{kExitInput, "cannot read '" + path + "'"};
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw Failure{kExitInput, source + ": " + e.what()};
    }
}

std::string list(const json& arr) {
    std::string out = "[";
    for (std::size_t i = 0; i < arr.size(); ++i) out += (i ? ", " : "") + arr[i].dump();
    return out + "]";
}

void print_cohomology_table(const json& rows, const char* label) {
    std::printf("%-4s %8s %8s %8s\n", "n", "dimZ", "dimN", label);
    for (const auto& r : rows)
        std::printf("%-4zu %8zu %8zu %8zu\n", r["degree"].get<std::size_t>(), r["dimZ"].get<std::size_t>(),
                    r["dimN"].get<std::size_t>(), r["dimH"].get<std::size_t>());
}

void print_exactness(const json& r) {
    for (const auto& n : r["nodes"]) {
        std::string d = n["defect"].is_null() ? "-" : n["defect"].dump();
        std::printf("  %-12s dim %-6zu defect %s\n", n["node"].get<std::string>().c_str(), n["dim"].get<std::size_t>(),
                    d.c_str());
    }
}

int emit(const Config& c, const json& j, void (*text)(const json&)) {
    if (c.format == "json") std::cout << j.dump(2) << "\n";
    else text(j);
    return 0;
}

int cmd_validate(const Config& c) {
    Handle h(c);
    char* raw = nullptr;
    check(hc_algebra_validate(h.get(), &raw));
    return emit(c, take(raw), [](const json& j) {
        std::printf("dim %zu over %s\n", j["dim"].get<std::size_t>(), j["field"].get<std::string>().c_str());
        std::printf("associative: %s\n", j["associative"].get<bool>() ? "yes" : "no");
        std::printf("unital: %s\n", j["unital"].get<bool>() ? "yes" : "no");
    });
}

int cmd_hochschild(const Config& c, bool relative) {
    Handle h(c);
    hc_options o = options(c);
    std::string sub = relative && c.subalgebra.empty() ? "idempotents" : c.subalgebra;
    char* raw = nullptr;
    check(hc_hochschild(h.get(), opt(c.module), opt(sub), &o, &raw));
    return emit(c, take(raw), [](const json& j) {
        print_cohomology_table(j["cohomology"], "dimH");
        std::printf("%s = %s\n", j["relative"].get<bool>() ? "H_B" : "H", list(j["H"]).c_str());
    });
}

int cmd_cyclic(const Config& c) {
    Handle h(c);
    hc_options o = options(c);
    char* raw = nullptr;
    check(hc_cyclic(h.get(), opt(c.subalgebra), &o, &raw));
    return emit(c, take(raw), [](const json& j) {
        print_cohomology_table(j["cohomology"], "dimHC");
        std::printf("HC = %s\n", list(j["HC"]).c_str());
        std::printf("HR = %s\n", list(j["HR"]).c_str());
    });
}

int cmd_sbi(const Config& c) {
    Handle h(c);
    hc_options o = options(c);
    char* raw = nullptr;
    check(hc_sbi(h.get(), opt(c.subalgebra), &o, &raw));
    json j = take(raw);
    emit(c, j, [](const json& j) {
        for (const auto& d : j["degrees"]) {
            std::printf("degree %zu: %s\n", d["degree"].get<std::size_t>(), d["exact"].get<bool>() ? "exact" : "NOT exact");
            print_exactness(d);
        }
    });
    return j["exact"].get<bool>() ? 0 : kExitFail;
}

int cmd_connes_tsygan(const Config& c) {
    Handle h(c);
    hc_options o = options(c);
    char* raw = nullptr;
    check(hc_connes_tsygan(h.get(), opt(c.subalgebra), &o, &raw));
    json j = take(raw);
    emit(c, j, [](const json& j) {
        std::printf("H  = %s\n", list(j["H"]).c_str());
        std::printf("HC = %s\n", list(j["HC"]).c_str());
        std::printf("exactness defects = %s\n", list(j["exactness_defects"]).c_str());
        std::printf("eta invertible: %s\n", j["eta_invertible"].get<bool>() ? "yes" : "no");
        std::printf("sequence exact: %s\n", j["exact"].get<bool>() ? "yes" : "no");
    });
    return j["exact"].get<bool>() ? 0 : kExitFail;
}

void print_verdict(const json& v) {
    std::printf("theorem %s: %s\n", v["theorem"].get<std::string>().c_str(), v["name"].get<std::string>().c_str());
    std::printf("  %s vs %s, degrees 0..%zu\n", v["lhs"].get<std::string>().c_str(), v["rhs"].get<std::string>().c_str(),
                v["max_degree"].get<std::size_t>());
    for (const auto& [name, h] : v["hypotheses"].items())
        std::printf("  hypothesis %-40s %s (%s)\n", name.c_str(), h["certified"].get<bool>() ? "certified" : "NOT certified",
                    h["detail"].get<std::string>().c_str());
    const auto& lhs = v["lhs_dims"];
    const auto& rhs = v["rhs_dims"];
    for (std::size_t k = 0; k < v["degrees"].size(); ++k) {
        std::size_t n = v["degrees"][k].get<std::size_t>();
        std::string l = n < lhs.size() ? lhs[n].dump() : "-";
        std::string r = n < rhs.size() ? rhs[n].dump() : "-";
        std::printf("  n=%zu %-18s lhs %-4s rhs %-4s %s\n", n, v["checks"][k].get<std::string>().c_str(), l.c_str(), r.c_str(),
                    v["status"][k].get<std::string>().c_str());
    }
    for (const auto& note : v["notes"]) std::printf("  note: %s\n", note.get<std::string>().c_str());
    std::printf("  overall: %s\n", v["overall"].get<std::string>().c_str());
}

json case_from_flags(const Config& c) {
    json j = c.case_path.empty() ? json::object() : parse_text(read_file(c.case_path), c.case_path);
    if (!j.is_object()) throw Failure{kExitInput, c.case_path + ": a case must be a JSON object"};
    if (!c.theorem.empty()) j["theorem"] = c.theorem;
    if (!j.contains("name")) j["name"] = "command line";
    auto set = [&](const char* key, const std::string& v) {
        if (!v.empty()) j[key] = v;
    };
    set("algebra", c.algebra);
    set("parts", c.parts);
    set("module", c.module);
    set("subalgebra", c.subalgebra);
    set("ideal", c.ideal);
    set("a1", c.a1);
    set("a2", c.a2);
    set("y", c.y);
    set("target", c.target);
    if (!c.kappa.empty()) j["kappa"] = parse_text(c.kappa, "--kappa");
    if (c.field != "Q") j["field"] = c.field;
    return j;
}

int status_exit(const std::string& overall) { return overall == "FAIL" ? kExitFail : 0; }

int cmd_verify(const Config& c, bool max_degree_given) {
    json j = case_from_flags(c);
    if (max_degree_given) j["max_degree"] = c.max_degree;
    hc_options o = options(c);
    char* raw = nullptr;
    check(hc_verify(j.dump().c_str(), &o, &raw));
    json v = take(raw);
    emit(c, v, print_verdict);
    return status_exit(v["overall"].get<std::string>());
}

int cmd_suite(const Config& c) {
    hc_options o = options(c);
    std::string text;
    if (!c.case_path.empty()) {
        json cases = parse_text(read_file(c.case_path), c.case_path);
        if (!cases.is_array()) throw Failure{kExitInput, c.case_path + ": expected an array of cases"};
        text = cases.dump();
    }
    char* raw = nullptr;
    check(hc_suite(text.empty() ? nullptr : text.c_str(), &o, &raw));
    json s = take(raw);
    emit(c, s, [](const json& s) {
        for (const auto& v : s["verdicts"]) {
            std::string expect = v["expect"].is_null() ? "-" : v["expect"].get<std::string>();
            std::printf("%-5s %-55s %-14s expected %-14s %s\n", v["theorem"].get<std::string>().c_str(),
                        v["name"].get<std::string>().c_str(), v["overall"].get<std::string>().c_str(), expect.c_str(),
                        v["matches"].get<bool>() ? "ok" : "MISMATCH");
        }
        std::printf("%zu cases, %zu mismatches, %zu failures\n", s["cases"].get<std::size_t>(),
                    s["mismatches"].get<std::size_t>(), s["failures"].get<std::size_t>());
    });
    return s["mismatches"].get<std::size_t>() == 0 && s["failures"].get<std::size_t>() == 0 ? 0 : kExitFail;
}

void add_algebra_flags(CLI::App* app, Config& c) {
    app->add_option("--algebra", c.algebra, "builtin name, inline JSON, or JSON file");
    app->add_option("--parts", c.parts, "comma-separated direct summands, e.g. matrix:2,scalars");
}

void add_common_flags(CLI::App* app, Config& c) {
    app->add_option("--field", c.field, "Q or QI")->capture_default_str();
    app->add_option("--size-budget", c.size_budget, "maximum cochain coordinates (default from HCOHOM_SIZE_BUDGET or 200000)")
        ->check(CLI::PositiveNumber);
    app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hochschild and cyclic cohomology of finite-dimensional algebras"};
    app.require_subcommand(1);
    Config c;

    auto* validate = app.add_subcommand("validate", "check associativity and unit of an algebra");
    auto* hochschild = app.add_subcommand("hochschild", "Hochschild cohomology H^n(A, M)");
    auto* relative = app.add_subcommand("relative", "relative Hochschild cohomology H_B^n(A, M)");
    auto* cyclic = app.add_subcommand("cyclic", "relative cyclic cohomology HC_S^n(A)");
    auto* ct = app.add_subcommand("connes-tsygan", "assemble the Connes-Tsygan long exact sequence");
    auto* sbi = app.add_subcommand("sbi", "degreewise exactness of the SBI sequence of complexes");
    auto* verify = app.add_subcommand("verify", "verify a theorem on a finite-dimensional instance");
    auto* suite = app.add_subcommand("suite", "run the builtin regression cases or a case list");

    CLI::Option* max_degree_opt = nullptr;
    for (auto* sub : {validate, hochschild, relative, cyclic, ct, sbi, verify, suite}) {
        add_common_flags(sub, c);
        if (sub != suite) add_algebra_flags(sub, c);
        if (sub != validate) {
            auto* o = sub->add_option("--max-degree", c.max_degree, "top degree n")->capture_default_str();
            if (sub == verify) max_degree_opt = o;
        }
        if (sub == verify || sub == suite) sub->add_flag("--skip-certification", c.skip_certification, "assert without certificates");
    }
    for (auto* sub : {hochschild, relative, verify}) sub->add_option("--module", c.module, "dual, regular, inline JSON, or file");
    for (auto* sub : {hochschild, relative, cyclic, ct, sbi, verify})
        sub->add_option("--subalgebra", c.subalgebra, "unit, algebra, idempotents, span:<labels>, JSON, or file");
    verify->add_option("--ideal", c.ideal, "algebra, strict_upper, part:<i>, span:<labels>, JSON, or file");
    verify->add_option("id", c.theorem, "theorem id")->required();
    verify->add_option("--a1", c.a1, "first corner of the triangular algebra");
    verify->add_option("--a2", c.a2, "second corner of the triangular algebra");
    verify->add_option("--y", c.y, "corner bimodule: regular, JSON, or file");
    verify->add_option("--target", c.target, "target algebra of kappa");
    verify->add_option("--kappa", c.kappa, "homomorphism matrix as JSON rows");
    verify->add_option("--case", c.case_path, "JSON case file; flags override its fields");
    suite->add_option("--case", c.case_path, "JSON file with an array of cases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*validate) return cmd_validate(c);
        if (*hochschild) return cmd_hochschild(c, false);
        if (*relative) return cmd_hochschild(c, true);
        if (*cyclic) return cmd_cyclic(c);
        if (*ct) return cmd_connes_tsygan(c);
        if (*sbi) return cmd_sbi(c);
        if (*verify) return cmd_verify(c, max_degree_opt->count() > 0);
        if (*suite) return cmd_suite(c);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    }
    return kExitInput;
}
