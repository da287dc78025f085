#include "hcohom/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hcohom/errors.hpp"

namespace hcohom {
namespace {

std::string location_of(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& member(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing key \"" + key + "\"");
    return j.at(key);
}

std::size_t size_from_json(const json& j, const std::string& where) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(where + ": expected a non-negative integer");
    return j.get<std::size_t>();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<SparseVec> vectors_from_json(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array()) throw InputError(where + ": expected an array of vectors");
    std::vector<SparseVec> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(vector_from_json(j[i], dim, where + "[" + std::to_string(i) + "]"));
    return out;
}

std::vector<SparseVec> labelled_vectors(const Algebra& a, const std::string& labels, std::size_t dim) {
    std::vector<SparseVec> out;
    for (const auto& name : split(labels, ',')) {
        if (name == "e+" && dim == a.dim() + 1) {
            out.push_back(unit_vector(static_cast<Index>(a.dim())));
            continue;
        }
        std::size_t k = 0;
        while (k < a.dim() && a.label(k) != name) ++k;
        if (k == a.dim()) throw InputError("unknown basis label '" + name + "'");
        out.push_back(unit_vector(static_cast<Index>(k)));
    }
    return out;
}

json spec_from_string(const std::string& s) {
    if (!s.empty() && (s.front() == '{' || s.front() == '[')) return parse_json_text(s, "inline JSON");
    if (std::filesystem::is_regular_file(s)) return read_json_file(s);
    return json(s);
}

}  // namespace

json parse_json_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + source + " at " + location_of(text, e.byte) + ": " + e.what());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

Scalar scalar_from_json(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Scalar(j.get<long long>());
        if (j.is_string()) return Scalar(Rational::parse(j.get<std::string>()));
        if (j.is_object()) {
            Rational re = j.contains("re") ? scalar_from_json(j.at("re"), where + ".re").re() : Rational();
            Rational im = j.contains("im") ? scalar_from_json(j.at("im"), where + ".im").re() : Rational();
            return Scalar(re, im);
        }
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
    throw InputError(where + ": expected a scalar (\"p/q\", integer, or {\"re\", \"im\"})");
}

json scalar_to_json(const Scalar& s) {
    if (s.is_real()) return s.re().to_string();
    return json{{"re", s.re().to_string()}, {"im", s.im().to_string()}};
}

SparseVec vector_from_json(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim)
        throw InputError(where + ": expected a vector of length " + std::to_string(dim));
    std::vector<Scalar> dense;
    for (std::size_t i = 0; i < dim; ++i) dense.push_back(scalar_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return sparse_from_dense(dense);
}

json vector_to_json(const SparseVec& v, std::size_t dim) {
    json out = json::array();
    for (const auto& x : dense_from_sparse(v, dim)) out.push_back(scalar_to_json(x));
    return out;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array() || j.size() != rows)
        throw InputError(where + ": expected a " + std::to_string(rows) + " x " + std::to_string(cols) + " matrix");
    std::vector<SparseVec> r;
    for (std::size_t i = 0; i < rows; ++i) r.push_back(vector_from_json(j[i], cols, where + "[" + std::to_string(i) + "]"));
    return Matrix::from_rows(r, cols);
}

json matrix_to_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_to_json(m.row(i), m.cols()));
    return out;
}

Algebra algebra_from_json(const json& j) {
    const std::string where = "algebra";
    Field field = Field::Q;
    if (j.contains("field")) {
        if (!j.at("field").is_string()) throw InputError(where + ".field: expected \"Q\" or \"Qi\"");
        field = parse_field(j.at("field").get<std::string>());
    }
    std::size_t d = size_from_json(member(j, "dim", where), where + ".dim");
    const json& sc = member(j, "structure_constants", where);
    std::string at = where + ".structure_constants";
    if (!sc.is_array() || sc.size() != d) throw InputError(at + ": expected " + std::to_string(d) + " entries");
    std::vector<std::vector<std::vector<Scalar>>> c(d, std::vector<std::vector<Scalar>>(d));
    for (std::size_t i = 0; i < d; ++i) {
        std::string ai = at + "[" + std::to_string(i) + "]";
        if (!sc[i].is_array() || sc[i].size() != d) throw InputError(ai + ": expected " + std::to_string(d) + " entries");
        for (std::size_t k = 0; k < d; ++k) {
            std::string ak = ai + "[" + std::to_string(k) + "]";
            if (!sc[i][k].is_array() || sc[i][k].size() != d) throw InputError(ak + ": expected " + std::to_string(d) + " entries");
            for (std::size_t l = 0; l < d; ++l) c[i][k].push_back(scalar_from_json(sc[i][k][l], ak + "[" + std::to_string(l) + "]"));
        }
    }
    std::optional<SparseVec> unit;
    if (j.contains("unit") && !j.at("unit").is_null()) unit = vector_from_json(j.at("unit"), d, where + ".unit");
    Algebra a = algebra_from_table(field, c, unit);
    if (j.contains("labels")) {
        const json& l = j.at("labels");
        if (!l.is_array() || l.size() != d) throw InputError(where + ".labels: expected " + std::to_string(d) + " strings");
        std::vector<std::string> labels;
        for (const auto& s : l) {
            if (!s.is_string()) throw InputError(where + ".labels: expected strings");
            labels.push_back(s.get<std::string>());
        }
        a.set_labels(std::move(labels));
    }
    require_valid(a);
    if (!a.unit()) a.set_unit(find_unit(a));
    return a;
}

json algebra_to_json(const Algebra& a) {
    std::size_t d = a.dim();
    json sc = json::array();
    for (std::size_t i = 0; i < d; ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < d; ++k) row.push_back(vector_to_json(a.product(i, k), d));
        sc.push_back(std::move(row));
    }
    json out{{"field", field_name(a.field())}, {"dim", d}, {"structure_constants", std::move(sc)}};
    out["unit"] = a.unit() ? vector_to_json(*a.unit(), d) : json(nullptr);
    json labels = json::array();
    for (std::size_t i = 0; i < d; ++i) labels.push_back(a.label(i));
    out["labels"] = std::move(labels);
    return out;
}

Algebra resolve_algebra(const std::string& spec, Field field) {
    if (spec.empty()) throw InputError("empty algebra description");
    json j = spec_from_string(spec);
    if (j.is_object()) return algebra_from_json(j);
    if (j.is_string()) return builtin_algebra(j.get<std::string>(), field);
    throw InputError("algebra description must be a builtin name, JSON object, or file");
}

std::vector<Algebra> resolve_parts(const std::string& spec, Field field) {
    // matrix:2,scalars: commas separate parts; a part's own ':' argument never contains commas
    std::vector<Algebra> out;
    for (const auto& p : split(spec, ',')) out.push_back(resolve_algebra(p, field));
    if (out.empty()) throw InputError("no parts given");
    return out;
}

Bimodule bimodule_from_json(const json& j, const Algebra& a) { return bimodule_from_json(j, a, a); }

Bimodule bimodule_from_json(const json& j, const Algebra& left_alg, const Algebra& right_alg) {
    const std::string where = "module";
    std::size_t m = size_from_json(member(j, "dim", where), where + ".dim");
    std::vector<Matrix> left, right;
    for (const char* side : {"left", "right"}) {
        bool is_left = std::string(side) == "left";
        std::size_t count = is_left ? left_alg.dim() : right_alg.dim();
        const json& arr = member(j, side, where);
        std::string at = where + "." + side;
        if (!arr.is_array() || arr.size() != count) throw InputError(at + ": expected " + std::to_string(count) + " matrices");
        auto& out = is_left ? left : right;
        for (std::size_t i = 0; i < count; ++i) out.push_back(matrix_from_json(arr[i], m, m, at + "[" + std::to_string(i) + "]"));
    }
    Bimodule b(m, std::move(left), std::move(right));
    if (auto v = bimodule_violation(left_alg, right_alg, b)) throw InputError("invalid bimodule: " + *v);
    return b;
}

json bimodule_to_json(const Bimodule& m) {
    json left = json::array(), right = json::array();
    for (const auto& x : m.left()) left.push_back(matrix_to_json(x));
    for (const auto& x : m.right()) right.push_back(matrix_to_json(x));
    return json{{"dim", m.dim()}, {"left", std::move(left)}, {"right", std::move(right)}};
}

Bimodule resolve_module(const json& spec, const Algebra& a) {
    json j = spec.is_string() ? spec_from_string(spec.get<std::string>()) : spec;
    if (j.is_object()) return bimodule_from_json(j, a);
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "dual") return dual_bimodule(a);
        if (s == "regular") return regular_bimodule(a);
        throw InputError("unknown module '" + s + "' (expected dual, regular, JSON, or a file)");
    }
    throw InputError("module description must be a keyword, JSON object, or file");
}

SubalgebraSpec resolve_subalgebra(const json& spec, const Algebra& a) {
    json j = spec.is_string() ? spec_from_string(spec.get<std::string>()) : spec;
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "unit") return unit_subalgebra(a);
        if (s == "algebra" || s == "whole") return whole_subalgebra(a);
        if (s == "idempotents" || s == "diagonal") {
            if (a.idempotents().empty()) throw InputError("algebra carries no idempotent family");
            return idempotent_subalgebra(a);
        }
        if (s.rfind("span:", 0) == 0) {
            auto v = labelled_vectors(a, s.substr(5), a.dim() + 1);
            bool unitized = false;
            for (auto& x : v) unitized = unitized || (!x.empty() && x.back().index == a.dim());
            return make_subalgebra(a, v, unitized);
        }
        throw InputError("unknown subalgebra '" + s + "'");
    }
    if (j.is_object()) {
        bool unitized = j.value("in_unitization", false);
        std::size_t dim = unitized ? a.dim() + 1 : a.dim();
        return make_subalgebra(a, vectors_from_json(member(j, "basis", "subalgebra"), dim, "subalgebra.basis"), unitized);
    }
    throw InputError("subalgebra description must be a keyword, JSON object, or file");
}

IdealSpec resolve_ideal(const json& spec, const Algebra& a, const DirectSum* ds) {
    json j = spec.is_string() ? spec_from_string(spec.get<std::string>()) : spec;
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "algebra" || s == "whole") return make_ideal(a, Subspace::full(a.dim()).basis());
        if (s == "strict_upper") {
            Subspace diag = Subspace::span(a.dim(), a.idempotents());
            std::vector<SparseVec> v;
            for (std::size_t i = 0; i < a.dim(); ++i)
                if (!diag.contains(unit_vector(static_cast<Index>(i)))) v.push_back(unit_vector(static_cast<Index>(i)));
            return make_ideal(a, v);
        }
        if (s.rfind("part:", 0) == 0) {
            if (!ds) throw InputError("ideal 'part:i' needs an algebra given by parts");
            std::size_t i = 0;
            try {
                i = std::stoul(s.substr(5));
            } catch (const std::exception&) {
                throw InputError("bad part index in '" + s + "'");
            }
            if (i >= ds->parts.size()) throw InputError("part index out of range in '" + s + "'");
            return make_ideal(a, ds->embedding(i).columns());
        }
        if (s.rfind("span:", 0) == 0) return make_ideal(a, labelled_vectors(a, s.substr(5), a.dim()));
        throw InputError("unknown ideal '" + s + "'");
    }
    if (j.is_object()) return make_ideal(a, vectors_from_json(member(j, "basis", "ideal"), a.dim(), "ideal.basis"));
    throw InputError("ideal description must be a keyword, JSON object, or file");
}

json cohomology_json(const CohomologyResult& r, bool relative) {
    return json{{"degree", r.degree},
                {"dimZ", r.dim_cocycles},
                {"dimN", r.dim_coboundaries},
                {"dimH", r.dim_cohomology},
                {"relative", relative},
                {"iso_flags", json::object()}};
}

json comparison_flags_json(const ComparisonResult& r, std::size_t n) {
    return json{{"iso", static_cast<bool>(r.iso.at(n))},
                {"injective", static_cast<bool>(r.injective.at(n))},
                {"surjective", static_cast<bool>(r.surjective.at(n))}};
}

json exactness_json(const ExactnessReport& r) {
    json nodes = json::array();
    for (std::size_t k = 0; k < r.nodes.size(); ++k) {
        json node{{"node", r.nodes[k].name}, {"dim", r.nodes[k].dim}};
        node["defect"] = r.defects[k] ? json(*r.defects[k]) : json(nullptr);
        nodes.push_back(std::move(node));
    }
    return json{{"exact", r.exact()}, {"checked_nodes", r.checked_nodes()}, {"nodes", std::move(nodes)}};
}

json ct_report_json(const CTReport& r) {
    json defects = json::array();
    for (const auto& d : r.exactness.defects) defects.push_back(d ? json(*d) : json(nullptr));
    auto mats = [](const std::vector<Matrix>& v) {
        json out = json::array();
        for (const auto& m : v) out.push_back(matrix_to_json(m));
        return out;
    };
    json nodes = json::array();
    for (const auto& n : r.exactness.nodes) nodes.push_back(json{{"node", n.name}, {"dim", n.dim}});
    return json{{"max_degree", r.max_n},
                {"HC", r.hc_dims()},
                {"H", r.h_dims()},
                {"exact", r.exactness.exact()},
                {"eta_invertible", r.eta_invertible},
                {"nodes", std::move(nodes)},
                {"exactness_defects", std::move(defects)},
                {"maps", json{{"I", mats(r.maps_i)}, {"B", mats(r.maps_b)}, {"S", mats(r.maps_s)}}}};
}

}  // namespace hcohom
