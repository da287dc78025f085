#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hcohom/io.hpp"

namespace hcohom {

enum class Status { Pass, Fail, NotCertified };

std::string status_name(Status s);
Status parse_status(const std::string& s);

struct Hypothesis {
    std::string name;
    bool certified = false;
    std::string detail;
};

struct DegreeCheck {
    std::size_t degree = 0;
    std::string check;  // "iso", "injective", "surjective", "vanishing", "equal", "premise"
    bool holds = false;
    Status status = Status::NotCertified;
};

struct Verdict {
    std::string theorem;
    std::string name;
    std::size_t max_degree = 0;
    std::vector<DegreeCheck> degrees;
    std::vector<Hypothesis> hypotheses;
    std::vector<std::size_t> lhs_dims;
    std::vector<std::size_t> rhs_dims;
    std::string lhs;
    std::string rhs;
    bool skipped_certification = false;
    std::vector<std::string> notes;

    /// FAIL if any degree fails, else NOT-CERTIFIED if any is, else PASS.
    Status overall() const;
    bool certified() const;
};

/// Instance keys: theorem, name, algebra | parts, a1, a2, y, subalgebra,
/// ideal, module, target, kappa, field, max_degree, skip_certification, expect.
struct TheoremCase {
    std::string theorem;
    std::string name;
    json data;
    std::size_t max_degree = kDefaultMaxDegree;
    bool skip_certification = false;
    std::optional<Status> expect;
};

TheoremCase case_from_json(const json& j);
json case_to_json(const TheoremCase& c);

std::vector<std::string> theorem_ids();

/// InputError for malformed instances or unknown ids.
Verdict verify(const TheoremCase& c, const Limits& limits);

json verdict_json(const Verdict& v);

/// One curated case per theorem id, the documented examples, and
/// deterministic randomized instances. Each carries its expected status.
std::vector<TheoremCase> builtin_cases();

struct SuiteEntry {
    TheoremCase c;
    Verdict verdict;
    bool matches = false;
};

std::vector<SuiteEntry> run_suite(const std::vector<TheoremCase>& cases, const Limits& limits);

}  // namespace hcohom
