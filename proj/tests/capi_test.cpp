#include <gtest/gtest.h>

#include <string>

#include <json.hpp>

#include "hcohom/hcohom.h"

using json = nlohmann::ordered_json;

namespace {

json take(char* raw) {
    json j = json::parse(raw);
    hc_string_free(raw);
    return j;
}

struct AlgebraHandle {
    hc_algebra* a = nullptr;
    ~AlgebraHandle() { hc_algebra_free(a); }
};

hc_options opts(std::size_t max_degree) {
    hc_options o;
    hc_options_init(&o);
    o.max_degree = max_degree;
    return o;
}

}  // namespace

TEST(CApi, BuiltinHandleReportsDimension) {
    AlgebraHandle h;
    ASSERT_EQ(hc_algebra_builtin("matrix:2", "Q", &h.a), HC_OK);
    EXPECT_EQ(hc_algebra_dim(h.a), 4u);
    EXPECT_EQ(hc_algebra_is_unital(h.a), 1);
    EXPECT_STREQ(hc_last_error(), "");
}

TEST(CApi, HochschildOfMatrixAlgebra) {
    AlgebraHandle h;
    ASSERT_EQ(hc_algebra_resolve("matrix:2", nullptr, &h.a), HC_OK);
    hc_options o = opts(2);
    char* out = nullptr;
    ASSERT_EQ(hc_hochschild(h.a, "dual", nullptr, &o, &out), HC_OK);
    EXPECT_EQ(take(out)["H"], json::array({1, 0, 0}));
}

TEST(CApi, RelativeHochschildOverIdempotents) {
    AlgebraHandle h;
    ASSERT_EQ(hc_algebra_resolve("matrix:2,scalars", nullptr, &h.a), HC_OK);
    hc_options o = opts(2);
    char* out = nullptr;
    ASSERT_EQ(hc_hochschild(h.a, nullptr, "idempotents", &o, &out), HC_OK);
    json j = take(out);
    EXPECT_TRUE(j["relative"].get<bool>());
    EXPECT_EQ(j["H"], json::array({2, 0, 0}));
}

TEST(CApi, CyclicAndConnesTsygan) {
    AlgebraHandle h;
    ASSERT_EQ(hc_algebra_resolve("dual_numbers", nullptr, &h.a), HC_OK);
    hc_options o = opts(3);
    char* out = nullptr;
    ASSERT_EQ(hc_cyclic(h.a, nullptr, &o, &out), HC_OK);
    EXPECT_EQ(take(out)["HC"], json::array({2, 0, 2, 0}));
    ASSERT_EQ(hc_connes_tsygan(h.a, nullptr, &o, &out), HC_OK);
    json ct = take(out);
    EXPECT_TRUE(ct["exact"].get<bool>());
    EXPECT_EQ(ct["H"], json::array({2, 1, 1, 1}));
    ASSERT_EQ(hc_sbi(h.a, nullptr, &o, &out), HC_OK);
    EXPECT_TRUE(take(out)["exact"].get<bool>());
}

TEST(CApi, AlgebraJsonRoundTrip) {
    AlgebraHandle a, b;
    ASSERT_EQ(hc_algebra_builtin("upper_triangular:2", nullptr, &a.a), HC_OK);
    char* text = nullptr;
    ASSERT_EQ(hc_algebra_to_json(a.a, &text), HC_OK);
    std::string s = text;
    hc_string_free(text);
    ASSERT_EQ(hc_algebra_from_json(s.c_str(), &b.a), HC_OK);
    EXPECT_EQ(hc_algebra_dim(b.a), 3u);
    char* again = nullptr;
    ASSERT_EQ(hc_algebra_to_json(b.a, &again), HC_OK);
    EXPECT_EQ(s, again);
    hc_string_free(again);
}

TEST(CApi, MalformedJsonIsInputError) {
    hc_algebra* a = nullptr;
    EXPECT_EQ(hc_algebra_from_json("{\"dim\": 2,", &a), HC_ERR_INPUT);
    EXPECT_EQ(a, nullptr);
    EXPECT_NE(std::string(hc_last_error()).find("line"), std::string::npos);
}

TEST(CApi, NullArgumentsAreRejected) {
    EXPECT_EQ(hc_algebra_builtin(nullptr, nullptr, nullptr), HC_ERR_NULL);
    char* out = nullptr;
    EXPECT_EQ(hc_hochschild(nullptr, nullptr, nullptr, nullptr, &out), HC_ERR_NULL);
    EXPECT_EQ(hc_verify(nullptr, nullptr, &out), HC_ERR_NULL);
}

TEST(CApi, BudgetRefusal) {
    AlgebraHandle h;
    ASSERT_EQ(hc_algebra_builtin("matrix:3", nullptr, &h.a), HC_OK);
    hc_options o = opts(3);
    o.size_budget = 50;
    char* out = nullptr;
    EXPECT_EQ(hc_hochschild(h.a, nullptr, nullptr, &o, &out), HC_ERR_BUDGET);
    EXPECT_NE(std::string(hc_last_error()).find("dimension"), std::string::npos);
}

TEST(CApi, ConnesTsyganNeedsUnit) {
    AlgebraHandle h;
    ASSERT_EQ(hc_algebra_builtin("zero:1", nullptr, &h.a), HC_OK);
    hc_options o = opts(2);
    char* out = nullptr;
    EXPECT_EQ(hc_connes_tsygan(h.a, nullptr, &o, &out), HC_ERR_PRECONDITION);
}

TEST(CApi, VerifyCase) {
    hc_options o = opts(2);
    char* out = nullptr;
    ASSERT_EQ(hc_verify(R"({"theorem": "1.7", "parts": "matrix:2,scalars", "module": "dual"})", &o, &out), HC_OK);
    json v = take(out);
    EXPECT_EQ(v["overall"], "PASS");
    EXPECT_EQ(v["degrees"], json::array({0, 1, 2}));
}

TEST(CApi, VerifyUnknownTheorem) {
    char* out = nullptr;
    EXPECT_EQ(hc_verify(R"({"theorem": "0.0", "algebra": "scalars"})", nullptr, &out), HC_ERR_INPUT);
}

TEST(CApi, BuiltinSuiteHasNoMismatches) {
    char* out = nullptr;
    ASSERT_EQ(hc_suite(nullptr, nullptr, &out), HC_OK);
    json s = take(out);
    EXPECT_EQ(s["mismatches"], 0);
    EXPECT_EQ(s["failures"], 0);
    char* cases = nullptr;
    ASSERT_EQ(hc_builtin_cases(&cases), HC_OK);
    EXPECT_EQ(take(cases).size(), s["cases"].get<std::size_t>());
}

TEST(CApi, ReportsAreByteIdenticalAcrossRuns) {
    AlgebraHandle h;
    ASSERT_EQ(hc_algebra_builtin("upper_triangular:2", nullptr, &h.a), HC_OK);
    hc_options o = opts(3);
    char* first = nullptr;
    char* second = nullptr;
    ASSERT_EQ(hc_connes_tsygan(h.a, nullptr, &o, &first), HC_OK);
    ASSERT_EQ(hc_connes_tsygan(h.a, nullptr, &o, &second), HC_OK);
    EXPECT_STREQ(first, second);
    hc_string_free(first);
    hc_string_free(second);
}
