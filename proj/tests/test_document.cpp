#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "equifix/document.hpp"
#include "equifix/model.hpp"

using namespace equifix;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

const char* kValid = R"({
  "dim": 4,
  "k": 1,
  "N": 1,
  "points": [
    {"m": [1, 2], "eps": 1, "a": [0], "s3_fixed": false},
    {"m": [1, 1], "eps": -1, "a": [1], "s3_fixed": false},
    {"m": [1, 2], "eps": 1, "a": [2], "s3_fixed": false}
  ],
  "label": "demo"
})";

}  // namespace

TEST_CASE("parsing a well-formed document") {
    auto model = parse_model_document(kValid);
    CHECK(model.n() == 2);
    CHECK(model.k() == 1);
    CHECK(model.multiplier() == 1);
    CHECK(model.label() == "demo");
    REQUIRE(model.points().size() == 3);
    CHECK(model.points()[0].m == std::vector<long>{1, 2});
    CHECK(model.points()[1].eps == -1);
    CHECK(!model.points()[1].s3_fixed);
}

TEST_CASE("label is optional, per-point flags are not") {
    auto model = parse_model_document(
        R"({"dim": 2, "k": 0, "N": 1, "points": [{"m": [1], "eps": 1, "a": [], "s3_fixed": false}]})");
    CHECK(model.label().empty());
    CHECK(!model.points()[0].s3_fixed);
    // a point without the flag is incomplete
    try {
        parse_model_document(
            R"({"dim": 2, "k": 0, "N": 1, "points": [{"m": [1], "eps": 1, "a": []}]})");
        CHECK(false);
    } catch (const document_error& e) {
        CHECK(std::string(e.what()).find("s3_fixed") != std::string::npos);
    }
}

TEST_CASE("serialization is canonical and round-trips") {
    auto model = parse_model_document(kValid);
    std::string text = serialize_model_document(model);
    // idempotent: parse-serialize is a fixed point
    CHECK(serialize_model_document(parse_model_document(text)) == text);
    // data survives
    auto back = parse_model_document(text);
    CHECK(back.n() == model.n());
    CHECK(back.k() == model.k());
    CHECK(back.multiplier() == model.multiplier());
    CHECK(back.label() == model.label());
    CHECK(back.points().size() == model.points().size());
    // points come out sorted canonically
    std::vector<FixedPoint> sorted = model.points();
    std::sort(sorted.begin(), sorted.end());
    CHECK(back.points() == sorted);
    CHECK(text.back() == '\n');
    // key order is fixed: dim before k before N before points
    CHECK(text.find("\"dim\"") < text.find("\"k\""));
    CHECK(text.find("\"k\"") < text.find("\"N\""));
    CHECK(text.find("\"N\"") < text.find("\"points\""));
}

TEST_CASE("serialization of the shipped sample documents is stable") {
    const char* env = std::getenv("EQUIFIX_MODELS");
    REQUIRE(env != nullptr);
    std::filesystem::path dir(env);
    int count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.path().extension() != ".json")
            continue;
        ++count;
        std::string text = slurp(entry.path());
        auto model = parse_model_document(text);
        std::string canon = serialize_model_document(model);
        CHECK(serialize_model_document(parse_model_document(canon)) == canon);
    }
    CHECK(count >= 6);
}

TEST_CASE("floating point numbers are rejected everywhere") {
    CHECK_THROWS_WITH_AS(
        parse_model_document(
            R"({"dim": 4.0, "k": 0, "N": 1, "points": [{"m": [1, 1], "eps": 1, "a": []}]})"),
        "dim: floating-point numbers are not allowed", document_error);
    try {
        parse_model_document(
            R"({"dim": 4, "k": 0, "N": 1, "points": [{"m": [1, 1.5], "eps": 1, "a": []}]})");
        CHECK(false);
    } catch (const document_error& e) {
        CHECK(e.where == "points[0].m[1]");
    }
}

TEST_CASE("unknown keys are rejected with their path") {
    try {
        parse_model_document(
            R"({"dim": 4, "k": 0, "N": 1, "extra": 1, "points": [{"m": [1, 1], "eps": 1, "a": []}]})");
        CHECK(false);
    } catch (const document_error& e) {
        CHECK(std::string(e.what()).find("unknown key") != std::string::npos);
        CHECK(std::string(e.what()).find("extra") != std::string::npos);
    }
    try {
        parse_model_document(
            R"({"dim": 4, "k": 0, "N": 1, "points": [{"m": [1, 1], "eps": 1, "a": [], "zz": 0}]})");
        CHECK(false);
    } catch (const document_error& e) {
        CHECK(e.where.find("points[0]") != std::string::npos);
    }
}

TEST_CASE("missing keys are rejected") {
    CHECK_THROWS_AS(parse_model_document(R"({"k": 0, "N": 1, "points": []})"), document_error);
    try {
        parse_model_document(
            R"({"dim": 2, "k": 0, "N": 1, "points": [{"eps": 1, "a": []}]})");
        CHECK(false);
    } catch (const document_error& e) {
        CHECK(std::string(e.what()).find("m") != std::string::npos);
    }
}

TEST_CASE("structural rules of the document") {
    // dim must be positive and even
    CHECK_THROWS_AS(
        parse_model_document(R"({"dim": 3, "k": 0, "N": 1, "points": [{"m": [1], "eps": 1, "a": []}]})"),
        document_error);
    CHECK_THROWS_AS(
        parse_model_document(R"({"dim": 0, "k": 0, "N": 1, "points": []})"), document_error);
    CHECK_THROWS_AS(
        parse_model_document(R"({"dim": -4, "k": 0, "N": 1, "points": []})"), document_error);
    // points must be nonempty
    CHECK_THROWS_WITH_AS(
        parse_model_document(R"({"dim": 4, "k": 0, "N": 1, "points": []})"),
        "points: points must be a nonempty array", document_error);
    // eps limited to +-1
    try {
        parse_model_document(
            R"({"dim": 2, "k": 0, "N": 1, "points": [{"m": [1], "eps": 2, "a": []}]})");
        CHECK(false);
    } catch (const document_error& e) {
        CHECK(e.where == "points[0].eps");
    }
    // s3_fixed must be a boolean, not an integer
    CHECK_THROWS_AS(
        parse_model_document(
            R"({"dim": 2, "k": 0, "N": 1, "points": [{"m": [1], "eps": 1, "a": [], "s3_fixed": 1}]})"),
        document_error);
    // label must be a string
    CHECK_THROWS_AS(
        parse_model_document(
            R"({"dim": 2, "k": 0, "N": 1, "label": 7, "points": [{"m": [1], "eps": 1, "a": []}]})"),
        document_error);
    // model-level consistency propagates with a path: weight count vs dim
    try {
        parse_model_document(
            R"({"dim": 4, "k": 0, "N": 1, "points": [{"m": [1], "eps": 1, "a": [], "s3_fixed": false}]})");
        CHECK(false);
    } catch (const document_error& e) {
        CHECK(std::string(e.what()).find("weight count") != std::string::npos);
    }
    // nonpositive tangential weights surface as the point's error
    try {
        parse_model_document(
            R"({"dim": 2, "k": 0, "N": 1, "points": [{"m": [0], "eps": 1, "a": [], "s3_fixed": false}]})");
        CHECK(false);
    } catch (const document_error& e) {
        CHECK(e.where == "points[0]");
    }
}

TEST_CASE("malformed json reports the line of the failure") {
    try {
        parse_model_document("{\n  \"dim\": 4,\n  oops\n}");
        CHECK(false);
    } catch (const document_error& e) {
        CHECK(e.where.rfind("line ", 0) == 0);
        CHECK(e.where == "line 3");
    }
    CHECK_THROWS_AS(parse_model_document(""), document_error);
    CHECK_THROWS_AS(parse_model_document("[1, 2]"), document_error);
    CHECK_THROWS_AS(parse_model_document("\"text\""), document_error);
}

TEST_CASE("error text carries both location and message") {
    try {
        parse_model_document(
            R"({"dim": 4, "k": 0, "N": 1, "points": [{"m": [1, 1], "eps": 0, "a": []}]})");
        CHECK(false);
    } catch (const document_error& e) {
        std::string what = e.what();
        CHECK(what.find("points[0].eps") != std::string::npos);
        CHECK(what.find("eps must be 1 or -1") != std::string::npos);
    }
}

TEST_CASE("huge integers that do not fit the native type are rejected") {
    CHECK_THROWS_AS(
        parse_model_document(
            R"({"dim": 4, "k": 0, "N": 99999999999999999999, "points": [{"m": [1, 1], "eps": 1, "a": []}]})"),
        document_error);
}
