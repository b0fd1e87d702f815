#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <altdescent.h>

#include <json.hpp>

#include <cstring>
#include <string>

using nlohmann::json;

namespace {

// releases the result when a scope ends, matching how C callers should pair
// every successful call with ad_result_free
struct Owned {
    ad_result* r = nullptr;
    ~Owned() { ad_result_free(r); }
};

}  // namespace

TEST_CASE("version string") {
    REQUIRE(ad_version() != nullptr);
    CHECK(std::strlen(ad_version()) > 0);
}

TEST_CASE("sequence tables through the C surface") {
    Owned res;
    REQUIRE(ad_seq("f", 8, nullptr, &res.r) == AD_OK);
    REQUIRE(res.r != nullptr);
    CHECK(ad_result_status(res.r) == AD_OK);
    CHECK(std::string(ad_result_error(res.r)).empty());

    const std::string plain = ad_result_plain(res.r);
    CHECK(plain.find("f(8) = 7614") != std::string::npos);

    const json doc = json::parse(ad_result_json(res.r));
    CHECK(doc["command"] == "seq");
    CHECK(doc["params"]["n_max"] == 8);
    CHECK(doc["results"]["values"][4] == "13");
    CHECK(doc["checks"].is_array());

    const std::string csv = ad_result_csv(res.r);
    CHECK(csv.rfind("n,value\n", 0) == 0);
}

TEST_CASE("class sizes take a composition argument") {
    Owned res;
    REQUIRE(ad_seq("beta-hat", 0, "2,1", &res.r) == AD_OK);
    const json doc = json::parse(ad_result_json(res.r));
    CHECK(doc["results"]["value"] == "1");
    CHECK(doc["params"]["composition"] == "(2,1)");

    Owned plainb;
    REQUIRE(ad_seq("beta", 0, "2,1", &plainb.r) == AD_OK);
    const json doc2 = json::parse(ad_result_json(plainb.r));
    CHECK(doc2["results"]["value"] == "2");

    Owned missing;
    CHECK(ad_seq("beta", 0, nullptr, &missing.r) == AD_USAGE_ERROR);
    CHECK(std::string(ad_result_error(missing.r)).find("composition") !=
          std::string::npos);

    Owned garbled;
    CHECK(ad_seq("beta", 0, "2,x", &garbled.r) == AD_USAGE_ERROR);
}

TEST_CASE("unknown names surface as usage errors") {
    Owned res;
    CHECK(ad_seq("nosuch", 5, nullptr, &res.r) == AD_USAGE_ERROR);
    REQUIRE(res.r != nullptr);
    CHECK(ad_result_status(res.r) == AD_USAGE_ERROR);
    CHECK(std::string(ad_result_error(res.r)).find("nosuch") != std::string::npos);
    CHECK(ad_seq("f", 5, nullptr, nullptr) == AD_USAGE_ERROR);
}

TEST_CASE("series coefficients in both normalizations") {
    Owned egf;
    REQUIRE(ad_series("F", 8, 1, nullptr, &egf.r) == AD_OK);
    const json doc = json::parse(ad_result_json(egf.r));
    CHECK(doc["results"]["coefficients"][6] == "229");
    CHECK(doc["params"]["egf"] == true);

    Owned plain;
    REQUIRE(ad_series("F", 4, 0, nullptr, &plain.r) == AD_OK);
    const json doc2 = json::parse(ad_result_json(plain.r));
    CHECK(doc2["results"]["coefficients"][4] == "13/24");
}

TEST_CASE("series caps map to the resource status") {
    Owned res;
    CHECK(ad_series("F", 99, 0, nullptr, &res.r) == AD_RESOURCE_ERROR);
    REQUIRE(res.r != nullptr);
    CHECK(ad_result_status(res.r) == AD_RESOURCE_ERROR);
    CHECK(std::string(ad_result_error(res.r)).find("capped") != std::string::npos);
}

TEST_CASE("preimage rendering in the graded algebra") {
    Owned res;
    REQUIRE(ad_series("C", 4, 0, "r", &res.r) == AD_OK);
    const std::string plain = ad_result_plain(res.r);
    CHECK(plain.find("r(1)") != std::string::npos);
    const json doc = json::parse(ad_result_json(res.r));
    CHECK(doc["results"]["terms"].size() > 0);
    const std::string csv = ad_result_csv(res.r);
    CHECK(csv.rfind("composition,coefficient\n", 0) == 0);
    // compositions render with commas, so the csv must quote them
    CHECK(csv.find("\"(1,1)\"") != std::string::npos);

    Owned bad;
    CHECK(ad_series("sec_plus_tan", 4, 0, "r", &bad.r) == AD_USAGE_ERROR);
    Owned badbasis;
    CHECK(ad_series("F", 4, 0, "x", &badbasis.r) == AD_USAGE_ERROR);
}

TEST_CASE("verification suites run end to end") {
    Owned res;
    REQUIRE(ad_verify("recurrences", 0, 42, &res.r) == AD_OK);
    const json doc = json::parse(ad_result_json(res.r));
    CHECK(doc["results"]["failed"] == 0);
    CHECK(doc["checks"].size() == doc["results"]["passed"].get<std::size_t>());
    for (const auto& chk : doc["checks"]) {
        CHECK(chk["pass"] == true);
        CHECK(!chk["paper_ref"].get<std::string>().empty());
    }
    const std::string plain = ad_result_plain(res.r);
    CHECK(plain.find("[PASS]") != std::string::npos);
    CHECK(plain.find("[FAIL]") == std::string::npos);

    Owned bad;
    CHECK(ad_verify("nope", 0, 42, &bad.r) == AD_USAGE_ERROR);
}

TEST_CASE("asymptotics constants and checks") {
    Owned res;
    REQUIRE(ad_asym(12, 1e-10, &res.r) == AD_OK);
    const json doc = json::parse(ad_result_json(res.r));
    const std::string alpha = doc["results"]["alpha"].get<std::string>();
    CHECK(alpha.rfind("1.2998283162", 0) == 0);
    const std::string beta = doc["results"]["beta"].get<std::string>();
    CHECK(beta.rfind("0.7693323706", 0) == 0);
    CHECK(doc["results"]["zeros_inside_gamma"] == 1);
    CHECK(doc["results"]["rows"].size() == 13);
    CHECK(doc["checks"].size() == 3);

    Owned tight;
    CHECK(ad_asym(12, 1e-13, &tight.r) == AD_USAGE_ERROR);
    Owned negative;
    CHECK(ad_asym(-1, 1e-10, &negative.r) == AD_USAGE_ERROR);
}

TEST_CASE("freeing a null result is a no-op") {
    ad_result_free(nullptr);
    CHECK(ad_result_status(nullptr) == AD_USAGE_ERROR);
    CHECK(std::string(ad_result_plain(nullptr)).empty());
}
