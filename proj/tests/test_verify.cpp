#include <doctest.h>

#include "dexsym/verify.hpp"

using namespace dexsym;

TEST_CASE("verification subsets are deterministic") {
    verify::VerifyOptions opts;
    opts.only = "examples";
    verify::VerifyReport a = verify::run_verification(opts);
    verify::VerifyReport b = verify::run_verification(opts);
    REQUIRE(a.criteria.size() == 1);
    CHECK(a.criteria[0].passed());
    CHECK(verify::report_to_json(a).dump() == verify::report_to_json(b).dump());
    CHECK(a.catalog_digest == b.catalog_digest);
}

TEST_CASE("the only-filter selects by substring") {
    verify::VerifyOptions opts;
    opts.only = "nilradical";
    verify::VerifyReport r = verify::run_verification(opts);
    REQUIRE(r.criteria.size() == 3);
    CHECK(r.criteria[0].id == "nilradical-2dim");
    CHECK(r.criteria[1].id == "nilradical-mu2");
    CHECK(r.criteria[2].id == "nilradical-mu1-mu3");
}

TEST_CASE("report JSON has the documented shape") {
    verify::VerifyOptions opts;
    opts.only = "strict-inclusions";
    json j = verify::report_to_json(verify::run_verification(opts));
    CHECK(j["tool"] == "dexsym");
    CHECK(j["status"] == "pass");
    REQUIRE(j["criteria"].size() == 1);
    CHECK(j["criteria"][0]["id"] == "strict-inclusions");
    for (const auto& ck : j["criteria"][0]["checks"]) {
        CHECK(ck.contains("id"));
        CHECK(ck.contains("claim"));
        CHECK(ck.contains("status"));
    }
}
