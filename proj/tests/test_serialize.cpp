#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rsgap/error.hpp"
#include "rsgap/serialize.hpp"

using namespace rsgap;

namespace {

Counterexample desk_cx(uint64_t seed = 3) {
    const ParamSet ps = derive_params(Ratio(1, 1), {1, 2}, 4, Profile::desk, 4);
    ForgeOptions opts;
    opts.seed = seed;
    return build_counterexample(ps, opts);
}

}  // namespace

TEST_CASE("params JSON round trip") {
    const ParamSet ps = derive_params(Ratio(1, 1), {1, 2}, 6, Profile::strict);
    const Json j = params_to_json(ps);
    CHECK(j["n"] == 256);
    CHECK(j["k"] == 64);
    CHECK(j["delta"] == "46/64");
    const ParamSet back = params_from_json(j);
    CHECK(back.s == ps.s);
    CHECK(back.r == ps.r);
    CHECK(back.m == ps.m);
    CHECK(back.n == ps.n);
    CHECK(back.k == ps.k);
    CHECK(back.log_scale == ps.log_scale);
    CHECK(ratio_eq(back.delta, ps.delta));
    CHECK(params_to_json(back).dump() == j.dump());
}

TEST_CASE("counterexample file round trip is identity") {
    const Counterexample cx = desk_cx();
    const std::string text = cx_serialize(cx);
    const Counterexample back = cx_parse(text);
    CHECK(cx_serialize(back) == text);
    CHECK(back.p == cx.p);
    CHECK(back.omega == cx.omega);
    CHECK(back.xi == cx.xi);
    CHECK(back.z_count == cx.z_count);
    REQUIRE(back.witnesses.size() == cx.witnesses.size());
    for (size_t i = 0; i < back.witnesses.size(); ++i) {
        CHECK(back.witnesses[i].z == cx.witnesses[i].z);
        CHECK(back.witnesses[i].agreement == cx.witnesses[i].agreement);
        CHECK(back.witnesses[i].codeword.coeffs == cx.witnesses[i].codeword.coeffs);
    }
    // agreement sets compress to stride-s runs
    const Json j = cx_to_json(cx);
    REQUIRE(j["witnesses"].size() == 28);
    CHECK(j["witnesses"][0].contains("agreement_runs"));
    CHECK(j["witnesses"][0]["agreement_runs"].size() == 6);  // one run per coset
}

TEST_CASE("parsing rejects malformed input with format errors") {
    auto expect_format_error = [](const std::string& text) {
        try {
            (void)cx_parse(text);
            FAIL_CHECK("expected a format error for: ", text.substr(0, 60));
        } catch (const Error& e) {
            CHECK(e.status() == Status::format_error);
        }
    };
    expect_format_error("not json at all");
    expect_format_error("{}");
    expect_format_error(R"({"format_version":"rsgap-cx-v0"})");  // unknown version

    // field-level damage
    const std::string good = cx_serialize(desk_cx());
    Json j = Json::parse(good);
    j.erase("witnesses");
    expect_format_error(j.dump());
    j = Json::parse(good);
    j["prime"]["p"] = "12x34";
    expect_format_error(j.dump());
}

TEST_CASE("verify on a parsed file reproduces the forge-time verdicts") {
    const Counterexample cx = desk_cx(8);
    VerifyOptions vo;
    vo.level = VerifyLevel::exhaustive;
    const auto direct = verify_counterexample(cx, vo);
    const auto reparsed = verify_counterexample(cx_parse(cx_serialize(cx)), vo);
    REQUIRE(direct.checks.size() == reparsed.checks.size());
    for (size_t i = 0; i < direct.checks.size(); ++i) {
        CHECK(direct.checks[i].name == reparsed.checks[i].name);
        CHECK(direct.checks[i].status == reparsed.checks[i].status);
    }
    CHECK(direct.overall_pass);
    CHECK(reparsed.overall_pass);
}

TEST_CASE("tampering the serialized file flips verification") {
    const Counterexample cx = desk_cx(9);
    Json j = cx_to_json(cx);
    j["z_count"] = j["z_count"].get<uint64_t>() + 1;
    const auto rep = verify_counterexample(cx_from_json(j), VerifyOptions{});
    CHECK_FALSE(rep.overall_pass);
}

TEST_CASE("report JSON carries per-check entries") {
    const Counterexample cx = desk_cx(10);
    const auto rep = verify_counterexample(cx, VerifyOptions{});
    const Json j = report_to_json(rep);
    CHECK(j["overall_pass"] == true);
    CHECK(j["level"] == "witness");
    bool saw_identity = false;
    for (const auto& c : j["checks"]) {
        if (c["name"].get<std::string>().rfind("identity:", 0) == 0) saw_identity = true;
        CHECK((c["status"] == "pass" || c["status"] == "waived" || c["status"] == "skipped"));
    }
    CHECK(saw_identity);
}
