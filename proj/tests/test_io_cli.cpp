#include "fueter/commands.hpp"
#include "fueter/operators.hpp"
#include "fueter/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace fueter;

namespace {

bool throws_mentioning(const std::function<void()>& fn, const std::string& needle) {
    try {
        fn();
    } catch (const std::exception& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
}

}  // namespace

TEST_CASE("section JSON round trip") {
    SectionSampler s(12);
    for (const auto& p : {ComplexParams(1, 2), ComplexParams(2, 3)}) {
        const auto f0 = s.section<Space::V0>(p, 2);
        const auto f1 = s.section<Space::V1>(p, 2);
        const auto f2 = s.section<Space::V2>(p, 2);
        CHECK(section_from_json_as<Space::V0>(section_to_json(f0)) == f0);
        CHECK(section_from_json_as<Space::V1>(section_to_json(f1)) == f1);
        CHECK(section_from_json_as<Space::V2>(section_to_json(f2)) == f2);
        CHECK(std::get<Spinor1Field>(section_from_string(section_to_json(f1).dump())) == f1);
    }
}

TEST_CASE("V2 components given as (A, B) with A > B are negated") {
    const auto j = Json::parse(R"({"n":1,"k":2,"space":"V2","components":[
        {"slot":{"ones":0},"A":1,"B":0,"terms":[{"alpha":[0,0,0,0],"re":"1/2","im":"0/1"}]}]})");
    const auto g = section_from_json_as<Space::V2>(j);
    CHECK(g.component(0) == Poly::constant(4, GaussRat(frac(-1, 2))));
}

TEST_CASE("parse errors name the offending component") {
    const std::string bad_rational = R"({"n":1,"k":2,"space":"V1","components":[
        {"slot":{"ones":0},"A":0,"terms":[]},
        {"slot":{"ones":1},"A":1,"terms":[{"alpha":[1,0,0,0],"re":"1/0","im":"0"}]}]})";
    CHECK(throws_mentioning([&] { section_from_string(bad_rational); }, "component 1 (ones=1, A=1), term 0"));
    const std::string bad_alpha = R"({"n":1,"k":2,"space":"V0","components":[
        {"slot":{"ones":2},"terms":[{"alpha":[1,0,0],"re":"1","im":"0"}]}]})";
    CHECK(throws_mentioning([&] { section_from_string(bad_alpha); }, "component 0 (ones=2), term 0"));
    const std::string bad_slot = R"({"n":1,"k":2,"space":"V0","components":[{"slot":{"ones":3}}]})";
    CHECK(throws_mentioning([&] { section_from_string(bad_slot); }, "component 0: slot ones=3"));
    const std::string diagonal = R"({"n":1,"k":2,"space":"V2","components":[{"slot":{"ones":0},"A":1,"B":1}]})";
    CHECK(throws_mentioning([&] { section_from_string(diagonal); }, "A and B must differ"));
    CHECK_THROWS_AS(section_from_string("{not json"), SectionParseError);
    CHECK_THROWS_AS(section_from_string(R"({"n":1,"k":2,"space":"V3","components":[]})"), SectionParseError);
    CHECK(throws_mentioning([] { section_from_string(R"({"n":1,"k":1,"space":"V0","components":[]})"); }, "k must be at least 2"));
}

TEST_CASE("configuration validation") {
    RunConfig cfg;
    cfg.k = 1;
    CHECK(throws_mentioning([&] { validate(cfg); }, "--k must be at least 2"));
    cfg.k = 0;
    CHECK_THROWS_AS(validate(cfg), UsageError);
    cfg = RunConfig{};
    cfg.trials = 0;
    CHECK_THROWS_AS(cmd_verify_estimates(cfg), UsageError);
    cfg = RunConfig{};
    cfg.n = 0;
    CHECK_THROWS_AS(validate(cfg), UsageError);
    cfg = RunConfig{};
    cfg.degree = -1;
    CHECK_THROWS_AS(validate(cfg), UsageError);
    CHECK_NOTHROW(validate(RunConfig{}));
}

TEST_CASE("verify-identities default run") {
    const auto out = cmd_verify_identities(RunConfig{});
    CHECK(out.status == 0);
    CHECK(out.report["passed"].get<bool>());
    CHECK(out.report["identities"].size() == 11);
    for (const auto& id : out.report["identities"]) CHECK(id["worst_defect"] == "0/1");
}

TEST_CASE("reports are deterministic") {
    RunConfig cfg;
    cfg.seed = 7;
    cfg.trials = 10;
    CHECK(dump(cmd_verify_estimates(cfg).report) == dump(cmd_verify_estimates(cfg).report));
    CHECK(dump(cmd_verify_identities(cfg).report) == dump(cmd_verify_identities(cfg).report));
    RunConfig other = cfg;
    other.seed = 8;
    CHECK(dump(cmd_verify_estimates(cfg).report) != dump(cmd_verify_estimates(other).report));
}

TEST_CASE("basis command writes one CSV row per degree") {
    RunConfig cfg;
    cfg.degree = 4;
    const auto out = cmd_basis(cfg);
    CHECK(out.status == 0);
    REQUIRE(out.files.size() == 2);
    CHECK(out.files[0].first == "dimensions.csv");
    const std::string& csv = out.files[0].second;
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 6);
    CHECK(csv.rfind("degree,dimension,cumulative\n", 0) == 0);
    const auto basis = Json::parse(out.files[1].second);
    CHECK(basis["elements"].size() == 85);
}

TEST_CASE("solve command on f = D0 g") {
    SectionSampler s(3);
    const auto g = s.section<Space::V0>(ComplexParams(1, 2), 2);
    const std::string input = section_to_json(d0_apply(g)).dump();
    RunConfig cfg;
    cfg.degree = 3;
    const auto out = cmd_solve(cfg, input);
    CHECK(out.status == 0);
    CHECK(out.report["solve"]["residual_check"].get<bool>());
    CHECK(out.report["solve"]["orthogonality_defect"] == "0/1");
    const auto u = section_from_json_as<Space::V0>(out.report["solve"]["u"]);
    CHECK(d0_apply(u) == d0_apply(g));
    SUBCASE("wrong space") {
        CHECK_THROWS_AS(cmd_solve(cfg, section_to_json(g).dump()), SectionParseError);
    }
    SUBCASE("incompatible input") {
        Spinor1Field f(ComplexParams(1, 2));
        f.component(0) = Poly::variable(4, 1);
        CHECK_THROWS_AS(cmd_solve(cfg, section_to_json(f).dump()), CompatibilityError);
    }
}
