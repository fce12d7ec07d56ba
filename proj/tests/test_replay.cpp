#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace chowcalc;

namespace {
ParamPolynomial s_poly() { return ParamPolynomial::parameter("s"); }
}

TEST_CASE("the symbolic replay certifies all 21 checkpoints") {
    ReplayReport report = run_replay();

    CHECK(report.overall);
    REQUIRE(report.checkpoints.size() == 21);
    for (const auto& c : report.checkpoints) {
        INFO(c.id << ": computed " << c.computed << ", expected " << c.expected);
        CHECK(c.passed);
    }

    CHECK(report.final_degree == ParamPolynomial(-15));
    CHECK(report.nonzero_s_coefficients == 0);
    CHECK_FALSE(report.substitution.has_value());

    // The recorded substitution spot checks all evaluate to -15.
    REQUIRE(report.parameter_substitutions.size() == 5);
    for (const auto& [s, degree] : report.parameter_substitutions)
        CHECK(degree == ParamPolynomial(-15));

    // Checkpoint ids arrive in pipeline order.
    CHECK(report.checkpoints.front().id == "hurwitz-dims");
    CHECK(report.checkpoints.back().id == "final-sum");
}

TEST_CASE("the substituted replay reproduces -15 at every sample point") {
    for (const auto& q : {Rational(-1) / 2, Rational(0), Rational(1), Rational(7),
                          Rational(-3) / 5}) {
        ReplayReport report = run_replay(q);
        INFO("s = " << to_string(q));
        CHECK(report.overall);
        CHECK(report.checkpoints.size() == 21);
        CHECK(report.final_degree == ParamPolynomial(-15));
        REQUIRE(report.substitution.has_value());
        CHECK(*report.substitution == q);
        REQUIRE(report.parameter_substitutions.size() == 1);
        CHECK(report.parameter_substitutions[0].first == q);
    }
}

TEST_CASE("the final degree agrees with the direct difference") {
    // The excess route must equal (hom-bundle degree) - (normal degree).
    auto z_ring = builtin_ring("Z");
    ParamPolynomial c1v = ParamPolynomial(1) + 2 * s_poly();
    ParamPolynomial c1m = ParamPolynomial(-2) - 4 * s_poly();
    ParamPolynomial c1n = ParamPolynomial(-10) * s_poly();
    ParamPolynomial hom = 5 * c1m - 5 * c1n - 15 * c1v;
    ParamPolynomial normal(-10);

    GradedClass pt = z_ring->basis_class("pt");
    ParamPolynomial via_excess =
        integrate(excess_term(z_ring->one() + hom * pt, z_ring->one() + normal * pt, 1));
    CHECK(via_excess == hom - normal);
    CHECK(via_excess == ParamPolynomial(-15));
}

TEST_CASE("a failing checkpoint carries the expected value downstream") {
    // The recorder is what keeps one bug from cascading: the row is marked
    // failed, the report keeps going, and the expected value is what flows on.
    std::vector<Checkpoint> rows;
    chowcalc::detail::CheckpointRecorder rec(rows);

    ParamPolynomial carried = rec.poly("first", "a wrong value", "anchor",
                                       ParamPolynomial(3), ParamPolynomial(7));
    CHECK(carried == ParamPolynomial(7));
    CHECK_FALSE(rows.back().passed);
    CHECK_FALSE(rec.all_passed());

    carried = rec.poly("second", "downstream of the failure", "anchor",
                       carried + ParamPolynomial(1), ParamPolynomial(8));
    CHECK(rows.size() == 2);
    CHECK(rows.back().passed);
    CHECK_FALSE(rec.all_passed());

    // extra_ok gates a row independently of value equality.
    rec.poly("third", "value right, side condition wrong", "anchor",
             ParamPolynomial(1), ParamPolynomial(1), /*extra_ok=*/false);
    CHECK_FALSE(rows.back().passed);
}

TEST_CASE("report values are reproducible across runs") {
    ReplayReport a = run_replay();
    ReplayReport b = run_replay();
    CHECK(replay_report_json(a) == replay_report_json(b));
    CHECK(replay_report_text(a) == replay_report_text(b));
}

TEST_CASE("report renderings carry the verdict") {
    ReplayReport report = run_replay();

    const std::string text = replay_report_text(report);
    CHECK_THAT(text, Catch::Matchers::EndsWith(
                         "final degree: -15  s-coefficients: 0  OVERALL: PASS\n"));
    CHECK_THAT(text, Catch::Matchers::ContainsSubstring("hurwitz-dims"));
    CHECK_THAT(text, Catch::Matchers::ContainsSubstring("note: "));

    const std::string json_text = replay_report_json(report);
    auto j = nlohmann::json::parse(json_text);
    CHECK(j.at("paper") == "bielliptic locus genus 11");
    CHECK(j.at("mode") == "symbolic");
    CHECK(j.at("overall") == "pass");
    CHECK(j.at("final_degree") == "-15");
    CHECK(j.at("s_coefficients") == 0);
    CHECK(j.at("checkpoints").size() == 21);
    for (const auto& c : j.at("checkpoints"))
        CHECK(c.at("status") == "pass");
    CHECK(j.at("annotations").size() >= 4);

    ReplayReport substituted = run_replay(Rational(-1) / 2);
    auto js = nlohmann::json::parse(replay_report_json(substituted));
    CHECK(js.at("mode") == "substituted");
    CHECK(js.at("s") == "-1/2");
}

TEST_CASE("key intermediate values match the exact expectations") {
    ReplayReport report = run_replay();
    auto row = [&](const std::string& id) -> const Checkpoint& {
        for (const auto& c : report.checkpoints)
            if (c.id == id)
                return c;
        FAIL("missing checkpoint " << id);
        static Checkpoint dummy;
        return dummy;
    };

    CHECK(row("universal-bundle-c1").computed == "2 + (1 + 2*s)*pt");
    CHECK(row("gamma-push-h").computed == "z - s*vbar");
    CHECK(row("pushed-bundle-c1").computed == "-14*z + (2 + 14*s)*vbar");
    CHECK(row("hn-M-degree").computed == "-2 - 4*s");
    CHECK(row("hn-N-degree").computed == "-10*s");
    CHECK(row("normal-bundle-degree").computed == "-10");
    CHECK(row("excess-degree").computed == "-15");
}
