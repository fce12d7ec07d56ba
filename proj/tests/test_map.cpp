#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace chowcalc;
using testsupport::Rng;

namespace {

ParamPolynomial s_poly() { return ParamPolynomial::parameter("s"); }

std::vector<MapDescriptor::Ptr> builtin_test_maps() {
    return {builtin_map("nu"), builtin_map("p"), builtin_map("gamma"), builtin_map("pi0")};
}

} // namespace

TEST_CASE("pullbacks of the named classes") {
    auto gamma = builtin_map("gamma");
    auto ez = gamma->source();
    auto pv = gamma->target();

    CHECK(pull(*gamma, pv->basis_class("vbar")) == ez->basis_class("v"));
    CHECK(pull(*gamma, pv->basis_class("z")) ==
          ez->basis_class("Delta") + ez->basis_class("h") + s_poly() * ez->basis_class("v"));
    CHECK(pull(*gamma, pv->one()) == ez->one());

    // pull preserves codimension
    for (const auto& m : builtin_test_maps()) {
        Rng rng(73);
        for (int i = 0; i < 50; ++i) {
            GradedClass y = rng.cls(m->target());
            for (int c = 0; c <= m->target()->top_codim(); ++c)
                CHECK(pull(*m, truncate(y, c)).is_homogeneous(c));
        }
    }
}

TEST_CASE("pushforwards computed from the pairing") {
    auto gamma = builtin_map("gamma");
    auto nu = builtin_map("nu");
    auto ez = gamma->source();
    auto pv = gamma->target();
    auto z_ring = nu->target();

    CHECK(push(*gamma, ez->basis_class("h")) ==
          pv->basis_class("z") - s_poly() * pv->basis_class("vbar"));
    CHECK(push(*gamma, ez->one()) == 2 * pv->one());
    CHECK(push(*nu, ez->basis_class("v")).is_zero());
    CHECK(push(*nu, ez->basis_class("h")) == z_ring->one());
    CHECK(push(*nu, ez->basis_class("Delta")) == z_ring->one());
    CHECK(push(*nu, ez->basis_class("pt")) == z_ring->basis_class("pt"));
    CHECK(push(*nu, ez->one()).is_zero()); // codimension drops below zero

    // push lowers codimension by the relative dimension
    for (const auto& m : builtin_test_maps()) {
        Rng rng(79);
        for (int i = 0; i < 50; ++i) {
            GradedClass x = rng.cls(m->source());
            for (int c = 0; c <= m->source()->top_codim(); ++c)
                CHECK(push(*m, truncate(x, c)).is_homogeneous(c - m->relative_dim()));
        }
    }
}

TEST_CASE("relative Todd classes are constructed, not tabulated") {
    auto gamma = builtin_map("gamma");
    auto pi0 = builtin_map("pi0");
    auto nu = builtin_map("nu");
    auto ez = gamma->source();
    auto pv = pi0->source();

    CHECK(nu->relative_todd() == ez->one());

    // td_gamma = 1 / gamma^* td(T), with c1(T) = 2z - (1+2s) vbar and c2 = 0:
    // equals 1 - Delta - h + v/2 here.
    CHECK(gamma->relative_todd() ==
          ez->one() - ez->basis_class("Delta") - ez->basis_class("h") +
              Rational(1) / 2 * ez->basis_class("v"));

    // td of the relative tangent line of the projectivized bundle.
    GradedClass rel_c1 = 2 * pv->basis_class("z") -
                         (ParamPolynomial(1) + 2 * s_poly()) * pv->basis_class("vbar");
    CHECK(pi0->relative_todd() == todd(line_bundle(rel_c1)));
}

TEST_CASE("GRR pushforwards") {
    auto nu = builtin_map("nu");
    auto gamma = builtin_map("gamma");
    auto pi0 = builtin_map("pi0");
    auto ez = nu->source();
    auto pv = gamma->target();
    auto z_ring = nu->target();

    // Vertical projection of the Poincare line bundle: rank 2, degree 1+2s.
    GradedClass poincare_c1 = ez->basis_class("Delta") + ez->basis_class("h") +
                              s_poly() * ez->basis_class("v");
    CHECK(grr_push(*nu, line_bundle(poincare_c1)) ==
          2 * z_ring->one() +
              (ParamPolynomial(1) + 2 * s_poly()) * z_ring->basis_class("pt"));

    // Finite cover: codimension <= 1 part is 4 - 14z + (2+14s) vbar.
    SheafClass pulled(2, ez->one() - 10 * ez->basis_class("h"));
    GradedClass pushed = grr_push(*gamma, pulled);
    CHECK(truncate(pushed, 0) == 4 * pv->one());
    CHECK(truncate(pushed, 1) ==
          -14 * pv->basis_class("z") +
              (ParamPolynomial(2) + 14 * s_poly()) * pv->basis_class("vbar"));

    // Euler characteristic of O(d) on the fibers: rank component d+1.
    for (int d = 0; d <= 5; ++d) {
        GradedClass ch = grr_push(*pi0, line_bundle(Rational(d) * pv->basis_class("z")));
        CHECK(truncate(ch, 0) == Rational(d + 1) * z_ring->one());
    }

    // A rank-0 difference of line bundles with equal c1 pushes to zero.
    Rng rng(83);
    for (int i = 0; i < 50; ++i) {
        SheafClass l = rng.line(ez);
        GradedClass difference = chern_character(l) - chern_character(line_bundle(l.c(1)));
        CHECK(grr_push(*gamma, difference).is_zero());
    }
}

TEST_CASE("projection formula") {
    auto gamma = builtin_map("gamma");

    // Worked instance: both sides equal (z - s vbar) * z.
    auto ez = gamma->source();
    auto pv = gamma->target();
    GradedClass h = ez->basis_class("h");
    GradedClass z = pv->basis_class("z");
    CHECK(pushpull_check(*gamma, h, z));
    CHECK(push(*gamma, h * pull(*gamma, z)) ==
          (pv->basis_class("z") - s_poly() * pv->basis_class("vbar")) * z);

    for (const auto& m : builtin_test_maps()) {
        Rng rng(89);
        for (int i = 0; i < 200; ++i) {
            GradedClass x = rng.cls(m->source());
            GradedClass y = rng.cls(m->target());
            CHECK(pushpull_check(*m, x, y));
            CHECK(pushpull_check(*m, m->source()->one(), y));
        }
    }
}

TEST_CASE("push then pull multiplies by the finite degree") {
    auto gamma = builtin_map("gamma");
    Rng rng(97);
    for (int i = 0; i < 200; ++i) {
        GradedClass y = rng.cls(gamma->target());
        CHECK(push(*gamma, pull(*gamma, y)) == 2 * y);
    }
}

TEST_CASE("pairing solver agrees at every rational substitution") {
    auto gamma = builtin_map("gamma");
    Rng rng(101);
    for (int i = 0; i < 40; ++i) {
        Rational q = rng.rational();
        auto ez = gamma->source()->substituted("s", q);
        auto pv = gamma->target()->substituted("s", q);
        auto sub = gamma->substituted("s", q, ez, pv);
        CHECK(push(*sub, ez->basis_class("h")) ==
              pv->basis_class("z") - q * pv->basis_class("vbar"));
    }
}

TEST_CASE("the vertical projection factors through the cover") {
    // nu = pi0 ∘ gamma, built as three independent descriptors; pushforward,
    // pullback and relative Todd classes must all compose.
    auto nu = builtin_map("nu");
    auto gamma = builtin_map("gamma");
    auto pi0 = builtin_map("pi0");

    Rng rng(167);
    for (int i = 0; i < 200; ++i) {
        GradedClass x = rng.cls(nu->source());
        CHECK(push(*pi0, push(*gamma, x)) == push(*nu, x));
        GradedClass y = rng.cls(nu->target());
        CHECK(pull(*gamma, pull(*pi0, y)) == pull(*nu, y));
    }

    // td_nu = td_gamma * gamma^*(td_pi0).
    CHECK(nu->relative_todd() ==
          gamma->relative_todd() * pull(*gamma, pi0->relative_todd()));

    // GRR composes: pushing a character down in two steps equals one step.
    for (int i = 0; i < 50; ++i) {
        GradedClass ch = chern_character(rng.line(nu->source()));
        CHECK(grr_push(*pi0, grr_push(*gamma, ch)) == grr_push(*nu, ch));
    }
}

TEST_CASE("a degenerate pairing is a solver failure") {
    // A surface presentation whose middle pairing is identically zero.
    RingData data;
    data.name = "degenerate";
    data.basis = {{"1", 0}, {"x", 1}, {"y", 1}, {"pt", 2}};
    data.top_codim = 2;
    data.unit = "1";
    data.integral = {{"pt", ParamPolynomial(1)}};
    auto ring = RingPresentation::make(data);

    MapDescriptor::Data m;
    m.name = "identity";
    m.source = ring;
    m.target = ring;
    m.relative_dim = 0;
    for (std::size_t i = 0; i < ring->size(); ++i)
        m.pullback.push_back(ring->basis_class(i));
    m.relative_todd = ring->one();
    auto descriptor = MapDescriptor::make(std::move(m));

    CHECK_THROWS_WITH(push(*descriptor, ring->basis_class("x")),
                      Catch::Matchers::ContainsSubstring("degenerate pairing"));
}

TEST_CASE("descriptor validation") {
    auto ez = builtin_ring("EtimesZ");
    auto pv = builtin_ring("PV");

    MapDescriptor::Data data;
    data.name = "broken";
    data.source = ez;
    data.target = pv;
    data.relative_dim = 0;
    data.pullback = {ez->one(), ez->basis_class("h"), ez->basis_class("v"),
                     ez->basis_class("pt")};
    data.relative_todd = ez->one();
    // h^2 = 0 but z^2 = (1+2s) zvbar pulls to (1+2s) pt != 0.
    CHECK_THROWS_WITH(MapDescriptor::make(data),
                      Catch::Matchers::ContainsSubstring("not a ring homomorphism"));

    MapDescriptor::Data finite = data;
    finite.pullback = {ez->one(),
                       ez->basis_class("Delta") + ez->basis_class("h") +
                           s_poly() * ez->basis_class("v"),
                       ez->basis_class("v"), 2 * ez->basis_class("pt")};
    finite.relative_dim = 1;
    finite.finite_degree = 2;
    CHECK_THROWS_WITH(MapDescriptor::make(finite),
                      Catch::Matchers::ContainsSubstring("relative dimension 0"));

    MapDescriptor::Data degree = finite;
    degree.relative_dim = 0;
    degree.finite_degree = 3; // fundamental class actually pushes to 2
    CHECK_THROWS_WITH(MapDescriptor::make(degree),
                      Catch::Matchers::ContainsSubstring("does not push to 3"));

    MapDescriptor::Data wrong_codim = degree;
    wrong_codim.finite_degree = 2;
    wrong_codim.pullback[1] = ez->basis_class("pt");
    CHECK_THROWS_WITH(MapDescriptor::make(wrong_codim),
                      Catch::Matchers::ContainsSubstring("does not preserve codimension"));
}
