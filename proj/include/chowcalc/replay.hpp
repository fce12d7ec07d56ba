#ifndef CHOWCALC_REPLAY_HPP
#define CHOWCALC_REPLAY_HPP

#include <optional>
#include <string>
#include <vector>

#include "chowcalc/builtins.hpp"
#include "chowcalc/p1.hpp"
#include "chowcalc/porteous.hpp"

namespace chowcalc {

// The checkpointed end-to-end scenario: build the two ambient rings and the
// four maps, run the genus-11 degree computation, and certify every
// intermediate value exactly. In substituted mode the whole pipeline is
// rebuilt with the normalization parameter fixed to a rational and the same
// final degree -15 must come out.
//
// A failed checkpoint marks the report failed but downstream checkpoints
// still run, fed with the expected values, so one bug surfaces as one red
// row instead of a cascade.

struct Checkpoint {
    std::string id;
    std::string description;
    std::string citation;
    std::string computed;
    std::string expected;
    bool passed = false;
};

struct ReplayReport {
    std::string subject = "bielliptic locus genus 11";
    std::optional<Rational> substitution; // value of s, when substituted
    std::vector<Checkpoint> checkpoints;
    std::vector<std::pair<Rational, ParamPolynomial>> parameter_substitutions;
    ParamPolynomial final_degree;
    int nonzero_s_coefficients = 0;
    bool overall = false;
    std::vector<std::string> annotations;
};

namespace detail {

/// Solve poly == 0 for a parameter it is linear in; exact, no rational
/// functions (the division must come out polynomial).
inline ParamPolynomial solve_linear(const ParamPolynomial& poly, const std::string& param) {
    const ParamPolynomial b = poly.substitute(param, 0);
    const ParamPolynomial rest = poly - b;
    if (rest.is_zero())
        throw Error("equation has no '" + param + "' term to solve for");
    auto a = rest.divide_exact(ParamPolynomial::parameter(param));
    if (!a || a->depends_on(param))
        throw Error("equation is not linear in '" + param + "'");
    auto solution = (-b).divide_exact(*a);
    if (!solution)
        throw Error("solving for '" + param + "' leaves a non-polynomial quotient");
    return *solution;
}

inline int nonzero_param_coefficients(const ParamPolynomial& p, const std::string& param) {
    int n = 0;
    for (const auto& [mono, coeff] : p.terms())
        for (const auto& [var, exp] : mono)
            if (var == param)
                ++n;
    return n;
}

inline std::string join_ints(const std::vector<long long>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

class CheckpointRecorder {
public:
    explicit CheckpointRecorder(std::vector<Checkpoint>& rows) : rows_(rows) {}

    template <typename T, typename Render>
    T record(const std::string& id, const std::string& description, const std::string& citation,
             const T& computed, const T& expected, Render&& render, bool extra_ok = true) {
        Checkpoint row{id, description, citation, render(computed), render(expected),
                       computed == expected && extra_ok};
        all_passed_ &= row.passed;
        rows_.push_back(std::move(row));
        return expected; // downstream work continues from the expected value
    }

    ParamPolynomial poly(const std::string& id, const std::string& description,
                         const std::string& citation, const ParamPolynomial& computed,
                         const ParamPolynomial& expected, bool extra_ok = true) {
        return record(id, description, citation, computed, expected,
                      [](const ParamPolynomial& p) { return p.to_string(); }, extra_ok);
    }

    GradedClass cls(const std::string& id, const std::string& description,
                    const std::string& citation, const GradedClass& computed,
                    const GradedClass& expected, bool extra_ok = true) {
        return record(id, description, citation, computed, expected,
                      [](const GradedClass& c) { return c.to_string(); }, extra_ok);
    }

    std::vector<long long> ints(const std::string& id, const std::string& description,
                                const std::string& citation,
                                const std::vector<long long>& computed,
                                const std::vector<long long>& expected) {
        return record(id, description, citation, computed, expected, join_ints);
    }

    bool all_passed() const { return all_passed_; }

private:
    std::vector<Checkpoint>& rows_;
    bool all_passed_ = true;
};

struct ReplayContext {
    std::optional<Rational> s;
    RingPresentation::Ptr ez, pv, z, e;
    MapDescriptor::Ptr nu, p, gamma, pi0;

    static ReplayContext make(std::optional<Rational> s_value) {
        ReplayContext ctx;
        ctx.s = s_value;
        ctx.ez = builtin_ring("EtimesZ");
        ctx.pv = builtin_ring("PV");
        ctx.z = builtin_ring("Z");
        ctx.e = builtin_ring("E");
        ctx.nu = builtin_map("nu");
        ctx.p = builtin_map("p");
        ctx.gamma = builtin_map("gamma");
        ctx.pi0 = builtin_map("pi0");
        if (s_value) {
            auto ez = ctx.ez->substituted("s", *s_value);
            auto pv = ctx.pv->substituted("s", *s_value);
            auto z = ctx.z->substituted("s", *s_value);
            auto e = ctx.e->substituted("s", *s_value);
            ctx.nu = ctx.nu->substituted("s", *s_value, ez, z);
            ctx.p = ctx.p->substituted("s", *s_value, ez, e);
            ctx.gamma = ctx.gamma->substituted("s", *s_value, ez, pv);
            ctx.pi0 = ctx.pi0->substituted("s", *s_value, pv, z);
            ctx.ez = ez;
            ctx.pv = pv;
            ctx.z = z;
            ctx.e = e;
        }
        return ctx;
    }

    /// The normalization parameter: the symbol s, or its substituted value.
    ParamPolynomial s_poly() const {
        return s ? ParamPolynomial(*s) : ParamPolynomial::parameter("s");
    }

    /// c0 + c1 * s, substituted when running at a fixed s.
    ParamPolynomial linear_in_s(long long c0, long long c1) const {
        return ParamPolynomial(c0) + ParamPolynomial(c1) * s_poly();
    }
};

} // namespace detail

inline ReplayReport run_replay(std::optional<Rational> s_value = std::nullopt) {
    const auto ctx = detail::ReplayContext::make(s_value);
    ReplayReport report;
    report.substitution = s_value;
    detail::CheckpointRecorder rec(report.checkpoints);

    const GradedClass pt_z = ctx.z->basis_class("pt");

    // 1. Dimension counts at genus 11.
    {
        const HurwitzDims d = hurwitz_dims(11);
        rec.ints("hurwitz-dims", "Hurwitz-space dimension counts at genus 11",
                 "dimension counts",
                 {d.dim_hurwitz, d.dim_bielliptic, d.dim_preimage, d.codim_preimage,
                  d.codim_bielliptic},
                 {25, 20, 21, 4, 10});
    }

    // 2. Ranks of the fiberwise multiplication map.
    rec.ints("mu-ranks", "section counts giving the multiplication-map ranks",
             "multiplication-map ranks",
             {static_cast<long long>(h0(SplittingType{-1, 5})) * h0(SplittingType{1}),
              static_cast<long long>(h0(SplittingType{0, 6}))},
             {12, 8});

    // 3. Expected codimension of the rank-7 locus.
    {
        const auto problem =
            DegeneracyProblem::make(12, 8, 7, ctx.z->one(), ctx.z->one());
        rec.ints("expected-codim", "expected codimension of the rank-7 locus",
                 "expected-codimension formula", {expected_codim(problem)}, {5});
    }

    // 4. Adjunction re-derivation of the diagonal self-intersection: solve
    // 2g - 2 = (K + Delta) * Delta with K = 0 and g = 1 for the unknown
    // table entry, then compare with the shipped presentation.
    {
        RingData data = ctx.ez->to_data();
        data.name = "EtimesZ-adjunction";
        data.parameters.push_back("dsq");
        bool found = false;
        for (auto& prod : data.products)
            if (prod.a == "Delta" && prod.b == "Delta") {
                prod.value = {{"pt", ParamPolynomial::parameter("dsq")}};
                found = true;
            }
        if (!found)
            data.products.push_back({"Delta", "Delta", {{"pt", ParamPolynomial::parameter("dsq")}}});
        const auto probe = RingPresentation::make(data);
        const GradedClass diag = probe->basis_class("Delta");
        const GradedClass canonical = probe->zero(); // trivial canonical class
        const ParamPolynomial genus_side = ParamPolynomial(2 * 1 - 2);
        const ParamPolynomial solved =
            detail::solve_linear(integrate((canonical + diag) * diag) - genus_side, "dsq");
        const ParamPolynomial table =
            integrate(ctx.ez->basis_class("Delta") * ctx.ez->basis_class("Delta"));
        rec.record(
            "diagonal-self-intersection",
            "adjunction re-derivation of the diagonal self-intersection",
            "adjunction on the product surface",
            std::vector<ParamPolynomial>{solved, table},
            std::vector<ParamPolynomial>{ParamPolynomial(0), ParamPolynomial(0)},
            [](const std::vector<ParamPolynomial>& v) {
                return "solved = " + v[0].to_string() + ", table = " + v[1].to_string();
            });
    }

    // 5. GRR along the vertical projection: rank 2, c1 = 1 + 2s.
    const GradedClass poincare_c1 = ctx.ez->basis_class("Delta") + ctx.ez->basis_class("h") +
                                    ctx.s_poly() * ctx.ez->basis_class("v");
    GradedClass ch_v = rec.cls(
        "universal-bundle-c1",
        "rank and degree of the pushed rank-2 bundle along the vertical projection",
        "vertical-projection GRR", grr_push(*ctx.nu, line_bundle(poincare_c1)),
        Rational(2) * ctx.z->one() + ctx.linear_in_s(1, 2) * pt_z);
    const ParamPolynomial c1_v = integrate(ch_v);

    // 6. Degree of z^2 on the projectivized bundle.
    rec.poly("deg-z-squared", "degree of the squared hyperplane class",
             "projective-bundle relation",
             integrate(ctx.pv->basis_class("z") * ctx.pv->basis_class("z")),
             ctx.linear_in_s(1, 2));

    // 7. Pullback of the relative tangent class, independent of s.
    const GradedClass rel_tangent_c1 =
        Rational(2) * ctx.pv->basis_class("z") - c1_v * ctx.pv->basis_class("vbar");
    GradedClass rel_tangent_pulled;
    {
        const GradedClass computed = pull(*ctx.gamma, rel_tangent_c1);
        bool s_free = true;
        for (const auto& [i, coeff] : computed.coeffs())
            s_free &= !coeff.depends_on("s");
        rel_tangent_pulled = rec.cls(
            "relative-tangent-pullback",
            "pullback of the relative tangent class, with the s terms cancelling",
            "relative tangent pullback", computed,
            Rational(2) * ctx.ez->basis_class("Delta") + Rational(2) * ctx.ez->basis_class("h") -
                ctx.ez->basis_class("v"),
            s_free);
    }

    // 8. Character of the pulled-back rank-2 direct image, from its degree
    // 1 - 11 = -10 on the horizontal curve.
    const SheafClass s_bundle(2, ctx.e->one() + Rational(1 - 11) * ctx.e->basis_class("pt"));
    const SheafClass pulled_s = pull(*ctx.p, s_bundle);
    GradedClass ch_ps = rec.cls(
        "pushed-structure-sheaf-ch", "Chern character of the pulled-back rank-2 direct image",
        "direct-image character", chern_character(pulled_s),
        Rational(2) * ctx.ez->one() - Rational(10) * ctx.ez->basis_class("h"));

    // 9. Degree of the codimension-2 character component of the twist.
    const GradedClass ch_twist = ch_ps * chern_character(line_bundle(rel_tangent_pulled));
    rec.poly("twisted-ch2-degree",
             "degree of the codimension-2 component of the twisted character",
             "character-degree computation", integrate(truncate(ch_twist, 2)),
             ParamPolynomial(-10));

    // 10. Normal-bundle degree along the fiber equals the pushed character's
    // codimension-1 degree.
    const ParamPolynomial normal_degree = rec.poly(
        "normal-bundle-degree", "normal-bundle degree along the fiber",
        "tangent-degree bookkeeping",
        integrate(truncate(grr_push(*ctx.nu, ch_twist), 1)), ParamPolynomial(-10));

    // 11. Pushforward of the horizontal fiber class via the pairing solver.
    rec.cls("gamma-push-h", "pushforward of the horizontal fiber class",
            "push-pull pairing", push(*ctx.gamma, ctx.ez->basis_class("h")),
            ctx.pv->basis_class("z") - ctx.s_poly() * ctx.pv->basis_class("vbar"));

    // 12. GRR along the degree-2 cover: codimension-1 part of the pushed
    // character.
    const GradedClass pushed_c1 = rec.cls(
        "pushed-bundle-c1", "first Chern class of the pushed direct image",
        "finite-cover GRR", truncate(grr_push(*ctx.gamma, ch_ps), 1),
        Rational(-14) * ctx.pv->basis_class("z") +
            ctx.linear_in_s(2, 14) * ctx.pv->basis_class("vbar"));

    // 13. Determinant twist and its pushforward degree, in one checkpoint.
    ParamPolynomial det_twist_degree;
    {
        const GradedClass c1_rank3 = -pushed_c1;
        const GradedClass twist = c1_rank3 - Rational(14) * ctx.pv->basis_class("z");
        const GradedClass twist_expected = -ctx.linear_in_s(2, 14) * ctx.pv->basis_class("vbar");
        const ParamPolynomial pushed_degree =
            integrate(truncate(grr_push(*ctx.pi0, line_bundle(twist_expected)), 1));
        const auto carried = rec.record(
            "det-twist-degree", "determinant twist of the rank-3 bundle and its pushed degree",
            "determinant twist pushforward",
            std::make_pair(twist, pushed_degree),
            std::make_pair(twist_expected, -ctx.linear_in_s(2, 14)),
            [](const std::pair<GradedClass, ParamPolynomial>& v) {
                return "class = " + v.first.to_string() + ", pushed degree = " +
                       v.second.to_string();
            });
        det_twist_degree = carried.second;
    }

    // 14. First filtration line bundle: deg(det V^v ⊗ L^v) = 0 because the
    // fiber is an elliptic curve, solved for c1(L).
    ParamPolynomial c1_l;
    {
        const ParamPolynomial unknown = ParamPolynomial::parameter("c1L");
        const ParamPolynomial tangent_degree = -c1_v - unknown; // deg of detV^v ⊗ L^v
        c1_l = rec.poly("hn-L-degree",
                        "degree of the distinguished quotient line bundle from "
                        "fiber-tangent triviality",
                        "fiber tangent triviality",
                        detail::solve_linear(tangent_degree, "c1L"), -ctx.linear_in_s(1, 2));
    }

    // 15. M = L^2.
    const ParamPolynomial c1_m =
        rec.poly("hn-M-degree", "degree of the cokernel line bundle (square of L)",
                 "square of the distinguished quotient", Rational(2) * c1_l,
                 ctx.linear_in_s(-2, -4));

    // 16. N from the determinant filtration.
    const ParamPolynomial c1_n =
        rec.poly("hn-N-degree", "degree of the sub line bundle from the determinant filtration",
                 "determinant filtration", -c1_m + det_twist_degree, ctx.linear_in_s(0, -10));

    // 17. Kernel-bundle degree via the symmetric power.
    ParamPolynomial c1_k;
    {
        const SheafClass v_bundle(2, ctx.z->one() + c1_v * pt_z);
        const SheafClass sym4 = sym_power_rank2(v_bundle, 4);
        const SheafClass twist_line = line_bundle((c1_n + c1_v) * pt_z);
        const auto carried = rec.record(
            "kernel-c1", "kernel-bundle rank and degree via the symmetric-power splitting",
            "symmetric-power splitting",
            std::make_pair(static_cast<long long>(sym4.rank()),
                           integrate(tensor_c1(sym4, twist_line))),
            std::make_pair(static_cast<long long>(5),
                           Rational(5) * c1_n + Rational(15) * c1_v),
            [](const std::pair<long long, ParamPolynomial>& v) {
                return "rank = " + std::to_string(v.first) + ", degree = " +
                       v.second.to_string();
            });
        c1_k = carried.second;
    }

    // 18. First Chern class of Hom(kernel, cokernel).
    ParamPolynomial hom_degree;
    {
        const SheafClass kernel(5, ctx.z->one() + c1_k * pt_z);
        const SheafClass cokernel = line_bundle(c1_m * pt_z);
        hom_degree = rec.poly(
            "hom-bundle-c1", "first Chern class of Hom(kernel, cokernel)",
            "hom-bundle first Chern class", integrate(tensor_c1(dual(kernel), cokernel)),
            Rational(5) * c1_m - Rational(5) * c1_n - Rational(15) * c1_v);
    }

    // 19. The excess-intersection degree, with the s terms cancelling.
    {
        const GradedClass c_hom = ctx.z->one() + hom_degree * pt_z;
        const GradedClass c_normal = ctx.z->one() + normal_degree * pt_z;
        const ParamPolynomial computed = integrate(excess_term(c_hom, c_normal, 1));
        report.final_degree = computed;
        report.nonzero_s_coefficients = detail::nonzero_param_coefficients(computed, "s");
        rec.poly("excess-degree", "excess-intersection degree with the s terms cancelling",
                 "excess-intersection term", computed, ParamPolynomial(-15),
                 report.nonzero_s_coefficients == 0);
    }

    // 20. The corank certificate for the multiplication matrices.
    {
        const RationalMatrix degenerate = mult_map_matrix(SplittingType{-1, 5}, 1);
        const RationalMatrix balanced = mult_map_matrix(SplittingType{2, 2}, 1);
        rec.ints("corank-certificate", "fiberwise multiplication-matrix dimensions and coranks",
                 "fiberwise multiplication matrix",
                 {static_cast<long long>(degenerate.rows), static_cast<long long>(degenerate.cols),
                  static_cast<long long>(rank(degenerate)), static_cast<long long>(corank(degenerate)),
                  static_cast<long long>(balanced.rows), static_cast<long long>(balanced.cols),
                  static_cast<long long>(rank(balanced)), static_cast<long long>(corank(balanced))},
                 {8, 12, 7, 1, 8, 12, 8, 0});
    }

    // 21. The final sum, term by term.
    {
        const ParamPolynomial literal = ParamPolynomial(-10) + ctx.linear_in_s(0, -20) +
                                        ctx.linear_in_s(0, 50) + ParamPolynomial(-15) +
                                        ctx.linear_in_s(0, -30) + ParamPolynomial(10);
        const ParamPolynomial assembled =
            Rational(5) * c1_m - Rational(5) * c1_n - Rational(15) * c1_v - normal_degree;
        rec.record(
            "final-sum", "term-by-term final cancellation", "term-by-term cancellation",
            std::vector<ParamPolynomial>{literal, assembled},
            std::vector<ParamPolynomial>{ParamPolynomial(-15), ParamPolynomial(-15)},
            [](const std::vector<ParamPolynomial>& v) {
                return "literal = " + v[0].to_string() + ", assembled = " + v[1].to_string();
            });
    }

    if (s_value) {
        report.parameter_substitutions.emplace_back(*s_value, report.final_degree);
    } else {
        for (const auto& q : {Rational(-1) / 2, Rational(0), Rational(1), Rational(7),
                              Rational(-3) / 5})
            report.parameter_substitutions.emplace_back(q,
                                                        report.final_degree.substitute("s", q));
    }

    report.annotations = {
        "input: the fiber over a point of the bielliptic locus is an elliptic curve, and "
        "the diagonal class has genus 1",
        "input hypothesis: the degeneracy locus is a local complete intersection in the "
        "ambient family, so the excess-intersection term applies",
        "structural input: kernel bundle = N ⊗ det(V) ⊗ Sym^4(V) and cokernel = M, from "
        "the multiplication-map filtration",
        "structural input: M = L^2, via the non-vanishing section of M^v ⊗ L^2",
        "structural input: the rank-2 and rank-3 determinants agree, which feeds the "
        "determinant twist",
    };

    report.overall = rec.all_passed();
    return report;
}

/// Byte-stable structured rendering: fixed key order, canonical "p/q"
/// rationals, two-space indentation, trailing newline.
inline std::string replay_report_json(const ReplayReport& report) {
    nlohmann::ordered_json j;
    j["paper"] = report.subject;
    j["mode"] = report.substitution ? "substituted" : "symbolic";
    if (report.substitution)
        j["s"] = to_string(*report.substitution);
    j["checkpoints"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checkpoints)
        j["checkpoints"].push_back({{"id", c.id},
                                    {"description", c.description},
                                    {"computed", c.computed},
                                    {"expected", c.expected},
                                    {"citation", c.citation},
                                    {"status", c.passed ? "pass" : "fail"}});
    j["final_degree"] = report.final_degree.to_string();
    j["s_coefficients"] = report.nonzero_s_coefficients;
    j["parameter_substitutions"] = nlohmann::ordered_json::array();
    for (const auto& [s, degree] : report.parameter_substitutions)
        j["parameter_substitutions"].push_back(
            {{"s", to_string(s)}, {"final_degree", degree.to_string()}});
    j["overall"] = report.overall ? "pass" : "fail";
    j["annotations"] = report.annotations;
    return j.dump(2) + "\n";
}

/// Aligned-column text rendering, ending with the one-line verdict.
inline std::string replay_report_text(const ReplayReport& report, bool color = false) {
    const char* green = color ? "\033[32m" : "";
    const char* red = color ? "\033[31m" : "";
    const char* reset = color ? "\033[0m" : "";

    std::string out = "mode: ";
    out += report.substitution ? "substituted" : "symbolic";
    out += "\n";
    if (report.substitution)
        out += "substitution: s = " + to_string(*report.substitution) + "\n";

    std::size_t id_width = 2, value_width = 8;
    for (const auto& c : report.checkpoints) {
        id_width = std::max(id_width, c.id.size());
        value_width = std::max(value_width, c.computed.size());
    }
    std::size_t index = 0;
    for (const auto& c : report.checkpoints) {
        ++index;
        std::string line = (index < 10 ? " " : "") + std::to_string(index) + "  ";
        line += c.id + std::string(id_width - c.id.size() + 2, ' ');
        line += c.passed ? std::string(green) + "pass" + reset
                         : std::string(red) + "FAIL" + reset;
        line += "  computed: " + c.computed + std::string(value_width - c.computed.size() + 2, ' ');
        line += "expected: " + c.expected;
        line += "  [" + c.citation + "]";
        out += line + "\n";
    }
    for (const auto& a : report.annotations)
        out += "note: " + a + "\n";
    for (const auto& [s, degree] : report.parameter_substitutions)
        out += "at s = " + to_string(s) + ": final degree " + degree.to_string() + "\n";
    out += "final degree: " + report.final_degree.to_string() +
           "  s-coefficients: " + std::to_string(report.nonzero_s_coefficients) +
           "  OVERALL: " + (report.overall ? "PASS" : "FAIL") + "\n";
    return out;
}

} // namespace chowcalc

#endif
