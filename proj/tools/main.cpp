// Command-line front end: run the certification replay, evaluate ad-hoc ring
// expressions, compute Porteous classes and multiplication-map coranks.
//
// Exit codes: 0 success, 1 computational failure or checkpoint mismatch,
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <unistd.h>

#include <CLI11.hpp>

#include "chowcalc/chowcalc.hpp"

namespace {

using namespace chowcalc;

bool use_color() {
    return ::isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
}

std::pair<std::string, Rational> parse_substitution(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        throw Error("expected a substitution of the form s=<rational>, got '" + text + "'");
    return {text.substr(0, eq), parse_rational(text.substr(eq + 1))};
}

std::vector<int> parse_int_csv(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string piece =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (piece.empty())
            throw Error("malformed integer list '" + text + "'");
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(piece, &used));
            if (used != piece.size())
                throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            throw Error("malformed integer list '" + text + "'");
        }
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

/// Comma-separated expressions, summed; a single expression works as-is.
GradedClass eval_expr_list(const std::string& text, const RingPresentation::Ptr& ring) {
    GradedClass total = ring->zero();
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string piece =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        total += evaluate_expression(piece, ring);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return total;
}

int run_replay_command(const std::optional<std::string>& subst,
                       const std::optional<std::string>& json_path) {
    std::optional<Rational> s_value;
    if (subst) {
        auto [param, value] = parse_substitution(*subst);
        if (param != "s")
            throw Error("the replay has a single parameter 's'; cannot substitute '" + param +
                        "'");
        s_value = value;
    }
    const ReplayReport report = run_replay(s_value);
    std::cout << replay_report_text(report, use_color());
    if (json_path) {
        std::ofstream out(*json_path, std::ios::binary);
        if (!out)
            throw Error("cannot write '" + *json_path + "'");
        out << replay_report_json(report);
    }
    return report.overall ? 0 : 1;
}

int run_ring_eval(const std::string& ring_name, const std::string& expr, bool integrate_it) {
    auto ring = resolve_ring(ring_name);
    GradedClass value = evaluate_expression(expr, ring);
    if (integrate_it)
        std::cout << integrate(value).to_string() << "\n";
    else
        std::cout << value.to_string() << "\n";
    return 0;
}

int run_porteous(const std::string& ring_name, const std::string& ca_text,
                 const std::string& cb_text, int a, int b, int k) {
    auto ring = resolve_ring(ring_name);
    auto problem = DegeneracyProblem::make(a, b, k, eval_expr_list(ca_text, ring),
                                           eval_expr_list(cb_text, ring));
    std::cout << "expected codim: " << expected_codim(problem) << "\n";
    std::cout << "class: " << porteous_class(problem).to_string() << "\n";
    return 0;
}

int run_mulmap(const std::string& split_csv, int twist, bool as_json) {
    const SplittingType split(parse_int_csv(split_csv));
    const RationalMatrix m = mult_map_matrix(split, twist);
    const std::size_t r = rank(m);
    if (as_json) {
        nlohmann::ordered_json j;
        j["dims"] = {m.rows, m.cols};
        j["rank"] = r;
        j["corank"] = m.rows - r;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "dims " << m.rows << "x" << m.cols << " rank " << r << " corank "
                  << (m.rows - r) << "\n";
    }
    return 0;
}

int run_rings_list() {
    for (const auto& name : builtin_ring_names()) {
        auto ring = builtin_ring(name);
        std::cout << name << "  (basis";
        for (const auto& b : ring->basis())
            std::cout << " " << b.symbol;
        std::cout << ", top codim " << ring->top_codim() << ")\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact intersection-theory calculator"};
    app.require_subcommand(1);

    auto* replay_cmd = app.add_subcommand("replay", "run the genus-11 certification replay");
    std::optional<std::string> subst, json_path;
    replay_cmd->add_option("--subst", subst, "fix the parameter, e.g. s=-1/2");
    replay_cmd->add_option("--json", json_path, "also write the structured report to a file");

    auto* ring_cmd = app.add_subcommand("ring", "operations on presented rings");
    ring_cmd->require_subcommand(1);
    auto* eval_cmd = ring_cmd->add_subcommand("eval", "evaluate an expression in a ring");
    std::string eval_ring, eval_expr;
    bool eval_integrate = false;
    eval_cmd->add_option("--ring", eval_ring, "built-in ring name or document path")->required();
    eval_cmd->add_option("--expr", eval_expr, "expression over the ring")->required();
    eval_cmd->add_flag("--integrate", eval_integrate, "print the degree instead of the class");

    auto* porteous_cmd = app.add_subcommand("porteous", "expected degeneracy-locus class");
    std::string porteous_ring, ca_text, cb_text;
    int opt_a = 0, opt_b = 0, opt_k = 0;
    porteous_cmd->add_option("--ring", porteous_ring, "built-in ring name or document path")
        ->required();
    porteous_cmd->add_option("--ca", ca_text, "total Chern class of the source (expressions, comma-separated)")
        ->required();
    porteous_cmd->add_option("--cb", cb_text, "total Chern class of the target (expressions, comma-separated)")
        ->required();
    porteous_cmd->add_option("-a", opt_a, "rank of the source bundle")->required();
    porteous_cmd->add_option("-b", opt_b, "rank of the target bundle")->required();
    porteous_cmd->add_option("-k", opt_k, "rank bound")->required();

    auto* mulmap_cmd = app.add_subcommand("mulmap", "multiplication-map matrix rank/corank");
    std::string split_csv;
    int twist = 1;
    bool mulmap_json = false;
    mulmap_cmd->add_option("--split", split_csv, "splitting type, e.g. -1,5")->required();
    mulmap_cmd->add_option("--twist", twist, "degree of the twisting space (default 1)");
    mulmap_cmd->add_flag("--json", mulmap_json, "emit a structured record");

    auto* rings_cmd = app.add_subcommand("rings", "about the built-in presentations");
    rings_cmd->require_subcommand(1);
    auto* list_cmd = rings_cmd->add_subcommand("list", "list built-in presentations");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (replay_cmd->parsed())
            return run_replay_command(subst, json_path);
        if (eval_cmd->parsed())
            return run_ring_eval(eval_ring, eval_expr, eval_integrate);
        if (porteous_cmd->parsed())
            return run_porteous(porteous_ring, ca_text, cb_text, opt_a, opt_b, opt_k);
        if (mulmap_cmd->parsed())
            return run_mulmap(split_csv, twist, mulmap_json);
        if (list_cmd->parsed())
            return run_rings_list();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
