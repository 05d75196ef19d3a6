#pragma once

// Command-line front end. Exit status: 0 success, 1 a verify suite found a
// counterexample, 2 unparsable input, 3 a precondition (box, arity, range)
// was violated.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "format.hpp"
#include "verify.hpp"

namespace hasse::cli {

enum ExitCode : int { ok = 0, verify_failed = 1, bad_input = 2, bad_precondition = 3 };

namespace detail {

inline QConvention parse_convention(const std::string& name) {
    if (name == "bertram") return QConvention::bertram;
    if (name == "raw") return QConvention::raw;
    throw parse_error("unknown convention '" + name + "' (expected raw or bertram)");
}

inline std::size_t width_from_env() {
    const char* v = std::getenv("HASSE_WIDTH");
    if (v == nullptr) return 0;
    char* end = nullptr;
    const unsigned long w = std::strtoul(v, &end, 10);
    return (end != v && *end == '\0') ? static_cast<std::size_t>(w) : 0;
}

struct Options {
    bool json = false;
    bool unicode = false;

    int h = 0;
    std::string mono;
    std::string partition;
    std::optional<std::size_t> k;
    std::optional<int> n;
    bool quantum = false;
    std::string convention = "bertram";

    std::string lhs;
    std::string rhs;
    std::string classes;
    int degree = 0;

    std::string suite;
    std::size_t max_k = 3;
    int max_index = 8;
    int max_h = 4;
    int max_part = 4;
    int extra = 4;
};

inline GrassContext require_context(const Options& o, const char* what) {
    if (!o.k || !o.n) throw precondition_error(std::string(what) + " needs both --k and --n");
    return GrassContext(*o.k, *o.n);
}

inline Monomial monomial_argument(const Options& o) {
    if (!o.mono.empty() && !o.partition.empty()) throw parse_error("give either --mono or --partition, not both");
    if (!o.partition.empty() || (o.mono.empty() && o.k)) {
        if (!o.k) throw precondition_error("--partition needs --k");
        return partition_to_monomial(parse_partition(o.partition), *o.k);
    }
    const Monomial m = parse_monomial(o.mono);
    if (o.k && *o.k != m.arity())
        throw precondition_error("monomial has arity " + std::to_string(m.arity()) + " but --k is " +
                                 std::to_string(*o.k));
    return m;
}

inline int cmd_pieri(const Options& o, const TextStyle& style, std::ostream& out) {
    const Monomial m = monomial_argument(o);
    if (o.h < 0) throw precondition_error("--h must be non-negative");
    Element result;
    if (o.quantum) {
        if (!o.n) throw precondition_error("--quantum needs --n");
        const GrassContext ctx(o.k.value_or(m.arity()), *o.n);
        result = to_convention(quantum_dh(ctx, o.h, m), ctx.k(), parse_convention(o.convention));
    } else if (o.n) {
        const GrassContext ctx(o.k.value_or(m.arity()), *o.n);
        if (!ctx.contains(m)) throw precondition_error("monomial " + render(m) + " is not inside M_" + std::to_string(ctx.n()));
        result = project_pn(ctx, d_h_pieri(o.h, m));
    } else {
        result = d_h_pieri(o.h, m);
    }
    if (o.json) {
        out << to_json(result).dump() << "\n";
    } else {
        out << render(result, style) << "\n" << render_as_classes(result, style) << "\n";
    }
    return ok;
}

inline int cmd_product(const Options& o, const TextStyle& style, std::ostream& out) {
    const GrassContext ctx = require_context(o, "product");
    const SchubertExpansion e =
        schubert_product(ctx, parse_partition(o.lhs), parse_partition(o.rhs), o.quantum, parse_convention(o.convention));
    out << (o.json ? to_json(e).dump() : render(e, style)) << "\n";
    return ok;
}

inline int print_integer(const Options& o, const Integer& v, std::ostream& out) {
    if (o.json)
        out << json{{"value", to_string(v)}}.dump() << "\n";
    else
        out << v << "\n";
    return ok;
}

inline int cmd_giambelli(const Options& o, const TextStyle& style, std::ostream& out) {
    const OperatorPoly p = giambelli_solve(monomial_argument(o));
    out << (o.json ? to_json(p).dump() : render(p, style)) << "\n";
    return ok;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    auto ctx = [&] { return require_context(o, "this suite"); };
    verify::Report r;
    if (o.suite == "pieri-vs-leibniz") {
        r = verify::pieri_vs_leibniz(o.max_k, o.max_index, o.max_h);
    } else if (o.suite == "prefix") {
        r = verify::prefix_factoring(o.max_k, o.max_index, o.max_h);
    } else if (o.suite == "giambelli") {
        if (!o.k) throw precondition_error("giambelli suite needs --k");
        r = verify::giambelli_reconstruction(*o.k, o.max_part);
    } else if (o.suite == "duality") {
        r = verify::duality(ctx());
    } else if (o.suite == "lr") {
        r = verify::littlewood_richardson(ctx());
    } else if (o.suite == "syt") {
        r = verify::sigma1_power(ctx());
    } else if (o.suite == "null-map") {
        r = verify::null_map(ctx(), o.extra);
    } else if (o.suite == "quantum-reduction") {
        r = verify::quantum_reduction(ctx());
    } else if (o.suite == "positivity") {
        r = verify::quantum_positivity(ctx());
    } else {
        throw parse_error("unknown verify suite '" + o.suite + "'");
    }
    if (o.json)
        out << json{{"suite", r.suite}, {"cases", r.cases}, {"passed", r.passed()},
                    {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)}}
                   .dump()
            << "\n";
    else
        out << r.summary() << "\n";
    return r.passed() ? ok : verify_failed;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    detail::Options o;
    CLI::App app{"Schubert calculus through the Schubert derivation on exterior powers"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "Machine-readable output");
    app.add_flag("--unicode", o.unicode, "Unicode symbols in text output");

    // --h is an operator index, so help is --help only
    auto add_ctx = [&](CLI::App* sub) {
        sub->add_option("--k", o.k, "Arity k of G_k(C^n)");
        sub->add_option("--n", o.n, "Ambient rank n");
    };
    auto add_convention = [&](CLI::App* sub) {
        sub->add_option("--convention", o.convention, "q sign convention: bertram (default) or raw");
    };

    auto* pieri = app.add_subcommand("pieri", "Apply D_h to a monomial (optionally projected or quantum-reduced)");
    pieri->set_help_flag("--help", "Print this help message and exit");
    pieri->add_option("--h", o.h, "Operator index h")->required();
    pieri->add_option("--mono", o.mono, "Monomial as comma-separated strictly increasing indices");
    pieri->add_option("--partition", o.partition, "Partition as comma-separated parts (needs --k)");
    add_ctx(pieri);
    pieri->add_flag("--quantum", o.quantum, "Quantum-reduced operator (needs --n)");
    add_convention(pieri);

    auto* product = app.add_subcommand("product", "Product of two Schubert classes");
    product->set_help_flag("--help", "Print this help message and exit");
    add_ctx(product);
    product->add_option("--lhs", o.lhs, "Left class (partition; empty for sigma_0)")->required();
    product->add_option("--rhs", o.rhs, "Right class (partition; empty for sigma_0)")->required();
    product->add_flag("--quantum", o.quantum, "Small quantum product");
    add_convention(product);

    auto* intersect = app.add_subcommand("intersect", "Intersection number of Schubert classes");
    intersect->set_help_flag("--help", "Print this help message and exit");
    add_ctx(intersect);
    intersect->add_option("--classes", o.classes, "Semicolon-separated partitions")->required();

    auto* gw = app.add_subcommand("gw", "Degree-d Gromov-Witten number (Bertram convention)");
    gw->set_help_flag("--help", "Print this help message and exit");
    add_ctx(gw);
    gw->add_option("--classes", o.classes, "Semicolon-separated partitions")->required();
    gw->add_option("--degree", o.degree, "Curve degree d")->required();

    auto* giambelli = app.add_subcommand("giambelli", "Operator polynomial G(D) with m = G(D)(e1^...^ek)");
    giambelli->set_help_flag("--help", "Print this help message and exit");
    giambelli->add_option("--mono", o.mono, "Monomial as comma-separated strictly increasing indices");
    giambelli->add_option("--partition", o.partition, "Partition (needs --k)");
    giambelli->add_option("--k", o.k, "Arity for --partition");

    auto* verify = app.add_subcommand("verify", "Run an oracle-equivalence sweep");
    verify->set_help_flag("--help", "Print this help message and exit");
    verify->add_option("suite", o.suite,
                       "pieri-vs-leibniz | prefix | giambelli | duality | lr | syt | null-map | quantum-reduction | "
                       "positivity")
        ->required();
    add_ctx(verify);
    verify->add_option("--max-k", o.max_k, "Largest arity in sweeps");
    verify->add_option("--max-index", o.max_index, "Largest index in sweeps");
    verify->add_option("--max-h", o.max_h, "Largest h in sweeps");
    verify->add_option("--max-part", o.max_part, "Largest part for the giambelli suite");
    verify->add_option("--extra", o.extra, "How many h past n the null-map suite checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }

    const TextStyle style{o.unicode, detail::width_from_env()};
    try {
        if (*pieri) return detail::cmd_pieri(o, style, out);
        if (*product) return detail::cmd_product(o, style, out);
        if (*intersect)
            return detail::print_integer(
                o, intersection_number(detail::require_context(o, "intersect"), parse_partition_list(o.classes)), out);
        if (*gw)
            return detail::print_integer(
                o, gw_number(detail::require_context(o, "gw"), parse_partition_list(o.classes), o.degree), out);
        if (*giambelli) return detail::cmd_giambelli(o, style, out);
        if (*verify) return detail::cmd_verify(o, out);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return bad_precondition;
    }
    return bad_input;
}

}  // namespace hasse::cli
