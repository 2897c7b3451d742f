#pragma once

// Command-line front end. run() is kept separate from main() so tests can
// drive it in-process with captured streams.
//
// Exit codes: 0 success, 1 usage/parse/cap errors, 2 `verify --k` found R_k != 0.

#include "qnil/closed_forms.hpp"
#include "qnil/dnk_optimizer.hpp"
#include "qnil/gs_series.hpp"
#include "qnil/nilcheck.hpp"
#include "qnil/presentation.hpp"

#include <CLI11.hpp>  // vendored

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qnil::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_not_nilpotent = 2;

struct config {
    std::uint64_t n = 0, d = 0;
    unsigned k = 0;
    std::optional<std::size_t> max_degree;
    std::optional<std::uint64_t> mod;
    std::string file, output;
    std::string format = "text";
    bool witness = false, closed_form = false, brute_force = false, csv = false;
    std::uint64_t n_min = 1, n_max = 1;
    std::size_t cover_cap = default_cover_cap;
    std::uint64_t column_cap = default_column_cap;
};

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

inline std::string join(const std::vector<std::uint64_t>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ']';
    return os.str();
}

inline int cmd_bound(const config& c, std::ostream& out) {
    const std::size_t deg = c.max_degree.value_or(c.k ? c.k + 1 : 10);
    const auto s = gs_truncated_series(c.n, c.d, deg);
    if (c.format == "json") {
        std::vector<std::string> coeffs;
        for (const auto& x : s.coeffs) coeffs.push_back(x.str());
        out << ordered_json{{"coeffs", coeffs}, {"complete", s.complete}}.dump(2) << "\n";
    } else {
        out << s.str() << "\n";
    }
    return exit_ok;
}

inline int cmd_dnk(const config& c, std::ostream& out) {
    const auto res = dnk_exact(c.n, c.k);
    int code = exit_ok;
    out << res.value << "\n";
    if (c.witness) {
        out << "witness: " << res.witness.str() << " costs " << join(res.per_j_costs) << "\n";
        const auto w = witness_composition(c.n, c.k);
        out << "rounded alpha witness: " << w.str() << " cost " << composition_cost(w).value << "\n";
    }
    if (c.closed_form) {
        if (c.k == 4 || c.k == 5) {
            const big_int v = c.k == 4 ? d4_closed(c.n) : d5_closed(c.n);
            const bool agree = v == res.value;
            out << "closed form: " << v << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
            if (!agree) code = exit_error;
        } else {
            out << "closed form: none for k = " << c.k << "\n";
        }
    }
    if (c.brute_force) {
        const auto bf = dnk_bruteforce(c.n, c.k);
        const bool agree = bf.value == res.value;
        out << "brute force: " << bf.value << (agree ? " (agrees)" : " (DISAGREES)") << "\n";
        if (!agree) code = exit_error;
    }
    return code;
}

inline int cmd_verify(const config& c, std::ostream& out) {
    const auto p = parse(read_file(c.file));
    nilcheck_options opt;
    opt.column_cap = c.column_cap;
    if (c.mod) opt.field = field_spec::mod(*c.mod);
    std::optional<unsigned> k;
    if (c.k) k = c.k;
    const std::size_t deg = c.max_degree.value_or(k ? *k : 5);
    const auto rep = make_hilbert_report(p, deg, k, opt);
    if (c.format == "json")
        out << rep.json().dump(2) << "\n";
    else
        out << rep.text();
    return k && !rep.nilpotent ? exit_not_nilpotent : exit_ok;
}

inline int cmd_survey(const config& c, std::ostream& out) {
    if (c.n_min < 1 || c.n_max < c.n_min) throw domain_error("survey needs 1 <= n-min <= n-max");
    // columns: n, d_nk, gs_min, equal, flag (flag: Fibonacci for k = 4, n in {1,2} or 6 | n for k = 5)
    auto flag = [&](std::uint64_t n) -> std::string {
        if (c.k == 4) return is_fibonacci(n).is_fibonacci ? "true" : "false";
        if (c.k == 5) return (n <= 2 || n % 6 == 0) ? "true" : "false";
        return "";
    };
    if (c.csv)
        out << "n,d_nk,gs_min,equal,flag\n";
    else
        out << std::setw(8) << "n" << std::setw(14) << "d_nk" << std::setw(14) << "gs_min" << std::setw(7) << "equal"
            << std::setw(7) << "flag" << "\n";
    for (std::uint64_t n = c.n_min; n <= c.n_max; ++n) {
        const auto d = dnk_exact(n, c.k).value;
        const auto g = gs_min_relations(n, c.k);
        const std::string eq = d == g ? "true" : "false";
        if (c.csv)
            out << n << ',' << d << ',' << g << ',' << eq << ',' << flag(n) << "\n";
        else
            out << std::setw(8) << n << std::setw(14) << d << std::setw(14) << g << std::setw(7) << eq << std::setw(7)
                << flag(n) << "\n";
    }
    return exit_ok;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    config c;
    CLI::App app{"qnil: k-step nilpotent quadratic algebras with few relations"};
    app.require_subcommand(1);

    auto* bound = app.add_subcommand("bound", "Golod-Shafarevich series |(1 - n t + d t^2)^-1|");
    bound->add_option("--n", c.n, "generators")->required();
    bound->add_option("--d", c.d, "relations")->required();
    bound->add_option("--k", c.k, "nilpotency step (sets the default degree cap to k + 1)");
    bound->add_option("--max-degree", c.max_degree, "degree cap (default k + 1, or 10)");
    bound->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));

    auto* gsmin = app.add_subcommand("gs-min", "least d allowed by the bound for R_k = 0");
    gsmin->add_option("--n", c.n)->required()->check(CLI::PositiveNumber);
    gsmin->add_option("--k", c.k)->required()->check(CLI::Range(2u, 1000000u));

    auto* dnk = app.add_subcommand("dnk", "minimax composition number d_{n,k}");
    dnk->add_option("--n", c.n)->required()->check(CLI::PositiveNumber);
    dnk->add_option("--k", c.k)->required()->check(CLI::Range(2u, 1000000u));
    dnk->add_flag("--witness", c.witness, "print optimal and rounded-alpha compositions");
    dnk->add_flag("--closed-form", c.closed_form, "cross-check against the k = 4, 5 closed forms");
    dnk->add_flag("--brute-force", c.brute_force, "cross-check by exhaustive enumeration");

    auto* construct = app.add_subcommand("construct", "write a k-step nilpotent presentation with d_{n,k} relations");
    construct->add_option("--n", c.n)->required()->check(CLI::PositiveNumber);
    construct->add_option("--k", c.k)->required()->check(CLI::Range(2u, 1000000u));
    construct->add_option("-o,--output", c.output, "output file (default stdout)");
    construct->add_option("--cover-cap", c.cover_cap, "largest |M| for the chain cover");

    auto* verify = app.add_subcommand("verify", "graded dimensions and nilpotency of a presentation file");
    verify->add_option("--file", c.file)->required();
    verify->add_option("--k", c.k, "check R_k = 0 (exit 2 when it fails)")->check(CLI::Range(1u, 1000000u));
    verify->add_option("--max-degree", c.max_degree, "highest degree to compute (default k, or 5)");
    verify->add_option("--mod", c.mod, "work over GF(p) instead of the file's field");
    verify->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--column-cap", c.column_cap, "largest n^m accepted");

    auto* survey = app.add_subcommand("survey", "table of d_{n,k} against ceil(phi_k n^2)");
    survey->add_option("--k", c.k)->required()->check(CLI::Range(2u, 1000000u));
    survey->add_option("--n-min", c.n_min)->required();
    survey->add_option("--n-max", c.n_max)->required();
    survey->add_flag("--csv", c.csv, "CSV with header n,d_nk,gs_min,equal,flag");

    auto* fixture = app.add_subcommand("fixture-ex8", "write the 8-generator, 25-relation 4-step fixture");
    fixture->add_option("-o,--output", c.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (*bound) return detail::cmd_bound(c, out);
        if (*gsmin) {
            out << gs_min_relations(c.n, c.k) << "\n";
            return exit_ok;
        }
        if (*dnk) return detail::cmd_dnk(c, out);
        if (*construct) {
            detail::write_output(c.output, serialize(construct_presentation(c.n, c.k, c.cover_cap)), out);
            return exit_ok;
        }
        if (*verify) return detail::cmd_verify(c, out);
        if (*survey) return detail::cmd_survey(c, out);
        if (*fixture) {
            detail::write_output(c.output, serialize(ex8_fixture()), out);
            return exit_ok;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_error;
    }
    return exit_error;
}

}  // namespace qnil::cli
