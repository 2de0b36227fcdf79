#include <CLI11.hpp>
#include <iostream>
#include <string>

#include "tetra/chebyshev.hpp"
#include "tetra/expr.hpp"
#include "tetra/loop.hpp"
#include "tetra/tetra_algebra.hpp"
#include "tetra/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

std::string omega_text(const tetra::OmegaCoords& c) {
    return "Omega: " + tetra::onsager_str(c.omega) + "\n" +
           "Omega': " + tetra::onsager_str(c.omega_p) + "\n" +
           "Omega'': " + tetra::onsager_str(c.omega_pp);
}

std::string omega_json(const tetra::OmegaCoords& c) {
    // Onsager textual forms under the three labels.
    return std::string("{\"Omega\": \"") + tetra::onsager_str(c.omega) + "\", \"Omega'\": \"" +
           tetra::onsager_str(c.omega_p) + "\", \"Omega''\": \"" +
           tetra::onsager_str(c.omega_pp) + "\"}";
}

int print_elem(const tetra::TetraElem& value, const std::string& format,
               const std::string& basis) {
    if (basis == "omega") {
        tetra::OmegaCoords c = tetra::omega_decompose(value);
        std::cout << (format == "json" ? omega_json(c) : omega_text(c)) << "\n";
        return kExitOk;
    }
    if (format == "json")
        std::cout << tetra::loop_json(value.nf) << "\n";
    else
        std::cout << tetra::loop_str(value.nf) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations in the tetrahedron algebra via its loop realization"};
    app.require_subcommand(1);

    std::string expr_text, format = "text", basis = "loop", perm_digits, suite = "all";
    int cheb_n = 0, max_degree = 12;
    bool shifted = false;

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate an expression to its normal form");
    eval_cmd->add_option("expr", expr_text, "bracket-word expression")->required();
    eval_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    eval_cmd->add_option("--basis", basis, "loop|omega")
        ->check(CLI::IsMember({"loop", "omega"}));

    auto* dec_cmd = app.add_subcommand("decompose",
                                       "Split an expression into its three Onsager components");
    dec_cmd->add_option("expr", expr_text, "bracket-word expression")->required();

    auto* cheb_cmd = app.add_subcommand("chebyshev", "Print a Chebyshev polynomial (second kind)");
    cheb_cmd->add_option("n", cheb_n, "index, n >= -1")->required();
    cheb_cmd->add_flag("--shifted", shifted, "print U_n(1-2T) on the coefficient ring");

    auto* act_cmd = app.add_subcommand("act", "Apply a vertex permutation to an expression");
    act_cmd->add_option("expr", expr_text, "bracket-word expression")->required();
    act_cmd->add_option("--perm", perm_digits, "images of 0,1,2,3 in order, e.g. 0132")
        ->required();
    act_cmd->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
    ver_cmd->add_option("--suite", suite,
                        "relations|table|brackets|diagrams|presentation|s4|all")
        ->required();
    ver_cmd->add_option("--max-degree", max_degree, "index bound for degree-parametric suites")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (eval_cmd->parsed()) {
            return print_elem(tetra::evaluate(tetra::parse(expr_text)), format, basis);
        }
        if (dec_cmd->parsed()) {
            std::cout << omega_text(tetra::omega_decompose(tetra::evaluate(tetra::parse(expr_text))))
                      << "\n";
            return kExitOk;
        }
        if (cheb_cmd->parsed()) {
            if (shifted)
                std::cout << tetra::ring_str(tetra::chebyshev_shifted(cheb_n)) << "\n";
            else
                std::cout << tetra::chebyshev_u(cheb_n).str("x") << "\n";
            return kExitOk;
        }
        if (act_cmd->parsed()) {
            tetra::Permutation p = tetra::perm_parse(perm_digits);
            return print_elem(tetra::s4_act(tetra::parse(expr_text), p), format, "loop");
        }
        if (ver_cmd->parsed()) {
            tetra::Report rep = tetra::run_suite(suite, max_degree);
            for (const auto& check : rep.checks)
                std::cout << (check.pass ? "ok   " : "FAIL ") << check.name << "\n";
            std::cout << "checked=" << rep.checked() << " failed=" << rep.failed() << "\n";
            return rep.ok() ? kExitOk : kExitVerifyFailed;
        }
    } catch (const tetra::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
