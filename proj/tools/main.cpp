#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclecalc/dsl/eval.hpp"
#include "cyclecalc/dsl/lexer.hpp"
#include "cyclecalc/dsl/parser.hpp"
#include "cyclecalc/errors.hpp"
#include "cyclecalc/exact_linalg.hpp"
#include "cyclecalc/gonal.hpp"
#include "cyclecalc/verify.hpp"

namespace {

using namespace cyclecalc;

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

int run_eval(const std::string& source, int genus, std::optional<int> gonality, const std::string& level, bool json) {
    const dsl::ExprPtr e = dsl::parse(source);
    const dsl::Type t = dsl::typecheck(*e);
    const dsl::EvalContext ctx = dsl::EvalContext::make(genus, gonality, level);
    const std::string value = dsl::render(dsl::evaluate(*e, ctx));
    if (json) {
        nlohmann::ordered_json j;
        j["expr"] = source;
        j["tree"] = dsl::tree(*e);
        j["pretty"] = dsl::pretty(*e);
        j["type"] = dsl::to_string(t);
        j["genus"] = genus;
        j["gonality"] = gonality ? nlohmann::ordered_json(*gonality) : nlohmann::ordered_json();
        j["level"] = ctx.level.name();
        j["value"] = value;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "tree:   " << dsl::tree(*e) << "\n"
                  << "pretty: " << dsl::pretty(*e) << "\n"
                  << "type:   " << dsl::to_string(t) << "\n"
                  << "value:  " << value << "\n";
    }
    return exit_pass;
}

int run_verify(VerifyOptions opts, const std::optional<std::string>& json_out) {
    const Report r = verify_all(opts);
    if (json_out) {
        const std::string text = to_json(r);
        if (*json_out == "-") {
            std::cout << text;
        } else {
            std::ofstream f(*json_out, std::ios::binary);
            if (!f) {
                std::cerr << "cannot write " << *json_out << "\n";
                return exit_usage;
            }
            f << text;
            std::cout << r.passed() << " passed, " << r.failed() << " failed, " << r.checks.size() << " checks\n";
        }
    } else {
        std::cout << to_text(r);
    }
    return r.failed() == 0 ? exit_pass : exit_fail;
}

int run_decompose(int genus, int gonality) {
    const GonalContext ctx(genus, gonality);
    if (ctx.exceeds_gonality_bound()) std::cerr << "warning: " << ctx.warning() << "\n";
    if (gonality == 3 || gonality == 4) {
        std::cout << closed_forms(ctx).str() << "\n";
        return exit_pass;
    }
    const ClosedForms f = express_components(ctx, default_basis(gonality));
    std::cout << "spanning basis:";
    for (const auto& l : f.labels) std::cout << " " << l;
    std::cout << "\n" << f.str() << "\n";
    return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact correspondence calculus on Jacobians"};
    app.require_subcommand(1);

    std::string source;
    int genus = 0;
    std::optional<int> gonality;
    std::string level = "chow";
    bool json = false;
    auto* eval = app.add_subcommand("eval", "Evaluate a DSL expression");
    eval->add_option("expr", source, "expression, e.g. \"pi(2*g-2) @ C\"")->required();
    eval->add_option("--genus,-g", genus, "genus")->required()->check(CLI::Range(1, 64));
    eval->add_option("--gonality,-d", gonality, "gonality")->check(CLI::Range(2, 64));
    eval->add_option("--modulo,-m", level, "equivalence level")->check(CLI::IsMember({"chow", "hom", "aj", "alg"}));
    eval->add_flag("--json", json, "print a JSON object");

    VerifyOptions vopts;
    std::optional<std::string> json_out;
    bool sequential = false;
    auto* verify = app.add_subcommand("verify", "Run every identity check");
    verify->add_option("--genus-max", vopts.genus_max, "largest genus")->check(CLI::Range(1, 12));
    verify->add_option("--gonality-max", vopts.gonality_max, "largest gonality")->check(CLI::Range(2, 12));
    verify->add_option("--json", json_out, "write the JSON report to a file, or - for stdout");
    verify->add_flag("--inject-fault", vopts.inject_fault, "append a failing check");
    verify->add_flag("--sequential", sequential, "run suites on one thread");

    int dgenus = 0;
    int dgonality = 0;
    auto* decompose = app.add_subcommand("decompose", "Express C_(i) through push-forwards of C");
    decompose->add_option("--genus,-g", dgenus, "genus")->required()->check(CLI::Range(1, 64));
    decompose->add_option("--gonality,-d", dgonality, "gonality")->required()->check(CLI::Range(2, 64));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*eval) return run_eval(source, genus, gonality, level, json);
        if (*verify) {
            vopts.parallel = !sequential;
            return run_verify(vopts, json_out);
        }
        return run_decompose(dgenus, dgonality);
    } catch (const dsl::SyntaxError& e) {
        std::cerr << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {  // DomainError, GenusMismatch
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_fail;
    }
}
