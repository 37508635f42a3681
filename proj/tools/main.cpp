#include "CLI11.hpp"
#include "commands.hpp"

#include <functional>
#include <iostream>

using namespace sschr;

namespace {

struct Options {
    std::string algebra = "ssch1";
    std::string d = "0";
    std::string m = "0";
    std::string r = "0";
    std::optional<int> cutoff;
    int degree = 8;
    std::string weight;
    int epsilon = 0;
    int lambda = 0;
    std::string format = "json";
};

void addModuleOptions(CLI::App* cmd, Options& opt) {
    cmd->add_option("--algebra", opt.algebra, "sch1, ssch1 or ssch2")->required();
    cmd->add_option("--d", opt.d, "Conformal weight d (p/q)");
    cmd->add_option("--m", opt.m, "Mass m (p/q)");
    cmd->add_option("--r", opt.r, "R-charge r for ssch2 (p/q)");
}

void addCutoff(CLI::App* cmd, Options& opt) {
    cmd->add_option("--max-degree,--cutoff", opt.cutoff, "Module degree cutoff (default $SSCHR_CUTOFF or 12)");
}

cli::RunConfig config(const Options& opt) {
    cli::RunConfig cfg;
    cfg.kind = parseKind(opt.algebra);
    cfg.d = parseRational(opt.d);
    cfg.m = parseRational(opt.m);
    cfg.r = parseRational(opt.r);
    cfg.cutoff = opt.cutoff ? *opt.cutoff : cli::defaultCutoff();
    cfg.polyDegree = opt.degree;
    if (!opt.weight.empty()) cfg.weight = cli::parseWeight(opt.weight);
    cfg.epsilon = opt.epsilon;
    cfg.lambda = opt.lambda;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Super Schrödinger algebras: Verma modules, singular vectors, classification"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    std::function<cli::CommandResult(const cli::RunConfig&)> run;

    auto* algebra = app.add_subcommand("algebra", "Structure tables and adjoint maps");
    algebra->require_subcommand(1);
    auto* verify = algebra->add_subcommand("verify", "Super-Jacobi, antisymmetry, grading and adjoint checks");
    auto* dump = algebra->add_subcommand("dump", "Print the structure table");
    for (auto* cmd : {verify, dump}) cmd->add_option("--algebra", opt.algebra, "sch1, ssch1 or ssch2")->required();
    verify->add_option("--epsilon", opt.epsilon, "ε in {0,1}");
    verify->add_option("--lambda", opt.lambda, "λ in {0,1}");
    verify->callback([&] { run = cli::algebraVerify; });
    dump->callback([&] { run = cli::algebraDump; });

    auto* singular = app.add_subcommand("singular", "Singular vectors of Verma modules");
    singular->require_subcommand(1);
    auto* find = singular->add_subcommand("find", "Exact joint-kernel search");
    auto* check = singular->add_subcommand("check", "Compare the kernels with the closed forms");
    for (auto* cmd : {find, check}) {
        addModuleOptions(cmd, opt);
        addCutoff(cmd, opt);
    }
    find->callback([&] { run = cli::singularFind; });
    check->callback([&] { run = cli::singularCheck; });

    auto* cls = app.add_subcommand("classify", "Quotient chain and irreducible module");
    addModuleOptions(cls, opt);
    addCutoff(cls, opt);
    cls->callback([&] { run = cli::classifyCommand; });

    auto* gramCmd = app.add_subcommand("gram", "Gram matrix of the Shapovalov form at one weight");
    addModuleOptions(gramCmd, opt);
    addCutoff(gramCmd, opt);
    gramCmd->add_option("--weight", opt.weight, "n, or n1,n2 for ssch2")->required();
    gramCmd->add_option("--epsilon", opt.epsilon, "ε in {0,1}");
    gramCmd->add_option("--lambda", opt.lambda, "λ in {0,1}");
    gramCmd->callback([&] { run = cli::gramCommand; });

    auto* realization = app.add_subcommand("realization", "Vector field realizations");
    realization->require_subcommand(1);
    auto* rverify = realization->add_subcommand("verify", "Check every defining relation on superspace monomials");
    addModuleOptions(rverify, opt);
    rverify->add_option("--degree", opt.degree, "Maximal monomial degree");
    rverify->callback([&] { run = cli::realizationVerify; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    cli::CommandResult res;
    try {
        res = run(config(opt));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (opt.format == "json")
        std::cout << res.json.dump(2) << "\n";
    else
        std::cout << res.text;
    return res.exitCode;
}
