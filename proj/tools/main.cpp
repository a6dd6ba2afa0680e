// fueter-lab: command-line harness for the exact k-Cauchy-Fueter engine.

#include "fueter/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

namespace fs = std::filesystem;
using namespace fueter;

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kCompatibility = 3, kInfeasible = 4, kInternal = 5 };

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--n", cfg.n, "quaternionic dimension (space is R^{4n})")->capture_default_str();
    sub->add_option("--k", cfg.k, "spinor weight, k >= 2")->capture_default_str();
    sub->add_option("--degree", cfg.degree, "polynomial degree bound")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "PRNG seed (mt19937_64)")->capture_default_str();
    sub->add_option("--trials", cfg.trials, "number of seeded random trials")->capture_default_str();
}

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << contents;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read input file " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Reports go to --out (or stdout); extra files go next to the report, or into
/// --out when the command only produces files.
void emit(const CommandOutput& result, const RunConfig& cfg, bool out_is_directory) {
    const std::string text = dump(result.report);
    if (out_is_directory) {
        const fs::path dir = cfg.output_path.empty() ? fs::path(".") : fs::path(cfg.output_path);
        fs::create_directories(dir);
        for (const auto& [name, contents] : result.files) write_file(dir / name, contents);
        std::cout << text;
    } else if (cfg.output_path.empty()) {
        std::cout << text;
    } else {
        write_file(cfg.output_path, text);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic engine for the k-Cauchy-Fueter complex with Gaussian weight"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* identities = app.add_subcommand("verify-identities", "exact operator identities over seeded sections");
    auto* estimates = app.add_subcommand("verify-estimates", "weighted L2 estimate and energy identity");
    auto* basis = app.add_subcommand("basis", "k-regular polynomial basis and dimension table");
    auto* kernel = app.add_subcommand("kernel", "truncated Bergman kernel checks and decay profile");
    auto* solve = app.add_subcommand("solve", "minimal-norm solution of D0 u = f");
    for (auto* sub : {identities, estimates, basis, kernel, solve}) add_common(sub, cfg);
    for (auto* sub : {identities, estimates, solve})
        sub->add_option("--out", cfg.output_path, "report file (default: stdout)");
    for (auto* sub : {basis, kernel}) sub->add_option("--out", cfg.output_path, "output directory (default: .)");
    solve->add_option("--input", cfg.input_path, "V1 section JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        validate(cfg);
        CommandOutput result;
        bool out_is_directory = false;
        if (identities->parsed()) {
            result = cmd_verify_identities(cfg);
        } else if (estimates->parsed()) {
            result = cmd_verify_estimates(cfg);
        } else if (basis->parsed()) {
            result = cmd_basis(cfg);
            out_is_directory = true;
        } else if (kernel->parsed()) {
            result = cmd_kernel(cfg);
            out_is_directory = true;
        } else {
            result = cmd_solve(cfg, read_file(cfg.input_path));
        }
        emit(result, cfg, out_is_directory);
        return result.status == 0 ? kOk : kCheckFailed;
    } catch (const UsageError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const SectionParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const CompatibilityError& e) {
        std::cerr << "compatibility error: " << e.what() << "\n";
        return kCompatibility;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
}
