// Batch verification CLI.
//
//   verify dn --n 4..8 | e6 | e7 | all
//     --seed <u64>            sampling seed (default 0)
//     --samples <k>           sample count per randomized check (default 100)
//     --out <path>            report destination (default stdout)
//     --format json|text      report format (default json)
//     --check-prescriptions   include pullback-prescription feasibility verdicts
//
// Exit code: 0 all claims pass, 1 some claim failed, 2 usage error.

#include "minorb/scenarios.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

// "4", "4..8"
bool parse_range(const std::string& s, std::vector<int>& out) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            out.push_back(std::stoi(s));
        } else {
            const int lo = std::stoi(s.substr(0, dots));
            const int hi = std::stoi(s.substr(dots + 2));
            if (hi < lo) return false;
            for (int n = lo; n <= hi; ++n) out.push_back(n);
        }
    } catch (const std::exception&) {
        return false;
    }
    for (int n : out)
        if (n < 4) return false;
    return !out.empty();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suite for minimal nilpotent orbit computations"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::uint64_t seed = 0;
    std::size_t samples = 100;
    std::string out_path;
    std::string format = "json";
    bool check_prescriptions = false;
    std::string n_range = "4..8";

    app.add_option("--seed", seed, "sampling seed");
    app.add_option("--samples", samples, "sample count per randomized check");
    app.add_option("--out", out_path, "report path (default: stdout)");
    app.add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--check-prescriptions", check_prescriptions,
                 "include pullback-prescription feasibility verdicts");

    auto* cmd_dn = app.add_subcommand("dn", "type D_n suite");
    cmd_dn->add_option("--n", n_range, "n or a range like 4..8 (n >= 4)");
    auto* cmd_e6 = app.add_subcommand("e6", "type E6 suite");
    auto* cmd_e7 = app.add_subcommand("e7", "type E7 suite");
    auto* cmd_all = app.add_subcommand("all", "every suite");
    cmd_all->add_option("--n", n_range, "D_n range for the combined run");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::vector<int> dn_range;
    const bool want_dn = cmd_dn->parsed() || cmd_all->parsed();
    if (want_dn && !parse_range(n_range, dn_range)) {
        std::cerr << "invalid --n range: " << n_range << " (need n >= 4)\n";
        return 2;
    }

    minorb::ScenarioOptions opt;
    opt.seed = seed;
    opt.samples = samples;
    opt.check_prescriptions = check_prescriptions;

    try {
        const minorb::VerificationReport rep = minorb::run_scenarios(
            dn_range, cmd_e6->parsed() || cmd_all->parsed(),
            cmd_e7->parsed() || cmd_all->parsed(), opt);
        return minorb::emit_report(rep, format, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
