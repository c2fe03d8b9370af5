#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"

#include "exclusion/incoherence.hpp"
#include "exclusion/io.hpp"
#include "exclusion/multicopy.hpp"
#include "exclusion/tolerances.hpp"

namespace {

using namespace exclusion;

constexpr int kExitAnti = 0;
constexpr int kExitNot = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInput = 65;

int exit_code(Decision d) {
    switch (d) {
        case Decision::Antidistinguishable: return kExitAnti;
        case Decision::NotAntidistinguishable: return kExitNot;
        default: return kExitInconclusive;
    }
}

Method parse_method(const std::string& name) {
    if (name == "auto") return Method::Auto;
    if (name == "closed") return Method::ClosedForm;
    if (name == "sdp") return Method::Sdp;
    throw CLI::ValidationError("--method must be auto, closed, or sdp");
}

void apply_env_tolerance() {
    if (const char* env = std::getenv("EXCLUSION_LAB_TOL")) {
        char* end = nullptr;
        const double t = std::strtod(env, &end);
        if (end != env && t > 0.0) config().povm_default = t;
    }
}

int run_check(const std::string& path, int copies, const std::string& method_name, bool as_json) {
    const StateSet set = io::load_stateset(path);
    const Verdict v = classify(set, CopySpec{copies}, parse_method(method_name));
    if (as_json) {
        std::cout << io::verdict_to_json(v, copies).dump(2) << '\n';
    } else {
        std::cout << to_string(v.decision) << " (criterion: " << v.criterion
                  << ", margin: " << v.margin << (v.borderline ? ", borderline" : "") << ")\n";
        for (const auto& [criterion, decision] : v.trail)
            std::cout << "  " << criterion << " -> " << to_string(decision) << '\n';
    }
    return exit_code(v.decision);
}

int run_mincopies(const std::string& path, int max_n, const std::string& method_name,
                  bool allow_large, bool as_json) {
    const StateSet set = io::load_stateset(path);
    std::optional<int> cap;
    if (max_n > 0) cap = max_n;
    const CopyReport r = min_copies(set, cap, parse_method(method_name), allow_large);
    if (as_json) {
        std::cout << io::copy_report_to_json(r).dump(2) << '\n';
    } else if (r.minimal_n) {
        std::cout << "minimal copies: " << *r.minimal_n << " (method: " << r.method << ")\n";
    } else {
        std::cout << "unresolved after " << r.trail.size() << " copy counts (method: " << r.method
                  << ")\n";
    }
    return r.minimal_n ? kExitAnti : kExitInconclusive;
}

int run_construct(const std::string& family, int k, double gamma, double theta, int n_copies,
                  const std::string& out_path) {
    StateSet set;
    if (family == "equiangular") {
        set = construct_equiangular_real(k, gamma);
        std::cout << "gamma: " << gamma << '\n';
    } else if (family == "qubit-family") {
        set = construct_qubit_family(theta);
        const double c = std::cos(theta / 2.0);
        std::cout << "x: " << c * c << '\n';
    } else if (family == "theorem3") {
        set = construct_theorem3(k, n_copies);
        std::cout << "gamma: " << std::real(gram_of(set).m(0, 1)) << '\n';
    } else if (family == "theorem4") {
        set = construct_theorem4(k, n_copies);
        std::cout << "gamma: " << std::real(gram_of(set).m(0, 1)) << '\n';
    } else {
        throw CLI::ValidationError("unknown family: " + family);
    }
    const io::json j = io::stateset_to_json(set);
    if (out_path.empty()) std::cout << j.dump(2) << '\n';
    else io::save_json(j, out_path);
    return kExitAnti;
}

int run_verify_povm(const std::string& states_path, const std::string& povm_path, double tol,
                    bool search) {
    const StateSet set = io::load_stateset(states_path);
    const Povm povm = io::load_povm(povm_path);
    const ExclusionReport r = verify_exclusion(set, povm, tol, search);
    if (r.pass) {
        std::cout << "pass\n";
        return kExitAnti;
    }
    std::cout << "fail\n";
    for (const auto& v : r.violations)
        std::cout << "  " << v.condition << " (outcome " << v.index << "): slack " << v.slack << '\n';
    return kExitNot;
}

int run_figure1(double theta_min, double theta_max, int steps, const std::string& out_path) {
    if (!(theta_min > 0.0 && theta_min <= theta_max &&
          theta_max <= 2.0 * std::numbers::pi / 3.0 + 1e-12 && steps >= 2))
        throw CLI::ValidationError("require 0 < theta-min <= theta-max <= 2*pi/3 and steps >= 2");
    std::vector<double> grid(steps);
    for (int i = 0; i < steps; ++i)
        grid[i] = theta_min + (theta_max - theta_min) * i / double(steps - 1);
    const std::string csv = io::sweep_to_csv(figure1_sweep(grid));
    if (out_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error("cannot write file: " + out_path);
        out << csv;
    }
    return kExitAnti;
}

}  // namespace

int main(int argc, char** argv) {
    apply_env_tolerance();

    CLI::App app{"Antidistinguishability and many-copy state exclusion toolkit"};
    app.require_subcommand(1);

    std::string states_path, povm_path, out_path, family, method_name = "auto";
    int copies = 1, max_n = 0, k = 3, n_copies = 1, steps = 200;
    double gamma = 0.0, theta = 0.0, tol = config().povm_default;
    double theta_min = 0.1, theta_max = 2.0 * std::numbers::pi / 3.0;
    bool as_json = false, allow_large = false, search = false;

    auto* check = app.add_subcommand("check", "Decide antidistinguishability of a state set");
    check->add_option("states", states_path, "state-set JSON file")->required();
    check->add_option("--copies", copies, "number of identical copies")->check(CLI::PositiveNumber);
    check->add_option("--method", method_name, "auto|closed|sdp")
        ->check(CLI::IsMember({"auto", "closed", "sdp"}));
    check->add_flag("--json", as_json, "emit a JSON report");

    auto* mincopies = app.add_subcommand("mincopies", "Minimal copies activating exclusion");
    mincopies->add_option("states", states_path, "state-set JSON file")->required();
    mincopies->add_option("--max", max_n, "cap on the searched copy count")->check(CLI::PositiveNumber);
    mincopies->add_option("--method", method_name, "auto|closed|sdp")
        ->check(CLI::IsMember({"auto", "closed", "sdp"}));
    mincopies->add_flag("--allow-large", allow_large, "lift the 512-copy safety cap");
    mincopies->add_flag("--json", as_json, "emit a JSON report");

    auto* construct = app.add_subcommand("construct", "Generate one of the named state families");
    construct->add_option("family", family, "equiangular|qubit-family|theorem3|theorem4")->required();
    construct->add_option("--k", k, "number of states");
    construct->add_option("--gamma", gamma, "equiangular inner product");
    construct->add_option("--theta", theta, "qubit family parameter");
    construct->add_option("--N", n_copies, "copy parameter for theorem3/theorem4");
    construct->add_option("--out", out_path, "output file (stdout when omitted)");

    auto* verify = app.add_subcommand("verify-povm", "Check a POVM against the exclusion conditions");
    verify->add_option("states", states_path, "state-set JSON file")->required();
    verify->add_option("povm", povm_path, "POVM JSON file")->required();
    verify->add_option("--tol", tol, "verification tolerance");
    verify->add_flag("--search", search, "search outcome-to-state assignments");

    auto* figure1 = app.add_subcommand("figure1", "Copy-count staircase for the qubit family");
    figure1->add_option("--theta-min", theta_min, "grid start");
    figure1->add_option("--theta-max", theta_max, "grid end");
    figure1->add_option("--steps", steps, "grid size");
    figure1->add_option("--out", out_path, "CSV output file (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (check->parsed()) return run_check(states_path, copies, method_name, as_json);
        if (mincopies->parsed())
            return run_mincopies(states_path, max_n, method_name, allow_large, as_json);
        if (construct->parsed())
            return run_construct(family, k, gamma, theta, n_copies, out_path);
        if (verify->parsed()) return run_verify_povm(states_path, povm_path, tol, search);
        if (figure1->parsed()) return run_figure1(theta_min, theta_max, steps, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const TooFewStates& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InvalidGamma& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const OutOfRange& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const exclusion::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const io::json::exception& e) {
        std::cerr << "error: malformed JSON input: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitUsage;
}
