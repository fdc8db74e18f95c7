#include "kitaev/document.hpp"
#include "kitaev/error.hpp"
#include "kitaev/lattice.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace kitaev;
using nlohmann::json;

namespace {

constexpr int kClean = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

void print_report(const Report& r) {
    for (const auto& c : r.checks()) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) std::cout << ": " << c.detail;
        std::cout << "\n";
    }
    for (const auto& w : r.warnings()) std::cout << "warning: " << w << "\n";
    std::cout << r.failures() << " violations\n";
}

struct Outcome {
    Report validation;
    Report checks;
    std::optional<GroundDimension> ground;
    std::string method;
    std::string error;  // fatal error after validation
    int code = kClean;
};

const char* method_name(GroundMethod m) {
    switch (m) {
        case GroundMethod::Trace: return "trace";
        case GroundMethod::Kernel: return "kernel";
        case GroundMethod::Both: return "both";
    }
    return "";
}

struct Plan {
    bool check = false;
    bool ground = false;
    bool force = false;
    GroundMethod method = GroundMethod::Trace;
    std::optional<std::uint64_t> max_dim;
    std::optional<std::uint64_t> seed;
};

// Validation, then the lattice checks, then the ground dimension, stopping at the first failing stage.
Outcome run(ModelDocument& doc, const Plan& plan) {
    Outcome out;
    if (plan.seed) doc.options.seed = *plan.seed;
    out.validation = validate_document(doc);
    if (!out.validation.ok()) {
        out.code = kViolation;
        return out;
    }
    if (!plan.check && !plan.ground) return out;
    try {
        StateSpace s(doc.labels, effective_max_dim(doc, plan.max_dim));
        OperatorOptions opt{doc.options.flip_plaquette_sign};
        OperatorSet ops = build_operators(s, opt);
        if (plan.check || !plan.force) {
            out.checks = check_lattice(s, ops, opt);
            if (!out.checks.ok()) {
                out.code = kViolation;
                return out;
            }
        }
        if (plan.ground) {
            out.method = method_name(plan.method);
            out.ground = ground_space_dimension(s, ops, plan.method);
        }
    } catch (const Error& e) {
        out.error = e.what();
        bool input = e.kind() == ErrorKind::DimensionGuardExceeded || e.kind() == ErrorKind::InputError;
        out.code = input ? kInputError : kViolation;
    }
    return out;
}

void print_outcome(const Outcome& out) {
    print_report(out.validation);
    if (!out.checks.checks().empty() || !out.checks.warnings().empty()) print_report(out.checks);
    if (out.ground) {
        std::cout << "ground dimension " << out.ground->dimension << " (method " << out.method << ")";
        if (out.ground->trace) std::cout << " trace " << format_rational(*out.ground->trace);
        if (out.ground->kernel) std::cout << " kernel " << *out.ground->kernel;
        std::cout << "\n";
    }
    if (!out.error.empty()) std::cerr << "error: " << out.error << "\n";
}

json outcome_json(const ModelDocument& doc, const Outcome& out, const Plan& plan) {
    json j{{"document", doc.name},
           {"seed", doc.options.seed},
           {"max_dim", effective_max_dim(doc, plan.max_dim)},
           {"validation", report_to_json(out.validation)},
           {"checks", report_to_json(out.checks)},
           {"exit_code", out.code}};
    if (out.ground) {
        json g{{"dimension", out.ground->dimension}, {"method", out.method}};
        if (out.ground->trace) g["trace"] = format_rational(*out.ground->trace);
        if (out.ground->kernel) g["kernel"] = *out.ground->kernel;
        j["ground_dimension"] = g;
    }
    if (!out.error.empty()) j["error"] = out.error;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Kitaev lattice models with defects"};
    app.require_subcommand(1);
    std::string file, out_path, method = "trace";
    Plan plan;
    std::uint64_t seed = 0, max_dim = 0;

    auto* validate = app.add_subcommand("validate", "Run all algebra, surface, label and module validators");
    validate->add_option("file", file, "Model document")->required();

    auto* check = app.add_subcommand("check", "Build the operators and run the lattice identities");
    check->add_option("file", file, "Model document")->required();
    check->add_option("--seed", seed, "Seed recorded in the report");
    check->add_option("--max-dim", max_dim, "State dimension guard");

    auto* ground = app.add_subcommand("ground-dim", "Exact ground-state dimension");
    ground->add_option("file", file, "Model document")->required();
    ground->add_option("--method", method, "trace, kernel or both")->check(CLI::IsMember({"trace", "kernel", "both"}));
    ground->add_flag("--force", plan.force, "Skip the lattice checks");
    ground->add_option("--max-dim", max_dim, "State dimension guard");

    auto* report = app.add_subcommand("report", "Write a JSON report of validation, checks and ground dimension");
    report->add_option("file", file, "Model document")->required();
    report->add_option("--out", out_path, "Output path")->required();
    report->add_option("--seed", seed, "Seed recorded in the report");
    report->add_option("--max-dim", max_dim, "State dimension guard");
    report->add_option("--method", method, "trace, kernel or both")->check(CLI::IsMember({"trace", "kernel", "both"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kClean : kInputError;
    }

    ModelDocument doc;
    try {
        doc = load_document(file);
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
    if (max_dim > 0) plan.max_dim = max_dim;
    if (check->count("--seed") + report->count("--seed") > 0) plan.seed = seed;
    plan.method = method == "kernel" ? GroundMethod::Kernel : method == "both" ? GroundMethod::Both : GroundMethod::Trace;
    plan.check = app.got_subcommand(check) || app.got_subcommand(report);
    plan.ground = app.got_subcommand(ground) || app.got_subcommand(report);

    Outcome out = run(doc, plan);
    if (app.got_subcommand(report)) {
        std::ofstream os(out_path);
        if (!os) {
            std::cerr << "cannot write " << out_path << "\n";
            return kInputError;
        }
        os << outcome_json(doc, out, plan).dump(2) << "\n";
        std::cout << "wrote " << out_path << "\n";
    } else {
        print_outcome(out);
    }
    return out.code;
}
