// alpfeas: feasibility of linear systems with <=, <, =, != rows, decided
// through a family of asymptotic linear programs solved exactly over
// rational functions of the time parameter K.
//
// Exit codes: 0 feasible (or success), 1 infeasible (or selftest
// failure), 2 usage/parse errors, 3 resource limits.

#include "alpfeas/corpus.hpp"
#include "alpfeas/errors.hpp"
#include "alpfeas/oracle.hpp"
#include "alpfeas/parser.hpp"
#include "alpfeas/reduce.hpp"
#include "alpfeas/selftest.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace alpfeas;

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct CliError : std::runtime_error {
    CliError(int code, const std::string& what) : std::runtime_error(what), exit_code(code) {}
    int exit_code;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError(kExitUsage, "cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LinearSystem load_system(const std::string& path) {
    try {
        return parse_system(read_file(path));
    } catch (const ParseError& e) {
        throw CliError(kExitUsage, path + ": " + e.what());
    }
}

json counts_json(const LinearSystem& sys) {
    const SystemCounts c = sys.counts();
    return json{{"N", sys.variables.size()},
                {"P", c.le},
                {"Q", c.lt},
                {"R", c.ne},
                {"EQ", c.eq}};
}

json case_json(const CaseDescriptor& c) {
    switch (c.kind) {
    case CaseDescriptor::Kind::Empty:
        return json{{"kind", "empty"}};
    case CaseDescriptor::Kind::Single:
        return json{{"kind", "single"}, {"sign", std::string(1, sign_char(c.sign_a))}};
    case CaseDescriptor::Kind::Pair:
        return json{{"kind", "pair"},
                    {"a", c.a},
                    {"b", c.b},
                    {"signs", {std::string(1, sign_char(c.sign_a)), std::string(1, sign_char(c.sign_b))}}};
    }
    return json();
}

json verdict_json(const Verdict& v, const LinearSystem& sys, double ms) {
    json out;
    out["verdict"] = v.status == Feasibility::Feasible ? "feasible" : "infeasible";
    out["case"] = v.feasible_case ? case_json(*v.feasible_case) : json();
    if (v.witness) {
        out["k0"] = v.witness->k0.str();
        json point = json::object();
        for (const auto& [name, val] : v.witness->point) point[name] = val.str();
        out["witness"] = point;
        json symbolic = json::object();
        for (const auto& [name, f] : v.witness->symbolic) symbolic[name] = f.str();
        out["witness_symbolic"] = symbolic;
    } else {
        out["k0"] = json();
        out["witness"] = json();
    }
    out["counts"] = counts_json(sys);
    out["alp_count"] = v.alp_count;
    out["degenerate_cases"] = v.degenerate_cases;
    out["timing_ms"] = ms;
    return out;
}

void print_report(const json& report, bool compact) {
    if (compact) {
        std::cout << report.dump() << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

void emit_bundle(const ReductionBundle& bundle, const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw CliError(kExitUsage, "cannot create '" + dir + "': " + ec.message());
    json manifest;
    manifest["case_count"] = bundle.alps.size();
    manifest["variables"] = bundle.alps.empty() ? json::array() : json(bundle.alps[0].variables);
    json cases = json::array();
    for (size_t i = 0; i < bundle.alps.size(); ++i) {
        const AlpProblem& alp = bundle.alps[i];
        char name[32];
        std::snprintf(name, sizeof(name), "case_%04zu.alp", i + 1);
        const fs::path file = fs::path(dir) / name;
        std::ofstream out(file, std::ios::binary);
        if (!out) throw CliError(kExitUsage, "cannot write '" + file.string() + "'");
        out << render_alp(alp);
        cases.push_back(json{{"index", i},
                             {"file", name},
                             {"case", case_json(alp.case_desc)},
                             {"rows", alp.rows.size()}});
    }
    manifest["cases"] = cases;
    std::ofstream mf(fs::path(dir) / "manifest.json", std::ios::binary);
    if (!mf) throw CliError(kExitUsage, "cannot write manifest in '" + dir + "'");
    mf << manifest.dump(2) << "\n";
}

int cmd_check(const std::string& path, bool with_oracle, const std::string& emit_dir, int jobs,
              int max_cases, bool compact) {
    const LinearSystem sys = load_system(path);
    const auto t0 = std::chrono::steady_clock::now();
    DecideOptions opts;
    opts.jobs = jobs;
    const Verdict v = decide_feasibility(sys, opts);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    json report = verdict_json(v, sys, ms);
    if (with_oracle) {
        OracleOptions oopts;
        oopts.max_ne = max_cases;
        const Verdict truth = oracle_feasible(sys, oopts);
        report["oracle"] = json{
            {"verdict", truth.status == Feasibility::Feasible ? "feasible" : "infeasible"},
            {"agree", truth.status == v.status}};
    }
    if (!emit_dir.empty()) emit_bundle(reduce(sys), emit_dir);
    print_report(report, compact);
    return v.status == Feasibility::Feasible ? kExitFeasible : kExitInfeasible;
}

int cmd_reduce(const std::string& path, const std::string& out_dir, bool compact) {
    const LinearSystem sys = load_system(path);
    const ReductionBundle bundle = reduce(sys);
    emit_bundle(bundle, out_dir);
    json report;
    report["alp_count"] = bundle.alps.size();
    report["out_dir"] = out_dir;
    report["counts"] = counts_json(sys);
    print_report(report, compact);
    return kExitFeasible;
}

int cmd_oracle(const std::string& path, int max_cases, bool compact) {
    const LinearSystem sys = load_system(path);
    const auto t0 = std::chrono::steady_clock::now();
    OracleOptions opts;
    opts.max_ne = max_cases;
    const Verdict v = oracle_feasible(sys, opts);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    json report;
    report["verdict"] = v.status == Feasibility::Feasible ? "feasible" : "infeasible";
    if (v.witness) {
        json point = json::object();
        for (const auto& [name, val] : v.witness->point) point[name] = val.str();
        report["witness"] = point;
    } else {
        report["witness"] = json();
    }
    report["counts"] = counts_json(sys);
    report["sign_cases"] = 1L << sys.counts().ne;
    report["timing_ms"] = ms;
    print_report(report, compact);
    return v.status == Feasibility::Feasible ? kExitFeasible : kExitInfeasible;
}

int cmd_nontrivial(const std::string& path, const std::vector<std::string>& vars, int jobs,
                   bool compact) {
    const LinearSystem sys = load_system(path);
    LinearSystem augmented;
    try {
        augmented = augment_nontrivial(sys, vars);
    } catch (const ValidationError& e) {
        throw CliError(kExitUsage, e.what());
    }
    const auto t0 = std::chrono::steady_clock::now();
    DecideOptions opts;
    opts.jobs = jobs;
    const Verdict v = decide_feasibility(augmented, opts);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    json report = verdict_json(v, augmented, ms);
    report["subset"] = vars;
    report["augmented_constraints"] = augmented.constraints.size();
    report["added_constraints"] = augmented.constraints.size() - sys.constraints.size();
    print_report(report, compact);
    return v.status == Feasibility::Feasible ? kExitFeasible : kExitInfeasible;
}

int cmd_bench(std::uint64_t seed, int count, int max_vars, int max_ne, int jobs,
              const std::string& csv_path, const std::string& summary_path, bool compact) {
    CorpusParams params;
    params.max_vars = max_vars;
    params.max_ne = max_ne;
    const BenchResult result = run_bench(seed, count, params, jobs);
    const std::string csv = bench_csv(result);
    if (csv_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) throw CliError(kExitUsage, "cannot write '" + csv_path + "'");
        out << csv;
    }
    json summary;
    summary["seed"] = seed;
    summary["count"] = count;
    summary["agreements"] = result.agreements;
    summary["errors"] = result.errors;
    summary["wall_seconds"] = result.wall_seconds;
    const std::string text = compact ? summary.dump() : summary.dump(2);
    if (!summary_path.empty()) {
        std::ofstream out(summary_path, std::ios::binary);
        if (!out) throw CliError(kExitUsage, "cannot write '" + summary_path + "'");
        out << text << "\n";
    } else if (csv_path.empty()) {
        std::cerr << text << "\n";
    } else {
        std::cout << text << "\n";
    }
    return kExitFeasible;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"feasibility of linear systems via asymptotic linear programs"};
    app.require_subcommand(1);
    app.fallthrough(); // parent flags may follow the subcommand
    bool compact = false;
    app.add_flag("--json", compact, "compact single-line JSON reports");

    std::string path;
    bool with_oracle = false;
    std::string emit_dir;
    int jobs = 1;
    int max_cases = 12;
    auto* check = app.add_subcommand("check", "decide feasibility of a .lsys file");
    check->add_option("file", path, "input .lsys file")->required();
    check->add_flag("--oracle", with_oracle, "cross-check against the exponential oracle");
    check->add_option("--emit-alps", emit_dir, "also write the generated ALPs to this directory");
    check->add_option("--jobs", jobs, "parallel case evaluation")->check(CLI::PositiveNumber);
    check->add_option("--max-cases", max_cases, "inequation cap for the oracle")
        ->check(CLI::PositiveNumber);

    std::string out_dir;
    auto* red = app.add_subcommand("reduce", "emit the family of .alp files plus manifest.json");
    red->add_option("file", path, "input .lsys file")->required();
    red->add_option("--out,-o", out_dir, "output directory")->required();

    auto* orc = app.add_subcommand("oracle", "decide by the exponential sign enumeration");
    orc->add_option("file", path, "input .lsys file")->required();
    orc->add_option("--max-cases", max_cases, "inequation cap")->check(CLI::PositiveNumber);

    std::vector<std::string> subset;
    auto* non = app.add_subcommand("nontrivial",
                                   "decide whether a subset of variables admits a nonzero value");
    non->add_option("file", path, "input .lsys file")->required();
    non->add_option("--vars", subset, "subset of variables")->required()->delimiter(',');
    non->add_option("--jobs", jobs, "parallel case evaluation")->check(CLI::PositiveNumber);

    std::uint64_t seed = 1;
    int count = 100;
    int max_vars = 4;
    int max_ne = 3;
    std::string csv_path;
    std::string summary_path;
    auto* bench = app.add_subcommand("bench", "random corpus agreement run (CSV + summary JSON)");
    bench->add_option("--seed", seed, "generator seed");
    bench->add_option("--count", count, "number of instances")->check(CLI::PositiveNumber);
    bench->add_option("--max-vars", max_vars, "max variables per instance")->check(CLI::PositiveNumber);
    bench->add_option("--max-ne", max_ne, "max inequations per instance")->check(CLI::NonNegativeNumber);
    bench->add_option("--jobs", jobs, "parallel case evaluation")->check(CLI::PositiveNumber);
    bench->add_option("--csv", csv_path, "CSV output path (default stdout)");
    bench->add_option("--summary", summary_path, "summary JSON path");

    auto* self = app.add_subcommand("selftest", "run the embedded invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed())
            return cmd_check(path, with_oracle, emit_dir, jobs, max_cases, compact);
        if (red->parsed()) return cmd_reduce(path, out_dir, compact);
        if (orc->parsed()) return cmd_oracle(path, max_cases, compact);
        if (non->parsed()) return cmd_nontrivial(path, subset, jobs, compact);
        if (bench->parsed())
            return cmd_bench(seed, count, max_vars, max_ne, jobs, csv_path, summary_path, compact);
        if (self->parsed()) return run_selftest(std::cout);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code;
    } catch (const LimitError& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return kExitLimit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    }
    return kExitUsage;
}
