#include "tropknap/cli.hpp"

#include "tropknap/census.hpp"
#include "tropknap/harness.hpp"
#include "tropknap/io.hpp"
#include "tropknap/reductions.hpp"
#include "tropknap/solvers.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace tropknap {

namespace {

using nlohmann::json;

enum class Engine { Brute, DP, Generic };
enum class OutputFormat { Human, Machine };
enum class BenchSuite { Oracle, Scaling, All };

struct RunConfig {
    std::string instance_path;
    std::string certificate_path;
    std::string certificate_out;
    std::string out_path;
    std::string x3c_path;
    std::string scalar_path;
    ProblemKind kind = ProblemKind::SubsetSum;
    Engine engine = Engine::DP;
    std::optional<unsigned> cap_exponent;
    OutputFormat format = OutputFormat::Human;
    std::size_t k = 0;
    std::optional<std::uint64_t> l;
    std::optional<std::uint64_t> m;
    bool exhaustive = false;
    std::uint64_t cap = 100'000'000;
    std::uint64_t seed = 1;
    std::size_t instances = 1000;
    unsigned jobs = 1;
    BenchSuite suite = BenchSuite::All;
    std::size_t max_dim = 3;
    std::size_t max_witnesses = 4;
    unsigned max_entry = 8;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw OutputError("cannot write '" + path + "'");
    f << text;
}

std::string join_exponents(const Certificate& cert)
{
    std::string s;
    for (std::size_t i = 0; i < cert.exponents.size(); ++i) {
        if (i) s += ' ';
        s += cert.exponents[i].str();
    }
    return s;
}

int exit_for(Verdict v)
{
    switch (v) {
    case Verdict::Yes: return exit_code::yes;
    case Verdict::No: return exit_code::no;
    case Verdict::Unknown: return exit_code::unknown;
    }
    return exit_code::internal;
}

ProblemInstance load_instance(const std::string& path)
{
    const std::string text = read_input(path);
    try {
        return parse_instance(text);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

int cmd_solve(const RunConfig& cfg, std::ostream& out)
{
    const ProblemInstance instance = load_instance(cfg.instance_path);
    const bool ssp = cfg.kind == ProblemKind::SubsetSum;
    const auto start = std::chrono::steady_clock::now();
    SolveOutcome outcome;
    switch (cfg.engine) {
    case Engine::Brute: outcome = ssp ? brute_force_ssp(instance) : brute_force_kp(instance); break;
    case Engine::DP: outcome = ssp ? solve_ssp_dp(instance) : solve_kp_dp(instance); break;
    case Engine::Generic:
        outcome = ssp ? solve_ssp_generic(instance, cfg.cap_exponent)
                      : solve_kp_generic(instance, cfg.cap_exponent);
        break;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (!cfg.certificate_out.empty() && outcome.certificate) {
        write_output(cfg.certificate_out, serialize_certificate(*outcome.certificate), out);
    }
    if (cfg.format == OutputFormat::Machine) {
        json report;
        report["verdict"] = std::string(to_string(outcome.verdict));
        report["mode"] = std::string(to_string(cfg.kind));
        report["certificate"] = nullptr;
        if (outcome.certificate) {
            json arr = json::array();
            for (const auto& x : outcome.certificate->exponents) arr.push_back(x.str());
            report["certificate"] = std::move(arr);
        }
        report["memo_entries"] = outcome.stats.memo_entries;
        report["recursive_calls"] = outcome.stats.recursive_calls;
        out << report.dump() << '\n';
    } else {
        out << "verdict: " << to_string(outcome.verdict) << '\n';
        if (outcome.certificate) out << "certificate: " << join_exponents(*outcome.certificate) << '\n';
        out << "memo_entries: " << outcome.stats.memo_entries << '\n';
        out << "recursive_calls: " << outcome.stats.recursive_calls << '\n';
        out << "wall_time_ms: " << std::fixed << std::setprecision(3) << ms << '\n';
    }
    return exit_for(outcome.verdict);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    const ProblemInstance instance = load_instance(cfg.instance_path);
    Certificate cert;
    try {
        cert = parse_certificate(read_input(cfg.certificate_path));
    } catch (const ParseError& e) {
        throw ParseError(cfg.certificate_path + ": " + e.what());
    }
    bool ok = false;
    try {
        ok = verify_certificate(instance, cert, cfg.kind);
    } catch (const std::invalid_argument& e) {
        throw ParseError(cfg.certificate_path + ": " + e.what());
    }
    if (cfg.format == OutputFormat::Machine) {
        out << json{{"valid", ok}, {"mode", std::string(to_string(cfg.kind))}}.dump() << '\n';
    } else {
        out << (ok ? "valid" : "invalid") << '\n';
    }
    return ok ? exit_code::yes : exit_code::no;
}

int cmd_reduce(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.x3c_path.empty() == cfg.scalar_path.empty()) {
        throw UsageError("reduce needs exactly one of --x3c or --scalar");
    }
    if (!cfg.x3c_path.empty()) {
        X3CInstance x3c = [&] {
            try {
                return parse_x3c(read_input(cfg.x3c_path));
            } catch (const ParseError& e) {
                throw ParseError(cfg.x3c_path + ": " + e.what());
            }
        }();
        write_output(cfg.out_path, serialize_scalar(reduce_x3c_to_kp_product(x3c)), out);
        return exit_code::yes;
    }
    if (cfg.k == 0) throw UsageError("reduce --scalar needs --k");
    ScalarInstance scalar = [&] {
        try {
            return parse_scalar(read_input(cfg.scalar_path));
        } catch (const ParseError& e) {
            throw ParseError(cfg.scalar_path + ": " + e.what());
        }
    }();
    write_output(cfg.out_path, serialize_instance(reduce_scalar_to_matrix(scalar, cfg.k)), out);
    return exit_code::yes;
}

int cmd_sample(const RunConfig& cfg, std::ostream& out)
{
    try {
        const ProblemInstance instance = sample_instance(*cfg.m, cfg.k, cfg.seed);
        write_output(cfg.out_path, serialize_instance(instance), out);
    } catch (const EmptyStratum& e) {
        throw UsageError(e.what());
    }
    return exit_code::yes;
}

int cmd_count(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.l.has_value() == cfg.m.has_value()) throw UsageError("count needs exactly one of --l or --m");
    Integer value;
    if (cfg.l) {
        if (cfg.exhaustive) {
            try {
                value = count_matrices_exhaustive(*cfg.l, cfg.k, cfg.cap).value;
            } catch (const CapExceeded& e) {
                throw UsageError(e.what());
            }
        } else {
            value = count_matrices_closed(*cfg.l, cfg.k).value;
        }
    } else {
        if (cfg.exhaustive) throw UsageError("--exhaustive applies to matrix counts (--l) only");
        value = count_instances(*cfg.m, cfg.k).value;
    }
    if (cfg.format == OutputFormat::Machine) {
        json report{{"k", cfg.k}, {"count", value.str()}};
        if (cfg.l)
            report["l"] = *cfg.l;
        else
            report["m"] = *cfg.m;
        out << report.dump() << '\n';
    } else {
        out << value << '\n';
    }
    return exit_code::yes;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out)
{
    json report;
    bool passed = true;
    if (cfg.suite != BenchSuite::Scaling) {
        json suites = json::array();
        for (Semiring s : {Semiring::MaxPlus, Semiring::MaxTimes}) {
            for (ProblemKind kind : {ProblemKind::SubsetSum, ProblemKind::Knapsack}) {
                RandomInstanceSpec spec;
                spec.semiring = s;
                spec.kind = kind;
                spec.max_dim = cfg.max_dim;
                spec.max_witnesses = cfg.max_witnesses;
                spec.max_entry = cfg.max_entry;
                const auto r = run_oracle_suite(spec, cfg.instances, cfg.seed, cfg.jobs);
                passed = passed && r.passed();
                suites.push_back({{"semiring", std::string(to_string(s))},
                                  {"mode", std::string(to_string(kind))},
                                  {"instances", r.instances},
                                  {"agreements", r.agreements},
                                  {"yes_instances", r.yes_instances},
                                  {"certificate_failures", r.certificate_failures},
                                  {"memo_bound_violations", r.memo_bound_violations},
                                  {"generic_mismatches", r.generic_mismatches},
                                  {"max_memo_entries", r.max_memo_entries},
                                  {"passed", r.passed()}});
            }
        }
        report["oracle"] = std::move(suites);
    }
    if (cfg.suite != BenchSuite::Oracle) {
        json series = json::array();
        for (const auto& s : run_default_scaling_suite()) {
            json points = json::array();
            for (const auto& p : s.points) {
                points.push_back({{"target_max", p.target_max.str()}, {"memo_entries", p.memo_entries}});
            }
            const bool ok = s.fitted_exponent <= 1.2;
            passed = passed && ok;
            std::ostringstream slope;
            slope << std::fixed << std::setprecision(4) << s.fitted_exponent;
            series.push_back({{"label", s.label},
                              {"mode", std::string(to_string(s.kind))},
                              {"points", std::move(points)},
                              {"fitted_exponent", slope.str()},
                              {"passed", ok}});
        }
        report["scaling"] = std::move(series);
    }
    report["passed"] = passed;
    if (cfg.format == OutputFormat::Machine) {
        out << report.dump() << '\n';
    } else {
        out << report.dump(2) << '\n';
    }
    return passed ? exit_code::yes : exit_code::no;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Subset sum and knapsack over tropical matrix semigroups", "tropknap"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string kind_name = "ssp";
    std::string engine_name = "dp";
    std::string format_name = "human";
    std::string suite_name = "all";

    const std::map<std::string, ProblemKind> kinds{{"ssp", ProblemKind::SubsetSum},
                                                   {"kp", ProblemKind::Knapsack}};
    const std::map<std::string, Engine> engines{
        {"brute", Engine::Brute}, {"dp", Engine::DP}, {"generic", Engine::Generic}};
    const std::map<std::string, OutputFormat> formats{{"human", OutputFormat::Human},
                                                      {"machine", OutputFormat::Machine}};
    const std::map<std::string, BenchSuite> suites{
        {"oracle", BenchSuite::Oracle}, {"scaling", BenchSuite::Scaling}, {"all", BenchSuite::All}};

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Report format: human or machine")
            ->check(CLI::IsMember(formats, CLI::ignore_case));
    };
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--mode", kind_name, "Problem: ssp (binary exponents) or kp")
            ->check(CLI::IsMember(kinds, CLI::ignore_case));
    };

    auto* solve = app.add_subcommand("solve", "Decide an instance file");
    solve->add_option("instance", cfg.instance_path, "Instance JSON ('-' for stdin)")->required();
    add_mode(solve);
    solve->add_option("--engine", engine_name, "brute, dp or generic")
        ->check(CLI::IsMember(engines, CLI::ignore_case));
    auto* cap_opt = solve->add_option("--cap-exponent", cfg.cap_exponent,
                                      "Generic engine: abort after size^e memo keys (default k^2+3)");
    solve->add_option("--certificate-out", cfg.certificate_out, "Write the certificate JSON here");
    add_format(solve);

    auto* verify = app.add_subcommand("verify", "Check a certificate against an instance");
    verify->add_option("instance", cfg.instance_path, "Instance JSON")->required();
    verify->add_option("--certificate", cfg.certificate_path, "Certificate JSON")->required();
    add_mode(verify);
    add_format(verify);

    auto* reduce = app.add_subcommand("reduce", "Build instances from scalar or exact-cover inputs");
    reduce->add_option("--x3c", cfg.x3c_path, "Exact-cover text file; writes a scalar instance");
    reduce->add_option("--scalar", cfg.scalar_path, "Scalar text file; writes a matrix instance");
    reduce->add_option("--k", cfg.k, "Matrix dimension for --scalar");
    reduce->add_option("--out,-o", cfg.out_path, "Output file (default stdout)");

    auto* sample = app.add_subcommand("sample", "Draw a uniform max-times instance of size m");
    sample->add_option("--m", cfg.m, "Instance size")->required();
    sample->add_option("--k", cfg.k, "Matrix dimension")->required()->check(CLI::PositiveNumber);
    sample->add_option("--seed", cfg.seed, "Random seed");
    sample->add_option("--out,-o", cfg.out_path, "Output file (default stdout)");

    auto* count = app.add_subcommand("count", "Count max-times matrices of size l or instances of size m");
    count->add_option("--k", cfg.k, "Matrix dimension")->required()->check(CLI::PositiveNumber);
    count->add_option("--l", cfg.l, "Matrix size");
    count->add_option("--m", cfg.m, "Instance size");
    count->add_flag("--exhaustive", cfg.exhaustive, "Count matrices by enumeration");
    count->add_option("--cap", cfg.cap, "Largest search space for --exhaustive");
    add_format(count);

    auto* bench = app.add_subcommand("bench", "Oracle-equivalence and memo-scaling suites");
    bench->add_option("--instances", cfg.instances, "Random instances per semiring and mode");
    bench->add_option("--seed", cfg.seed, "Base seed");
    bench->add_option("--jobs,-j", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    bench->add_option("--suite", suite_name, "oracle, scaling or all")
        ->check(CLI::IsMember(suites, CLI::ignore_case));
    bench->add_option("--max-dim", cfg.max_dim, "Largest k")->check(CLI::PositiveNumber);
    bench->add_option("--max-witnesses", cfg.max_witnesses, "Largest n");
    bench->add_option("--max-entry", cfg.max_entry, "Largest entry")->check(CLI::PositiveNumber);
    add_format(bench);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        auto lower = [](std::string v) {
            for (auto& c : v) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            return v;
        };
        cfg.kind = kinds.at(lower(kind_name));
        cfg.engine = engines.at(lower(engine_name));
        cfg.format = formats.at(lower(format_name));
        cfg.suite = suites.at(lower(suite_name));
        if (cap_opt->count() > 0 && cfg.engine != Engine::Generic) {
            throw UsageError("--cap-exponent requires --engine generic");
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : exit_code::usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    }

    try {
        if (solve->parsed()) return cmd_solve(cfg, out);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (reduce->parsed()) return cmd_reduce(cfg, out);
        if (sample->parsed()) return cmd_sample(cfg, out);
        if (count->parsed()) return cmd_count(cfg, out);
        if (bench->parsed()) return cmd_bench(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::no_input;
    } catch (const OutputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::cant_create;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::data;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::internal;
    }
    return exit_code::usage;
}

}  // namespace tropknap
