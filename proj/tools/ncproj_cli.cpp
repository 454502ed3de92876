#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ncproj/harness/compute.hpp"
#include "ncproj/harness/suites.hpp"

using namespace ncproj;
using namespace ncproj::harness;

namespace {

int print_error(const Error& e, int code) {
    std::cerr << e.what() << '\n';
    return code;
}

int verify(const SuiteConfig& cfg, const std::string& format, const std::string& out_path) {
    const Report r = run_suite(cfg);
    const std::string text = format == "json" ? dump(to_json(r)) + "\n" : to_text(r);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + out_path + "'");
        out << text;
        std::cout << (r.pass ? "PASS" : "FAIL") << ' ' << r.suite << ' ' << r.ring << '\n';
    }
    return r.pass ? 0 : 1;
}

int compute_file(const std::string& op, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    json doc;
    try {
        doc = json::parse(buf.str());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, path + ": byte " + std::to_string(e.byte) + ": " + e.what());
    }
    json result;
    try {
        result = compute(op, doc);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
    std::cout << dump(result) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Noncommutative projective invariants: verification suites and one-shot computations"};
    app.require_subcommand(1);

    SuiteConfig cfg;
    std::string ring = "quaternion", format = "text", out_path, skip = "count";
    int dim = 3;
    auto* v = app.add_subcommand("verify", "run a named verification suite");
    v->add_option("--suite", cfg.suite, "suite name (see list-suites)")->required();
    v->add_option("--ring", ring, "quaternion | matrix | complex | rational")->capture_default_str();
    v->add_option("--dim", dim, "matrix dimension")->capture_default_str()->check(CLI::PositiveNumber);
    v->add_option("--trials", cfg.trials, "number of trials")->capture_default_str()->check(CLI::PositiveNumber);
    v->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
    v->add_option("--tol", cfg.tol, "residual tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    v->add_option("--format", format, "json | text")->capture_default_str()->check(CLI::IsMember({"json", "text"}));
    v->add_option("--out", out_path, "write the report to a file");
    v->add_option("--skip-policy", skip, "count | fail for degenerate samples")
        ->capture_default_str()
        ->check(CLI::IsMember({"count", "fail"}));
    v->add_option("--skip-ceiling", cfg.skip_ceiling, "largest tolerated skipped fraction")->capture_default_str();
    v->add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);

    std::string op, input;
    auto* c = app.add_subcommand("compute", "evaluate one operation on a JSON input file");
    c->add_option("--op", op, "operation name (see list-ops)")->required();
    c->add_option("--input", input, "input JSON file")->required()->check(CLI::ExistingFile);

    auto* ls = app.add_subcommand("list-suites", "list verification suites");
    auto* lo = app.add_subcommand("list-ops", "list operations for compute");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (v->parsed()) {
            cfg.ring = parse_ring(ring, dim);
            cfg.skip_policy = skip == "fail" ? SkipPolicy::Fail : SkipPolicy::Count;
            return verify(cfg, format, out_path);
        }
        if (c->parsed()) return compute_file(op, input);
        if (ls->parsed()) {
            for (const auto& s : suite_list())
                std::cout << s.name << (s.commutative_only ? "  [commutative]" : "") << "  " << s.summary << '\n';
            return 0;
        }
        if (lo->parsed()) {
            for (const auto& o : op_list()) std::cout << o.name << "  " << o.input << '\n';
            return 0;
        }
    } catch (const Error& e) {
        switch (e.kind()) {
        case ErrorKind::ParseError:
        case ErrorKind::UnknownSuite:
        case ErrorKind::UnknownOperation:
        case ErrorKind::UnsupportedRingForSuite:
            return print_error(e, 2);
        default:
            std::cout << dump({{"error", std::string(to_string(e.kind()))}, {"detail", e.detail()}}) << '\n';
            return 1;
        }
    }
    return 2;
}
