#include "ncproj/harness/report.hpp"

#include <cstdio>
#include <sstream>

namespace ncproj::harness {

void validate(const SuiteConfig& cfg) {
    if (cfg.trials < 1) throw Error(ErrorKind::ParseError, "trials must be at least 1");
    if (!(cfg.tol > 0)) throw Error(ErrorKind::ParseError, "tol must be positive");
    if (!(cfg.skip_ceiling >= 0 && cfg.skip_ceiling <= 1))
        throw Error(ErrorKind::ParseError, "skip ceiling must lie in [0, 1]");
    if (cfg.jobs < 1) throw Error(ErrorKind::ParseError, "jobs must be at least 1");
}

json to_json(const Report& r) {
    json failures = json::array();
    for (const auto& f : r.failures) {
        json residual = nullptr;
        if (f.residual) residual = *f.residual;
        failures.push_back({{"counter", f.counter}, {"residual", residual}, {"inputs", f.inputs}});
    }
    json j = json::object();
    j["suite"] = r.suite;
    j["ring"] = r.ring;
    j["trials_run"] = r.trials_run;
    j["trials_skipped"] = r.trials_skipped;
    j["max_residual"] = r.max_residual;
    j["failures"] = failures;
    j["pass"] = r.pass;
    j["wall_time"] = r.wall_time;
    return j;
}

std::string to_text(const Report& r) {
    char buf[64];
    std::ostringstream os;
    os << "suite " << r.suite << " ring " << r.ring << '\n';
    os << "trials run " << r.trials_run << ", skipped " << r.trials_skipped << '\n';
    std::snprintf(buf, sizeof buf, "%.3e", r.max_residual);
    os << "max residual " << buf << '\n';
    for (const auto& f : r.failures) {
        os << "  failure at counter " << f.counter;
        if (f.residual) {
            std::snprintf(buf, sizeof buf, "%.3e", *f.residual);
            os << " residual " << buf;
        }
        if (f.inputs.contains("error")) os << " (" << f.inputs.at("error").get<std::string>() << ")";
        os << '\n';
    }
    std::snprintf(buf, sizeof buf, "%.2f", r.wall_time);
    os << (r.pass ? "PASS" : "FAIL") << " (" << r.failures.size() << " failures, " << buf << " s)\n";
    return os.str();
}

}  // namespace ncproj::harness
