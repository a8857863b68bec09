// Pass/fail residual reports shared by the verification suites and the CLI.
#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace qosc {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct Report {
    std::string title;
    std::vector<CheckResult> checks;
    std::map<std::string, double> info;  // extra diagnostics, not pass/fail

    CheckResult& add(const std::string& name, double residual, double tol) {
        checks.push_back({name, residual, tol, residual <= tol});
        return checks.back();
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    double worst_margin() const {
        double w = 0.0;
        for (const auto& c : checks)
            if (c.tol > 0.0) w = std::max(w, c.residual / c.tol);
        return w;
    }
};

}  // namespace qosc
