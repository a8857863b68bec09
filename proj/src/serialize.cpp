#include "qosc/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace qosc {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_complex_csv(std::complex<double> z) {
    return format_double(z.real()) + "," + format_double(z.imag());
}

Signal read_signal(std::istream& in, Irrep ir) {
    std::vector<std::complex<double>> vals;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        double re = 0.0, im = 0.0;
        char comma = 0;
        if (!(ls >> re)) {
            throw std::runtime_error("signal file: unparseable sample at line " +
                                     std::to_string(lineno));
        }
        if (ls >> comma) {
            if (comma != ',' || !(ls >> im)) {
                throw std::runtime_error("signal file: expected 're,im' at line " +
                                         std::to_string(lineno));
            }
        }
        vals.emplace_back(re, im);
    }
    if (static_cast<int>(vals.size()) != ir.dim()) {
        throw std::runtime_error("signal file holds " + std::to_string(vals.size()) +
                                 " samples but twoj=" + std::to_string(ir.twoj) +
                                 " needs exactly " + std::to_string(ir.dim()));
    }
    Signal s{ir, Eigen::VectorXcd(ir.dim())};
    for (int i = 0; i < ir.dim(); ++i) s.values(i) = vals[i];
    return s;
}

Signal read_signal_file(const std::string& path, Irrep ir) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open signal file: " + path);
    return read_signal(in, ir);
}

void write_signal(std::ostream& out, const Signal& s) {
    for (int i = 0; i < s.values.size(); ++i) {
        out << format_complex_csv(s.values(i)) << "\n";
    }
}

nlohmann::json to_json(const Report& rep) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name},
                          {"residual", c.residual},
                          {"tol", c.tol},
                          {"pass", c.pass}});
    }
    nlohmann::json info;
    for (const auto& [k, v] : rep.info) info[k] = v;
    return {{"title", rep.title},
            {"checks", checks},
            {"info", info},
            {"all_pass", rep.all_pass()}};
}

nlohmann::json to_json(const ContractionReport& rep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : rep.rows) {
        rows.push_back({{"twoj", r.twoj},
                        {"dev_target", r.dev_target},
                        {"dev_asymptote", r.dev_asymptote},
                        {"ladder_dev", r.ladder_dev},
                        {"aplus_dev", r.aplus_dev},
                        {"wx", r.wx}});
    }
    return {{"q", rep.q}, {"n_max", rep.n_max}, {"wx_limit", rep.wx_limit}, {"rows", rows}};
}

}  // namespace qosc
