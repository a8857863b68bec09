// qosc — finite q-oscillator toolkit CLI.
//
// Subcommands: spectra, wavefuncs, kernel, transform, potential, verify,
// contract. Output is CSV (default) or JSON, deterministic for a given
// configuration. Exit codes: 0 success / all checks pass, 1 verification
// failure, 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qosc/contraction.hpp"
#include "qosc/oscillator.hpp"
#include "qosc/potential.hpp"
#include "qosc/serialize.hpp"
#include "qosc/transform.hpp"

namespace {

using nlohmann::json;
using namespace qosc;

struct Options {
    int twoj = -1;           // -1: not set (verify uses its default grid)
    double q = 1.0;
    bool q_set = false;
    double a = 1.0;
    std::string format = "csv";
    std::string input_path;
    std::string output_path;
    double tol = 1e-10;
    std::string kernel_method = "spectral";
    std::vector<int> twoj_list{8, 16, 24, 32};
    int n_max = 2;
};

std::ostream& open_output(const Options& opt, std::ofstream& file) {
    if (opt.output_path.empty()) return std::cout;
    file.open(opt.output_path);
    if (!file) throw std::runtime_error("cannot open output file: " + opt.output_path);
    return file;
}

json complex_json(std::complex<double> z) { return {{"re", z.real()}, {"im", z.imag()}}; }

void emit_matrix_csv(std::ostream& out, const Eigen::MatrixXcd& m) {
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) {
            if (c) out << ",";
            out << format_complex_csv(m(r, c));
        }
        out << "\n";
    }
}

int cmd_spectra(const Options& opt) {
    Irrep ir(opt.twoj);
    QParam qp(opt.q);
    const PositionGrid grid = position_spectrum(ir, qp);
    const Eigen::VectorXd energy = energy_spectrum(ir);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    if (opt.format == "json") {
        json rows = json::array();
        for (int i = 0; i < ir.dim(); ++i) {
            rows.push_back({{"twos", ir.twos_of(i)}, {"x", grid.x(i)}, {"E", energy(i)}});
        }
        out << json{{"command", "spectra"}, {"twoj", opt.twoj}, {"q", opt.q}, {"rows", rows}}.dump(2)
            << "\n";
    } else {
        out << "# spectra twoj=" << opt.twoj << " q=" << format_double(opt.q) << "\n";
        out << "# columns: twos, x (position, ascending twos), E (energy, mode n = row)\n";
        for (int i = 0; i < ir.dim(); ++i) {
            out << ir.twos_of(i) << "," << format_double(grid.x(i)) << ","
                << format_double(energy(i)) << "\n";
        }
    }
    return 0;
}

int cmd_wavefuncs(const Options& opt) {
    Irrep ir(opt.twoj);
    QParam qp(opt.q);
    const WaveTable wt = wave_table(ir, qp);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    if (opt.format == "json") {
        json rows = json::array();
        for (int n = 0; n < ir.dim(); ++n) {
            json row = json::array();
            for (int i = 0; i < ir.dim(); ++i) row.push_back(wt.phi(n, i));
            rows.push_back(row);
        }
        out << json{{"command", "wavefuncs"}, {"twoj", opt.twoj}, {"q", opt.q}, {"phi", rows}}.dump(2)
            << "\n";
    } else {
        out << "# wavefuncs twoj=" << opt.twoj << " q=" << format_double(opt.q) << "\n";
        out << "# rows: mode n ascending; columns: position nodes, ascending twos\n";
        for (int n = 0; n < ir.dim(); ++n) {
            for (int i = 0; i < ir.dim(); ++i) {
                if (i) out << ",";
                out << format_double(wt.phi(n, i));
            }
            out << "\n";
        }
    }
    return 0;
}

int cmd_kernel(const Options& opt) {
    Irrep ir(opt.twoj);
    QParam qp(opt.q);
    const Kernel k = (opt.kernel_method == "closed") ? kernel_closed_form(ir, qp, opt.a)
                                                     : kernel_spectral(ir, qp, opt.a);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    if (opt.format == "json") {
        json rows = json::array();
        for (int r = 0; r < ir.dim(); ++r) {
            json row = json::array();
            for (int c = 0; c < ir.dim(); ++c) row.push_back(complex_json(k.mat(r, c)));
            rows.push_back(row);
        }
        out << json{{"command", "kernel"},
                    {"twoj", opt.twoj},
                    {"q", opt.q},
                    {"a", opt.a},
                    {"method", opt.kernel_method},
                    {"matrix", rows}}
                   .dump(2)
            << "\n";
    } else {
        out << "# kernel twoj=" << opt.twoj << " q=" << format_double(opt.q)
            << " a=" << format_double(opt.a) << " method=" << opt.kernel_method << "\n";
        out << "# rows: twos ascending; columns: twos' ascending; entries re,im paired\n";
        emit_matrix_csv(out, k.mat);
    }
    return 0;
}

int cmd_transform(const Options& opt) {
    Irrep ir(opt.twoj);
    QParam qp(opt.q);
    if (opt.input_path.empty()) throw std::runtime_error("transform requires --input");
    const Signal in = read_signal_file(opt.input_path, ir);
    const Kernel k = kernel_spectral(ir, qp, opt.a);
    const Signal out_sig = apply(k, in);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    if (opt.format == "json") {
        json vals = json::array();
        for (int i = 0; i < ir.dim(); ++i) vals.push_back(complex_json(out_sig.values(i)));
        out << json{{"command", "transform"},
                    {"twoj", opt.twoj},
                    {"q", opt.q},
                    {"a", opt.a},
                    {"values", vals}}
                   .dump(2)
            << "\n";
    } else {
        write_signal(out, out_sig);
    }
    return 0;
}

int cmd_potential(const Options& opt) {
    Irrep ir(opt.twoj);
    QParam qp(opt.q);
    const PositionGrid grid = position_spectrum(ir, qp);
    const Eigen::VectorXd v_grid =
        equivalent_potential_from_ground_state(ground_state_profile(ir, qp));
    const bool flag = ground_state_unimodal(ir, qp);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    if (opt.format == "json") {
        json rows = json::array();
        for (int i = 0; i < ir.dim(); ++i) {
            rows.push_back({{"twos", ir.twos_of(i)},
                            {"x", grid.x(i)},
                            {"v_grid", v_grid(i)},
                            {"v_closed", q_potential_closed_form(ir.twos_of(i), ir, qp)}});
        }
        out << json{{"command", "potential"},
                    {"twoj", opt.twoj},
                    {"q", opt.q},
                    {"ground_state_unimodal", flag},
                    {"rows", rows}}
                   .dump(2)
            << "\n";
    } else {
        out << "# potential twoj=" << opt.twoj << " q=" << format_double(opt.q) << "\n";
        out << "# columns: twos, x, v_grid (V - E0 by second difference), v_closed\n";
        out << "# ground_state_unimodal: " << (flag ? "true" : "false") << "\n";
        for (int i = 0; i < ir.dim(); ++i) {
            out << ir.twos_of(i) << "," << format_double(grid.x(i)) << ","
                << format_double(v_grid(i)) << ","
                << format_double(q_potential_closed_form(ir.twos_of(i), ir, qp)) << "\n";
        }
    }
    return 0;
}

int cmd_verify(const Options& opt) {
    std::vector<int> twojs = (opt.twoj >= 0) ? std::vector<int>{opt.twoj}
                                             : std::vector<int>{1, 2, 3, 4, 8};
    std::vector<double> qs = opt.q_set ? std::vector<double>{opt.q}
                                       : std::vector<double>{0.5, 0.9, 1.0};
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    bool all = true;
    json jreports = json::array();
    for (double q : qs) {
        for (int twoj : twojs) {
            Irrep ir(twoj);
            QParam qp(q);
            for (const Report& rep :
                 {verify_algebra(ir, qp, opt.tol), verify_wavetable(ir, qp, opt.tol),
                  verify_transform(ir, qp, opt.tol), verify_potential(ir, qp, opt.tol)}) {
                all = all && rep.all_pass();
                if (opt.format == "json") {
                    json jr = to_json(rep);
                    jr["twoj"] = twoj;
                    jr["q"] = q;
                    jreports.push_back(jr);
                } else {
                    for (const auto& c : rep.checks) {
                        out << (c.pass ? "PASS" : "FAIL") << " twoj=" << twoj
                            << " q=" << format_double(q) << " " << rep.title << "." << c.name
                            << " residual=" << format_double(c.residual)
                            << " tol=" << format_double(c.tol) << "\n";
                    }
                }
            }
        }
    }
    if (opt.format == "json") {
        out << json{{"command", "verify"}, {"all_pass", all}, {"reports", jreports}}.dump(2)
            << "\n";
    } else {
        out << (all ? "ALL PASS" : "VERIFICATION FAILED") << "\n";
    }
    return all ? 0 : 1;
}

int cmd_contract(const Options& opt) {
    QParam qp(opt.q);
    const ContractionReport rep = contraction_report(opt.twoj_list, qp, opt.n_max);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);
    if (opt.format == "json") {
        json j = to_json(rep);
        j["command"] = "contract";
        out << j.dump(2) << "\n";
    } else {
        out << "# contract q=" << format_double(opt.q) << " n_max=" << opt.n_max << "\n";
        out << "# columns: twoj, dev_target (vs i q^n delta), dev_asymptote, ladder_dev, "
               "aplus_dev, wx\n";
        out << "# wx_limit: " << format_double(rep.wx_limit) << "\n";
        for (const auto& r : rep.rows) {
            out << r.twoj << "," << format_double(r.dev_target) << ","
                << format_double(r.dev_asymptote) << "," << format_double(r.ladder_dev) << ","
                << format_double(r.aplus_dev) << "," << format_double(r.wx) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite q-oscillator toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool needs_twoj) {
        if (needs_twoj) {
            sub->add_option("--twoj", opt.twoj, "representation label 2j (dimension 2j+1)")
                ->required();
        }
        sub->add_option("--q", opt.q, "deformation parameter in (0,1]")->capture_default_str();
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        sub->add_option("--output", opt.output_path, "output file (default: stdout)");
    };

    auto* spectra = app.add_subcommand("spectra", "position grid and energy levels");
    add_common(spectra, true);
    auto* wavefuncs = app.add_subcommand("wavefuncs", "mode/position wavefunction table");
    add_common(wavefuncs, true);
    auto* kernel = app.add_subcommand("kernel", "fractional transform kernel matrix");
    add_common(kernel, true);
    kernel->add_option("--a", opt.a, "fractional power")->capture_default_str();
    kernel->add_option("--method", opt.kernel_method, "construction")
        ->check(CLI::IsMember({"spectral", "closed"}))
        ->capture_default_str();
    auto* transform = app.add_subcommand("transform", "apply the transform to a signal file");
    add_common(transform, true);
    transform->add_option("--a", opt.a, "fractional power")->capture_default_str();
    transform->add_option("--input", opt.input_path, "signal file, one re[,im] per line")
        ->required();
    auto* potential = app.add_subcommand("potential", "equivalent potential from the ground state");
    add_common(potential, true);
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("--twoj", opt.twoj, "single representation (default: a small grid)");
    auto* verify_q = verify->add_option("--q", opt.q, "single q (default: {0.5, 0.9, 1})");
    verify->add_option("--tol", opt.tol, "base tolerance; spec thresholds scale with tol/1e-10")
        ->capture_default_str();
    verify->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    verify->add_option("--output", opt.output_path, "output file (default: stdout)");
    auto* contract = app.add_subcommand("contract", "large-j contraction diagnostics");
    contract->add_option("--q", opt.q, "deformation parameter in (0,1]")->capture_default_str();
    contract->add_option("--twoj-list", opt.twoj_list, "twoj values (ascending)")
        ->capture_default_str();
    contract->add_option("--nmax", opt.n_max, "highest mode in the low-mode block")
        ->capture_default_str();
    contract->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    contract->add_option("--output", opt.output_path, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    opt.q_set = verify_q->count() > 0;

    try {
        if (spectra->parsed()) return cmd_spectra(opt);
        if (wavefuncs->parsed()) return cmd_wavefuncs(opt);
        if (kernel->parsed()) return cmd_kernel(opt);
        if (transform->parsed()) return cmd_transform(opt);
        if (potential->parsed()) return cmd_potential(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (contract->parsed()) return cmd_contract(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
