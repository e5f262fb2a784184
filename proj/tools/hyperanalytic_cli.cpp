// Command-line front end: example signal generation, orthogonal signal,
// hyperanalytic signal, demodulation, properness report and selftest.

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperanalytic/analytic.hpp"
#include "hyperanalytic/envelope.hpp"
#include "hyperanalytic/generate.hpp"
#include "hyperanalytic/io.hpp"
#include "hyperanalytic/properness.hpp"
#include "hyperanalytic/selftest.hpp"

namespace ha = hyperanalytic;

namespace {

enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kParseError = 2,
    kNumericError = 3,
    kSelftestFailed = 4,
    kUsageError = 64,
};

ha::Quaternion parse_quadruple(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double x = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad number '" + item + "'");
        v.push_back(x);
    }
    if (v.size() != 4) {
        throw std::invalid_argument("axis '" + text + "' must have four components w,x,y,z");
    }
    return {v[0], v[1], v[2], v[3]};
}

struct AxisOptions {
    std::string xi = "0,1,0,0";
    std::string mu = "0,0,1,0";

    void add_to(CLI::App* cmd) {
        cmd->add_option("--xi", xi, "embedding axis as w,x,y,z (unit pure)")->capture_default_str();
        cmd->add_option("--mu", mu, "transform axis as w,x,y,z (unit pure, orthogonal to xi)")
            ->capture_default_str();
    }

    ha::QuaternionBasis basis() const {
        return {ha::UnitPureQuaternion(parse_quadruple(xi)), ha::UnitPureQuaternion(parse_quadruple(mu))};
    }
};

void print_properness(std::ostream& out, const ha::Covariance4& c, const ha::PropernessReport& r) {
    out << "covariance over (z_r, z_i, o_r, o_i):\n";
    for (std::size_t i = 0; i < 4; ++i) {
        out << "  ";
        for (std::size_t j = 0; j < 4; ++j) {
            out << std::setw(16) << std::setprecision(8) << c(i, j);
        }
        out << '\n';
    }
    out << "alpha = " << r.alpha << "  omega = " << r.omega << "  beta = " << r.beta << "  gamma = " << r.gamma
        << '\n';
    if (r.classification == ha::Properness::degenerate) {
        out << "classification withheld: zero-energy signal\n";
    } else {
        out << "classification: " << ha::to_string(r.classification) << " (worst predicate " << r.worst_predicate
            << ", relative deviation " << r.worst_deviation << ")\n";
    }

    out << "\n[properness]\n";
    const auto kv = [&](const std::string& key, double v) { out << key << '=' << ha::io::format_real(v) << '\n'; };
    kv("alpha", r.alpha);
    kv("omega", r.omega);
    kv("beta", r.beta);
    kv("gamma", r.gamma);
    kv("energy", r.energy);
    kv("tolerance", r.tolerance);
    out << "classification=" << ha::to_string(r.classification) << '\n';
    out << "worst_predicate=" << r.worst_predicate << '\n';
    kv("worst_deviation", r.worst_deviation);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            kv("c" + std::to_string(i) + std::to_string(j), c(i, j));
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperanalytic signal toolkit: orthogonal signals, complex envelope and phase, properness"};
    app.require_subcommand(1);

    ha::GeneratorSpec gen;
    std::string waveform = "helix_gauss";
    std::vector<double> centers = {gen.gauss_centers[0], gen.gauss_centers[1]};
    std::string out_path;
    auto* generate = app.add_subcommand("generate", "write an example signal as CSV");
    generate->add_option("--waveform", waveform, "tone | am_gauss | helix_gauss")->capture_default_str();
    generate->add_option("--n", gen.n, "number of samples")->capture_default_str();
    generate->add_option("--carrier-freq", gen.carrier_freq, "carrier frequency, cycles/sample")
        ->capture_default_str();
    generate->add_option("--helix-freq", gen.helix_freq, "helix rotation frequency, cycles/sample")
        ->capture_default_str();
    generate->add_option("--theta", gen.theta, "carrier phase, radians")->capture_default_str();
    generate->add_option("--psi", gen.psi, "rotation in the complex plane, radians")->capture_default_str();
    generate->add_option("--sigma", gen.gauss_sigma, "Gaussian width, samples")->capture_default_str();
    generate->add_option("--centers", centers, "Gaussian centres a,b (samples)")
        ->delimiter(',')
        ->expected(2)
        ->capture_default_str();
    generate->add_option("--amplitude", gen.amplitude, "carrier amplitude")->capture_default_str();
    generate->add_option("--out", out_path, "output CSV")->required();

    std::string in_path;
    std::string method = "hilbert_pair";
    AxisOptions axes;
    auto* orth = app.add_subcommand("orthogonal", "compute the orthogonal signal o");
    orth->add_option("--in", in_path, "input CSV")->required();
    orth->add_option("--out", out_path, "output CSV")->required();
    orth->add_option("--method", method, "hilbert_pair | complex_fft | qft")->capture_default_str();
    axes.add_to(orth);

    auto* hyper = app.add_subcommand("hyperanalytic", "compute the quaternion hyperanalytic signal");
    hyper->add_option("--in", in_path, "input CSV")->required();
    hyper->add_option("--out", out_path, "output CSV (index,w,x,y,z)")->required();
    axes.add_to(hyper);

    auto* demod = app.add_subcommand("demodulate", "complex envelope and phase");
    demod->add_option("--in", in_path, "input CSV")->required();
    demod->add_option("--out", out_path, "output CSV")->required();
    axes.add_to(demod);

    double tol = ha::kDefaultPropernessTolerance;
    double sample_period = 1.0;
    auto* proper = app.add_subcommand("properness", "covariance pattern of the hyperanalytic signal");
    proper->add_option("--in", in_path, "input CSV")->required();
    proper->add_option("--tol", tol, "relative tolerance")->capture_default_str();
    proper->add_option("--sample-period", sample_period, "sample period T for covariance scaling")
        ->capture_default_str();
    axes.add_to(proper);

    auto* self = app.add_subcommand("selftest", "run the acceptance criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsageError;
    }

    try {
        if (*generate) {
            gen.waveform = ha::parse_waveform(waveform);
            gen.gauss_centers[0] = centers.at(0);
            gen.gauss_centers[1] = centers.at(1);
            ha::io::write_signal_csv(out_path, ha::generate(gen));
        } else if (*orth) {
            const auto z = ha::io::read_signal_csv(in_path);
            const auto result = ha::orthogonal(z, ha::parse_orthogonal_method(method), axes.basis());
            ha::io::write_signal_csv(out_path, result.o);
        } else if (*hyper) {
            const auto z = ha::io::read_signal_csv(in_path);
            const auto basis = axes.basis();
            auto out = ha::io::open_output(out_path);
            ha::io::write_quaternion_csv(out, ha::hyperanalytic(z, basis).h);
        } else if (*demod) {
            const auto z = ha::io::read_signal_csv(in_path);
            const auto basis = axes.basis();
            const auto d = ha::demodulate(z, basis);
            auto out = ha::io::open_output(out_path);
            ha::io::write_demodulation_csv(out, z, d);
            const auto flagged = std::count(d.polar.degenerate.begin(), d.polar.degenerate.end(), true);
            if (flagged > 0) {
                std::cerr << "note: " << flagged << " degenerate sample(s) interpolated\n";
            }
        } else if (*proper) {
            const auto z = ha::io::read_signal_csv(in_path, sample_period);
            const auto c = ha::covariance(ha::hyperanalytic(z, axes.basis()));
            print_properness(std::cout, c, ha::classify(c, tol));
        } else if (*self) {
            const auto start = std::chrono::steady_clock::now();
            const auto results = ha::selftest::run_all({}, &std::cout);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            const bool ok = ha::selftest::all_passed(results);
            std::cout << (ok ? "selftest passed" : "selftest FAILED") << " in " << std::setprecision(3) << secs
                      << " s\n";
            return ok ? kOk : kSelftestFailed;
        }
    } catch (const ha::io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParseError;
    } catch (const ha::DegeneratePolarForm& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kNumericError;
    } catch (const std::domain_error& e) {
        std::cerr << "numeric error: " << e.what() << '\n';
        return kNumericError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIoError;
    }
    return kOk;
}
