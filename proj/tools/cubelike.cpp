// cubelike: analyze continuous quantum walks on cubelike graphs.
//
// Inputs are connection sets over Z_2^d, given either as a d x m
// generator matrix whose columns are the elements ("matrix" format) or
// as one bit string per element ("set" format).  In every bit string
// the leftmost character is coordinate 1, the least significant bit of
// the integer vertex encoding (so "00001" at d = 5 is vertex 16).
// Times are rational multiples of pi, written p/q.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cubelike/census.hpp"
#include "cubelike/construct.hpp"
#include "cubelike/io.hpp"
#include "cubelike/pst.hpp"

namespace {

using namespace cubelike;

constexpr const char* kBitOrderNote =
    "Bit strings run coordinate 1..d left to right; the leftmost character is "
    "the least significant bit of the integer vertex encoding.";

struct CommonOpts {
    std::string input;
    std::string format = "matrix";
    bool json = false;
    bool keep_order = false;
    double tol = 0.0;  // 0: dimension default (or CUBELIKE_TOL)
};

double env_tolerance() {
    const char* s = std::getenv("CUBELIKE_TOL");
    if (!s || !*s) return 0.0;
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || !(v > 0))
        throw std::runtime_error(
            "CUBELIKE_TOL must be a positive number, got \"" + std::string(s) + "\"");
    return v;
}

FileFormat to_format(const std::string& s) {
    return s == "set" ? FileFormat::set : FileFormat::matrix;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool with_input = true) {
    if (with_input)
        cmd->add_option("input", o.input, "connection-set file")->required();
    cmd->add_option("--format", o.format, "input/output format")
        ->check(CLI::IsMember({"matrix", "set"}))
        ->capture_default_str();
    cmd->add_flag("--json", o.json, "emit JSON instead of text");
    cmd->add_flag("--keep-order", o.keep_order,
                  "keep file column order instead of sorting elements");
    cmd->add_option("--tol", o.tol, "numeric tolerance (default by dimension)");
}

ConnectionSet load(const CommonOpts& o) {
    return load_connection_set(o.input, to_format(o.format), o.keep_order);
}

double pick_tol(const CommonOpts& o) {
    if (o.tol != 0.0) return o.tol;
    return env_tolerance();  // 0.0 falls through to the dimension default
}

void emit_set(const ConnectionSet& C, const CommonOpts& o) {
    print_connection_set(std::cout, C, to_format(o.format));
}

const char* constraint_label(CensusConstraint c) {
    return c == CensusConstraint::doubly_even ? "doubly-even" : "even-so";
}

int run_census(int dim, const std::string& constraint_name,
               const std::string& checkpoint, int threads, bool json,
               bool quiet) {
    const CensusConstraint constraint =
        constraint_name == "doubly-even"
            ? CensusConstraint::doubly_even
            : CensusConstraint::even_not_doubly_even_self_orth;
    CensusOptions opt;
    opt.checkpoint_path = checkpoint;
    opt.threads = threads;
    if (!quiet)
        opt.progress = [](uint64_t done, uint64_t total) {
            std::cerr << "scan " << done << "/" << total << " ("
                      << (100.0 * static_cast<double>(done) /
                          static_cast<double>(total))
                      << "%)\n";
        };
    const CensusResult res = enumerate_census(dim, constraint, opt);
    if (json) {
        // same writer conventions as the analyze report
        std::cout << "{\"dim\":" << res.dim << ",\"constraint\":\""
                  << constraint_label(res.constraint) << "\",\"orbits\":[";
        for (size_t k = 0; k < res.orbit_reps.size(); ++k) {
            if (k) std::cout << ',';
            std::cout << "{\"valency\":" << res.valencies[k] << ",\"orbit_size\":"
                      << res.orbit_sizes[k] << ",\"complement_partner\":"
                      << res.complement_partner[k] << ",\"rep\":[";
            for (int j = 0; j < res.orbit_reps[k].m(); ++j) {
                if (j) std::cout << ',';
                std::cout << '"' << bit_string(res.orbit_reps[k].element(j)) << '"';
            }
            std::cout << "]}";
        }
        std::cout << "],\"raw_spanning\":" << res.raw_spanning
                  << ",\"raw_nonspanning\":" << res.raw_nonspanning
                  << ",\"nonspanning_orbits\":" << res.nonspanning_orbits
                  << "}\n";
        return 0;
    }
    std::cout << "census dim " << res.dim << ", constraint "
              << constraint_label(res.constraint) << ": "
              << res.orbit_reps.size() << " orbit(s), " << res.raw_spanning
              << " spanning survivor(s), " << res.raw_nonspanning
              << " non-spanning (in " << res.nonspanning_orbits
              << " orbit(s), diagnostic)\n";
    for (size_t k = 0; k < res.orbit_reps.size(); ++k) {
        std::cout << "orbit " << k << ": valency " << res.valencies[k]
                  << ", size " << res.orbit_sizes[k];
        if (res.complement_partner[k] >= 0)
            std::cout << ", complement -> orbit " << res.complement_partner[k];
        std::cout << ", rep {";
        for (int j = 0; j < res.orbit_reps[k].m(); ++j) {
            if (j) std::cout << ' ';
            std::cout << bit_string(res.orbit_reps[k].element(j));
        }
        std::cout << "}\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string("cubelike: perfect state transfer on cubelike "
                             "graphs via their binary codes.\n") +
                 kBitOrderNote};
    app.require_subcommand(1);

    // analyze
    CommonOpts an;
    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "full profile / spectrum / PST report");
    add_common(analyze_cmd, an);

    // spectrum
    CommonOpts sp;
    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "eigenvalues with multiplicities");
    add_common(spectrum_cmd, sp);

    // period
    CommonOpts pd;
    CLI::App* period_cmd =
        app.add_subcommand("period", "minimum period and phase");
    add_common(period_cmd, pd);

    // pst-verify
    CommonOpts pv;
    std::string pv_time, pv_target;
    CLI::App* verify_cmd = app.add_subcommand(
        "pst-verify",
        "numerically check |H(t)_{0,target}| = 1; exit 2 when it is not");
    add_common(verify_cmd, pv);
    verify_cmd->add_option("--time", pv_time, "time as p/q (multiples of pi)")
        ->required();
    verify_cmd->add_option("--target", pv_target, "target vertex bit string")
        ->required();

    // construct-target
    CommonOpts ct;
    std::string ct_target;
    CLI::App* construct_cmd = app.add_subcommand(
        "construct-target",
        "retarget the time-pi/2 transfer to a chosen vertex (<= 2 toggles)");
    add_common(construct_cmd, ct);
    construct_cmd->add_option("--target", ct_target, "target vertex bit string")
        ->required();

    // complement
    CommonOpts co;
    CLI::App* complement_cmd = app.add_subcommand(
        "complement", "complement of the connection set in Z_2^d \\ {0}");
    add_common(complement_cmd, co);

    // product
    CommonOpts pr;
    std::string pr_second;
    CLI::App* product_cmd = app.add_subcommand(
        "product", "direct sum of two connection sets (Cartesian product)");
    add_common(product_cmd, pr);
    product_cmd->add_option("input2", pr_second, "second connection-set file")
        ->required();

    // power
    CommonOpts pw;
    int pw_k = 2;
    CLI::App* power_cmd =
        app.add_subcommand("power", "k-fold direct sum of a set with itself");
    add_common(power_cmd, pw);
    power_cmd->add_option("--k", pw_k, "number of factors")->required();

    // amplitude-curve
    CommonOpts ac;
    std::string ac_target, ac_until = "1";
    CLI::App* curve_cmd = app.add_subcommand(
        "amplitude-curve",
        "CSV of |H(t)_{0,target}| sampled at 64q points per pi");
    add_common(curve_cmd, ac);
    curve_cmd->add_option("--target", ac_target, "target vertex bit string")
        ->required();
    curve_cmd->add_option("--until", ac_until,
                          "sample t in [0, p/q * pi] (default 1: one pi)");

    // census
    int cs_dim = 5, cs_threads = 1;
    std::string cs_constraint = "even-so", cs_checkpoint;
    bool cs_json = false, cs_quiet = false;
    CLI::App* census_cmd = app.add_subcommand(
        "census", "exhaustive orbit census of self-orthogonal codes");
    census_cmd->add_option("--dim", cs_dim, "dimension (1..5)")
        ->capture_default_str();
    census_cmd
        ->add_option("--constraint", cs_constraint,
                     "even-so: divisor 2 mod 4; doubly-even: divisor 0 mod 4")
        ->check(CLI::IsMember({"even-so", "doubly-even"}))
        ->capture_default_str();
    census_cmd->add_option("--checkpoint", cs_checkpoint,
                           "checkpoint file (resumes when it exists)");
    census_cmd->add_option("--threads", cs_threads, "scan worker count")
        ->capture_default_str();
    census_cmd->add_flag("--json", cs_json, "emit JSON instead of text");
    census_cmd->add_flag("--quiet", cs_quiet, "suppress progress on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // --help and friends exit 0 through CLI11; real parse errors exit 1
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*analyze_cmd) {
            const Report r = analyze(load(an), pick_tol(an));
            std::cout << (an.json ? report_json(r) : report_text(r));
            return 0;
        }
        if (*spectrum_cmd) {
            const Spectrum s = spectrum(load(sp));
            if (sp.json) {
                std::cout << "{\"m\":" << s.m << ",\"spectrum\":[";
                for (size_t i = 0; i < s.entries.size(); ++i) {
                    if (i) std::cout << ',';
                    std::cout << "{\"eigenvalue\":" << s.entries[i].first
                              << ",\"multiplicity\":" << s.entries[i].second << '}';
                }
                std::cout << "]}\n";
            } else {
                for (const auto& [lambda, mult] : s.entries)
                    std::cout << lambda << " x" << mult << "\n";
            }
            return 0;
        }
        if (*period_cmd) {
            const ConnectionSet C = load(pd);
            const PeriodInfo info = min_period(C, pick_tol(pd));
            if (pd.json) {
                std::cout << "{\"period\":\"" << time_string(info.period)
                          << "\",\"alpha_re\":" << float_repr(info.alpha.real())
                          << ",\"alpha_im\":" << float_repr(info.alpha.imag())
                          << "}\n";
            } else {
                std::cout << "period " << time_string(info.period) << ", alpha "
                          << float_repr(info.alpha.real()) << " + "
                          << float_repr(info.alpha.imag()) << "i\n";
            }
            return 0;
        }
        if (*verify_cmd) {
            const ConnectionSet C = load(pv);
            const RationalPi t = RationalPi::parse(pv_time);
            const BitVec target = parse_bit_string(pv_target, C.dim);
            double tol = pick_tol(pv);
            if (tol == 0.0) tol = default_tolerance(C.dim);
            const bool ok = verify_pst_numeric(C, t, target, tol);
            const std::complex<double> ph =
                amplitude_entry(C, t, BitVec(C.dim, 0), target);
            if (pv.json) {
                std::cout << "{\"verified\":" << (ok ? "true" : "false")
                          << ",\"time\":\"" << time_string(t) << "\",\"target\":\""
                          << pv_target << "\",\"modulus\":"
                          << float_repr(std::abs(ph)) << ",\"tolerance\":"
                          << float_repr(tol) << "}\n";
            } else {
                std::cout << (ok ? "verified" : "no transfer") << ": |H("
                          << time_string(t) << ")_{0," << pv_target
                          << "}| = " << float_repr(std::abs(ph)) << "\n";
            }
            return ok ? 0 : 2;
        }
        if (*construct_cmd) {
            const ConnectionSet C = load(ct);
            const BitVec target = parse_bit_string(ct_target, C.dim);
            emit_set(pst_to_target(C, target), ct);
            return 0;
        }
        if (*complement_cmd) {
            emit_set(complement(load(co)), co);
            return 0;
        }
        if (*product_cmd) {
            const ConnectionSet a = load(pr);
            const ConnectionSet b = load_connection_set(
                pr_second, to_format(pr.format), pr.keep_order);
            emit_set(direct_sum(a, b), pr);
            return 0;
        }
        if (*power_cmd) {
            emit_set(power(load(pw), pw_k), pw);
            return 0;
        }
        if (*curve_cmd) {
            const ConnectionSet C = load(ac);
            const BitVec target = parse_bit_string(ac_target, C.dim);
            const RationalPi until = RationalPi::parse(ac_until);
            std::cout << "t,modulus\n";
            for (const auto& [t, modulus] : amplitude_curve(C, target, until))
                std::cout << float_repr(t) << ',' << float_repr(modulus) << "\n";
            return 0;
        }
        if (*census_cmd)
            return run_census(cs_dim, cs_constraint, cs_checkpoint, cs_threads,
                              cs_json, cs_quiet);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
