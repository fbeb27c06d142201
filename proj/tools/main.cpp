// Command-line front end: automaton file I/O, sequence inspection, and one
// subcommand per certificate-pipeline stage.

#include "cobham/cobham.hpp"
#include "cobham/errors.hpp"
#include "cobham/io.hpp"
#include "cobham/numeration.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace cobham;

std::vector<std::string> split_tokens(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

void write_dfao(const Dfao& m, const std::string& out_path) {
    if (out_path.empty()) {
        save_dfao(std::cout, m);
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write automaton file: " + out_path);
    save_dfao(out, m);
}

int run_cli(int argc, char** argv) {
    CLI::App app{"DFAO toolkit: base-c automatic sequences and eventual-periodicity "
                 "certificates from two multiplicatively independent bases"};
    app.require_subcommand(1);

    // eval FILE X
    auto* eval_cmd = app.add_subcommand("eval", "Print f_x computed by an automaton file");
    std::string eval_file, eval_x;
    eval_cmd->add_option("file", eval_file, "automaton file")->required();
    eval_cmd->add_option("x", eval_x, "index (decimal, arbitrary size)")->required();

    // prefix FILE COUNT
    auto* prefix_cmd = app.add_subcommand("prefix", "Print f_0 .. f_{count-1}, one per line");
    std::string prefix_file;
    std::uint64_t prefix_count = 0;
    prefix_cmd->add_option("file", prefix_file, "automaton file")->required();
    prefix_cmd->add_option("count", prefix_count, "number of values")->required();

    // indep A B
    auto* indep_cmd = app.add_subcommand("indep", "Test multiplicative independence");
    std::uint64_t indep_a = 0, indep_b = 0;
    indep_cmd->add_option("a", indep_a, "first base")->required();
    indep_cmd->add_option("b", indep_b, "second base")->required();

    // approx A B P/Q
    auto* approx_cmd = app.add_subcommand("approx", "Find m, n with |a^m - b^n| <= eps b^n");
    unsigned approx_a = 0, approx_b = 0;
    std::string approx_eps;
    approx_cmd->add_option("a", approx_a, "base a")->required();
    approx_cmd->add_option("b", approx_b, "base b")->required();
    approx_cmd->add_option("eps", approx_eps, "tolerance as p/q")->required();

    // extend FILE MAXDIGIT
    auto* extend_cmd = app.add_subcommand("extend", "Extend an automaton to digits {0..max}");
    std::string extend_file, extend_out;
    Digit extend_max = 0;
    extend_cmd->add_option("file", extend_file, "automaton file")->required();
    extend_cmd->add_option("maxdigit", extend_max, "largest digit of the new set")->required();
    extend_cmd->add_option("-o,--output", extend_out, "write to a file instead of stdout");

    // reverse FILE
    auto* reverse_cmd = app.add_subcommand(
        "reverse", "Reverse the reading direction (output reads least significant digit first)");
    std::string reverse_file, reverse_out;
    reverse_cmd->add_option("file", reverse_file, "automaton file")->required();
    reverse_cmd->add_option("-o,--output", reverse_out, "write to a file instead of stdout");

    // mkperiodic BASE --pre --per
    auto* mk_cmd = app.add_subcommand("mkperiodic",
                                      "Build the automaton of an ultimately periodic sequence");
    unsigned mk_base = 0;
    std::string mk_pre, mk_per, mk_out;
    mk_cmd->add_option("base", mk_base, "numeration base")->required();
    mk_cmd->add_option("--pre", mk_pre, "preperiod tokens, whitespace separated");
    mk_cmd->add_option("--per", mk_per, "period tokens, whitespace separated")->required();
    mk_cmd->add_option("-o,--output", mk_out, "write to a file instead of stdout");

    // extract --a FILE --b FILE ...
    auto* extract_cmd = app.add_subcommand(
        "extract", "Produce an eventual-periodicity certificate from two automata");
    std::string extract_a, extract_b, extract_out;
    std::uint64_t extract_verify = 0, extract_samples = 1000, extract_seed = 0;
    ExtractConfig extract_config;
    extract_cmd->add_option("--a", extract_a, "base-a automaton file")->required();
    extract_cmd->add_option("--b", extract_b, "base-b automaton file")->required();
    auto* extract_verify_opt = extract_cmd->add_option(
        "--verify", extract_verify, "verify with this window before exiting");
    extract_cmd->add_option("--samples", extract_samples, "random samples for --verify");
    extract_cmd->add_option("--seed", extract_seed, "seed for --verify sampling");
    extract_cmd->add_option("--witness-cap", extract_config.witness_cap,
                            "abort the witness search past this index");
    extract_cmd->add_option("-o,--output", extract_out, "write the certificate to a file");

    // verify --dfao FILE --cert CERT ...
    auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against an automaton");
    std::string verify_dfao, verify_cert;
    std::uint64_t verify_window = 1000, verify_samples = 1000, verify_seed = 0;
    verify_cmd->add_option("--dfao", verify_dfao, "automaton file")->required();
    verify_cmd->add_option("--cert", verify_cert, "certificate file")->required();
    verify_cmd->add_option("--window", verify_window, "exhaustive window above the threshold");
    verify_cmd->add_option("--samples", verify_samples, "random samples above the threshold");
    verify_cmd->add_option("--seed", verify_seed, "sampling seed");

    // teleport --dfao FILE --x X --y Y --n N
    auto* teleport_cmd = app.add_subcommand(
        "teleport", "Check f_{x c^n + z} = f_{y c^n + z} over the z window");
    std::string teleport_dfao, teleport_x, teleport_y;
    std::uint64_t teleport_n = 0, teleport_trials = 1000, teleport_seed = 0;
    teleport_cmd->add_option("--dfao", teleport_dfao, "extended automaton file")->required();
    teleport_cmd->add_option("--x", teleport_x, "first index")->required();
    teleport_cmd->add_option("--y", teleport_y, "second index")->required();
    teleport_cmd->add_option("--n", teleport_n, "window exponent")->required();
    teleport_cmd->add_option("--trials", teleport_trials, "z samples (exhaustive when larger)");
    teleport_cmd->add_option("--seed", teleport_seed, "sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(eval_cmd)) {
            const Dfao m = load_dfao_file(eval_file);
            std::cout << evaluate(m, parse_int(eval_x)) << "\n";
        } else if (app.got_subcommand(prefix_cmd)) {
            const Dfao m = load_dfao_file(prefix_file);
            for (Int x = 0; x < prefix_count; ++x) {
                std::cout << evaluate(m, x) << "\n";
            }
        } else if (app.got_subcommand(indep_cmd)) {
            if (multiplicatively_independent(indep_a, indep_b)) {
                std::cout << "independent\n";
            } else {
                const auto [m, n] = dependence_witness(indep_a, indep_b);
                std::cout << "dependent: " << indep_a << "^" << m << " = " << indep_b << "^"
                          << n << "\n";
            }
        } else if (app.got_subcommand(approx_cmd)) {
            const ApproxPair pair = approx_powers(approx_a, approx_b, parse_ratio(approx_eps));
            const Int am = pow_int(pair.a, pair.m);
            const Int bn = pow_int(pair.b, pair.n);
            std::cout << "m " << pair.m << "\n"
                      << "n " << pair.n << "\n"
                      << "difference " << boost::multiprecision::abs(am - bn) << "\n"
                      << "bound " << ratio_to_string(pair.eps * Rat(bn)) << "\n";
        } else if (app.got_subcommand(extend_cmd)) {
            const Dfao m = load_dfao_file(extend_file);
            write_dfao(extend_digits(m, DigitSet{m.base, extend_max}), extend_out);
        } else if (app.got_subcommand(reverse_cmd)) {
            write_dfao(reverse_reading(load_dfao_file(reverse_file)), reverse_out);
        } else if (app.got_subcommand(mk_cmd)) {
            const Dfao m =
                build_periodic_dfao(split_tokens(mk_pre), split_tokens(mk_per), mk_base);
            write_dfao(m, mk_out);
        } else if (app.got_subcommand(extract_cmd)) {
            const Dfao fa = load_dfao_file(extract_a);
            const Dfao fb = load_dfao_file(extract_b);
            const PeriodCertificate cert = extract(fa, fb, extract_config);
            std::cout << "bases " << cert.trace.approx.a << " " << cert.trace.approx.b << "\n"
                      << "s_infinity_size " << cert.trace.s_infinity.size() << "\n"
                      << "xi " << cert.trace.xi << "\n"
                      << "eps " << ratio_to_string(cert.trace.eps) << "\n"
                      << "m " << cert.trace.approx.m << "\n"
                      << "n " << cert.trace.approx.n << "\n"
                      << "x_start " << cert.trace.x_start << "\n"
                      << "threshold " << cert.threshold << "\n"
                      << "period " << cert.period << "\n";
            if (!extract_out.empty()) {
                std::ofstream out(extract_out);
                if (!out) throw Error("cannot write certificate file: " + extract_out);
                save_certificate(out, cert);
            }
            if (extract_verify_opt->count() > 0) {
                const VerificationReport report =
                    verify_certificate(fb, cert, extract_verify, extract_samples, extract_seed);
                if (!report.passed) {
                    std::cout << "verification fail at " << *report.counterexample << "\n";
                    return 1;
                }
                std::cout << "verification pass\n";
            }
        } else if (app.got_subcommand(verify_cmd)) {
            const Dfao m = load_dfao_file(verify_dfao);
            const PeriodCertificate cert = load_certificate_file(verify_cert);
            const VerificationReport report =
                verify_certificate(m, cert, verify_window, verify_samples, verify_seed);
            if (!report.passed) {
                std::cout << "fail: f_x != f_{x+p} at x = " << *report.counterexample << "\n";
                return 1;
            }
            std::cout << "pass: window " << report.window_checked << ", samples "
                      << report.samples_checked << "\n";
        } else if (app.got_subcommand(teleport_cmd)) {
            const Dfao m = load_dfao_file(teleport_dfao);
            const Int x = parse_int(teleport_x);
            const Int y = parse_int(teleport_y);
            const State s = run(m, canonical_repr(x, m.base));
            const bool ok =
                teleport_check(m, s, x, y, teleport_n, teleport_trials, teleport_seed);
            std::cout << (ok ? "pass" : "fail") << "\n";
            if (!ok) return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    return run_cli(argc, argv);
}
