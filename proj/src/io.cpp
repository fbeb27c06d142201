#include "cobham/io.hpp"

#include "cobham/errors.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

namespace cobham {

namespace {

// Splits a stream into whitespace-separated tokens, one vector per line,
// with '#' comments stripped and blank lines dropped.
std::vector<std::vector<std::string>> tokenize_lines(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::string raw;
    while (std::getline(in, raw)) {
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream split(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (split >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    return lines;
}

std::uint64_t parse_small(const std::string& tok, const char* what) {
    const Int value = parse_int(tok);
    if (value < 0 || value > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError(std::string(what) + " out of range: " + tok);
    }
    return static_cast<std::uint64_t>(value);
}

void expect_arity(const std::vector<std::string>& line, std::size_t args) {
    if (line.size() != args + 1) {
        throw ParseError("directive '" + line[0] + "' expects " + std::to_string(args) +
                         " argument(s)");
    }
}

}  // namespace

Dfao load_dfao(std::istream& in) {
    const auto lines = tokenize_lines(in);

    Dfao m;
    bool have_base = false, have_states = false, have_initial = false, have_outputs = false;
    std::size_t state_count = 0;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> trans;

    for (const auto& line : lines) {
        const std::string& directive = line[0];
        if (directive == "base") {
            expect_arity(line, 1);
            if (have_base) throw ParseError("duplicate 'base' line");
            m.base = static_cast<unsigned>(parse_small(line[1], "base"));
            if (m.base < 2) throw ParseError("base must be at least 2");
            have_base = true;
        } else if (directive == "digits") {
            if (!have_base) throw ParseError("'digits' before 'base'");
            if (!m.alphabet.empty()) throw ParseError("duplicate 'digits' line");
            if (line.size() < 2) throw ParseError("'digits' needs at least one digit");
            for (std::size_t i = 1; i < line.size(); ++i) {
                m.alphabet.push_back(static_cast<Digit>(parse_small(line[i], "digit")));
            }
            std::sort(m.alphabet.begin(), m.alphabet.end());
            if (std::adjacent_find(m.alphabet.begin(), m.alphabet.end()) != m.alphabet.end()) {
                throw ParseError("duplicate digit in 'digits' line");
            }
        } else if (directive == "states") {
            expect_arity(line, 1);
            if (have_states) throw ParseError("duplicate 'states' line");
            state_count = parse_small(line[1], "state count");
            if (state_count == 0) throw ParseError("state count must be positive");
            have_states = true;
        } else if (directive == "initial") {
            expect_arity(line, 1);
            if (have_initial) throw ParseError("duplicate 'initial' line");
            m.initial = static_cast<State>(parse_small(line[1], "initial state"));
            have_initial = true;
        } else if (directive == "outputs") {
            if (!have_states) throw ParseError("'outputs' before 'states'");
            if (have_outputs) throw ParseError("duplicate 'outputs' line");
            if (line.size() != state_count + 1) {
                throw ParseError("'outputs' must list exactly " + std::to_string(state_count) +
                                 " tokens");
            }
            m.outputs.assign(line.begin() + 1, line.end());
            have_outputs = true;
        } else if (directive == "trans") {
            expect_arity(line, 3);
            const auto from = parse_small(line[1], "transition source");
            const auto digit = parse_small(line[2], "transition digit");
            const auto to = parse_small(line[3], "transition target");
            if (!trans.emplace(std::make_pair(from, digit), to).second) {
                throw ParseError("duplicate transition for state " + line[1] + " digit " +
                                 line[2]);
            }
        } else {
            throw ParseError("unknown directive '" + directive + "'");
        }
    }

    if (!have_base) throw ParseError("missing 'base' line");
    if (!have_states) throw ParseError("missing 'states' line");
    if (!have_initial) throw ParseError("missing 'initial' line");
    if (!have_outputs) throw ParseError("missing 'outputs' line");
    if (m.alphabet.empty()) {
        m.alphabet.resize(m.base);
        for (Digit d = 0; d < m.base; ++d) m.alphabet[d] = d;
    }
    for (Digit d = 0; d < m.base; ++d) {
        if (std::find(m.alphabet.begin(), m.alphabet.end(), d) == m.alphabet.end()) {
            throw ParseError("digit set must contain the canonical digit " + std::to_string(d));
        }
    }
    if (m.initial >= state_count) throw ParseError("initial state index out of range");

    m.transitions.assign(state_count * m.alphabet.size(), 0);
    std::vector<bool> defined(state_count * m.alphabet.size(), false);
    for (const auto& [key, to] : trans) {
        const auto [from, digit] = key;
        if (from >= state_count) {
            throw ParseError("transition source state " + std::to_string(from) + " out of range");
        }
        if (to >= state_count) {
            throw ParseError("transition target state " + std::to_string(to) + " out of range");
        }
        const auto slot = m.digit_slot(static_cast<Digit>(digit));
        if (slot == m.alphabet.size()) {
            throw ParseError("transition digit " + std::to_string(digit) +
                             " is not in the digit set");
        }
        m.transitions[from * m.alphabet.size() + slot] = static_cast<State>(to);
        defined[from * m.alphabet.size() + slot] = true;
    }
    for (std::size_t s = 0; s < state_count; ++s) {
        for (std::size_t slot = 0; slot < m.alphabet.size(); ++slot) {
            if (!defined[s * m.alphabet.size() + slot]) {
                throw ParseError("missing transition for state " + std::to_string(s) +
                                 " digit " + std::to_string(m.alphabet[slot]));
            }
        }
    }
    if (!m.stable_initial()) {
        throw ParseError("initial state must be fixed by digit 0 (leading-zero convention)");
    }
    validate_dfao(m);
    return m;
}

Dfao load_dfao_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open automaton file: " + path);
    try {
        return load_dfao(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_dfao(std::ostream& out, const Dfao& m) {
    out << "base " << m.base << "\n";
    bool canonical = m.alphabet.size() == m.base;
    if (!canonical) {
        out << "digits";
        for (Digit d : m.alphabet) out << ' ' << d;
        out << "\n";
    }
    out << "states " << m.state_count() << "\n";
    out << "initial " << m.initial << "\n";
    out << "outputs";
    for (const auto& token : m.outputs) out << ' ' << token;
    out << "\n";
    for (std::size_t s = 0; s < m.state_count(); ++s) {
        for (std::size_t slot = 0; slot < m.alphabet.size(); ++slot) {
            out << "trans " << s << ' ' << m.alphabet[slot] << ' '
                << m.transitions[s * m.alphabet.size() + slot] << "\n";
        }
    }
}

namespace {

constexpr const char* kCertFormat = "cobham-certificate";
constexpr const char* kCertVersion = "1";

}  // namespace

void save_certificate(std::ostream& out, const PeriodCertificate& cert) {
    const ExtractionTrace& t = cert.trace;
    out << "format " << kCertFormat << ' ' << kCertVersion << "\n";
    out << "base_a " << t.approx.a << "\n";
    out << "base_b " << t.approx.b << "\n";
    out << "m " << t.approx.m << "\n";
    out << "n " << t.approx.n << "\n";
    out << "eps " << ratio_to_string(t.eps) << "\n";
    out << "xi " << t.xi << "\n";
    out << "x_start " << t.x_start << "\n";
    out << "radius " << ratio_to_string(t.interval_radius) << "\n";
    out << "threshold " << cert.threshold << "\n";
    out << "period " << cert.period << "\n";
    out << "s_infinity";
    for (State s : t.s_infinity) out << ' ' << s;
    out << "\n";
    for (const auto& w : t.witnesses) {
        out << "witness " << w.s << ' ' << w.t << ' ' << w.x << ' ' << w.y << "\n";
    }
    for (const auto& [s, p] : t.periods) {
        out << "period_st " << s << ' ' << p << "\n";
    }
}

PeriodCertificate load_certificate(std::istream& in) {
    const auto lines = tokenize_lines(in);
    PeriodCertificate cert;
    ExtractionTrace& t = cert.trace;
    bool have_format = false;

    for (const auto& line : lines) {
        const std::string& directive = line[0];
        if (directive == "format") {
            expect_arity(line, 2);
            if (line[1] != kCertFormat || line[2] != kCertVersion) {
                throw ParseError("unsupported certificate format: " + line[1] + " " + line[2]);
            }
            have_format = true;
        } else if (directive == "base_a") {
            expect_arity(line, 1);
            t.approx.a = static_cast<unsigned>(parse_small(line[1], "base_a"));
        } else if (directive == "base_b") {
            expect_arity(line, 1);
            t.approx.b = static_cast<unsigned>(parse_small(line[1], "base_b"));
        } else if (directive == "m") {
            expect_arity(line, 1);
            t.approx.m = parse_small(line[1], "exponent m");
        } else if (directive == "n") {
            expect_arity(line, 1);
            t.approx.n = parse_small(line[1], "exponent n");
        } else if (directive == "eps") {
            expect_arity(line, 1);
            t.eps = parse_ratio(line[1]);
            t.approx.eps = t.eps;
        } else if (directive == "xi") {
            expect_arity(line, 1);
            t.xi = parse_int(line[1]);
        } else if (directive == "x_start") {
            expect_arity(line, 1);
            t.x_start = parse_int(line[1]);
        } else if (directive == "radius") {
            expect_arity(line, 1);
            t.interval_radius = parse_ratio(line[1]);
        } else if (directive == "threshold") {
            expect_arity(line, 1);
            cert.threshold = parse_int(line[1]);
        } else if (directive == "period") {
            expect_arity(line, 1);
            cert.period = parse_int(line[1]);
        } else if (directive == "s_infinity") {
            for (std::size_t i = 1; i < line.size(); ++i) {
                t.s_infinity.push_back(static_cast<State>(parse_small(line[i], "state")));
            }
        } else if (directive == "witness") {
            expect_arity(line, 4);
            StatePairWitness w;
            w.s = static_cast<State>(parse_small(line[1], "state"));
            w.t = static_cast<State>(parse_small(line[2], "state"));
            w.x = parse_int(line[3]);
            w.y = parse_int(line[4]);
            t.witnesses.push_back(std::move(w));
        } else if (directive == "period_st") {
            expect_arity(line, 2);
            t.periods.emplace_back(static_cast<State>(parse_small(line[1], "state")),
                                   parse_int(line[2]));
        } else {
            throw ParseError("unknown certificate directive '" + directive + "'");
        }
    }
    if (!have_format) throw ParseError("missing certificate 'format' line");
    if (cert.period <= 0) throw ParseError("certificate period must be positive");
    if (cert.threshold < 0) throw ParseError("certificate threshold must be a natural number");
    return cert;
}

PeriodCertificate load_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open certificate file: " + path);
    try {
        return load_certificate(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace cobham
