#include "cobham/bigint.hpp"

#include "cobham/errors.hpp"

#include <cctype>

namespace cobham {

Int pow_int(const Int& base, std::uint64_t exp) {
    Int result = 1;
    Int acc = base;
    while (exp > 0) {
        if (exp & 1) result *= acc;
        exp >>= 1;
        if (exp > 0) acc *= acc;
    }
    return result;
}

Int floor_rat(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);  // always > 0
    Int q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

Int ceil_rat(const Rat& r) {
    return -floor_rat(-r);
}

Int parse_int(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer token");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) throw ParseError("sign without digits: '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw ParseError("malformed integer: '" + std::string(text) + "'");
        }
    }
    return Int(std::string(text));
}

Rat parse_ratio(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    const Int num = parse_int(text.substr(0, slash));
    const Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rat(num, den);
}

std::string ratio_to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Int uniform_int(std::mt19937_64& rng, const Int& lo, const Int& hi) {
    if (lo > hi) throw InvalidArgumentError("uniform_int: empty range");
    const Int span = hi - lo;  // draw from [0, span]
    if (span == 0) return lo;
    const std::size_t bits = boost::multiprecision::msb(span) + 1;
    const std::size_t words = (bits + 63) / 64;
    while (true) {
        Int draw = 0;
        for (std::size_t w = 0; w < words; ++w) {
            draw <<= 64;
            draw |= Int(rng());
        }
        draw >>= (words * 64 - bits);  // keep exactly `bits` random bits
        if (draw <= span) return lo + draw;
    }
}

}  // namespace cobham
