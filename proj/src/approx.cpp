#include "cobham/approx.hpp"

#include "cobham/errors.hpp"

#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace cobham {

bool satisfies_bound(const ApproxPair& pair) {
    if (pair.m == 0 || pair.n == 0) return false;
    if (pair.eps <= 0) return false;
    const Int am = pow_int(pair.a, pair.m);
    const Int bn = pow_int(pair.b, pair.n);
    const Int diff = boost::multiprecision::abs(am - bn);
    const Int p = boost::multiprecision::numerator(pair.eps);
    const Int q = boost::multiprecision::denominator(pair.eps);
    return diff * q <= p * bn;
}

namespace {

// Prime factorization by trial division; (prime, exponent) pairs in
// ascending prime order.
std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> factors;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        std::uint64_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

}  // namespace

bool multiplicatively_independent(std::uint64_t a, std::uint64_t b) {
    if (a < 2 || b < 2) throw InvalidArgumentError("multiplicative independence needs a, b >= 2");
    const auto fa = factorize(a);
    const auto fb = factorize(b);
    if (fa.size() != fb.size()) return true;
    for (std::size_t i = 0; i < fa.size(); ++i) {
        if (fa[i].first != fb[i].first) return true;  // different prime support
    }
    // Same support: dependent iff exponent vectors are proportional, i.e.
    // e_i * f_0 == f_i * e_0 for all i.
    for (std::size_t i = 1; i < fa.size(); ++i) {
        if (fa[i].second * fb[0].second != fb[i].second * fa[0].second) return true;
    }
    return false;
}

std::pair<std::uint64_t, std::uint64_t> dependence_witness(std::uint64_t a, std::uint64_t b) {
    if (multiplicatively_independent(a, b)) {
        throw InvalidArgumentError("dependence_witness: bases are independent");
    }
    // a^m = b^n iff m*e_i = n*f_i for every shared prime; the minimal
    // solution comes from the reduced ratio of the leading exponents.
    const auto fa = factorize(a);
    const auto fb = factorize(b);
    const std::uint64_t g = std::gcd(fa[0].second, fb[0].second);
    return {fb[0].second / g, fa[0].second / g};
}

ApproxPair approx_powers(unsigned a, unsigned b, const Rat& eps, std::uint64_t iteration_cap) {
    if (a < 2 || b < 2) throw InvalidArgumentError("approx_powers: bases must be at least 2");
    if (eps <= 0) throw InvalidArgumentError("approx_powers: eps must be positive");

    // Least power a' = a^k with a' >= b, so the scanned sequence increases.
    std::uint64_t k = 1;
    Int a_prime = a;
    while (a_prime < b) {
        a_prime *= a;
        ++k;
    }

    const Int eps_num = boost::multiprecision::numerator(eps);
    const Int eps_den = boost::multiprecision::denominator(eps);

    // Exact value a'^x * b^(-f) kept as num/den with den = b^f and
    // num/den in [1, b). Cell i holds [1 + i*eps, 1 + (i+1)*eps).
    Int num = 1, den = 1;
    std::uint64_t f = 0;
    std::map<Int, std::pair<std::uint64_t, std::uint64_t>> cell_first;  // cell -> (x, f_x)

    for (std::uint64_t x = 0;; ++x) {
        if (x > iteration_cap) {
            throw ResourceLimitError("approx_powers: iteration cap of " +
                                     std::to_string(iteration_cap) + " exceeded");
        }
        const Int cell = ((num - den) * eps_den) / (den * eps_num);
        const auto [it, inserted] = cell_first.emplace(cell, std::make_pair(x, f));
        if (!inserted) {
            const auto [x0, f0] = it->second;
            ApproxPair pair{k * (x - x0), f - f0, a, b, eps};
            // Any two same-cell terms satisfy the bound; the exact check
            // guards the cell arithmetic all the same.
            if (satisfies_bound(pair)) return pair;
        }
        num *= a_prime;
        while (num >= den * b) {
            den *= b;
            ++f;
        }
    }
}

}  // namespace cobham
