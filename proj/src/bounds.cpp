#include "linlayout/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace linlayout {

BigInt factorial(std::uint64_t k) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

BigInt power(const BigInt& base, std::uint64_t exponent) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
    return out;
}

bool power_of_two_power_at_least(const BigInt& base, std::uint64_t log2_exponent,
                                 const BigInt& target) {
    if (target <= 0) return true;
    if (base <= 0) return false;
    if (base == 1) return target <= 1;
    // base >= 2, so base^e >= 2^e > target once e >= bit length of target.
    const std::uint64_t bits = mpz_sizeinbase(target.get_mpz_t(), 2);
    if (log2_exponent >= 63 || (std::uint64_t{1} << log2_exponent) >= bits) return true;
    // Square repeatedly; stop as soon as the target is reached.
    BigInt value = base;
    for (std::uint64_t i = 0; i < log2_exponent; ++i) {
        if (value >= target) return true;
        value *= value;
    }
    return value >= target;
}

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

std::string RequiredParameters::b_formula() const {
    const int n2 = n * n;
    return "(" + std::to_string(n2) + ")! * " + std::to_string(s) + "^" + std::to_string(3 * n2) +
           " * (" + std::to_string(s + 1) + "*2^" + std::to_string(n) + ")^(2^" +
           std::to_string(tower_log2) + ")";
}

RequiredParameters required_parameters(int s, double max_bits) {
    if (s < 1) throw ParameterError("required_parameters: s must be at least 1");
    if (s > 1000) throw ParameterError("required_parameters: s too large");
    RequiredParameters p;
    p.s = s;
    p.n = 2 * s + 1;
    const std::uint64_t n2 = static_cast<std::uint64_t>(p.n) * static_cast<std::uint64_t>(p.n);
    p.tower_log2 = n2 - 1;
    p.d_bound = BigInt(s + 1) * power(2, static_cast<std::uint64_t>(p.n));
    const BigInt by_halving = p.d_bound / power(2, static_cast<std::uint64_t>(p.n));
    const BigInt half_n = (p.n + 1) / 2;
    p.family_size = std::min(by_halving, half_n);

    const double log2_d = std::log2(static_cast<double>(s + 1)) + p.n;
    p.b_log2 = std::lgamma(static_cast<double>(n2) + 1.0) / std::log(2.0) +
               3.0 * static_cast<double>(n2) * std::log2(static_cast<double>(s)) +
               std::ldexp(log2_d, static_cast<int>(std::min<std::uint64_t>(p.tower_log2, 1000)));

    if (p.b_log2 <= max_bits && p.tower_log2 < 63) {
        const BigInt c = power(p.d_bound, std::uint64_t{1} << p.tower_log2);
        const BigInt a = power(BigInt(s), 3 * n2) * c;
        p.c_bound = c;
        p.a_bound = a;
        p.b = factorial(n2) * a;
    }
    return p;
}

}  // namespace linlayout
