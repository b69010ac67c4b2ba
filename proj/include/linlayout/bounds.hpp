#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace linlayout {

using BigInt = mpz_class;

class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

BigInt factorial(std::uint64_t k);
BigInt power(const BigInt& base, std::uint64_t exponent);

/// base^(2^log2_exponent) >= target, decided exactly without materializing
/// the power when it is hopelessly large.
bool power_of_two_power_at_least(const BigInt& base, std::uint64_t log2_exponent,
                                 const BigInt& target);

std::string to_decimal(const BigInt& value);

/// Parameters under which every s-stack layout of S_b [] H_n is refuted:
/// n = 2s+1 and b = (n^2)! * s^(3n^2) * ((s+1) 2^n)^(2^(n^2-1)), together
/// with the lower bounds the pipeline then guarantees at each stage.
struct RequiredParameters {
    int s = 0;
    int n = 0;
    std::uint64_t tower_log2 = 0;  // n^2 - 1; the tower exponent is 2^tower_log2
    BigInt d_bound;                // (s+1) 2^n
    BigInt family_size;            // min(floor(d_bound / 2^n), ceil(n/2)) = s+1
    double b_log2 = 0.0;           // estimate, for reporting only
    /// Exact values, present when b has at most max_bits bits.
    std::optional<BigInt> b;
    std::optional<BigInt> a_bound;  // s^(3n^2) ((s+1) 2^n)^(2^(n^2-1))
    std::optional<BigInt> c_bound;  // ((s+1) 2^n)^(2^(n^2-1))

    /// Human-readable closed form of b.
    std::string b_formula() const;
};

inline constexpr double default_max_parameter_bits = 16.0 * 1024 * 1024;

RequiredParameters required_parameters(int s, double max_bits = default_max_parameter_bits);

}  // namespace linlayout
