#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace vfsig {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Exact binomial coefficient; zero outside 0 <= b <= a.
BigInt binomial(std::uint64_t a, std::int64_t b);

BigInt ipow(std::uint64_t base, std::uint64_t exponent);

// num/den in lowest terms with positive denominator. Throws on den == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

std::string to_string(const BigInt& value);

// Always "num/den", also for integral values.
std::string to_string(const BigRational& value);

// Truncated fixed-point rendering for human-readable columns only.
std::string to_decimal(const BigRational& value, int digits);

// Non-negative residue of value modulo modulus (> 0).
std::uint64_t mod_floor(const BigInt& value, std::uint64_t modulus);
std::uint64_t mod_floor(std::int64_t value, std::uint64_t modulus);

// Inverse of value modulo modulus; requires gcd(value, modulus) == 1.
std::uint64_t mod_inverse(std::uint64_t value, std::uint64_t modulus);

bool is_prime(std::uint64_t value);

}  // namespace vfsig
