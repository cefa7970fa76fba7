#include "vfsig/exactalg/bigint.hpp"

#include "vfsig/error.hpp"

#include <numeric>

namespace vfsig {

BigInt binomial(std::uint64_t a, std::int64_t b) {
  if (b < 0 || static_cast<std::uint64_t>(b) > a) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), a, static_cast<unsigned long>(b));
  return out;
}

BigInt ipow(std::uint64_t base, std::uint64_t exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  BigRational out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const BigRational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const BigRational& value, int digits) {
  BigInt scale = ipow(10, static_cast<std::uint64_t>(digits));
  BigInt num = value.get_num();
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt scaled = num * scale / value.get_den();
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string frac_str = frac.get_str();
  frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');
  std::string out = negative ? "-" : "";
  out += whole.get_str();
  if (digits > 0) out += "." + frac_str;
  return out;
}

std::uint64_t mod_floor(const BigInt& value, std::uint64_t modulus) {
  if (modulus == 0) throw InvalidArgument("modulus must be positive");
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), modulus);
  return r.get_ui();
}

std::uint64_t mod_floor(std::int64_t value, std::uint64_t modulus) {
  if (modulus == 0) throw InvalidArgument("modulus must be positive");
  const auto m = static_cast<std::int64_t>(modulus);
  return static_cast<std::uint64_t>(((value % m) + m) % m);
}

std::uint64_t mod_inverse(std::uint64_t value, std::uint64_t modulus) {
  if (modulus == 1) return 0;
  BigInt out;
  BigInt v(static_cast<unsigned long>(value)), m(static_cast<unsigned long>(modulus));
  if (mpz_invert(out.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()) == 0)
    throw InvalidArgument("no inverse of " + std::to_string(value) + " modulo " +
                          std::to_string(modulus));
  return out.get_ui();
}

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t f = 2; f * f <= value; ++f)
    if (value % f == 0) return false;
  return true;
}

}  // namespace vfsig
