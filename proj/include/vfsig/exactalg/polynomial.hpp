#pragma once

#include "vfsig/exactalg/bigint.hpp"
#include "vfsig/exactalg/monomial.hpp"

#include <map>
#include <optional>
#include <string>

namespace vfsig {

// Sparse polynomial with exact rational coefficients. Zero coefficients are
// never stored, so equality of term maps is equality of polynomials.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, BigRational, LexLess>;

  explicit Polynomial(std::size_t num_vars) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const BigRational& value);
  static Polynomial variable(std::size_t num_vars, std::size_t index);
  static Polynomial monomial(const ExponentVector& exponents, const BigRational& coeff = 1);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigRational coefficient(const ExponentVector& m) const;

  // Constant term value when the polynomial has degree <= 0.
  std::optional<BigRational> as_constant() const;

  bool is_homogeneous() const;
  // Common total degree; nullopt for zero or inhomogeneous polynomials.
  std::optional<unsigned> homogeneous_degree() const;

  // Largest monomial in lex_compare order; requires a nonzero polynomial.
  const ExponentVector& leading_monomial() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(const BigRational& c) const;

  bool operator==(const Polynomial& other) const {
    return num_vars_ == other.num_vars_ && terms_ == other.terms_;
  }

  // Terms from largest to smallest, e.g. "x1^2 - 1/2*x2".
  std::string to_string() const;

 private:
  void check_ambient(const Polynomial& other) const;
  void add_term(const ExponentVector& m, const BigRational& c);

  std::size_t num_vars_;
  Terms terms_;
};

}  // namespace vfsig
