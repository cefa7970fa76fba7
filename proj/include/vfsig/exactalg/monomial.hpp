#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace vfsig {

// Exponent tuple (c_1, ..., c_n) of a monomial x_1^{c_1} ... x_n^{c_n}.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<unsigned> exponents);
  ExponentVector(std::initializer_list<unsigned> exponents);

  static ExponentVector one(std::size_t num_vars);
  // x_{index+1}; index is 0-based.
  static ExponentVector variable(std::size_t num_vars, std::size_t index);

  std::size_t size() const { return exponents_.size(); }
  unsigned operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const unsigned> exponents() const { return exponents_; }
  unsigned degree() const { return degree_; }

  // Monomial product (exponent addition).
  ExponentVector operator*(const ExponentVector& other) const;

  bool operator==(const ExponentVector& other) const = default;

  // "1", "x1", "x1^2*x3", ...
  std::string to_string() const;

 private:
  std::vector<unsigned> exponents_;
  unsigned degree_ = 0;
};

// Lexicographic order with x_1 < x_2 < ... < x_n: exponents are scanned from
// x_1 and at the first difference the larger power is the smaller monomial.
// Under this order x_1^r is the minimum of all degree-r monomials and the
// leading term of det(M_alpha(r)) is x^alpha. Throws on length mismatch.
std::strong_ordering lex_compare(const ExponentVector& lhs, const ExponentVector& rhs);

struct LexLess {
  bool operator()(const ExponentVector& lhs, const ExponentVector& rhs) const {
    return lex_compare(lhs, rhs) < 0;
  }
};

// All degree-r monomials in num_vars variables, increasing in lex_compare.
std::vector<ExponentVector> monomials_of_degree(std::size_t num_vars, unsigned degree);

}  // namespace vfsig
