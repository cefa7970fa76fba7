#include "vfsig/exactalg/polynomial.hpp"

#include "vfsig/error.hpp"

namespace vfsig {

Polynomial Polynomial::constant(std::size_t num_vars, const BigRational& value) {
  Polynomial p(num_vars);
  p.add_term(ExponentVector::one(num_vars), value);
  return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index) {
  return monomial(ExponentVector::variable(num_vars, index));
}

Polynomial Polynomial::monomial(const ExponentVector& exponents, const BigRational& coeff) {
  Polynomial p(exponents.size());
  p.add_term(exponents, coeff);
  return p;
}

BigRational Polynomial::coefficient(const ExponentVector& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

std::optional<BigRational> Polynomial::as_constant() const {
  if (terms_.empty()) return BigRational(0);
  if (terms_.size() == 1 && terms_.begin()->first.degree() == 0) return terms_.begin()->second;
  return std::nullopt;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned deg = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != deg) return false;
  return true;
}

std::optional<unsigned> Polynomial::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.degree();
}

const ExponentVector& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no leading monomial");
  return terms_.rbegin()->first;
}

void Polynomial::check_ambient(const Polynomial& other) const {
  if (num_vars_ != other.num_vars_)
    throw InvalidArgument("polynomials over different variable counts (" +
                          std::to_string(num_vars_) + " vs " +
                          std::to_string(other.num_vars_) + ")");
}

void Polynomial::add_term(const ExponentVector& m, const BigRational& c) {
  if (m.size() != num_vars_) throw InvalidArgument("monomial has wrong variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ambient(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ambient(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial out(*this);
  out += other;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  Polynomial out(*this);
  out -= other;
  return out;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ambient(other);
  Polynomial out(num_vars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : other.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

Polynomial Polynomial::scaled(const BigRational& c) const {
  Polynomial out(num_vars_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, coeff * c);
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigRational mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (m.degree() == 0) {
      out += mag.get_str();
    } else {
      if (!unit) out += mag.get_str() + "*";
      out += m.to_string();
    }
  }
  return out;
}

}  // namespace vfsig
