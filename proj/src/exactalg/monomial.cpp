#include "vfsig/exactalg/monomial.hpp"

#include "vfsig/error.hpp"

#include <algorithm>
#include <numeric>

namespace vfsig {

ExponentVector::ExponentVector(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0u)) {}

ExponentVector::ExponentVector(std::initializer_list<unsigned> exponents)
    : ExponentVector(std::vector<unsigned>(exponents)) {}

ExponentVector ExponentVector::one(std::size_t num_vars) {
  return ExponentVector(std::vector<unsigned>(num_vars, 0));
}

ExponentVector ExponentVector::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw InvalidArgument("variable index out of range");
  std::vector<unsigned> e(num_vars, 0);
  e[index] = 1;
  return ExponentVector(std::move(e));
}

ExponentVector ExponentVector::operator*(const ExponentVector& other) const {
  if (size() != other.size()) throw InvalidArgument("monomials over different variable counts");
  std::vector<unsigned> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return ExponentVector(std::move(e));
}

std::string ExponentVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "x" + std::to_string(i + 1);
    if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

std::strong_ordering lex_compare(const ExponentVector& lhs, const ExponentVector& rhs) {
  if (lhs.size() != rhs.size())
    throw InvalidArgument("lex_compare: exponent vectors of different length");
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] != rhs[i]) return rhs[i] <=> lhs[i];
  }
  return std::strong_ordering::equal;
}

namespace {

void fill(std::vector<unsigned>& current, std::size_t pos, unsigned remaining,
          std::vector<ExponentVector>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.emplace_back(current);
    return;
  }
  // Larger leading exponents first: that is increasing order.
  for (unsigned a = remaining + 1; a-- > 0;) {
    current[pos] = a;
    fill(current, pos + 1, remaining - a, out);
  }
  current[pos] = 0;
}

}  // namespace

std::vector<ExponentVector> monomials_of_degree(std::size_t num_vars, unsigned degree) {
  if (num_vars == 0) throw InvalidArgument("need at least one variable");
  std::vector<ExponentVector> out;
  std::vector<unsigned> current(num_vars, 0);
  fill(current, 0, degree, out);
  return out;
}

}  // namespace vfsig
