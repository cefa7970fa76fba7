#pragma once

#include "vfsig/exactalg/polynomial.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace vfsig {

// Dense matrix of polynomials over a fixed ambient ring.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars)
      : rows_(rows), cols_(cols), num_vars_(num_vars), data_(rows * cols, Polynomial(num_vars)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t num_vars() const { return num_vars_; }
  Polynomial& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Polynomial& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PolyMatrix select_columns(const std::vector<std::size_t>& columns) const;

  bool operator==(const PolyMatrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t num_vars_;
  std::vector<Polynomial> data_;
};

// Exact determinant by Laplace expansion along rows, memoized on the set of
// remaining columns. Throws on non-square input or more than 30 columns.
Polynomial determinant(const PolyMatrix& m);

// The r x (n+r-1) band matrix M(n, r): entry (i, j) = x_{j-i+1} for
// 1 <= j-i+1 <= n, zero elsewhere. M(n, k) is the map S(-1)^{n+k-1} -> S^k.
struct BandMatrix {
  unsigned n;
  unsigned r;
  PolyMatrix entries;
};

BandMatrix build_band_matrix(unsigned n, unsigned r);

// Square submatrix M_alpha(r) of M(n, r): the first alpha_1 columns are those
// with x_1 on rows 1..alpha_1, the next alpha_2 those with x_2 on the
// following rows, and so on. Row j (0-based) of block v picks column j + v.
class ColumnSelection {
 public:
  ColumnSelection(std::vector<unsigned> alpha, unsigned r);

  const std::vector<unsigned>& alpha() const { return alpha_; }
  const std::vector<std::size_t>& columns() const { return columns_; }
  unsigned rows() const { return r_; }
  unsigned num_vars() const { return static_cast<unsigned>(alpha_.size()); }

  bool operator==(const ColumnSelection& other) const { return alpha_ == other.alpha_; }

 private:
  std::vector<unsigned> alpha_;
  std::vector<std::size_t> columns_;
  unsigned r_;
};

PolyMatrix build_submatrix(const ColumnSelection& sel);

struct MinorIdealVerdict {
  bool holds = false;
  std::size_t rank_found = 0;
  std::size_t expected_rank = 0;
  std::size_t minor_count = 0;
  bool all_homogeneous = false;
};

// I_r(M(n, r)) = (x_1, ..., x_n)^r by span rank: all r x r minors (over every
// column subset) expressed in the degree-r monomial basis must reach rank
// binom(n+r-1, n-1). Throws GuardExceeded beyond max_minors subsets.
MinorIdealVerdict verify_minor_ideal(unsigned n, unsigned r, std::uint64_t max_minors = 100'000);

struct CertificateTerm {
  Polynomial coefficient;
  ColumnSelection selection;
};

// target = sum coefficient_i * det(M_{selection_i}(r)).
struct MinorCertificate {
  ExponentVector target;
  std::vector<CertificateTerm> terms;
  // Coefficient of x^alpha in det(M_alpha(r)) for alpha = target.
  int leading_sign = 0;
  bool verified = false;
};

// Builds certificates in increasing monomial order so that every lex-smaller
// monomial already has one when it is needed. Determinants are cached.
class CertificateBuilder {
 public:
  CertificateBuilder(unsigned n, unsigned r);

  unsigned num_vars() const { return n_; }
  unsigned rows() const { return r_; }

  // Throws VerificationFailure if det(M_alpha) has a leading coefficient
  // other than +-1 or contains a monomial larger than the target.
  const MinorCertificate& certify(const ExponentVector& target);
  std::vector<MinorCertificate> certify_all();

  const Polynomial& minor(const std::vector<unsigned>& alpha);

 private:
  using Combination = std::map<std::vector<unsigned>, BigRational>;

  void advance_to(const ExponentVector& target);
  MinorCertificate materialize(const ExponentVector& target, const Combination& combo, int sign);

  unsigned n_;
  unsigned r_;
  std::vector<ExponentVector> order_;
  std::size_t next_ = 0;
  std::map<ExponentVector, Combination, LexLess> combos_;
  std::map<ExponentVector, MinorCertificate, LexLess> certificates_;
  std::map<std::vector<unsigned>, Polynomial> minors_;
};

MinorCertificate monomial_certificate(unsigned n, unsigned r, const ExponentVector& target);

// Sum of coefficient * det(M_selection) over the certificate's terms.
Polynomial expand_certificate(const MinorCertificate& cert);

struct SurjectivityVerdict {
  bool surjective = false;
  std::size_t rank = 0;
  std::size_t target_dim = 0;
  std::size_t domain_dim = 0;
};

// Degree-j component of S(-1)^{n+k-1} -> S^k given by M(n, k), as a scalar
// matrix over monomial bases; surjective iff its rank is k * binom(j+n-1, n-1).
// Throws GuardExceeded when that target dimension exceeds max_dim.
SurjectivityVerdict surjective_in_degree(unsigned n, unsigned k, unsigned j,
                                         std::uint64_t max_dim = 10'000);

}  // namespace vfsig
