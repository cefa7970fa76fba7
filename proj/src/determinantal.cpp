#include "vfsig/determinantal.hpp"

#include "vfsig/error.hpp"
#include "vfsig/exactalg/rational_matrix.hpp"
#include "vfsig/veronese.hpp"

#include <bit>
#include <numeric>
#include <string>
#include <unordered_map>

namespace vfsig {

PolyMatrix PolyMatrix::select_columns(const std::vector<std::size_t>& columns) const {
  PolyMatrix out(rows_, columns.size(), num_vars_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c] >= cols_) throw InvalidArgument("column index out of range");
      out.at(i, c) = at(i, columns[c]);
    }
  return out;
}

namespace {

class LaplaceExpansion {
 public:
  explicit LaplaceExpansion(const PolyMatrix& m) : m_(m) {}

  Polynomial run() {
    const std::uint32_t all = m_.cols() == 32 ? ~0u : ((1u << m_.cols()) - 1);
    return expand(0, all);
  }

 private:
  const Polynomial& expand(std::size_t row, std::uint32_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Polynomial acc(m_.num_vars());
    if (row == m_.rows()) {
      acc = Polynomial::constant(m_.num_vars(), 1);
    } else {
      int position = 0;
      for (std::size_t c = 0; c < m_.cols(); ++c) {
        if (!(mask & (1u << c))) continue;
        const Polynomial& entry = m_.at(row, c);
        if (!entry.is_zero()) {
          Polynomial term = entry * expand(row + 1, mask & ~(1u << c));
          if (position % 2 == 0)
            acc += term;
          else
            acc -= term;
        }
        ++position;
      }
    }
    return memo_.emplace(mask, std::move(acc)).first->second;
  }

  const PolyMatrix& m_;
  std::unordered_map<std::uint32_t, Polynomial> memo_;
};

BigInt count_subsets(std::size_t total, std::size_t pick) {
  return binomial(total, static_cast<std::int64_t>(pick));
}

}  // namespace

Polynomial determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    throw InvalidArgument("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + " matrix");
  if (m.cols() > 30) throw GuardExceeded("determinant limited to 30 columns");
  return LaplaceExpansion(m).run();
}

BandMatrix build_band_matrix(unsigned n, unsigned r) {
  if (n < 1 || r < 1) throw InvalidArgument("band matrix needs n >= 1 and r >= 1");
  BandMatrix band{n, r, PolyMatrix(r, n + r - 1, n)};
  for (unsigned i = 0; i < r; ++i)
    for (unsigned v = 0; v < n; ++v) band.entries.at(i, i + v) = Polynomial::variable(n, v);
  return band;
}

ColumnSelection::ColumnSelection(std::vector<unsigned> alpha, unsigned r)
    : alpha_(std::move(alpha)), r_(r) {
  if (alpha_.empty()) throw InvalidArgument("column selection needs at least one variable");
  const unsigned sum = std::accumulate(alpha_.begin(), alpha_.end(), 0u);
  if (sum != r)
    throw InvalidArgument("column selection: sum(alpha) = " + std::to_string(sum) +
                          " but r = " + std::to_string(r));
  unsigned row = 0;
  for (unsigned v = 0; v < alpha_.size(); ++v)
    for (unsigned t = 0; t < alpha_[v]; ++t, ++row) columns_.push_back(row + v);
}

PolyMatrix build_submatrix(const ColumnSelection& sel) {
  return build_band_matrix(sel.num_vars(), sel.rows()).entries.select_columns(sel.columns());
}

MinorIdealVerdict verify_minor_ideal(unsigned n, unsigned r, std::uint64_t max_minors) {
  const BandMatrix band = build_band_matrix(n, r);
  const std::size_t cols = band.entries.cols();
  const BigInt subsets = count_subsets(cols, r);
  if (subsets > BigInt(static_cast<unsigned long>(max_minors)))
    throw GuardExceeded(to_string(subsets) + " maximal minors exceed the limit " +
                        std::to_string(max_minors) + "; use the certificate method");

  const auto basis = monomials_of_degree(n, r);
  std::map<ExponentVector, std::size_t, LexLess> index;
  for (std::size_t b = 0; b < basis.size(); ++b) index.emplace(basis[b], b);

  MinorIdealVerdict verdict;
  verdict.minor_count = subsets.get_ui();
  verdict.expected_rank = basis.size();
  verdict.all_homogeneous = true;
  RationalMatrix coeffs(verdict.minor_count, basis.size());

  // Lexicographic walk over r-subsets of the columns.
  std::vector<std::size_t> pick(r);
  std::iota(pick.begin(), pick.end(), 0);
  std::size_t row = 0;
  while (true) {
    const Polynomial minor = determinant(band.entries.select_columns(pick));
    if (!minor.is_zero() && minor.homogeneous_degree() != r) verdict.all_homogeneous = false;
    for (const auto& [m, c] : minor.terms()) {
      auto it = index.find(m);
      if (it == index.end()) {
        verdict.all_homogeneous = false;
        continue;
      }
      coeffs.at(row, it->second) = c;
    }
    ++row;
    std::size_t i = r;
    while (i-- > 0 && pick[i] == cols - r + i) {
    }
    if (i == static_cast<std::size_t>(-1)) break;
    ++pick[i];
    for (std::size_t t = i + 1; t < r; ++t) pick[t] = pick[t - 1] + 1;
  }

  verdict.rank_found = rank(std::move(coeffs));
  verdict.holds = verdict.all_homogeneous && verdict.rank_found == verdict.expected_rank;
  return verdict;
}

CertificateBuilder::CertificateBuilder(unsigned n, unsigned r)
    : n_(n), r_(r), order_(monomials_of_degree(n, r)) {
  if (n < 1 || r < 1) throw InvalidArgument("certificates need n >= 1 and r >= 1");
}

const Polynomial& CertificateBuilder::minor(const std::vector<unsigned>& alpha) {
  auto it = minors_.find(alpha);
  if (it != minors_.end()) return it->second;
  Polynomial det = determinant(build_submatrix(ColumnSelection(alpha, r_)));
  return minors_.emplace(alpha, std::move(det)).first->second;
}

void CertificateBuilder::advance_to(const ExponentVector& target) {
  while (next_ < order_.size() && lex_compare(order_[next_], target) <= 0) {
    const ExponentVector& m = order_[next_];
    const std::vector<unsigned> alpha(m.exponents().begin(), m.exponents().end());
    const Polynomial& det = minor(alpha);
    const BigRational lead = det.coefficient(m);
    if (lead != 1 && lead != -1)
      throw VerificationFailure("det(M_alpha) for alpha = " + m.to_string() +
                                " has coefficient " + lead.get_str() + " on x^alpha");
    if (!(det.leading_monomial() == m))
      throw VerificationFailure("det(M_alpha) for alpha = " + m.to_string() +
                                " contains the larger monomial " +
                                det.leading_monomial().to_string() + " with no prior certificate");

    Combination combo;
    combo[alpha] = 1 / lead;
    for (const auto& [other, c] : det.terms()) {
      if (other == m) continue;
      auto prior = combos_.find(other);
      if (prior == combos_.end())
        throw VerificationFailure("monomial " + other.to_string() + " below " + m.to_string() +
                                  " lacks a prior certificate");
      const BigRational factor = c / lead;
      for (const auto& [sel, w] : prior->second) {
        BigRational& slot = combo[sel];
        slot -= factor * w;
        if (slot == 0) combo.erase(sel);
      }
    }
    certificates_.emplace(m, materialize(m, combo, lead > 0 ? 1 : -1));
    combos_.emplace(m, std::move(combo));
    ++next_;
  }
}

MinorCertificate CertificateBuilder::materialize(const ExponentVector& target,
                                                 const Combination& combo, int sign) {
  MinorCertificate cert{target, {}, sign, false};
  for (const auto& [alpha, w] : combo)
    cert.terms.push_back({Polynomial::constant(n_, w), ColumnSelection(alpha, r_)});
  Polynomial sum(n_);
  for (const auto& [alpha, w] : combo) sum += minor(alpha).scaled(w);
  if (!(sum == Polynomial::monomial(target)))
    throw VerificationFailure("certificate for " + target.to_string() +
                              " does not expand to the target");
  cert.verified = true;
  return cert;
}

const MinorCertificate& CertificateBuilder::certify(const ExponentVector& target) {
  if (target.size() != n_ || target.degree() != r_)
    throw InvalidArgument("target " + target.to_string() + " is not a degree-" +
                          std::to_string(r_) + " monomial in " + std::to_string(n_) +
                          " variables");
  advance_to(target);
  return certificates_.at(target);
}

std::vector<MinorCertificate> CertificateBuilder::certify_all() {
  std::vector<MinorCertificate> out;
  if (!order_.empty()) advance_to(order_.back());
  for (const auto& m : order_) out.push_back(certificates_.at(m));
  return out;
}

MinorCertificate monomial_certificate(unsigned n, unsigned r, const ExponentVector& target) {
  CertificateBuilder builder(n, r);
  return builder.certify(target);
}

Polynomial expand_certificate(const MinorCertificate& cert) {
  Polynomial sum(cert.target.size());
  for (const auto& term : cert.terms)
    sum += term.coefficient * determinant(build_submatrix(term.selection));
  return sum;
}

SurjectivityVerdict surjective_in_degree(unsigned n, unsigned k, unsigned j,
                                         std::uint64_t max_dim) {
  if (n < 1 || k < 1) throw InvalidArgument("surjectivity test needs n >= 1 and k >= 1");
  const BigInt target_dim = BigInt(k) * monomial_count(n, j);
  if (target_dim > BigInt(static_cast<unsigned long>(max_dim)))
    throw GuardExceeded("graded component of dimension " + to_string(target_dim) +
                        " exceeds the limit " + std::to_string(max_dim));

  const auto target_basis = monomials_of_degree(n, j);
  std::map<ExponentVector, std::size_t, LexLess> target_index;
  for (std::size_t b = 0; b < target_basis.size(); ++b) target_index.emplace(target_basis[b], b);
  const std::vector<ExponentVector> domain_basis =
      j == 0 ? std::vector<ExponentVector>{} : monomials_of_degree(n, j - 1);
  const std::size_t copies = n + k - 1;

  SurjectivityVerdict verdict;
  verdict.target_dim = k * target_basis.size();
  verdict.domain_dim = copies * domain_basis.size();
  RationalMatrix map(verdict.target_dim, verdict.domain_dim);
  for (std::size_t c = 0; c < copies; ++c) {
    for (std::size_t b = 0; b < domain_basis.size(); ++b) {
      const std::size_t col = c * domain_basis.size() + b;
      // Column c of M(n, k) holds x_{c-i+1} on row i.
      for (std::size_t i = 0; i < k; ++i) {
        if (c < i || c - i >= n) continue;
        const ExponentVector image = domain_basis[b] * ExponentVector::variable(n, c - i);
        map.at(i * target_basis.size() + target_index.at(image), col) += 1;
      }
    }
  }
  verdict.rank = rank(std::move(map));
  verdict.surjective = verdict.rank == verdict.target_dim;
  return verdict;
}

}  // namespace vfsig
