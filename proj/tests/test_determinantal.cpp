#include "oracles.hpp"

#include "vfsig/determinantal.hpp"
#include "vfsig/error.hpp"

#include <doctest.h>

using namespace vfsig;

namespace {

// Entry codes: 0 for zero, v for the variable x_v.
PolyMatrix from_codes(const std::vector<std::vector<int>>& codes, std::size_t n) {
  PolyMatrix m(codes.size(), codes.front().size(), n);
  for (std::size_t i = 0; i < codes.size(); ++i)
    for (std::size_t j = 0; j < codes[i].size(); ++j)
      if (codes[i][j] != 0) m.at(i, j) = Polynomial::variable(n, codes[i][j] - 1);
  return m;
}

std::vector<std::vector<unsigned>> compositions(unsigned n, unsigned r) {
  std::vector<std::vector<unsigned>> out;
  for (const auto& m : monomials_of_degree(n, r)) out.emplace_back(m.exponents().begin(), m.exponents().end());
  return out;
}

}  // namespace

TEST_CASE("band matrix M(3,6) reproduces the worked example") {
  const auto band = build_band_matrix(3, 6);
  CHECK(band.entries.rows() == 6);
  CHECK(band.entries.cols() == 8);
  CHECK(band.entries == from_codes({{1, 2, 3, 0, 0, 0, 0, 0},
                                    {0, 1, 2, 3, 0, 0, 0, 0},
                                    {0, 0, 1, 2, 3, 0, 0, 0},
                                    {0, 0, 0, 1, 2, 3, 0, 0},
                                    {0, 0, 0, 0, 1, 2, 3, 0},
                                    {0, 0, 0, 0, 0, 1, 2, 3}},
                                   3));
}

TEST_CASE("small band matrices") {
  CHECK(build_band_matrix(2, 2).entries == from_codes({{1, 2, 0}, {0, 1, 2}}, 2));
  const auto diag = build_band_matrix(1, 4);
  CHECK(diag.entries == from_codes({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, 1));
  CHECK_THROWS_AS(build_band_matrix(0, 2), InvalidArgument);
  CHECK_THROWS_AS(build_band_matrix(2, 0), InvalidArgument);
}

TEST_CASE("submatrix M_{3,2,1}(6) reproduces the worked example") {
  const ColumnSelection sel({3, 2, 1}, 6);
  CHECK(sel.columns() == std::vector<std::size_t>{0, 1, 2, 4, 5, 7});
  CHECK(build_submatrix(sel) == from_codes({{1, 2, 3, 0, 0, 0},
                                            {0, 1, 2, 0, 0, 0},
                                            {0, 0, 1, 3, 0, 0},
                                            {0, 0, 0, 2, 3, 0},
                                            {0, 0, 0, 1, 2, 0},
                                            {0, 0, 0, 0, 1, 3}},
                                           3));
  CHECK_THROWS_AS(ColumnSelection({2, 3, 2}, 6), InvalidArgument);
}

TEST_CASE("pure-power selections") {
  for (unsigned r = 1; r <= 8; ++r) {
    std::vector<unsigned> first(3, 0), last(3, 0);
    first[0] = r;
    last[2] = r;
    const auto upper = build_submatrix(ColumnSelection(first, r));
    for (unsigned i = 0; i < r; ++i) {
      CHECK(upper.at(i, i) == Polynomial::variable(3, 0));
      for (unsigned j = 0; j < i; ++j) CHECK(upper.at(i, j).is_zero());
    }
    CHECK(determinant(upper) == Polynomial::monomial(ExponentVector{r, 0, 0}));
    const auto lower = build_submatrix(ColumnSelection(last, r));
    if (r <= 6) REQUIRE(oracle::leibniz_determinant(lower) == Polynomial::monomial(ExponentVector{0, 0, r}));
    CHECK(determinant(lower) == Polynomial::monomial(ExponentVector{0, 0, r}));
  }
}

TEST_CASE("determinant") {
  PolyMatrix one(1, 1, 3);
  one.at(0, 0) = Polynomial::variable(3, 2);
  CHECK(determinant(one) == Polynomial::variable(3, 2));
  CHECK_THROWS_AS(determinant(PolyMatrix(2, 3, 2)), InvalidArgument);

  // M_{1,1}(2) for n = 2 picks columns 0 and 2 of [[x1, x2, 0], [0, x1, x2]],
  // i.e. [[x1, 0], [0, x2]]; by hand the determinant is x1*x2.
  const auto m11 = build_submatrix(ColumnSelection({1, 1}, 2));
  CHECK(m11 == from_codes({{1, 0}, {0, 2}}, 2));
  CHECK(determinant(m11) == Polynomial::monomial(ExponentVector{1, 1}));

  SUBCASE("agrees with Leibniz expansion on every M_alpha, n <= 3, r <= 5") {
    for (unsigned n = 1; n <= 3; ++n)
      for (unsigned r = 1; r <= 5; ++r)
        for (const auto& alpha : compositions(n, r)) {
          const auto m = build_submatrix(ColumnSelection(alpha, r));
          REQUIRE(determinant(m) == oracle::leibniz_determinant(m));
        }
  }
}

TEST_CASE("verify_minor_ideal examples") {
  // Minors of [[x1, x2, 0], [0, x1, x2]]: x1^2, x1*x2, x2^2.
  const auto band = build_band_matrix(2, 2);
  CHECK(determinant(band.entries.select_columns({0, 1})) == Polynomial::monomial(ExponentVector{2, 0}));
  CHECK(determinant(band.entries.select_columns({0, 2})) == Polynomial::monomial(ExponentVector{1, 1}));
  CHECK(determinant(band.entries.select_columns({1, 2})) == Polynomial::monomial(ExponentVector{0, 2}));
  const auto v22 = verify_minor_ideal(2, 2);
  CHECK(v22.holds);
  CHECK(v22.rank_found == 3);
  CHECK(v22.expected_rank == 3);
  CHECK(v22.minor_count == 3);

  for (unsigned r = 1; r <= 6; ++r) {
    const auto v = verify_minor_ideal(1, r);
    CHECK(v.holds);
    CHECK(v.rank_found == 1);
  }
  const auto v33 = verify_minor_ideal(3, 3);
  CHECK(v33.holds);
  CHECK(v33.rank_found == 10);
  CHECK(v33.minor_count == 10);

  CHECK_THROWS_AS(verify_minor_ideal(4, 5, 10), GuardExceeded);
}

TEST_CASE("maximal minors are homogeneous of degree r") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned r = 1; r <= 5; ++r) REQUIRE(verify_minor_ideal(n, r).all_homogeneous);
}

TEST_CASE("monomial certificates") {
  SUBCASE("x1^r is its own minor") {
    for (unsigned r = 1; r <= 5; ++r) {
      const auto cert = monomial_certificate(3, r, ExponentVector{r, 0, 0});
      REQUIRE(cert.terms.size() == 1);
      CHECK(cert.terms[0].selection.alpha() == std::vector<unsigned>{r, 0, 0});
      CHECK(cert.terms[0].coefficient == Polynomial::constant(3, 1));
      CHECK(cert.verified);
    }
  }
  SUBCASE("x_n^r is a single minor") {
    const auto cert = monomial_certificate(3, 4, ExponentVector{0, 0, 4});
    REQUIRE(cert.terms.size() == 1);
    CHECK(cert.terms[0].selection.alpha() == std::vector<unsigned>{0, 0, 4});
    CHECK(expand_certificate(cert) == Polynomial::monomial(ExponentVector{0, 0, 4}));
  }
  SUBCASE("all degree-3 monomials in 3 variables") {
    CertificateBuilder builder(3, 3);
    const auto certs = builder.certify_all();
    REQUIRE(certs.size() == 10);
    for (const auto& c : certs) {
      CHECK(c.verified);
      CHECK(c.leading_sign == 1);
      CHECK(expand_certificate(c) == Polynomial::monomial(c.target));
    }
  }
  SUBCASE("det(M_{0,2,0}(2)) = x2^2 - x1*x3 needs the smaller x1*x3") {
    const auto det = determinant(build_submatrix(ColumnSelection({0, 2, 0}, 2)));
    CHECK(det == Polynomial::monomial(ExponentVector{0, 2, 0}) - Polynomial::monomial(ExponentVector{1, 0, 1}));
    const auto cert = monomial_certificate(3, 2, ExponentVector{0, 2, 0});
    CHECK(cert.terms.size() == 2);
    CHECK(expand_certificate(cert) == Polynomial::monomial(ExponentVector{0, 2, 0}));
  }
  SUBCASE("bad targets") {
    CHECK_THROWS_AS(monomial_certificate(3, 3, ExponentVector{1, 1, 0}), InvalidArgument);
    CHECK_THROWS_AS(monomial_certificate(3, 2, ExponentVector{1, 1}), InvalidArgument);
  }
}

TEST_CASE("span check and certificates agree for n <= 3, r <= 4") {
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned r = 1; r <= 4; ++r) {
      const bool span = verify_minor_ideal(n, r).holds;
      bool certified = true;
      try {
        for (const auto& c : CertificateBuilder(n, r).certify_all())
          certified = certified && c.verified && expand_certificate(c) == Polynomial::monomial(c.target);
      } catch (const VerificationFailure&) {
        certified = false;
      }
      REQUIRE(span == certified);
      REQUIRE(span);
    }
}

TEST_CASE("surjectivity in degree j") {
  const auto a = surjective_in_degree(2, 1, 1);
  CHECK(a.surjective);
  CHECK(a.rank == 2);
  const auto b = surjective_in_degree(2, 2, 2);
  CHECK(b.surjective);
  CHECK(b.rank == 6);
  CHECK(b.target_dim == 6);
  CHECK(b.domain_dim == 6);
  const auto c = surjective_in_degree(2, 2, 1);
  CHECK(c.target_dim == 4);
  CHECK(c.domain_dim == 3);
  CHECK_FALSE(c.surjective);
  CHECK_THROWS_AS(surjective_in_degree(4, 4, 20, 100), GuardExceeded);
  CHECK_THROWS_AS(surjective_in_degree(2, 0, 1), InvalidArgument);
}

TEST_CASE("minor ideal implies surjectivity from degree k on") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned k = 1; k <= 4; ++k) {
      if (!verify_minor_ideal(n, k).holds) continue;
      for (unsigned j = k; j <= k + 2; ++j) REQUIRE(surjective_in_degree(n, k, j).surjective);
    }
}
