#include "oracles.hpp"

#include "vfsig/error.hpp"
#include "vfsig/signature.hpp"
#include "vfsig/veronese.hpp"

#include <doctest.h>

using namespace vfsig;

namespace {

// Degree-t monomials in n variables, counted by enumeration.
std::uint64_t count_monomials(std::size_t n, unsigned t) {
  std::uint64_t c = 0;
  for (const auto& e : oracle::exponent_box(n, t))
    if (std::accumulate(e.begin(), e.end(), 0u) == t) ++c;
  return c;
}

}  // namespace

TEST_CASE("context validation") {
  CHECK_THROWS_AS(VeroneseContext(0, 2), InvalidArgument);
  CHECK_THROWS_AS(VeroneseContext(2, 0), InvalidArgument);
  const VeroneseContext ctx(2, 3);
  CHECK_THROWS_AS(GradedClass(ctx, 3), InvalidArgument);
  CHECK(GradedClass(ctx, 2).index() == 2);
}

TEST_CASE("canonical class") {
  CHECK(canonical_class(VeroneseContext(2, 2)).index() == 0);
  CHECK(canonical_class(VeroneseContext(2, 3)).index() == 1);
  CHECK(canonical_class(VeroneseContext(3, 2)).index() == 1);
  CHECK(canonical_class(VeroneseContext(5, 1)).index() == 0);
}

TEST_CASE("canonical class is -n mod d and closes the generator-count algebra") {
  for (unsigned n = 1; n <= 12; ++n)
    for (unsigned d = 1; d <= 12; ++d) {
      const VeroneseContext ctx(n, d);
      const unsigned k = canonical_class(ctx).index();
      REQUIRE((n + k) % d == 0);
      // Only this k makes binom(n+k, n) / (d binom(n+k-1, n-1)) equal (1/n)ceil(n/d).
      for (unsigned other = 0; other < d; ++other) {
        const bool matches = make_rational(binomial(n + other, n),
                                           BigInt(d) * binomial(n + other - 1, n - 1)) ==
                             closed_form_prop(ctx);
        REQUIRE(matches == (other == k));
      }
    }
}

TEST_CASE("min_generators") {
  CHECK(min_generators(VeroneseContext(3, 4), GradedClass(VeroneseContext(3, 4), 1)) == 3);
  for (unsigned n = 1; n <= 6; ++n) {
    const VeroneseContext ctx(n, 5);
    CHECK(min_generators(ctx, GradedClass(ctx, 0)) == 1);
  }
  // x^3, x^2y, xy^2, y^3
  const VeroneseContext ctx(2, 4);
  CHECK(count_monomials(2, 3) == 4);
  CHECK(min_generators(ctx, GradedClass(ctx, 3)) == 4);
}

TEST_CASE("hilbert_function") {
  const VeroneseContext a(2, 3), b(1, 5), c(3, 2);
  CHECK(hilbert_function(a, GradedClass(a, 1), 0) == 2);
  CHECK(hilbert_function(b, GradedClass(b, 2), 3) == 1);
  CHECK(hilbert_function(c, GradedClass(c, 0), 1) == 6);
  CHECK(count_monomials(3, 2) == 6);
}

TEST_CASE("graded classes reassemble the Hilbert function of S") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned d = 1; d <= 6; ++d) {
      const VeroneseContext ctx(n, d);
      for (unsigned t = 0; t <= 30; ++t) {
        BigInt supplied = 0;
        unsigned suppliers = 0;
        for (unsigned j = 0; j < d; ++j) {
          if (t < j || (t - j) % d != 0) continue;
          supplied += hilbert_function(ctx, GradedClass(ctx, j), (t - j) / d);
          ++suppliers;
        }
        REQUIRE(suppliers == 1);
        REQUIRE(supplied == binomial(n - 1 + t, n - 1));
      }
      for (unsigned j = 0; j < d; ++j)
        REQUIRE(min_generators(ctx, GradedClass(ctx, j)) ==
                hilbert_function(ctx, GradedClass(ctx, j), 0));
    }
}
