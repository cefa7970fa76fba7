#include "vfsig/veronese.hpp"

#include "vfsig/error.hpp"

#include <string>

namespace vfsig {

VeroneseContext::VeroneseContext(unsigned num_vars, unsigned degree) : n_(num_vars), d_(degree) {
  if (n_ < 1) throw InvalidArgument("number of variables n must be >= 1");
  if (d_ < 1) throw InvalidArgument("Veronese degree d must be >= 1");
}

GradedClass::GradedClass(const VeroneseContext& ctx, unsigned index) : j_(index) {
  if (index >= ctx.degree())
    throw InvalidArgument("class index " + std::to_string(index) + " out of range for d = " +
                          std::to_string(ctx.degree()));
}

GradedClass canonical_class(const VeroneseContext& ctx) {
  const unsigned d = ctx.degree();
  return GradedClass(ctx, (d - ctx.num_vars() % d) % d);
}

BigInt monomial_count(unsigned num_vars, std::uint64_t degree) {
  return binomial(num_vars - 1 + degree, num_vars - 1);
}

BigInt min_generators(const VeroneseContext& ctx, const GradedClass& cls) {
  const unsigned n = ctx.num_vars();
  return binomial(n + cls.index() - 1, n - 1);
}

BigInt hilbert_function(const VeroneseContext& ctx, const GradedClass& cls, std::uint64_t i) {
  return monomial_count(ctx.num_vars(), cls.index() + i * ctx.degree());
}

}  // namespace vfsig
