#include "kron/generic/functoriality.hpp"

#include "kron/errors.hpp"

namespace kron {

namespace {

VerificationReport compare(const std::string& check, const FiniteFreeAlgebra& b, const UPoly& lhs, const UPoly& rhs) {
  VerificationReport r;
  r.check = check;
  r.algebra_hash = b.hash();
  r.grade = Grade::proof;
  r.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
  r.witness("lhs", lhs.to_string());
  r.witness("rhs", rhs.to_string());
  if (!r.passed()) r.witness("difference", (lhs - rhs).to_string());
  return r;
}

}  // namespace

VerificationReport check_automorphism_invariance(const AlgebraMorphism& sigma) {
  if (!sigma.source().same_table(sigma.target()))
    throw InvalidInput("automorphism_invariance: morphism must be an endomorphism");
  const ParameterMap v(sigma);
  if (!v.is_injective()) throw InvalidInput("automorphism_invariance: morphism is not bijective");
  const auto f = gcp(sigma.source());
  auto r = compare("automorphism_invariance", sigma.source(), v.apply(f.poly), f.poly);
  return r;
}

VerificationReport check_free_extension(const AlgebraMorphism& u, unsigned d) {
  if (u.target().rank() != d * u.source().rank())
    throw InvalidInput("free_extension: rank of C must be d times the rank of B");
  const ParameterMap v(u);
  const auto fb = gcp(u.source());
  const auto fc = gcp(u.target());
  auto r = compare("free_extension", u.source(), v.apply(fc.poly), fb.poly.pow(d));
  r.witness("d", std::to_string(d));
  return r;
}

VerificationReport check_nilpotent_quotient(const AlgebraMorphism& u, unsigned e) {
  const ParameterMap v(u);
  if (!v.is_injective()) throw InvalidInput("nilpotent_quotient: morphism is not surjective");
  const auto fb = gcp(u.source());
  const auto fc = gcp(u.target());
  auto r = compare("nilpotent_quotient", u.source(), fb.poly, v.apply(fc.poly.pow(e)));
  r.witness("e", std::to_string(e));
  return r;
}

VerificationReport check_product_decomposition(const FiniteFreeAlgebra& b) {
  if (b.factors().empty()) throw InvalidInput("product_decomposition: algebra has no recorded factors");
  const auto fb = gcp(b);
  UPoly rhs(fb.params.ring(), {MultiPoly::from_int(fb.params.ring(), 1)}, fb.params.outer_var());
  for (std::size_t k = 0; k < b.factors().size(); ++k) {
    const ParameterMap q(AlgebraMorphism::projection(b, k));
    rhs = rhs * q.apply(gcp(b.factors()[k]).poly);
  }
  return compare("product_decomposition", b, fb.poly, rhs);
}

}  // namespace kron
