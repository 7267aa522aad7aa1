#include "kron/errors.hpp"
#include "kron/ringkit/polymatrix.hpp"

namespace kron {

MultiPoly sylvester_resultant(const PolyRing& ring, const std::vector<MultiPoly>& p, int deg_p,
                              const std::vector<MultiPoly>& q, int deg_q) {
  if (deg_p < 0 || deg_q < 0) throw InvalidInput("resultant of the zero polynomial");
  const auto m = static_cast<std::size_t>(deg_p);
  const auto n = static_cast<std::size_t>(deg_q);
  auto coeff = [&](const std::vector<MultiPoly>& f, std::size_t k) {
    return k < f.size() ? f[k] : MultiPoly(ring);
  };
  PolyMatrix s(ring, m + n, m + n);
  // n rows of p's coefficients followed by m rows of q's, highest first.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s.at(r, r + k) = coeff(p, m - k);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s.at(n + r, r + k) = coeff(q, n - k);
  return s.det();
}

MultiPoly resultant(const UPoly& p, const UPoly& q) {
  if (p.is_zero() || q.is_zero()) throw InvalidInput("resultant of the zero polynomial");
  if (p.ring() != q.ring()) throw InvalidInput("resultant: ring mismatch");
  return sylvester_resultant(p.ring(), p.coeffs(), p.degree(), q.coeffs(), q.degree());
}

MultiPoly discriminant_in_x(const UPoly& f) {
  if (f.degree() < 1 || !f.is_monic()) throw InvalidInput("discriminant_in_x: polynomial must be monic of degree >= 1");
  const int n = f.degree();
  std::vector<MultiPoly> df;
  for (int k = 1; k <= n; ++k) df.push_back(f.coeff(k).scaled(f.ring().domain().from_int(k)));
  MultiPoly r = sylvester_resultant(f.ring(), f.coeffs(), n, df, n - 1);
  return (n * (n - 1) / 2) % 2 ? -r : r;
}

}  // namespace kron
