#include "kron/kronecker/kronecker.hpp"

#include "kron/errors.hpp"

namespace kron {

std::string to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::monic_in_variable:
      return "monic-in-variable";
    case CertificateKind::nonzero_mod_primes:
      return "nonzero-mod-primes";
    case CertificateKind::failed:
      return "failed";
  }
  return {};
}

PowerMatrix power_matrix(const FiniteFreeAlgebra& b) {
  ParameterRing s(b);
  const ScalarExtension ext(b, s.ring());
  const std::size_t n = b.rank();
  const AlgebraElement xi = generic_element(s);
  PolyMatrix u(s.ring(), n, n);
  AlgebraElement power = ext.one();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) u.at(i, j) = power.coords[i];
    if (j + 1 < n) power = ext.mul(power, xi);
  }
  MultiPoly d = u.det();
  return {std::move(s), std::move(u), std::move(d)};
}

bool vanishes_mod(const MultiPoly& f, std::uint64_t p) { return f.change_domain(Domain::prime_field(p)).is_zero(); }

namespace {

// Whether f has degree `deg` in variable v with a unit constant as leading coefficient.
bool monic_in(const MultiPoly& f, std::size_t v, unsigned deg) {
  if (f.degree_in(v) != static_cast<int>(deg)) return false;
  const MultiPoly lc = f.coefficient_in(v, deg);
  return lc.is_constant() && !lc.is_zero() && f.domain().is_unit(lc.constant_term());
}

}  // namespace

InjectivityCertificate injectivity_certificate(const FiniteFreeAlgebra& b, const std::vector<std::uint64_t>& primes) {
  const PowerMatrix pm = power_matrix(b);
  const std::size_t n = b.rank();
  const auto big_n = static_cast<unsigned>(n * (n - 1) / 2);
  InjectivityCertificate cert;
  cert.det = pm.det;
  if (pm.det.is_zero()) {
    cert.kind = CertificateKind::failed;
    cert.identically_zero = true;
    cert.grade = Grade::proof;
    return cert;
  }
  std::vector<std::size_t> tvars;
  for (std::size_t i = 0; i < n; ++i) tvars.push_back(pm.params.t_index(i));
  int hdeg = -1;
  const bool homogeneous = pm.det.is_homogeneous_in(tvars, &hdeg);

  if (b.monogenic()) {
    const std::size_t v = n > 1 ? 1 : 0;
    if (homogeneous && hdeg == static_cast<int>(big_n) && monic_in(pm.det, pm.params.t_index(v), big_n) &&
        pm.det.coefficient_in(pm.params.t_index(v), big_n).is_one()) {
      cert.kind = CertificateKind::monic_in_variable;
      cert.grade = Grade::proof;
      cert.variable = v;
      cert.variable_name = pm.params.ring().variable(pm.params.t_index(v));
      cert.degree = big_n;
      return cert;
    }
  }

  const bool integral = b.domain().kind() == DomainKind::integers;
  if (integral && primes.empty() && !b.monogenic())
    throw InvalidInput("injectivity_certificate: primes are required for a non-monogenic algebra over the integers");

  for (std::size_t i = 0; i < n; ++i) {
    if (!monic_in(pm.det, pm.params.t_index(i), big_n)) continue;
    cert.kind = CertificateKind::monic_in_variable;
    cert.grade = Grade::evidence;
    cert.variable = i;
    cert.variable_name = pm.params.ring().variable(pm.params.t_index(i));
    cert.degree = big_n;
    return cert;
  }

  if (integral) {
    for (auto p : primes) {
      if (vanishes_mod(pm.det, p)) {
        cert.kind = CertificateKind::failed;
        cert.grade = Grade::proof;
        cert.witness_prime = p;
        return cert;
      }
    }
    cert.primes = primes;
  } else if (b.domain().is_finite()) {
    cert.primes = {b.domain().characteristic()};
  }
  cert.kind = CertificateKind::nonzero_mod_primes;
  cert.grade = Grade::evidence;
  return cert;
}

nlohmann::ordered_json InjectivityCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = to_string(kind);
  j["grade"] = to_string(grade);
  if (variable) {
    j["variable"] = variable_name;
    j["degree"] = degree;
  }
  if (kind == CertificateKind::nonzero_mod_primes) j["primes"] = primes;
  if (kind == CertificateKind::failed) {
    if (identically_zero) j["identically_zero"] = true;
    if (witness_prime) j["witness_prime"] = *witness_prime;
  }
  j["det"] = det.to_string();
  return j;
}

MultiPoly norm_form(const FiniteFreeAlgebra& b) {
  const auto f = gcp(b);
  MultiPoly c0 = f.poly.coeff(0);
  return b.rank() % 2 ? -c0 : c0;
}

VerificationReport norm_gcp_relation(const FiniteFreeAlgebra& b) {
  const auto f = gcp(b);
  const ParameterRing& s = f.params;
  const PolyRing wide = s.ring_with_outer();
  const MultiPoly x = MultiPoly::variable(wide, 0);
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < s.ring().nvars(); ++i) images.push_back(MultiPoly::variable(wide, i + 1));
  for (std::size_t i = 0; i < b.rank(); ++i) {
    const MultiPoly unit_i = b.unit()[i].remap(wide);
    images[s.t_index(i)] = unit_i * x - MultiPoly::variable(wide, s.t_index(i) + 1);
  }
  const MultiPoly norm = norm_form(b);
  const MultiPoly lhs = norm.substitute(wide, images);
  const MultiPoly rhs = f.poly.to_multipoly(wide);
  VerificationReport r;
  r.check = "norm_gcp_relation";
  r.algebra_hash = b.hash();
  r.grade = Grade::proof;
  r.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
  r.witness("norm", norm.to_string());
  r.witness("substituted", lhs.to_string());
  r.witness("gcp", rhs.to_string());
  return r;
}

}  // namespace kron
