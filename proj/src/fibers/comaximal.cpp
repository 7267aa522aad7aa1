#include "kron/fibers/comaximal.hpp"

#include "kron/errors.hpp"

namespace kron {

namespace {

GfPoly to_field_poly(const UPoly& p, const Domain& field) {
  const Domain& from = p.ring().domain();
  std::vector<Scalar> cs;
  for (const auto& c : p.coeffs()) cs.push_back(field.convert(c.constant_term(), from));
  return GfPoly(field, std::move(cs));
}

// f(T + x).
GfPoly shifted(const GfPoly& f, const Scalar& x) {
  const Domain& field = f.field();
  const GfPoly lin(field, {x, field.one()});
  GfPoly acc(field);
  for (std::size_t k = f.coeffs().size(); k-- > 0;) acc = acc * lin + GfPoly(field, {f.coeffs()[k]});
  return acc;
}

// Number of distinct roots of r in 𝔽_{q^e}: deg gcd(r, Y^{q^e} - Y).
int roots_in_extension(const GfPoly& r, unsigned e) {
  const Domain& f = r.field();
  mpz_class qe;
  mpz_ui_pow_ui(qe.get_mpz_t(), f.order(), e);
  const GfPoly y = GfPoly::x(f);
  return gcd(r, powmod(y, qe, r) - y).degree();
}

void certify(ComaximalResult& out, const GfPoly& p, const GfPoly& q) {
  const GfPoly ps = shifted(p, *out.shift);
  const GfBezout b = xgcd(ps, q);
  if (!b.g.is_one()) throw InvalidInput("comaximal_shift: shifted polynomials are not coprime");
  out.u = b.s;
  out.v = b.t;
  out.verified = (b.s * ps + b.t * q).is_one();
}

}  // namespace

nlohmann::ordered_json ComaximalResult::to_json() const {
  nlohmann::ordered_json j;
  j["base"] = base.name();
  j["resultant"] = resultant.to_string();
  j["field"] = field.name();
  j["shift"] = shift ? nlohmann::ordered_json(field.to_string(*shift)) : nlohmann::ordered_json(nullptr);
  j["extension_degree"] = extension_degree ? nlohmann::ordered_json(*extension_degree) : nlohmann::ordered_json(nullptr);
  j["U"] = u ? nlohmann::ordered_json(u->to_string("T")) : nlohmann::ordered_json(nullptr);
  j["V"] = v ? nlohmann::ordered_json(v->to_string("T")) : nlohmann::ordered_json(nullptr);
  j["denominator"] = denominator ? nlohmann::ordered_json(denominator->get_str()) : nlohmann::ordered_json(nullptr);
  j["verified"] = verified;
  j["notes"] = notes;
  return j;
}

ComaximalResult comaximal_shift(const UPoly& p, const UPoly& q, long bound) {
  const Domain dom = p.ring().domain();
  if (p.ring().nvars() != 0 || q.ring().nvars() != 0 || !(q.ring().domain() == dom))
    throw InvalidInput("comaximal_shift: P and Q must share a base without variables");
  if (!p.is_monic() || !q.is_monic() || p.degree() < 1 || q.degree() < 1)
    throw InvalidInput("comaximal_shift: P and Q must be monic of degree >= 1");
  if (!dom.is_finite() && dom.kind() != DomainKind::integers && dom.kind() != DomainKind::rationals)
    throw InvalidInput("comaximal_shift: base must be a finite field, the rationals or the integers");

  const PolyRing rx(dom, {"X"});
  const UPoly lin(rx, {MultiPoly::variable(rx, 0), MultiPoly::from_int(rx, 1)}, "T");
  const UPoly pt = UPoly(rx, p.remap(rx).coeffs(), "T").compose(lin);
  const MultiPoly res = resultant(pt, UPoly(rx, q.remap(rx).coeffs(), "T"));
  const PolyRing r0(dom, {});
  ComaximalResult out{dom, UPoly::from_multipoly(res, "X", r0), dom, std::nullopt, std::nullopt,
                      std::nullopt, std::nullopt, std::nullopt, false, {}};
  const GfPoly r_base = dom.is_finite() ? to_field_poly(out.resultant, dom) : GfPoly(Domain::rationals());

  if (dom.is_finite()) {
    for (std::uint64_t i = 0; i < dom.order(); ++i) {
      const Scalar x = dom.element(i);
      if (!dom.is_zero(r_base.evaluate(x))) {
        out.shift = x;
        certify(out, to_field_poly(p, dom), to_field_poly(q, dom));
        return out;
      }
    }
    unsigned e = 2;
    while (true) {
      mpz_class qe;
      mpz_ui_pow_ui(qe.get_mpz_t(), dom.order(), e);
      if (qe > roots_in_extension(r_base, e)) break;
      ++e;
    }
    out.extension_degree = e;
    out.notes.push_back("R vanishes on every element of " + dom.name());
    if (dom.kind() != DomainKind::prime_field) {
      out.notes.push_back("extension fields of a non-prime base are not constructed; no certificate");
      return out;
    }
    const Domain ext = Domain::galois_field(dom.characteristic(), e);
    const GfPoly r_ext = to_field_poly(out.resultant, ext);
    out.field = ext;
    for (std::uint64_t i = 0; i < ext.order(); ++i) {
      const Scalar x = ext.element(i);
      if (!ext.is_zero(r_ext.evaluate(x))) {
        out.shift = x;
        certify(out, to_field_poly(p, ext), to_field_poly(q, ext));
        return out;
      }
    }
    throw InvalidInput("comaximal_shift: extension root count inconsistent");
  }

  const Domain qq = Domain::rationals();
  out.field = qq;
  if (dom.kind() == DomainKind::rationals) {
    for (long k = 0;; ++k) {
      const long x = (k % 2) ? (k + 1) / 2 : -(k / 2);
      if (!qq.is_zero(out.resultant.evaluate(MultiPoly::from_int(r0, x)).constant_term())) {
        out.shift = qq.from_int(x);
        certify(out, to_field_poly(p, qq), to_field_poly(q, qq));
        return out;
      }
    }
  }

  // Base ℤ: look for R(x) = ±1, else keep the first x with R(x) != 0.
  std::optional<long> fallback;
  mpz_class fallback_value;
  for (long k = 0; k <= 2 * bound; ++k) {
    const long x = (k % 2) ? (k + 1) / 2 : -(k / 2);
    const mpz_class value = dom.as_mpz(out.resultant.evaluate(MultiPoly::from_int(r0, x)).constant_term());
    if (abs(value) == 1) {
      fallback = x;
      fallback_value = value;
      break;
    }
    if (value != 0 && !fallback) {
      fallback = x;
      fallback_value = value;
    }
  }
  if (!fallback) throw InvalidInput("comaximal_shift: R vanishes at every candidate shift");
  out.shift = qq.from_int(*fallback);
  out.denominator = fallback_value;
  if (abs(fallback_value) != 1)
    out.notes.push_back("no x with |x| <= " + std::to_string(bound) + " has R(x) = +-1; certificate over Z[1/" +
                        fallback_value.get_str() + "]");
  certify(out, to_field_poly(p, qq), to_field_poly(q, qq));
  if (out.verified) {
    // Denominators must divide R(x).
    for (const GfPoly* c : {&*out.u, &*out.v})
      for (const auto& a : c->coeffs()) {
        const mpq_class scaled = qq.as_mpq(a) * fallback_value;
        if (scaled.get_den() != 1) out.verified = false;
      }
  }
  return out;
}

}  // namespace kron
