#include "kron/errors.hpp"
#include "kron/algebra/algebra.hpp"

namespace kron {

bool AlgebraElement::is_zero() const {
  for (const auto& c : coords)
    if (!c.is_zero()) return false;
  return true;
}

ScalarExtension::ScalarExtension(FiniteFreeAlgebra algebra, PolyRing ring)
    : algebra_(std::move(algebra)), ring_(std::move(ring)), n_(algebra_.rank()) {
  table_.reserve(algebra_.table().size());
  for (const auto& x : algebra_.table()) table_.push_back(x.remap(ring_));
}

void ScalarExtension::check(const AlgebraElement& a) const {
  if (a.coords.size() != n_) throw InvalidInput("element has the wrong number of coordinates");
}

AlgebraElement ScalarExtension::zero() const { return {std::vector<MultiPoly>(n_, MultiPoly(ring_))}; }

AlgebraElement ScalarExtension::one() const { return element(algebra_.unit()); }

AlgebraElement ScalarExtension::basis(std::size_t i) const {
  AlgebraElement e = zero();
  e.coords.at(i) = MultiPoly::from_int(ring_, 1);
  return e;
}

AlgebraElement ScalarExtension::element(const std::vector<MultiPoly>& coords) const {
  AlgebraElement e;
  for (const auto& c : coords) e.coords.push_back(c.remap(ring_));
  check(e);
  return e;
}

AlgebraElement ScalarExtension::from_ints(const std::vector<long>& coords) const {
  AlgebraElement e;
  for (long c : coords) e.coords.push_back(MultiPoly::from_int(ring_, c));
  check(e);
  return e;
}

AlgebraElement ScalarExtension::add(const AlgebraElement& a, const AlgebraElement& b) const {
  check(a);
  check(b);
  AlgebraElement r = a;
  for (std::size_t i = 0; i < n_; ++i) r.coords[i] += b.coords[i];
  return r;
}

AlgebraElement ScalarExtension::sub(const AlgebraElement& a, const AlgebraElement& b) const {
  check(a);
  check(b);
  AlgebraElement r = a;
  for (std::size_t i = 0; i < n_; ++i) r.coords[i] -= b.coords[i];
  return r;
}

AlgebraElement ScalarExtension::mul(const AlgebraElement& a, const AlgebraElement& b) const {
  check(a);
  check(b);
  AlgebraElement r = zero();
  for (std::size_t i = 0; i < n_; ++i) {
    if (a.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b.coords[j].is_zero()) continue;
      const MultiPoly ab = a.coords[i] * b.coords[j];
      for (std::size_t k = 0; k < n_; ++k) {
        const MultiPoly& cijk = table_[(i * n_ + j) * n_ + k];
        if (!cijk.is_zero()) r.coords[k] += ab * cijk;
      }
    }
  }
  return r;
}

AlgebraElement ScalarExtension::scale(const AlgebraElement& a, const MultiPoly& s) const {
  check(a);
  AlgebraElement r = a;
  for (auto& c : r.coords) c = c * s;
  return r;
}

AlgebraElement ScalarExtension::pow(const AlgebraElement& a, unsigned e) const {
  AlgebraElement result = one();
  AlgebraElement base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

AlgebraElement ScalarExtension::evaluate(const UPoly& f, const AlgebraElement& a) const {
  AlgebraElement acc = zero();
  const AlgebraElement unit = one();
  for (int k = f.degree(); k >= 0; --k) acc = add(mul(acc, a), scale(unit, f.coeff(k).remap(ring_)));
  return acc;
}

PolyMatrix ScalarExtension::mul_matrix(const AlgebraElement& x) const {
  check(x);
  PolyMatrix m(ring_, n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (x.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t k = 0; k < n_; ++k) {
        const MultiPoly& cijk = table_[(i * n_ + j) * n_ + k];
        if (!cijk.is_zero()) m.at(k, j) += x.coords[i] * cijk;
      }
  }
  return m;
}

MultiPoly ScalarExtension::trace(const AlgebraElement& x) const {
  const PolyMatrix m = mul_matrix(x);
  MultiPoly t(ring_);
  for (std::size_t i = 0; i < n_; ++i) t += m.at(i, i);
  return t;
}

MultiPoly ScalarExtension::norm(const AlgebraElement& x) const { return mul_matrix(x).det(); }

UPoly ScalarExtension::charpoly(const AlgebraElement& x, const std::string& var) const {
  return mul_matrix(x).charpoly(var);
}

MultiPoly trace_form_disc(const FiniteFreeAlgebra& b) {
  const std::size_t n = b.rank();
  const auto tr = b.basis_traces();
  PolyMatrix m(b.base(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly s(b.base());
      for (std::size_t k = 0; k < n; ++k) {
        if (!b.c(i, j, k).is_zero()) s += b.c(i, j, k) * tr[k];
      }
      m.at(i, j) = std::move(s);
    }
  return m.det();
}

std::string element_to_string(const FiniteFreeAlgebra& b, const AlgebraElement& x) {
  std::string out;
  for (std::size_t i = 0; i < x.coords.size(); ++i) {
    const auto& c = x.coords[i];
    if (c.is_zero()) continue;
    std::string coef = c.to_string();
    if (c.size() > 1) coef = "(" + coef + ")";
    const std::string& name = b.basis_names()[i];
    std::string term;
    if (name == "1") term = coef;
    else if (c.is_one()) term = name;
    else term = coef + "*" + name;
    out += out.empty() ? term : " + " + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace kron
