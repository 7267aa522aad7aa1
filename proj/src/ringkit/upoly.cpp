#include "kron/ringkit/upoly.hpp"

#include <algorithm>

#include "kron/errors.hpp"

namespace kron {

UPoly::UPoly(PolyRing ring, std::vector<MultiPoly> coeffs, std::string var)
    : ring_(std::move(ring)), var_(std::move(var)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.ring() != ring_) throw InvalidInput("UPoly coefficient outside the coefficient ring");
  }
  trim();
}

UPoly UPoly::linear(const MultiPoly& root, std::string var) {
  return UPoly(root.ring(), {-root, MultiPoly::from_int(root.ring(), 1)}, std::move(var));
}

UPoly UPoly::from_scalars(const PolyRing& ring, const std::vector<Scalar>& coeffs, std::string var) {
  std::vector<MultiPoly> cs;
  cs.reserve(coeffs.size());
  for (const auto& c : coeffs) cs.push_back(MultiPoly::constant(ring, c));
  return UPoly(ring, std::move(cs), std::move(var));
}

UPoly UPoly::from_multipoly(const MultiPoly& p, const std::string& var, const PolyRing& coeff_ring) {
  auto idx = p.ring().index_of(var);
  if (!idx) throw InvalidInput("from_multipoly: ring has no variable " + var);
  const int deg = p.degree_in(*idx);
  std::vector<MultiPoly> cs;
  for (int k = 0; k <= deg; ++k) cs.push_back(p.coefficient_in(*idx, static_cast<unsigned>(k)).remap(coeff_ring));
  return UPoly(coeff_ring, std::move(cs), var);
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

MultiPoly UPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return MultiPoly(ring_);
  return coeffs_[static_cast<std::size_t>(k)];
}

const MultiPoly& UPoly::leading_coeff() const {
  if (coeffs_.empty()) throw InvalidInput("leading coefficient of zero polynomial");
  return coeffs_.back();
}

UPoly UPoly::operator-() const {
  UPoly r(ring_, var_);
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  if (a.ring_ != b.ring_) throw InvalidInput("UPoly +: ring mismatch");
  UPoly r(a.ring_, a.var_);
  const int n = std::max(a.degree(), b.degree());
  for (int k = 0; k <= n; ++k) r.coeffs_.push_back(a.coeff(k) + b.coeff(k));
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.ring_ != b.ring_) throw InvalidInput("UPoly *: ring mismatch");
  UPoly r(a.ring_, a.var_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, MultiPoly(a.ring_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.trim();
  return r;
}

UPoly UPoly::scaled(const MultiPoly& c) const {
  UPoly r(ring_, var_);
  for (const auto& k : coeffs_) r.coeffs_.push_back(k * c);
  r.trim();
  return r;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result(ring_, {MultiPoly::from_int(ring_, 1)}, var_);
  UPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool UPoly::operator==(const UPoly& other) const {
  return ring_ == other.ring_ && var_ == other.var_ && coeffs_ == other.coeffs_;
}

UPoly UPoly::derivative() const {
  UPoly r(ring_, var_);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    r.coeffs_.push_back(coeffs_[k].scaled(ring_.domain().from_int(static_cast<long>(k))));
  r.trim();
  return r;
}

MultiPoly UPoly::evaluate(const MultiPoly& x) const {
  MultiPoly acc(ring_);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
  return acc;
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc(ring_, inner.var_);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * inner + UPoly(ring_, {coeffs_[k]}, inner.var_);
  return acc;
}

UPoly UPoly::substitute(const PolyRing& target, const std::vector<MultiPoly>& images) const {
  std::vector<MultiPoly> cs;
  for (const auto& c : coeffs_) cs.push_back(c.substitute(target, images));
  return UPoly(target, std::move(cs), var_);
}

UPoly UPoly::change_domain(const Domain& target) const {
  std::vector<MultiPoly> cs;
  for (const auto& c : coeffs_) cs.push_back(c.change_domain(target));
  return UPoly(ring_.with_domain(target), std::move(cs), var_);
}

UPoly UPoly::remap(const PolyRing& target) const {
  std::vector<MultiPoly> cs;
  for (const auto& c : coeffs_) cs.push_back(c.remap(target));
  return UPoly(target, std::move(cs), var_);
}

MultiPoly UPoly::to_multipoly(const PolyRing& with_var) const {
  auto idx = with_var.index_of(var_);
  if (!idx) throw InvalidInput("to_multipoly: target ring lacks variable " + var_);
  const MultiPoly x = MultiPoly::variable(with_var, *idx);
  MultiPoly acc(with_var);
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k].remap(with_var);
  return acc;
}

std::string UPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    std::string power;
    if (k == 1) power = var_;
    else if (k > 1) power = var_ + "^" + std::to_string(k);
    for (const auto& [m, c] : coeffs_[k].terms()) {
      out += format_term(ring_, m, c, first, power);
      first = false;
    }
  }
  return out;
}

}  // namespace kron
