#include "kron/fibers/dense_algebra.hpp"

#include "kron/errors.hpp"

namespace kron {

DenseAlgebra::DenseAlgebra(const FiniteFreeAlgebra& b) : field_(b.domain()), n_(b.rank()) {
  if (!field_.is_field()) throw InvalidInput("DenseAlgebra: base must be a field");
  if (b.base().nvars() != 0) throw InvalidInput("DenseAlgebra: base must not have variables");
  table_.reserve(b.table().size());
  for (const auto& x : b.table()) table_.push_back(x.constant_term());
  for (const auto& x : b.unit()) unit_.push_back(x.constant_term());
}

Vec DenseAlgebra::basis(std::size_t i) const {
  Vec v = zero();
  v.at(i) = field_.one();
  return v;
}

Vec DenseAlgebra::add(const Vec& a, const Vec& b) const {
  Vec r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = field_.add(a[i], b[i]);
  return r;
}

Vec DenseAlgebra::sub(const Vec& a, const Vec& b) const {
  Vec r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = field_.sub(a[i], b[i]);
  return r;
}

Vec DenseAlgebra::scale(const Vec& a, const Scalar& s) const {
  Vec r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = field_.mul(a[i], s);
  return r;
}

Vec DenseAlgebra::mul(const Vec& a, const Vec& b) const {
  Vec r = zero();
  for (std::size_t i = 0; i < n_; ++i) {
    if (field_.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (field_.is_zero(b[j])) continue;
      const Scalar ab = field_.mul(a[i], b[j]);
      const std::size_t base = (i * n_ + j) * n_;
      for (std::size_t k = 0; k < n_; ++k) {
        if (!field_.is_zero(table_[base + k])) field_.add_mul(r[k], ab, table_[base + k]);
      }
    }
  }
  return r;
}

Vec DenseAlgebra::pow(Vec a, std::uint64_t e) const {
  Vec result = unit_;
  while (e) {
    if (e & 1) result = mul(result, a);
    e >>= 1;
    if (e) a = mul(a, a);
  }
  return result;
}

bool DenseAlgebra::is_zero(const Vec& a) const {
  for (const auto& x : a)
    if (!field_.is_zero(x)) return false;
  return true;
}

FieldMatrix DenseAlgebra::mul_matrix(const Vec& a) const {
  return linear_map([&](const Vec& e) { return mul(a, e); });
}

FieldMatrix DenseAlgebra::power_matrix(const Vec& a) const {
  std::vector<Vec> cols = {unit_};
  for (std::size_t j = 1; j < n_; ++j) cols.push_back(mul(cols.back(), a));
  return FieldMatrix::from_columns(field_, cols, n_);
}

bool DenseAlgebra::generates(const Vec& a) const { return power_matrix(a).rank() == n_; }

std::string vec_to_string(const Domain& field, const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += field.to_string(v[i]);
  }
  return out + ")";
}

}  // namespace kron
