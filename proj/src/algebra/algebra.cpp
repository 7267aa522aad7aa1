#include "kron/algebra/algebra.hpp"

#include <sstream>

#include "kron/errors.hpp"
#include "kron/report.hpp"

namespace kron {

struct FiniteFreeAlgebra::Impl {
  PolyRing base;
  std::size_t n;
  std::vector<MultiPoly> table;
  std::vector<MultiPoly> unit;
  Options options;
  std::string canonical;
};

namespace {

void validate(const PolyRing& base, std::size_t n, const std::vector<MultiPoly>& t, const std::vector<MultiPoly>& u) {
  auto c = [&](std::size_t i, std::size_t j, std::size_t k) -> const MultiPoly& { return t[(i * n + j) * n + k]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (c(i, j, k) != c(j, i, k))
          throw InvalidInput("structure constants are not commutative at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
      }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      MultiPoly s(base);
      for (std::size_t i = 0; i < n; ++i) {
        if (!u[i].is_zero() && !c(i, j, k).is_zero()) s += u[i] * c(i, j, k);
      }
      if (j == k) s -= MultiPoly::from_int(base, 1);
      if (!s.is_zero()) throw InvalidInput("unit law fails for basis vector " + std::to_string(j));
    }
  // (e_i e_j) e_l = e_i (e_j e_l); by commutativity i <= l suffices.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = i; l < n; ++l)
        for (std::size_t k = 0; k < n; ++k) {
          MultiPoly s(base);
          for (std::size_t m = 0; m < n; ++m) {
            if (!c(i, j, m).is_zero() && !c(m, l, k).is_zero()) s += c(i, j, m) * c(m, l, k);
            if (!c(j, l, m).is_zero() && !c(i, m, k).is_zero()) s -= c(j, l, m) * c(i, m, k);
          }
          if (!s.is_zero())
            throw InvalidInput("structure constants are not associative at (" + std::to_string(i) + "," +
                               std::to_string(j) + "," + std::to_string(l) + ")");
        }
}

}  // namespace

FiniteFreeAlgebra::FiniteFreeAlgebra(PolyRing base, std::size_t rank, std::vector<MultiPoly> table,
                                     std::vector<MultiPoly> unit, Options options) {
  if (rank < 1) throw InvalidInput("algebra rank must be at least 1");
  if (table.size() != rank * rank * rank) throw InvalidInput("structure constant table has the wrong size");
  if (unit.size() != rank) throw InvalidInput("unit vector has the wrong length");
  for (const auto& x : table)
    if (x.ring() != base) throw InvalidInput("structure constant outside the base ring");
  for (const auto& x : unit)
    if (x.ring() != base) throw InvalidInput("unit coordinate outside the base ring");
  validate(base, rank, table, unit);
  if (options.basis_names.empty()) {
    for (std::size_t i = 0; i < rank; ++i) options.basis_names.push_back("e" + std::to_string(i + 1));
  }
  if (options.basis_names.size() != rank) throw InvalidInput("basis name count differs from rank");
  if (options.monogenic) {
    const auto& g = *options.monogenic;
    if (!g.is_monic() || static_cast<std::size_t>(g.degree()) != rank || g.ring() != base)
      throw InvalidInput("monogenic presentation inconsistent with the algebra");
  }

  std::ostringstream os;
  os << "base " << base.domain().name() << " [";
  for (std::size_t i = 0; i < base.nvars(); ++i) os << (i ? "," : "") << base.variable(i);
  os << "] rank " << rank << "\n";
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i; j < rank; ++j)
      for (std::size_t k = 0; k < rank; ++k) {
        const auto& x = table[(i * rank + j) * rank + k];
        if (!x.is_zero()) os << i << "," << j << "," << k << ":" << x.to_string() << "\n";
      }
  os << "unit";
  for (const auto& x : unit) os << " " << x.to_string();
  os << "\n";

  impl_ = std::make_shared<const Impl>(
      Impl{std::move(base), rank, std::move(table), std::move(unit), std::move(options), os.str()});
}

const PolyRing& FiniteFreeAlgebra::base() const { return impl_->base; }
std::size_t FiniteFreeAlgebra::rank() const { return impl_->n; }
const MultiPoly& FiniteFreeAlgebra::c(std::size_t i, std::size_t j, std::size_t k) const {
  const std::size_t n = impl_->n;
  return impl_->table[(i * n + j) * n + k];
}
const std::vector<MultiPoly>& FiniteFreeAlgebra::table() const { return impl_->table; }
const std::vector<MultiPoly>& FiniteFreeAlgebra::unit() const { return impl_->unit; }
const std::vector<std::string>& FiniteFreeAlgebra::basis_names() const { return impl_->options.basis_names; }
const std::optional<UPoly>& FiniteFreeAlgebra::monogenic() const { return impl_->options.monogenic; }
const std::vector<FiniteFreeAlgebra>& FiniteFreeAlgebra::factors() const { return impl_->options.factors; }
const std::string& FiniteFreeAlgebra::label() const { return impl_->options.label; }

std::vector<std::size_t> FiniteFreeAlgebra::block_offsets() const {
  std::vector<std::size_t> offsets;
  std::size_t at = 0;
  for (const auto& f : factors()) {
    offsets.push_back(at);
    at += f.rank();
  }
  return offsets;
}

std::vector<MultiPoly> FiniteFreeAlgebra::basis_traces() const {
  std::vector<MultiPoly> tr;
  for (std::size_t k = 0; k < rank(); ++k) {
    MultiPoly s(base());
    for (std::size_t m = 0; m < rank(); ++m) s += c(k, m, m);
    tr.push_back(std::move(s));
  }
  return tr;
}

std::string FiniteFreeAlgebra::canonical() const { return impl_->canonical; }
std::string FiniteFreeAlgebra::hash() const { return fnv1a_hex(impl_->canonical); }

bool FiniteFreeAlgebra::same_table(const FiniteFreeAlgebra& other) const {
  return base() == other.base() && rank() == other.rank() && table() == other.table() && unit() == other.unit();
}

}  // namespace kron
