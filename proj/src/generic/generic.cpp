#include "kron/generic/generic.hpp"

#include "kron/errors.hpp"
#include "kron/ringkit/linalg.hpp"

namespace kron {

namespace {

PolyRing parameter_registry(const FiniteFreeAlgebra& b) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < b.rank(); ++i) {
    const std::string t = "T" + std::to_string(i + 1);
    if (b.base().index_of(t)) throw InvalidInput("base variable " + t + " clashes with a parameter variable");
    names.push_back(t);
  }
  return b.base().extended(names);
}

}  // namespace

ParameterRing::ParameterRing(const FiniteFreeAlgebra& b)
    : algebra_(b), ring_(parameter_registry(b)), offset_(b.base().nvars()),
      outer_(b.base().index_of("X") ? "Z" : "X") {}

PolyRing ParameterRing::ring_with_outer() const {
  std::vector<std::string> names = {outer_};
  for (const auto& v : ring_.variables()) names.push_back(v);
  return PolyRing(ring_.domain(), std::move(names));
}

AlgebraElement generic_element(const ParameterRing& s) {
  AlgebraElement xi;
  for (std::size_t i = 0; i < s.rank(); ++i) xi.coords.push_back(s.t(i));
  return xi;
}

GenericCharPoly gcp(const FiniteFreeAlgebra& b) {
  ParameterRing s(b);
  const ScalarExtension ext(b, s.ring());
  UPoly f = ext.charpoly(generic_element(s), s.outer_var());
  return {std::move(s), std::move(f)};
}

namespace {

std::vector<MultiPoly> gamma_images(const ParameterRing& s, const std::vector<MultiPoly>& x) {
  if (x.size() != s.rank()) throw InvalidInput("specialize: coordinate count differs from rank");
  const PolyRing& base = s.algebra().base();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < base.nvars(); ++i) images.push_back(MultiPoly::variable(base, i));
  for (const auto& c : x) images.push_back(c.remap(base));
  return images;
}

}  // namespace

MultiPoly specialize(const ParameterRing& s, const MultiPoly& f, const std::vector<MultiPoly>& x) {
  return f.remap(s.ring()).substitute(s.algebra().base(), gamma_images(s, x));
}

UPoly specialize(const ParameterRing& s, const UPoly& f, const std::vector<MultiPoly>& x) {
  return f.remap(s.ring()).substitute(s.algebra().base(), gamma_images(s, x));
}

AlgebraElement specialize(const ParameterRing& s, const AlgebraElement& xi, const std::vector<MultiPoly>& x) {
  const auto images = gamma_images(s, x);
  AlgebraElement r;
  for (const auto& c : xi.coords) r.coords.push_back(c.remap(s.ring()).substitute(s.algebra().base(), images));
  return r;
}

ParameterMap::ParameterMap(const AlgebraMorphism& u) : from_(u.target()), to_(u.source()), u_(u) {
  const PolyRing& tr = to_.ring();
  const std::size_t nbase = u.source().base().nvars();
  for (std::size_t i = 0; i < nbase; ++i) images_.push_back(MultiPoly::variable(tr, i));
  for (std::size_t k = 0; k < u.target().rank(); ++k) {
    MultiPoly form(tr);
    for (std::size_t j = 0; j < u.source().rank(); ++j) {
      const MultiPoly& ukj = u.matrix().at(k, j);
      if (!ukj.is_zero()) form += ukj.remap(tr) * to_.t(j);
    }
    images_.push_back(std::move(form));
  }
}

MultiPoly ParameterMap::apply(const MultiPoly& f) const {
  return f.remap(from_.ring()).substitute(to_.ring(), images_);
}

UPoly ParameterMap::apply(const UPoly& f) const { return f.remap(from_.ring()).substitute(to_.ring(), images_); }

std::size_t ParameterMap::linear_rank() const {
  const PolyMatrix& m = u_.matrix();
  Domain field = m.ring().domain();
  if (field.kind() == DomainKind::integers) field = Domain::rationals();
  FieldMatrix fm(field, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const MultiPoly& e = m.at(i, j);
      if (!e.is_constant()) throw InvalidInput("linear_rank: morphism matrix has non-constant entries");
      fm.at(i, j) = field.convert(e.constant_term(), m.ring().domain());
    }
  return fm.rank();
}

}  // namespace kron
