#include "kron/algebra/morphism.hpp"

#include "kron/errors.hpp"

namespace kron {

AlgebraMorphism::AlgebraMorphism(FiniteFreeAlgebra source, FiniteFreeAlgebra target, PolyMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (source_.base() != target_.base()) throw InvalidInput("morphism: source and target have different bases");
  if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
    throw InvalidInput("morphism: matrix has the wrong shape");
  if (matrix_.ring() != source_.base()) throw InvalidInput("morphism: matrix entries outside the base ring");
  const ScalarExtension src(source_), tgt(target_);
  const std::size_t n = source_.rank();
  std::vector<AlgebraElement> images;
  for (std::size_t j = 0; j < n; ++j) {
    AlgebraElement e;
    for (std::size_t i = 0; i < target_.rank(); ++i) e.coords.push_back(matrix_.at(i, j));
    images.push_back(std::move(e));
  }
  if (!(apply(src.one()) == tgt.one())) throw InvalidInput("morphism does not map 1 to 1");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (!(apply(src.mul(src.basis(i), src.basis(j))) == tgt.mul(images[i], images[j])))
        throw InvalidInput("morphism is not multiplicative on basis pair (" + std::to_string(i) + "," +
                           std::to_string(j) + ")");
    }
}

AlgebraMorphism AlgebraMorphism::identity(const FiniteFreeAlgebra& b) {
  return AlgebraMorphism(b, b, PolyMatrix::identity(b.base(), b.rank()));
}

AlgebraMorphism AlgebraMorphism::projection(const FiniteFreeAlgebra& product, std::size_t k) {
  if (k >= product.factors().size()) throw InvalidInput("projection: factor index out of range");
  const auto offsets = product.block_offsets();
  const FiniteFreeAlgebra& f = product.factors()[k];
  PolyMatrix m(product.base(), f.rank(), product.rank());
  for (std::size_t i = 0; i < f.rank(); ++i) m.at(i, offsets[k] + i) = MultiPoly::from_int(product.base(), 1);
  return AlgebraMorphism(product, f, std::move(m));
}

AlgebraMorphism AlgebraMorphism::diagonal_embedding(const FiniteFreeAlgebra& b, const FiniteFreeAlgebra& bxb) {
  const std::size_t n = b.rank();
  if (bxb.rank() != 2 * n) throw InvalidInput("diagonal_embedding: target must be B x B");
  PolyMatrix m(b.base(), 2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i, i) = MultiPoly::from_int(b.base(), 1);
    m.at(n + i, i) = MultiPoly::from_int(b.base(), 1);
  }
  return AlgebraMorphism(b, bxb, std::move(m));
}

AlgebraMorphism AlgebraMorphism::tensor_inclusion(const FiniteFreeAlgebra& b, const FiniteFreeAlgebra& c,
                                                  const FiniteFreeAlgebra& bc) {
  const std::size_t nb = b.rank(), nc = c.rank();
  if (bc.rank() != nb * nc) throw InvalidInput("tensor_inclusion: target must be B (x) C");
  PolyMatrix m(b.base(), nb * nc, nb);
  for (std::size_t i = 0; i < nb; ++i)
    for (std::size_t j = 0; j < nc; ++j) m.at(i * nc + j, i) = c.unit()[j];
  return AlgebraMorphism(b, bc, std::move(m));
}

AlgebraElement AlgebraMorphism::apply(const AlgebraElement& x) const {
  if (x.coords.size() != source_.rank()) throw InvalidInput("morphism: element has the wrong length");
  AlgebraElement r;
  const PolyRing ring = x.coords.empty() ? source_.base() : x.coords[0].ring();
  for (std::size_t i = 0; i < target_.rank(); ++i) {
    MultiPoly s(ring);
    for (std::size_t j = 0; j < source_.rank(); ++j) {
      if (!matrix_.at(i, j).is_zero() && !x.coords[j].is_zero()) s += matrix_.at(i, j).remap(ring) * x.coords[j];
    }
    r.coords.push_back(std::move(s));
  }
  return r;
}

AlgebraMorphism AlgebraMorphism::after(const AlgebraMorphism& first) const {
  if (!first.target_.same_table(source_)) throw InvalidInput("morphism composition: algebras do not match");
  return AlgebraMorphism(first.source_, target_, matrix_ * first.matrix_);
}

}  // namespace kron
