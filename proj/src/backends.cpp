#include "grodiag/backends.hpp"

#include <string>

namespace grodiag {

Backend backend_of(const Object& obj) {
  return std::holds_alternative<FieldObject>(obj) ? Backend::vect : Backend::finab;
}

Backend backend_of(const Morphism& f) {
  return std::holds_alternative<FpMat>(f) ? Backend::vect : Backend::finab;
}

Object morphism_source(const Morphism& f) {
  if (const auto* m = std::get_if<FpMat>(&f)) return m->source();
  return std::get<FinAbMorphism>(f).source;
}

Object morphism_target(const Morphism& f) {
  if (const auto* m = std::get_if<FpMat>(&f)) return m->target();
  return std::get<FinAbMorphism>(f).target;
}

bool same_object(const Object& a, const Object& b) { return a == b; }

Morphism identity_morphism(const Object& obj) {
  if (const auto* o = std::get_if<FieldObject>(&obj)) return FpMat::identity(o->p, o->dim);
  return FinAbMorphism::identity(std::get<FinAbObject>(obj));
}

Morphism zero_morphism(const Object& source, const Object& target) {
  if (backend_of(source) != backend_of(target))
    fail(Errc::backend_mismatch, "zero morphism across backends");
  if (const auto* s = std::get_if<FieldObject>(&source)) {
    const auto& t = std::get<FieldObject>(target);
    if (s->p != t.p) fail(Errc::composition, "zero morphism across characteristics");
    return FpMat(s->p, t.dim, s->dim);
  }
  return FinAbMorphism::zero(std::get<FinAbObject>(source), std::get<FinAbObject>(target));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (backend_of(g) != backend_of(f)) fail(Errc::backend_mismatch, "composition across backends");
  if (!same_object(morphism_target(f), morphism_source(g)))
    fail(Errc::composition, "composition endpoints do not match");
  if (const auto* gm = std::get_if<FpMat>(&g)) return matmul(*gm, std::get<FpMat>(f));
  return compose(std::get<FinAbMorphism>(g), std::get<FinAbMorphism>(f));
}

GroupElement image_class(const Morphism& f) {
  if (const auto* m = std::get_if<FpMat>(&f))
    return GroupElement::single(GeneratorKey::dim(), static_cast<std::int64_t>(rank(*m)));
  return image_class(std::get<FinAbMorphism>(f));
}

GroupElement object_class(const Object& obj) {
  if (const auto* o = std::get_if<FieldObject>(&obj))
    return GroupElement::single(GeneratorKey::dim(), o->dim);
  return classify(std::get<FinAbObject>(obj));
}

LimitPair limit_pair(const Morphism& f0, const Morphism& g0, const Morphism& f1,
                     const Morphism& g1) {
  if (backend_of(f0) == Backend::finab || backend_of(g0) == Backend::finab ||
      backend_of(f1) == Backend::finab || backend_of(g1) == Backend::finab)
    fail(Errc::unsupported_backend, "limits are implemented for the field backend only");

  const FpMat& mf0 = std::get<FpMat>(f0);
  const FpMat& mg0 = std::get<FpMat>(g0);
  const FpMat& mf1 = std::get<FpMat>(f1);
  const FpMat& mg1 = std::get<FpMat>(g1);

  const std::uint32_t p = mf0.p();
  if (mg0.p() != p || mf1.p() != p || mg1.p() != p)
    fail(Errc::composition, "limit maps over different characteristics");
  if (mf0.cols() != mf1.cols() || mg0.cols() != mg1.cols() || mf0.rows() != mg0.rows() ||
      mf1.rows() != mg1.rows())
    fail(Errc::composition, "limit maps with inconsistent shapes");

  const std::size_t dim_a = mf0.cols();
  const std::size_t dim_b = mg0.cols();

  // kernel of [f0 -g0; f1 -g1] inside A (+) B
  FpMat top(p, mf0.rows(), dim_a + dim_b);
  for (std::size_t i = 0; i < mf0.rows(); ++i) {
    for (std::size_t j = 0; j < dim_a; ++j) top.at(i, j) = mf0.at(i, j);
    for (std::size_t j = 0; j < dim_b; ++j)
      top.at(i, dim_a + j) = mg0.at(i, j) == 0 ? 0 : p - mg0.at(i, j);
  }
  FpMat bottom(p, mf1.rows(), dim_a + dim_b);
  for (std::size_t i = 0; i < mf1.rows(); ++i) {
    for (std::size_t j = 0; j < dim_a; ++j) bottom.at(i, j) = mf1.at(i, j);
    for (std::size_t j = 0; j < dim_b; ++j)
      bottom.at(i, dim_a + j) = mg1.at(i, j) == 0 ? 0 : p - mg1.at(i, j);
  }
  FpMat basis = kernel_basis(vstack(top, bottom));

  LimitPair out;
  out.object = {p, static_cast<std::uint32_t>(basis.cols())};
  out.proj_a = FpMat(p, dim_a, basis.cols());
  out.proj_b = FpMat(p, dim_b, basis.cols());
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    for (std::size_t i = 0; i < dim_a; ++i) out.proj_a.at(i, j) = basis.at(i, j);
    for (std::size_t i = 0; i < dim_b; ++i) out.proj_b.at(i, j) = basis.at(dim_a + i, j);
  }
  return out;
}

} // namespace grodiag
