#pragma once

#include <optional>

#include "homcat/core.hpp"

// Constructions written purely against the backend contract: the hom-set
// addition induced by the biproduct, monic/epi tests by kernel vanishing,
// image and coimage, epi-mono factorization, subobject arithmetic, exactness.

namespace homcat {

template <CategoryBackend Cat>
struct Subobject {
    typename Cat::Morphism mono;  // a monic into mono.dst
};

template <CategoryBackend Cat>
struct Factorization {
    typename Cat::Morphism m;  // monic part, the image inclusion
    typename Cat::Morphism e;  // epi part, source -> mid
    typename Cat::Object mid;
};

// d : A -> A (+) A with p1 d = p2 d = 1.
template <CategoryBackend Cat>
typename Cat::Morphism diagonal(const Cat& C, const typename Cat::Object& a)
{
    return C.product_universal(C.identity(a), C.identity(a));
}

// d' : A (+) A -> A with d' i1 = d' i2 = 1.
template <CategoryBackend Cat>
typename Cat::Morphism codiagonal(const Cat& C, const typename Cat::Object& a)
{
    return C.coproduct_universal(C.identity(a), C.identity(a));
}

// f (+) g : A (+) A' -> B (+) B', the unique map commuting with the canonical
// projections (and hence with the inclusions).
template <CategoryBackend Cat>
typename Cat::Morphism oplus_mor(const Cat& C, const typename Cat::Morphism& f,
                                 const typename Cat::Morphism& g)
{
    auto src = C.biproduct(f.src, g.src);
    return C.product_universal(C.compose(f, src.p1), C.compose(g, src.p2));
}

// The biproduct-induced sum d' o (f (+) g) o d. Must agree with the backend's
// native addition; the property suite checks the agreement.
template <CategoryBackend Cat>
typename Cat::Morphism hom_add_via_biproduct(const Cat& C, const typename Cat::Morphism& f,
                                             const typename Cat::Morphism& g)
{
    if (!(C.obj_eq(f.src, g.src) && C.obj_eq(f.dst, g.dst)))
        throw ShapeMismatch("hom_add_via_biproduct: morphisms are not parallel");
    auto mid = oplus_mor(C, f, g);
    return C.compose(codiagonal(C, f.dst), C.compose(mid, diagonal(C, f.src)));
}

template <CategoryBackend Cat>
bool is_mono(const Cat& C, const typename Cat::Morphism& f)
{
    return C.is_zero_object(C.kernel(f).obj);
}

template <CategoryBackend Cat>
bool is_epi(const Cat& C, const typename Cat::Morphism& f)
{
    return C.is_zero_object(C.cokernel(f).obj);
}

// Checked wrappers around the backend solves. The factorization failure is an
// answer for some callers (subobject comparison), an error for others.
template <CategoryBackend Cat>
typename Cat::Morphism lift_along_mono(const Cat& C, const typename Cat::Morphism& m,
                                       const typename Cat::Morphism& g)
{
    if (!is_mono(C, m))
        throw NotMonic("lift_along_mono: " + C.object_name(m.src) + " -> " +
                       C.object_name(m.dst) + " is not monic");
    auto u = C.try_lift_along_mono(m, g);
    if (!u)
        throw NoFactorization("lift_along_mono: map from " + C.object_name(g.src) +
                              " does not factor through the subobject");
    return *u;
}

template <CategoryBackend Cat>
typename Cat::Morphism colift_along_epi(const Cat& C, const typename Cat::Morphism& e,
                                        const typename Cat::Morphism& g)
{
    if (!is_epi(C, e))
        throw NotEpi("colift_along_epi: " + C.object_name(e.src) + " -> " +
                     C.object_name(e.dst) + " is not epi");
    auto u = C.try_colift_along_epi(e, g);
    if (!u)
        throw NoFactorization("colift_along_epi: map to " + C.object_name(g.dst) +
                              " does not factor through the quotient");
    return *u;
}

// im f = ker(cok f), as a subobject of f.dst.
template <CategoryBackend Cat>
Subobject<Cat> image(const Cat& C, const typename Cat::Morphism& f)
{
    return Subobject<Cat>{C.kernel(C.cokernel(f).proj).incl};
}

// coim f = cok(ker f), as a quotient map out of f.src.
template <CategoryBackend Cat>
typename Cat::Morphism coimage(const Cat& C, const typename Cat::Morphism& f)
{
    return C.cokernel(C.kernel(f).incl).proj;
}

// f = m o e with m = im f monic and e epi.
template <CategoryBackend Cat>
Factorization<Cat> epi_mono_factorize(const Cat& C, const typename Cat::Morphism& f)
{
    auto m = image(C, f).mono;
    auto e = lift_along_mono(C, m, f);
    return Factorization<Cat>{m, e, m.src};
}

// Subobjects are equal when each factors through the other; monic cancellation
// then forces the comparison maps to be mutually inverse.
template <CategoryBackend Cat>
bool subobject_eq(const Cat& C, const Subobject<Cat>& a, const Subobject<Cat>& b)
{
    if (!C.obj_eq(a.mono.dst, b.mono.dst))
        throw ShapeMismatch("subobject_eq: subobjects of different objects");
    return C.try_lift_along_mono(b.mono, a.mono).has_value() &&
           C.try_lift_along_mono(a.mono, b.mono).has_value();
}

// b / a = cok(f) for the factorization a = b o f.
template <CategoryBackend Cat>
typename Cat::Morphism quotient_of_subobjects(const Cat& C, const Subobject<Cat>& b,
                                              const Subobject<Cat>& a)
{
    auto f = lift_along_mono(C, b.mono, a.mono);
    return C.cokernel(f).proj;
}

// Exactness at the middle object of A --f--> B --g--> C.
template <CategoryBackend Cat>
bool is_exact_at(const Cat& C, const typename Cat::Morphism& f, const typename Cat::Morphism& g)
{
    if (!C.obj_eq(f.dst, g.src))
        throw CompositionMismatch("is_exact_at: maps are not composable");
    if (!C.mor_eq(C.compose(g, f), C.zero_morphism(f.src, g.dst)))
        throw NonzeroComposite("is_exact_at: g o f != 0, not a complex");
    return subobject_eq(C, image(C, f), Subobject<Cat>{C.kernel(g).incl});
}

}  // namespace homcat
