#pragma once

#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>

namespace homcat {

// All arithmetic in the library is exact; every failure below is a hard error,
// never a tolerance question.
class CategoryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// compose(g, f) with f.dst != g.src.
class CompositionMismatch : public CategoryError {
public:
    using CategoryError::CategoryError;
};

// Operation on morphisms that are not parallel / matrix data of the wrong shape.
class ShapeMismatch : public CategoryError {
public:
    using CategoryError::CategoryError;
};

// Objects or morphisms from categories with different parameters.
class BackendMismatch : public CategoryError {
public:
    using CategoryError::CategoryError;
};

// Requested factorization does not exist (residual of the linear solve nonzero).
class NoFactorization : public CategoryError {
public:
    using CategoryError::CategoryError;
};

class NotMonic : public CategoryError {
public:
    using CategoryError::CategoryError;
};

class NotEpi : public CategoryError {
public:
    using CategoryError::CategoryError;
};

class NotInjectiveObject : public CategoryError {
public:
    using CategoryError::CategoryError;
};

// Matrix data that does not define a morphism between its stated endpoints.
class InvalidMorphism : public CategoryError {
public:
    using CategoryError::CategoryError;
};

// A condition the theory guarantees failed to hold; indicates a backend bug.
class InvariantViolation : public CategoryError {
public:
    using CategoryError::CategoryError;
};

// A pair f, g with g o f != 0 passed where a complex was required.
class NonzeroComposite : public CategoryError {
public:
    using CategoryError::CategoryError;
};

template <class Cat>
struct Biproduct {
    typename Cat::Object obj;
    typename Cat::Morphism p1, p2;  // projections obj -> A, obj -> B
    typename Cat::Morphism i1, i2;  // inclusions A -> obj, B -> obj
};

template <class Cat>
struct Kernel {
    typename Cat::Object obj;
    typename Cat::Morphism incl;  // obj -> f.src, monic
};

template <class Cat>
struct Cokernel {
    typename Cat::Object obj;
    typename Cat::Morphism proj;  // f.dst -> obj, epi
};

// The backend contract: the categorical primitives a concrete category must
// supply. Everything else in the library is written against this surface.
//
// Required semantics, beyond what the signatures say:
//   - objects and morphisms are immutable values; all operations are pure;
//   - object equality is decidable and morphism equality on parallel pairs is
//     exact equality of canonical matrix data;
//   - a distinguished zero object exists;
//   - biproducts are canonical and strictly associative on objects;
//   - the biproduct satisfies p1 o i1 = 1, p2 o i2 = 1, p1 o i2 = 0, p2 o i1 = 0;
//   - add/neg give each hom-set abelian group structure over which composition
//     distributes on both sides;
//   - try_lift_along_mono(m, g) returns the unique u with m o u = g when it
//     exists (m assumed monic), otherwise nullopt; dually for colifts;
//   - repeated computation yields bit-identical results (canonical solves with
//     free variables set to zero);
//   - the backend has enough injectives: embed_into_injective(A) is monic with
//     injective target, and inj_extend(m, alpha) returns a canonical beta with
//     beta o m = alpha whenever m is monic and alpha's target is injective.
template <class C>
concept CategoryBackend = requires(const C& cat,
                                   const typename C::Object& a,
                                   const typename C::Object& b,
                                   const typename C::Morphism& f,
                                   const typename C::Morphism& g) {
    typename C::Object;
    typename C::Morphism;
    { cat.obj_eq(a, b) } -> std::convertible_to<bool>;
    { cat.zero_object() } -> std::convertible_to<typename C::Object>;
    { cat.is_zero_object(a) } -> std::convertible_to<bool>;
    { cat.identity(a) } -> std::convertible_to<typename C::Morphism>;
    { cat.zero_morphism(a, b) } -> std::convertible_to<typename C::Morphism>;
    { cat.mor_eq(f, g) } -> std::convertible_to<bool>;
    { cat.compose(f, g) } -> std::convertible_to<typename C::Morphism>;
    { cat.add(f, g) } -> std::convertible_to<typename C::Morphism>;
    { cat.neg(f) } -> std::convertible_to<typename C::Morphism>;
    { cat.biproduct(a, b) } -> std::convertible_to<Biproduct<C>>;
    { cat.product_universal(f, g) } -> std::convertible_to<typename C::Morphism>;
    { cat.coproduct_universal(f, g) } -> std::convertible_to<typename C::Morphism>;
    { cat.kernel(f) } -> std::convertible_to<Kernel<C>>;
    { cat.cokernel(f) } -> std::convertible_to<Cokernel<C>>;
    { cat.try_lift_along_mono(f, g) } -> std::convertible_to<std::optional<typename C::Morphism>>;
    { cat.try_colift_along_epi(f, g) } -> std::convertible_to<std::optional<typename C::Morphism>>;
    { cat.is_injective_object(a) } -> std::convertible_to<bool>;
    { cat.embed_into_injective(a) } -> std::convertible_to<typename C::Morphism>;
    { cat.inj_extend(f, g) } -> std::convertible_to<typename C::Morphism>;
    { cat.object_name(a) } -> std::convertible_to<std::string>;
    { f.src } -> std::convertible_to<typename C::Object>;
    { f.dst } -> std::convertible_to<typename C::Object>;
};

}  // namespace homcat
