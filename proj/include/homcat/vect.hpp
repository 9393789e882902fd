#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homcat/core.hpp"
#include "homcat/matrix.hpp"

namespace homcat {

// A finite-dimensional F_p vector space, identified by its dimension.
struct VectObject {
    std::int64_t p = 2;
    std::int64_t dim = 0;

    bool operator==(const VectObject&) const = default;
};

// A linear map, stored as a (dst.dim x src.dim) matrix acting on column
// vectors, entries reduced mod p.
struct VectMorphism {
    VectObject src;
    VectObject dst;
    Matrix mat;
};

// Finite-dimensional vector spaces over F_p. Kernels, cokernels, lifts and
// colifts are computed by Gaussian elimination; the canonical forms are
// reduced-echelon null space bases and projections onto non-pivot coordinates.
class VectCategory {
public:
    using Object = VectObject;
    using Morphism = VectMorphism;

    explicit VectCategory(std::int64_t p);

    std::int64_t characteristic() const { return p_; }

    Object object(std::int64_t dim) const;
    Object zero_object() const { return object(0); }
    bool is_zero_object(const Object& a) const;
    bool obj_eq(const Object& a, const Object& b) const;
    std::string object_name(const Object& a) const;

    // Validates shape and reduces entries mod p.
    Morphism morphism(const Object& src, const Object& dst, Matrix mat) const;
    Morphism identity(const Object& a) const;
    Morphism zero_morphism(const Object& src, const Object& dst) const;
    bool mor_eq(const Morphism& f, const Morphism& g) const;

    Morphism compose(const Morphism& g, const Morphism& f) const;
    Morphism add(const Morphism& f, const Morphism& g) const;
    Morphism neg(const Morphism& f) const;

    Biproduct<VectCategory> biproduct(const Object& a, const Object& b) const;
    Morphism product_universal(const Morphism& f, const Morphism& g) const;
    Morphism coproduct_universal(const Morphism& f, const Morphism& g) const;

    Kernel<VectCategory> kernel(const Morphism& f) const;
    Cokernel<VectCategory> cokernel(const Morphism& f) const;

    std::optional<Morphism> try_lift_along_mono(const Morphism& m, const Morphism& g) const;
    std::optional<Morphism> try_colift_along_epi(const Morphism& e, const Morphism& g) const;

    // Every F_p vector space is injective; the canonical embedding is the identity.
    bool is_injective_object(const Object&) const { return true; }
    Morphism embed_into_injective(const Object& a) const { return identity(a); }
    Morphism inj_extend(const Morphism& m, const Morphism& alpha) const;

private:
    void check_same_backend(const Object& a) const;

    std::int64_t p_;
};

namespace vect_detail {

// Reduces m to reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::int64_t p);

// Canonical basis of {x : m x = 0}, one column per free variable.
Matrix null_space(Matrix m, std::int64_t p);

// Canonical solution of a x = b (free variables zero), or nullopt.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b, std::int64_t p);

}  // namespace vect_detail

}  // namespace homcat
