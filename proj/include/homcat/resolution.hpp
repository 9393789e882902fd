#pragma once

#include <string>
#include <vector>

#include "homcat/complex.hpp"

// Injective resolutions, built inductively from the backend's embeddings, and
// the comparison machinery: inducing a cochain map between resolutions from a
// morphism of the resolved objects, and constructing the homotopy between any
// two such induced maps.

namespace homcat {

class HomotopyConstructionError : public CategoryError {
public:
    using CategoryError::CategoryError;
};

// An augmentation monic base -> complex[0] together with an exact complex of
// injectives supported on [0, max_degree]. The infinite resolution is
// truncated at max_degree; exactness holds at every degree strictly below it.
template <CategoryBackend Cat>
struct InjectiveResolution {
    typename Cat::Object base;
    typename Cat::Morphism aug;
    CochainComplex<Cat> complex;

    int max_degree() const { return complex.hi(); }

    InjectiveResolution truncated(const Cat& C, int degree) const
    {
        std::vector<typename Cat::Object> objs;
        std::vector<typename Cat::Morphism> diffs;
        for (int n = 0; n <= degree; ++n) {
            objs.push_back(complex.object_at(n));
            if (n < degree) diffs.push_back(complex.differential_at(n));
        }
        return {base, aug, CochainComplex<Cat>(C, 0, std::move(objs), std::move(diffs))};
    }
};

template <CategoryBackend Cat>
void verify_injective_resolution(const Cat& C, const InjectiveResolution<Cat>& res);

// d[n+1] = embed(Cok d[n]) o cok(d[n]), starting from the augmentation. The
// result is re-verified rather than trusted; the cost is negligible at the
// scales the backends work at.
template <CategoryBackend Cat>
InjectiveResolution<Cat> build_injective_resolution(const Cat& C, const typename Cat::Object& a,
                                                    int max_degree)
{
    if (max_degree < 0)
        throw ShapeMismatch("build_injective_resolution: max_degree must be >= 0");
    auto aug = C.embed_into_injective(a);
    std::vector<typename Cat::Object> objs{aug.dst};
    std::vector<typename Cat::Morphism> diffs;
    auto prev = aug;
    for (int n = 0; n < max_degree; ++n) {
        auto cok = C.cokernel(prev);
        auto emb = C.embed_into_injective(cok.obj);
        auto d = C.compose(emb, cok.proj);
        objs.push_back(d.dst);
        diffs.push_back(d);
        prev = d;
    }
    InjectiveResolution<Cat> res{a, std::move(aug),
                                 CochainComplex<Cat>(C, 0, std::move(objs), std::move(diffs))};
    verify_injective_resolution(C, res);
    return res;
}

// Re-verifies everything the construction promises: the augmentation is monic,
// every object is injective, d o d = 0, and the augmented sequence is exact at
// every degree below the truncation.
template <CategoryBackend Cat>
void verify_injective_resolution(const Cat& C, const InjectiveResolution<Cat>& res)
{
    if (!C.obj_eq(res.aug.src, res.base) || !C.obj_eq(res.aug.dst, res.complex.object_at(0)))
        throw InvariantViolation("resolution: augmentation endpoints are wrong");
    if (!is_mono(C, res.aug))
        throw InvariantViolation("resolution: augmentation is not monic");
    for (int n = 0; n <= res.max_degree(); ++n)
        if (!C.is_injective_object(res.complex.object_at(n)))
            throw InvariantViolation("resolution: object at degree " + std::to_string(n) +
                                     " is not injective");
    if (!validate_complex(res.complex).empty())
        throw InvariantViolation("resolution: differentials do not compose to zero");
    if (!C.mor_eq(C.compose(res.complex.differential_at(0), res.aug),
                  C.zero_morphism(res.base, res.complex.object_at(1))))
        throw InvariantViolation("resolution: d[0] o aug != 0");
    for (int n = 0; n < res.max_degree(); ++n) {
        const auto prev = (n == 0) ? res.aug : res.complex.differential_at(n - 1);
        if (!subobject_eq(C, image(C, prev),
                          Subobject<Cat>{C.kernel(res.complex.differential_at(n)).incl}))
            throw InvariantViolation("resolution: not exact at degree " + std::to_string(n));
    }
}

namespace resolution_detail {

// The canonical factorization d[n] = mu o coim through Coim d[n], with mu
// monic by the epi-mono factorization; both maps are reused by the inductive
// constructions below.
template <CategoryBackend Cat>
struct CoimageStep {
    typename Cat::Morphism coim;  // I[n] ->> Coim d[n]
    typename Cat::Morphism mu;    // Coim d[n] >-> I[n+1]
};

template <CategoryBackend Cat>
CoimageStep<Cat> coimage_step(const Cat& C, const CochainComplex<Cat>& x, int n)
{
    auto coim = C.cokernel(C.kernel(x.differential_at(n)).incl).proj;
    auto mu = colift_along_epi(C, coim, x.differential_at(n));
    return {std::move(coim), std::move(mu)};
}

}  // namespace resolution_detail

// Extends f : A -> B to a cochain map between resolutions of A and B. Degree
// zero extends the augmentation square through the injective I_B[0]; each
// later degree factors d' o f[n] through the coimage of d[n] (possible by
// exactness) and extends the factor along the monic part of d[n].
template <CategoryBackend Cat>
CochainMap<Cat> induce_chain_map(const Cat& C, const typename Cat::Morphism& f,
                                 const InjectiveResolution<Cat>& res_a,
                                 const InjectiveResolution<Cat>& res_b)
{
    if (!C.obj_eq(res_a.base, f.src) || !C.obj_eq(res_b.base, f.dst))
        throw ShapeMismatch("induce_chain_map: resolutions do not resolve the endpoints of f");
    if (res_a.max_degree() != res_b.max_degree())
        throw ShapeMismatch("induce_chain_map: truncation degrees differ");
    const int top = res_a.max_degree();

    std::vector<typename Cat::Morphism> comps;
    comps.push_back(C.inj_extend(res_a.aug, C.compose(res_b.aug, f)));
    for (int n = 0; n < top; ++n) {
        auto gamma = C.compose(res_b.complex.differential_at(n), comps.back());
        auto step = resolution_detail::coimage_step(C, res_a.complex, n);
        auto eta = colift_along_epi(C, step.coim, gamma);
        comps.push_back(C.inj_extend(step.mu, eta));
    }
    return CochainMap<Cat>(res_a.complex, res_b.complex, 0, std::move(comps));
}

// Builds the homotopy witnessing that two maps induced by the same morphism
// agree up to homotopy. The inductive residual f[n] - g[n] - d' s[n] must kill
// the image of d[n-1]; when it does not, the inputs were not induced by a
// common morphism and the construction aborts with a diagnostic. The identity
// f - g = d's + sd is guaranteed at all degrees strictly below the truncation
// degree; at the truncation degree it would involve the next differential,
// which the truncation cut off.
template <CategoryBackend Cat>
Homotopy<Cat> homotopy_between(const Cat& C, const CochainMap<Cat>& fmap,
                               const CochainMap<Cat>& gmap, const InjectiveResolution<Cat>& res_a,
                               const InjectiveResolution<Cat>& res_b)
{
    if (!same_complex(fmap.src(), res_a.complex) || !same_complex(fmap.dst(), res_b.complex) ||
        !same_complex(gmap.src(), res_a.complex) || !same_complex(gmap.dst(), res_b.complex))
        throw ShapeMismatch("homotopy_between: maps do not live over the given resolutions");
    const int top = res_a.max_degree();

    Homotopy<Cat> s{0, {C.zero_morphism(res_a.complex.object_at(0), C.zero_object())}};
    for (int n = 0; n < top; ++n) {
        auto prev = s.components.back();  // s[n] : I[n] -> J[n-1]
        auto alpha = C.add(
            C.add(fmap.component_at(n), C.neg(gmap.component_at(n))),
            C.neg(C.compose(res_b.complex.differential_at(n - 1), prev)));
        auto step = resolution_detail::coimage_step(C, res_a.complex, n);
        auto eta = C.try_colift_along_epi(step.coim, alpha);
        if (!eta)
            throw HomotopyConstructionError(
                "homotopy_between: residual at degree " + std::to_string(n) +
                " does not vanish against the differential; the maps are not induced by a "
                "common morphism");
        s.components.push_back(C.inj_extend(step.mu, *eta));
    }
    return s;
}

}  // namespace homcat
