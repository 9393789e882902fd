#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "homcat/resolution.hpp"
#include "homcat/vect.hpp"
#include "homcat/zmod.hpp"

// Additive endofunctors and their right derived functors. R^i F(A) is the
// degree-i cohomology of F applied to the deleted injective resolution of A
// (the complex starts at F(I^0); the resolved object itself is not a term, so
// R^0 F = F on left exact functors).

namespace homcat {

template <CategoryBackend Cat>
struct AdditiveFunctor {
    std::string name;
    std::function<typename Cat::Object(const typename Cat::Object&)> on_object;
    std::function<typename Cat::Morphism(const typename Cat::Morphism&)> on_morphism;
};

template <CategoryBackend Cat>
CochainComplex<Cat> apply_functor(const Cat& C, const AdditiveFunctor<Cat>& F,
                                  const CochainComplex<Cat>& x)
{
    std::vector<typename Cat::Object> objs;
    std::vector<typename Cat::Morphism> diffs;
    for (int n = x.lo(); n <= x.hi(); ++n) {
        objs.push_back(F.on_object(x.object_at(n)));
        if (n < x.hi()) diffs.push_back(F.on_morphism(x.differential_at(n)));
    }
    return CochainComplex<Cat>(C, x.lo(), std::move(objs), std::move(diffs));
}

template <CategoryBackend Cat>
CochainMap<Cat> apply_functor(const Cat& C, const AdditiveFunctor<Cat>& F,
                              const CochainMap<Cat>& f)
{
    auto fx = apply_functor(C, F, f.src());
    auto fy = apply_functor(C, F, f.dst());
    std::vector<typename Cat::Morphism> comps;
    const int lo = std::min(f.src().lo(), f.dst().lo());
    const int hi = std::max(f.src().hi(), f.dst().hi());
    for (int n = lo; n <= hi; ++n)
        comps.push_back(F.on_morphism(f.component_at(n)));
    return CochainMap<Cat>(std::move(fx), std::move(fy), lo, std::move(comps));
}

// ---- Hom(M, -) over Z/p^k --------------------------------------------------
//
// Hom((+)_j Z/p^{a_j}, (+)_i Z/p^{b_i}) = (+)_{i,j} Z/p^{min(a_j, b_i)}, with
// one canonical generator per pair: the map sending generator j to
// p^{max(0, b_i - a_j)} times generator i. The summands are listed pairwise
// (source generator outer, target generator inner) and then stably sorted into
// the canonical ascending order; hom_morphism uses the same enumeration.

namespace hom_detail {

struct HomBasis {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (i, j) sorted canonically
    std::vector<int> exponents;                              // min(a_j, b_i) per slot
};

inline HomBasis hom_basis(const ZModObject& m, const ZModObject& n)
{
    HomBasis out;
    std::vector<std::pair<std::size_t, std::size_t>> raw;
    std::vector<int> exps;
    for (std::size_t j = 0; j < m.invariants.size(); ++j)
        for (std::size_t i = 0; i < n.invariants.size(); ++i) {
            raw.emplace_back(i, j);
            exps.push_back(std::min(m.invariants[j], n.invariants[i]));
        }
    std::vector<std::size_t> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return exps[x] < exps[y]; });
    for (auto idx : order) {
        out.pairs.push_back(raw[idx]);
        out.exponents.push_back(exps[idx]);
    }
    return out;
}

}  // namespace hom_detail

inline ZModObject hom_object(const ZModCategory& C, const ZModObject& m, const ZModObject& n)
{
    return C.object(hom_detail::hom_basis(m, n).exponents);
}

// Post-composition Hom(M, g) : Hom(M, N) -> Hom(M, N') on canonical generators.
inline ZModMorphism hom_morphism(const ZModCategory& C, const ZModObject& m,
                                 const ZModMorphism& g)
{
    const auto src_basis = hom_detail::hom_basis(m, g.src);
    const auto dst_basis = hom_detail::hom_basis(m, g.dst);
    const ZModObject hsrc = C.object(src_basis.exponents);
    const ZModObject hdst = C.object(dst_basis.exponents);

    Matrix mat(dst_basis.pairs.size(), src_basis.pairs.size());
    for (std::size_t col = 0; col < src_basis.pairs.size(); ++col) {
        const auto [i, j] = src_basis.pairs[col];
        const int aj = m.invariants[j];
        const int bi = g.src.invariants[i];
        for (std::size_t row = 0; row < dst_basis.pairs.size(); ++row) {
            const auto [r, j2] = dst_basis.pairs[row];
            if (j2 != j) continue;
            const int br = g.dst.invariants[r];
            // g o phi_{ij} sends gen j to p^{max(0,bi-aj)} g[r][i] gen r; divide
            // out the canonical lead coefficient of phi_{rj}. The quotient is
            // exact because g satisfies its own divisibility constraint.
            const std::int64_t num =
                floor_mod(ipow(C.prime(), std::max(0, bi - aj)) * g.mat(r, i), C.ring_modulus());
            const std::int64_t den = ipow(C.prime(), std::max(0, br - aj));
            mat(row, col) = floor_mod(num / den, ipow(C.prime(), std::min(aj, br)));
        }
    }
    return C.morphism(hsrc, hdst, std::move(mat));
}

inline AdditiveFunctor<ZModCategory> hom_functor(const ZModCategory& C, const ZModObject& m)
{
    AdditiveFunctor<ZModCategory> F;
    F.name = "Hom(" + C.object_name(m) + ", -)";
    F.on_object = [C, m](const ZModObject& n) { return hom_object(C, m, n); };
    F.on_morphism = [C, m](const ZModMorphism& g) { return hom_morphism(C, m, g); };
    return F;
}

// Hom(M, -) over F_p: Hom(F^m, N) = N^m, with post-composition acting as the
// m-fold block diagonal.
inline AdditiveFunctor<VectCategory> hom_functor(const VectCategory& C, const VectObject& m)
{
    AdditiveFunctor<VectCategory> F;
    F.name = "Hom(" + C.object_name(m) + ", -)";
    const std::int64_t copies = m.dim;
    F.on_object = [C, copies](const VectObject& n) { return C.object(copies * n.dim); };
    F.on_morphism = [C, copies](const VectMorphism& g) {
        Matrix big(copies * g.mat.rows(), copies * g.mat.cols());
        for (std::int64_t c = 0; c < copies; ++c)
            for (std::size_t i = 0; i < g.mat.rows(); ++i)
                for (std::size_t j = 0; j < g.mat.cols(); ++j)
                    big(c * g.mat.rows() + i, c * g.mat.cols() + j) = g.mat(i, j);
        return C.morphism(C.object(copies * g.src.dim), C.object(copies * g.dst.dim),
                          std::move(big));
    };
    return F;
}

// ---- resolution cache -------------------------------------------------------

// Per-object resolutions, keyed by canonical form. Read-mostly: lookups take a
// shared lock, (re)builds take the exclusive lock. Deterministic construction
// means a deeper rebuild extends the shallower one, so replacing is safe.
template <CategoryBackend Cat>
class ResolutionCache {
public:
    InjectiveResolution<Cat> get_or_build(const Cat& C, const typename Cat::Object& a,
                                          int min_degree)
    {
        const std::string key = C.object_name(a);
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end() && it->second->max_degree() >= min_degree)
                return *it->second;
        }
        std::unique_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it == cache_.end() || it->second->max_degree() < min_degree) {
            auto res = std::make_shared<InjectiveResolution<Cat>>(
                build_injective_resolution(C, a, min_degree));
            cache_[key] = res;
            return *res;
        }
        return *it->second;
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<InjectiveResolution<Cat>>> cache_;
};

// ---- right derived functors -------------------------------------------------

// R^i F(A) = H^i(F(I^*)) for the deleted resolution I^* of A, built through
// degree i+1 so that degree i sits strictly below the truncation.
template <CategoryBackend Cat>
typename Cat::Object right_derived_object(const Cat& C, const AdditiveFunctor<Cat>& F,
                                          const typename Cat::Object& a, int i,
                                          ResolutionCache<Cat>& cache)
{
    if (i < 0) throw ShapeMismatch("right_derived_object: negative degree");
    auto res = cache.get_or_build(C, a, i + 1);
    return cohomology_object(apply_functor(C, F, res.complex), i).obj;
}

// R^i F(f) = H^i(F(f^*)) for a chain map f^* induced by f between the given
// resolutions. Homotopy invariance of H^i makes the choice of f^* immaterial
// at degrees strictly below the truncation.
template <CategoryBackend Cat>
typename Cat::Morphism right_derived_morphism(const Cat& C, const AdditiveFunctor<Cat>& F,
                                              const typename Cat::Morphism& f, int i,
                                              const InjectiveResolution<Cat>& res_a,
                                              const InjectiveResolution<Cat>& res_b)
{
    if (i < 0) throw ShapeMismatch("right_derived_morphism: negative degree");
    if (res_a.max_degree() < i + 1 || res_b.max_degree() < i + 1)
        throw ShapeMismatch("right_derived_morphism: resolutions must reach degree i+1");
    const int depth = std::min(res_a.max_degree(), res_b.max_degree());
    auto fmap = induce_chain_map(C, f, res_a.truncated(C, depth), res_b.truncated(C, depth));
    return cohomology_map(apply_functor(C, F, fmap), i);
}

// The canonical isomorphism between R^i F(A) computed with two different
// resolutions: H^i(F(-)) of the chain map induced by the identity. Both
// composites with the reverse map are checked to be identities.
template <CategoryBackend Cat>
typename Cat::Morphism resolution_independence_iso(const Cat& C, const AdditiveFunctor<Cat>& F,
                                                   const typename Cat::Object& a, int i,
                                                   const InjectiveResolution<Cat>& res1,
                                                   const InjectiveResolution<Cat>& res2)
{
    if (i < 0) throw ShapeMismatch("resolution_independence_iso: negative degree");
    if (res1.max_degree() < i + 1 || res2.max_degree() < i + 1)
        throw ShapeMismatch("resolution_independence_iso: resolutions must reach degree i+1");
    const int depth = std::min(res1.max_degree(), res2.max_degree());
    auto r1 = res1.truncated(C, depth);
    auto r2 = res2.truncated(C, depth);
    auto one = C.identity(a);
    auto fwd = cohomology_map(apply_functor(C, F, induce_chain_map(C, one, r1, r2)), i);
    auto bwd = cohomology_map(apply_functor(C, F, induce_chain_map(C, one, r2, r1)), i);
    if (!C.mor_eq(C.compose(bwd, fwd), C.identity(fwd.src)) ||
        !C.mor_eq(C.compose(fwd, bwd), C.identity(fwd.dst)))
        throw InvariantViolation("resolution_independence_iso: composites are not identities");
    return fwd;
}

// Ext^i(M, N) = R^i Hom(M, -)(N).
inline ZModObject ext_object(const ZModCategory& C, const ZModObject& m, const ZModObject& n,
                             int i, ResolutionCache<ZModCategory>& cache)
{
    return right_derived_object(C, hom_functor(C, m), n, i, cache);
}

inline VectObject ext_object(const VectCategory& C, const VectObject& m, const VectObject& n,
                             int i, ResolutionCache<VectCategory>& cache)
{
    return right_derived_object(C, hom_functor(C, m), n, i, cache);
}

}  // namespace homcat
