#pragma once

#include <optional>
#include <string>
#include <vector>

#include "homcat/core.hpp"
#include "homcat/generic.hpp"

// Cochain complexes over a backend category, with finitely supported windows
// and implicit zero padding outside. The degreewise structure (kernels,
// cokernels, biproducts), cohomology objects and the induced cohomology maps
// all reduce to the backend primitives.

namespace homcat {

// A Z-indexed family of objects supported on [lo, hi], with differentials
// d[n] : X[n] -> X[n+1] composing to zero. Objects outside the window are the
// zero object and all maps touching them are zero.
template <CategoryBackend Cat>
class CochainComplex {
public:
    using Object = typename Cat::Object;
    using Morphism = typename Cat::Morphism;

    // objects[i] sits in degree lo + i; diffs[i] : objects[i] -> objects[i+1].
    // Endpoint consistency is enforced here; d o d = 0 is checked by
    // validate_complex so that malformed complexes can be loaded and reported.
    CochainComplex(Cat cat, int lo, std::vector<Object> objects, std::vector<Morphism> diffs)
        : cat_(std::move(cat)), lo_(lo), objects_(std::move(objects)), diffs_(std::move(diffs))
    {
        if (objects_.empty())
            throw ShapeMismatch("CochainComplex: support window must be nonempty");
        if (diffs_.size() + 1 != objects_.size())
            throw ShapeMismatch("CochainComplex: need exactly one differential per adjacent pair");
        for (std::size_t i = 0; i < diffs_.size(); ++i)
            if (!cat_.obj_eq(diffs_[i].src, objects_[i]) ||
                !cat_.obj_eq(diffs_[i].dst, objects_[i + 1]))
                throw ShapeMismatch("CochainComplex: differential at degree " +
                                    std::to_string(lo_ + static_cast<int>(i)) +
                                    " does not match the object family");
    }

    static CochainComplex zero(Cat cat)
    {
        auto z = cat.zero_object();
        return CochainComplex(std::move(cat), 0, {z}, {});
    }

    // Single object concentrated in one degree.
    static CochainComplex concentrated(Cat cat, int degree, Object a)
    {
        return CochainComplex(std::move(cat), degree, {std::move(a)}, {});
    }

    const Cat& category() const { return cat_; }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(objects_.size()) - 1; }

    Object object_at(int n) const
    {
        if (n < lo_ || n > hi()) return cat_.zero_object();
        return objects_[static_cast<std::size_t>(n - lo_)];
    }

    Morphism differential_at(int n) const
    {
        if (n >= lo_ && n < hi())
            return diffs_[static_cast<std::size_t>(n - lo_)];
        return cat_.zero_morphism(object_at(n), object_at(n + 1));
    }

private:
    Cat cat_;
    int lo_;
    std::vector<Object> objects_;
    std::vector<Morphism> diffs_;
};

// Degreewise equality over the padded union of both windows.
template <CategoryBackend Cat>
bool same_complex(const CochainComplex<Cat>& x, const CochainComplex<Cat>& y)
{
    const Cat& C = x.category();
    const int lo = std::min(x.lo(), y.lo());
    const int hi = std::max(x.hi(), y.hi());
    for (int n = lo; n <= hi; ++n) {
        if (!C.obj_eq(x.object_at(n), y.object_at(n))) return false;
        if (!C.mor_eq(x.differential_at(n), y.differential_at(n))) return false;
    }
    return true;
}

struct ComplexViolation {
    int degree;
    std::string what;
};

template <CategoryBackend Cat>
std::vector<ComplexViolation> validate_complex(const CochainComplex<Cat>& x)
{
    const Cat& C = x.category();
    std::vector<ComplexViolation> out;
    for (int n = x.lo() - 1; n <= x.hi(); ++n) {
        auto dd = C.compose(x.differential_at(n + 1), x.differential_at(n));
        if (!C.mor_eq(dd, C.zero_morphism(x.object_at(n), x.object_at(n + 2))))
            out.push_back({n, "d[" + std::to_string(n + 1) + "] o d[" + std::to_string(n) +
                                  "] != 0"});
    }
    return out;
}

// A degreewise family f[n] : src[n] -> dst[n]. The commuting-square condition
// dst.d[n] o f[n] = f[n+1] o src.d[n] is checked by validate_cochain_map.
template <CategoryBackend Cat>
class CochainMap {
public:
    using Object = typename Cat::Object;
    using Morphism = typename Cat::Morphism;

    CochainMap(CochainComplex<Cat> src, CochainComplex<Cat> dst, int lo,
               std::vector<Morphism> components)
        : src_(std::move(src)), dst_(std::move(dst)), lo_(lo), components_(std::move(components))
    {
        const Cat& C = src_.category();
        for (std::size_t i = 0; i < components_.size(); ++i) {
            const int n = lo_ + static_cast<int>(i);
            if (!C.obj_eq(components_[i].src, src_.object_at(n)) ||
                !C.obj_eq(components_[i].dst, dst_.object_at(n)))
                throw ShapeMismatch("CochainMap: component at degree " + std::to_string(n) +
                                    " does not match the complexes");
        }
    }

    static CochainMap zero(const CochainComplex<Cat>& src, const CochainComplex<Cat>& dst)
    {
        return CochainMap(src, dst, 0, {});
    }

    static CochainMap identity(const CochainComplex<Cat>& x)
    {
        const Cat& C = x.category();
        std::vector<Morphism> comps;
        for (int n = x.lo(); n <= x.hi(); ++n)
            comps.push_back(C.identity(x.object_at(n)));
        return CochainMap(x, x, x.lo(), std::move(comps));
    }

    const CochainComplex<Cat>& src() const { return src_; }
    const CochainComplex<Cat>& dst() const { return dst_; }
    const Cat& category() const { return src_.category(); }

    Morphism component_at(int n) const
    {
        const Cat& C = src_.category();
        const int idx = n - lo_;
        if (idx < 0 || idx >= static_cast<int>(components_.size()))
            return C.zero_morphism(src_.object_at(n), dst_.object_at(n));
        return components_[static_cast<std::size_t>(idx)];
    }

    int window_lo() const { return std::min(src_.lo(), dst_.lo()); }
    int window_hi() const { return std::max(src_.hi(), dst_.hi()); }

    // The explicitly stored component range, for serialization.
    int stored_lo() const { return lo_; }
    const std::vector<Morphism>& stored_components() const { return components_; }

private:
    CochainComplex<Cat> src_;
    CochainComplex<Cat> dst_;
    int lo_;
    std::vector<Morphism> components_;
};

template <CategoryBackend Cat>
std::vector<ComplexViolation> validate_cochain_map(const CochainMap<Cat>& f)
{
    const Cat& C = f.category();
    std::vector<ComplexViolation> out;
    for (int n = f.window_lo() - 1; n <= f.window_hi(); ++n) {
        auto lhs = C.compose(f.dst().differential_at(n), f.component_at(n));
        auto rhs = C.compose(f.component_at(n + 1), f.src().differential_at(n));
        if (!C.mor_eq(lhs, rhs))
            out.push_back({n, "square at degree " + std::to_string(n) + " does not commute"});
    }
    return out;
}

template <CategoryBackend Cat>
bool cochain_map_eq(const CochainMap<Cat>& f, const CochainMap<Cat>& g)
{
    const Cat& C = f.category();
    if (!same_complex(f.src(), g.src()) || !same_complex(f.dst(), g.dst())) return false;
    const int lo = std::min(f.window_lo(), g.window_lo());
    const int hi = std::max(f.window_hi(), g.window_hi());
    for (int n = lo; n <= hi; ++n)
        if (!C.mor_eq(f.component_at(n), g.component_at(n))) return false;
    return true;
}

template <CategoryBackend Cat>
CochainMap<Cat> compose(const CochainMap<Cat>& g, const CochainMap<Cat>& f)
{
    const Cat& C = f.category();
    if (!same_complex(f.dst(), g.src()))
        throw CompositionMismatch("cochain map composition: middle complexes differ");
    std::vector<typename Cat::Morphism> comps;
    const int lo = std::min(f.window_lo(), g.window_lo());
    const int hi = std::max(f.window_hi(), g.window_hi());
    for (int n = lo; n <= hi; ++n)
        comps.push_back(C.compose(g.component_at(n), f.component_at(n)));
    return CochainMap<Cat>(f.src(), g.dst(), lo, std::move(comps));
}

template <CategoryBackend Cat>
CochainMap<Cat> add(const CochainMap<Cat>& f, const CochainMap<Cat>& g)
{
    const Cat& C = f.category();
    if (!same_complex(f.src(), g.src()) || !same_complex(f.dst(), g.dst()))
        throw ShapeMismatch("cochain map addition: maps are not parallel");
    std::vector<typename Cat::Morphism> comps;
    const int lo = std::min(f.window_lo(), g.window_lo());
    const int hi = std::max(f.window_hi(), g.window_hi());
    for (int n = lo; n <= hi; ++n)
        comps.push_back(C.add(f.component_at(n), g.component_at(n)));
    return CochainMap<Cat>(f.src(), f.dst(), lo, std::move(comps));
}

template <CategoryBackend Cat>
CochainMap<Cat> negate(const CochainMap<Cat>& f)
{
    const Cat& C = f.category();
    std::vector<typename Cat::Morphism> comps;
    for (int n = f.window_lo(); n <= f.window_hi(); ++n)
        comps.push_back(C.neg(f.component_at(n)));
    return CochainMap<Cat>(f.src(), f.dst(), f.window_lo(), std::move(comps));
}

template <CategoryBackend Cat>
CochainMap<Cat> subtract(const CochainMap<Cat>& f, const CochainMap<Cat>& g)
{
    return add(f, negate(g));
}

// Degreewise kernel complex with the induced differentials, plus its inclusion.
template <CategoryBackend Cat>
struct ComplexKernel {
    CochainComplex<Cat> obj;
    CochainMap<Cat> incl;
};

template <CategoryBackend Cat>
ComplexKernel<Cat> complex_kernel(const CochainMap<Cat>& f)
{
    const Cat& C = f.category();
    const auto& X = f.src();
    std::vector<typename Cat::Object> objs;
    std::vector<typename Cat::Morphism> incls;
    std::vector<Kernel<Cat>> kers;
    for (int n = X.lo(); n <= X.hi(); ++n)
        kers.push_back(C.kernel(f.component_at(n)));
    // Induced differential: d o incl[n] kills f[n+1], so it lifts through incl[n+1].
    std::vector<typename Cat::Morphism> diffs;
    for (std::size_t i = 0; i + 1 < kers.size(); ++i) {
        const int n = X.lo() + static_cast<int>(i);
        diffs.push_back(
            lift_along_mono(C, kers[i + 1].incl, C.compose(X.differential_at(n), kers[i].incl)));
    }
    for (auto& k : kers) {
        objs.push_back(k.obj);
        incls.push_back(k.incl);
    }
    CochainComplex<Cat> kx(C, X.lo(), std::move(objs), std::move(diffs));
    CochainMap<Cat> incl(kx, X, X.lo(), std::move(incls));
    return {std::move(kx), std::move(incl)};
}

template <CategoryBackend Cat>
struct ComplexCokernel {
    CochainComplex<Cat> obj;
    CochainMap<Cat> proj;
};

template <CategoryBackend Cat>
ComplexCokernel<Cat> complex_cokernel(const CochainMap<Cat>& f)
{
    const Cat& C = f.category();
    const auto& Y = f.dst();
    std::vector<Cokernel<Cat>> coks;
    for (int n = Y.lo(); n <= Y.hi(); ++n)
        coks.push_back(C.cokernel(f.component_at(n)));
    // Induced differential: proj[n+1] o d kills im f[n], so it colifts through proj[n].
    std::vector<typename Cat::Morphism> diffs;
    for (std::size_t i = 0; i + 1 < coks.size(); ++i) {
        const int n = Y.lo() + static_cast<int>(i);
        diffs.push_back(colift_along_epi(C, coks[i].proj,
                                         C.compose(coks[i + 1].proj, Y.differential_at(n))));
    }
    std::vector<typename Cat::Object> objs;
    std::vector<typename Cat::Morphism> projs;
    for (auto& c : coks) {
        objs.push_back(c.obj);
        projs.push_back(c.proj);
    }
    CochainComplex<Cat> qx(C, Y.lo(), std::move(objs), std::move(diffs));
    CochainMap<Cat> proj(Y, qx, Y.lo(), std::move(projs));
    return {std::move(qx), std::move(proj)};
}

template <CategoryBackend Cat>
struct ComplexBiproduct {
    CochainComplex<Cat> obj;
    CochainMap<Cat> p1, p2, i1, i2;
};

template <CategoryBackend Cat>
ComplexBiproduct<Cat> complex_biproduct(const CochainComplex<Cat>& x,
                                        const CochainComplex<Cat>& y)
{
    const Cat& C = x.category();
    const int lo = std::min(x.lo(), y.lo());
    const int hi = std::max(x.hi(), y.hi());
    std::vector<Biproduct<Cat>> parts;
    for (int n = lo; n <= hi; ++n)
        parts.push_back(C.biproduct(x.object_at(n), y.object_at(n)));

    std::vector<typename Cat::Object> objs;
    std::vector<typename Cat::Morphism> diffs;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        objs.push_back(parts[i].obj);
        if (i + 1 < parts.size()) {
            const int n = lo + static_cast<int>(i);
            // d_sum = i1' (d_x p1) + i2' (d_y p2)
            auto dx = C.compose(parts[i + 1].i1, C.compose(x.differential_at(n), parts[i].p1));
            auto dy = C.compose(parts[i + 1].i2, C.compose(y.differential_at(n), parts[i].p2));
            diffs.push_back(C.add(dx, dy));
        }
    }
    CochainComplex<Cat> sum(C, lo, std::move(objs), std::move(diffs));

    std::vector<typename Cat::Morphism> p1s, p2s, i1s, i2s;
    for (auto& bp : parts) {
        p1s.push_back(bp.p1);
        p2s.push_back(bp.p2);
        i1s.push_back(bp.i1);
        i2s.push_back(bp.i2);
    }
    return {sum, CochainMap<Cat>(sum, x, lo, std::move(p1s)),
            CochainMap<Cat>(sum, y, lo, std::move(p2s)),
            CochainMap<Cat>(x, sum, lo, std::move(i1s)),
            CochainMap<Cat>(y, sum, lo, std::move(i2s))};
}

template <CategoryBackend Cat>
struct Cohomology {
    typename Cat::Object obj;
    typename Cat::Morphism via;  // projection Ker d[n] -> H^n
};

// H^n = cok(a) for the comparison map a : Im d[n-1] -> Ker d[n].
template <CategoryBackend Cat>
Cohomology<Cat> cohomology_object(const CochainComplex<Cat>& x, int n)
{
    const Cat& C = x.category();
    auto ker = C.kernel(x.differential_at(n));
    auto im = image(C, x.differential_at(n - 1));
    auto a = lift_along_mono(C, ker.incl, im.mono);
    auto cok = C.cokernel(a);
    return {cok.obj, cok.proj};
}

// The induced map H^n(f) : H^n(src) -> H^n(dst).
template <CategoryBackend Cat>
typename Cat::Morphism cohomology_map(const CochainMap<Cat>& f, int n)
{
    const Cat& C = f.category();
    const auto& X = f.src();
    const auto& Y = f.dst();

    auto ker_x = C.kernel(X.differential_at(n));
    auto ker_y = C.kernel(Y.differential_at(n));
    auto a = lift_along_mono(C, ker_x.incl, image(C, X.differential_at(n - 1)).mono);
    auto a2 = lift_along_mono(C, ker_y.incl, image(C, Y.differential_at(n - 1)).mono);

    // f[n] restricted to Ker d[n] lands in Ker d'[n].
    auto alpha = lift_along_mono(C, ker_y.incl, C.compose(f.component_at(n), ker_x.incl));

    auto cok_a = C.cokernel(a);
    auto cok_a2 = C.cokernel(a2);
    auto down = C.compose(cok_a2.proj, alpha);
    // The composite kills the image part; anything else is a backend bug.
    if (!C.mor_eq(C.compose(down, a), C.zero_morphism(a.src, cok_a2.obj)))
        throw InvariantViolation("cohomology_map: projection does not kill the image");
    return colift_along_epi(C, cok_a.proj, down);
}

// Degree -1 homotopy data: components[n] : src[n] -> dst[n-1].
template <CategoryBackend Cat>
struct Homotopy {
    int lo = 0;
    std::vector<typename Cat::Morphism> components;

    typename Cat::Morphism component_at(const Cat& C, const CochainComplex<Cat>& src,
                                        const CochainComplex<Cat>& dst, int n) const
    {
        const int idx = n - lo;
        if (idx < 0 || idx >= static_cast<int>(components.size()))
            return C.zero_morphism(src.object_at(n), dst.object_at(n - 1));
        return components[static_cast<std::size_t>(idx)];
    }
};

template <CategoryBackend Cat>
Homotopy<Cat> zero_homotopy()
{
    return Homotopy<Cat>{0, {}};
}

// The null-homotopic map d' s + s d determined by a homotopy family.
template <CategoryBackend Cat>
CochainMap<Cat> homotopy_boundary_map(const CochainComplex<Cat>& x, const CochainComplex<Cat>& y,
                                      const Homotopy<Cat>& s)
{
    const Cat& C = x.category();
    const int lo = std::min(x.lo(), y.lo()) - 1;
    const int hi = std::max(x.hi(), y.hi()) + 1;
    std::vector<typename Cat::Morphism> comps;
    for (int n = lo; n <= hi; ++n) {
        auto left = C.compose(y.differential_at(n - 1), s.component_at(C, x, y, n));
        auto right = C.compose(s.component_at(C, x, y, n + 1), x.differential_at(n));
        comps.push_back(C.add(left, right));
    }
    return CochainMap<Cat>(x, y, lo, std::move(comps));
}

// Checks f - g = d' s + s d degreewise. By default the identity is checked on
// the whole padded window; `through_degree` restricts the top of the range for
// truncated-resolution comparisons, where the identity at the cutoff degree
// would involve data beyond the truncation.
template <CategoryBackend Cat>
bool is_homotopic(const CochainMap<Cat>& f, const CochainMap<Cat>& g, const Homotopy<Cat>& s,
                  std::optional<int> through_degree = std::nullopt)
{
    const Cat& C = f.category();
    if (!same_complex(f.src(), g.src()) || !same_complex(f.dst(), g.dst()))
        throw ShapeMismatch("is_homotopic: maps are not parallel");
    auto boundary = homotopy_boundary_map(f.src(), f.dst(), s);
    const int lo = std::min(f.window_lo(), g.window_lo()) - 1;
    const int hi = through_degree.value_or(std::max(f.window_hi(), g.window_hi()));
    for (int n = lo; n <= hi; ++n) {
        auto diff = C.add(f.component_at(n), C.neg(g.component_at(n)));
        if (!C.mor_eq(diff, boundary.component_at(n))) return false;
    }
    return true;
}

}  // namespace homcat
