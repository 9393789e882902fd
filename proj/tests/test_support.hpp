#pragma once

// Shared randomized-test machinery. Random complexes and cochain maps are
// assembled from biproducts of elementary pieces (one object concentrated in a
// degree, or an identity-differential contractible pair), because the chain
// maps between such pieces are exactly the unconstrained morphism choices
// tabulated in piece_maps below. That makes uniform sampling of genuine chain
// maps possible without solving the square conditions.

#include <cstdint>
#include <random>
#include <vector>

#include "homcat/complex.hpp"
#include "homcat/vect.hpp"
#include "homcat/zmod.hpp"

namespace homcat::testing {

struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    int below(int n) { return static_cast<int>(eng() % static_cast<std::uint64_t>(n)); }
    std::int64_t below64(std::int64_t n)
    {
        return static_cast<std::int64_t>(eng() % static_cast<std::uint64_t>(n));
    }
    bool chance(double p) { return std::uniform_real_distribution<>(0, 1)(eng) < p; }
};

inline VectObject random_object(const VectCategory& C, Rng& rng, int max_dim = 4)
{
    return C.object(rng.below(max_dim + 1));
}

inline ZModObject random_object(const ZModCategory& C, Rng& rng, int max_summands = 3)
{
    std::vector<int> inv;
    const int n = rng.below(max_summands + 1);
    for (int i = 0; i < n; ++i)
        inv.push_back(1 + rng.below(C.exponent_bound()));
    return C.object(std::move(inv));
}

inline VectMorphism random_morphism(const VectCategory& C, const VectObject& a,
                                    const VectObject& b, Rng& rng)
{
    Matrix m(b.dim, a.dim);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = rng.below64(C.characteristic());
    return C.morphism(a, b, std::move(m));
}

inline ZModMorphism random_morphism(const ZModCategory& C, const ZModObject& a,
                                    const ZModObject& b, Rng& rng)
{
    Matrix m(b.invariants.size(), a.invariants.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const int lead = std::max(0, b.invariants[i] - a.invariants[j]);
            const std::int64_t choices =
                ipow(C.prime(), std::min(a.invariants[j], b.invariants[i]));
            m(i, j) = floor_mod(rng.below64(choices) * ipow(C.prime(), lead),
                                ipow(C.prime(), b.invariants[i]));
        }
    return C.morphism(a, b, std::move(m));
}

template <class Cat>
typename Cat::Morphism random_parallel_to(const Cat& C, const typename Cat::Morphism& f, Rng& rng)
{
    return random_morphism(C, f.src, f.dst, rng);
}

// ---- random complexes and chain maps -------------------------------------

template <class Cat>
struct Piece {
    bool contractible = false;  // identity differential in degrees [deg, deg+1]
    typename Cat::Object obj;
    int deg = 0;
};

template <class Cat>
struct PieceSum {
    std::vector<Piece<Cat>> pieces;
    CochainComplex<Cat> cx;
    std::vector<CochainMap<Cat>> incl;  // piece complex -> cx
    std::vector<CochainMap<Cat>> proj;  // cx -> piece complex
};

template <class Cat>
CochainComplex<Cat> piece_complex(const Cat& C, const Piece<Cat>& p)
{
    if (!p.contractible)
        return CochainComplex<Cat>::concentrated(C, p.deg, p.obj);
    return CochainComplex<Cat>(C, p.deg, {p.obj, p.obj}, {C.identity(p.obj)});
}

template <class Cat>
PieceSum<Cat> build_piece_sum(const Cat& C, std::vector<Piece<Cat>> pieces)
{
    PieceSum<Cat> out{std::move(pieces), CochainComplex<Cat>::zero(C), {}, {}};
    for (const auto& p : out.pieces) {
        auto pc = piece_complex(C, p);
        auto bp = complex_biproduct(out.cx, pc);
        for (std::size_t t = 0; t < out.incl.size(); ++t) {
            out.incl[t] = compose(bp.i1, out.incl[t]);
            out.proj[t] = compose(out.proj[t], bp.p1);
        }
        out.incl.push_back(bp.i2);
        out.proj.push_back(bp.p2);
        out.cx = bp.obj;
    }
    return out;
}

template <class Cat>
PieceSum<Cat> random_piece_sum(const Cat& C, Rng& rng, int max_pieces = 3, int lo_deg = 0,
                               int hi_deg = 2)
{
    std::vector<Piece<Cat>> pieces;
    const int n = 1 + rng.below(max_pieces);
    for (int i = 0; i < n; ++i) {
        Piece<Cat> p;
        p.contractible = rng.chance(0.4);
        p.obj = random_object(C, rng);
        p.deg = lo_deg + rng.below(hi_deg - lo_deg + 1);
        pieces.push_back(std::move(p));
    }
    return build_piece_sum(C, std::move(pieces));
}

// The chain maps between elementary pieces: each compatible (source piece,
// target piece) pair admits exactly one free morphism slot.
template <class Cat>
CochainMap<Cat> random_piece_sum_map(const Cat& C, const PieceSum<Cat>& x, const PieceSum<Cat>& y,
                                     Rng& rng)
{
    auto f = CochainMap<Cat>::zero(x.cx, y.cx);
    for (std::size_t t = 0; t < x.pieces.size(); ++t)
        for (std::size_t s = 0; s < y.pieces.size(); ++s) {
            if (!rng.chance(0.6)) continue;
            const auto& P = x.pieces[t];
            const auto& Q = y.pieces[s];
            auto px = piece_complex(C, P);
            auto qy = piece_complex(C, Q);
            std::vector<typename Cat::Morphism> comps;
            int lo = 0;
            if (!P.contractible && !Q.contractible && P.deg == Q.deg) {
                lo = P.deg;
                comps = {random_morphism(C, P.obj, Q.obj, rng)};
            } else if (!P.contractible && Q.contractible && Q.deg == P.deg - 1) {
                lo = P.deg;
                comps = {random_morphism(C, P.obj, Q.obj, rng)};
            } else if (P.contractible && !Q.contractible && Q.deg == P.deg) {
                lo = P.deg;
                comps = {random_morphism(C, P.obj, Q.obj, rng)};
            } else if (P.contractible && Q.contractible && Q.deg == P.deg) {
                auto u = random_morphism(C, P.obj, Q.obj, rng);
                lo = P.deg;
                comps = {u, u};
            } else if (P.contractible && Q.contractible && Q.deg == P.deg - 1) {
                lo = P.deg;
                comps = {random_morphism(C, P.obj, Q.obj, rng)};
            } else {
                continue;
            }
            CochainMap<Cat> piece_map(px, qy, lo, std::move(comps));
            f = add(f, compose(y.incl[s], compose(piece_map, x.proj[t])));
        }
    return f;
}

template <class Cat>
Homotopy<Cat> random_homotopy(const Cat& C, const CochainComplex<Cat>& x,
                              const CochainComplex<Cat>& y, Rng& rng)
{
    const int lo = std::min(x.lo(), y.lo());
    const int hi = std::max(x.hi(), y.hi()) + 1;
    Homotopy<Cat> s{lo, {}};
    for (int n = lo; n <= hi; ++n)
        s.components.push_back(random_morphism(C, x.object_at(n), y.object_at(n - 1), rng));
    return s;
}

}  // namespace homcat::testing
