#pragma once

// Test-only brute-force machinery: finite abelian p-groups handled as explicit
// element sets, with invariants recovered by counting p^j-torsion. Everything
// here is independent of the library's Smith-form code paths.

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "homcat/zmod.hpp"

namespace homcat::oracle {

using Elem = std::vector<std::int64_t>;

inline std::vector<Elem> elements(const ZModObject& a)
{
    std::vector<Elem> out{Elem(a.invariants.size(), 0)};
    for (std::size_t j = 0; j < a.invariants.size(); ++j) {
        const std::int64_t order = ipow(a.p, a.invariants[j]);
        std::vector<Elem> next;
        next.reserve(out.size() * order);
        for (const auto& e : out)
            for (std::int64_t v = 0; v < order; ++v) {
                Elem e2 = e;
                e2[j] = v;
                next.push_back(std::move(e2));
            }
        out = std::move(next);
    }
    return out;
}

inline Elem apply(const ZModMorphism& f, const Elem& x)
{
    Elem y(f.dst.invariants.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            acc += f.mat(i, j) * x[j];
        y[i] = floor_mod(acc, ipow(f.dst.p, f.dst.invariants[i]));
    }
    return y;
}

inline Elem scale(const ZModObject& a, std::int64_t c, const Elem& x)
{
    Elem y(x.size(), 0);
    for (std::size_t j = 0; j < x.size(); ++j)
        y[j] = floor_mod(c * x[j], ipow(a.p, a.invariants[j]));
    return y;
}

inline bool is_zero_elem(const Elem& x)
{
    for (auto v : x)
        if (v != 0) return false;
    return true;
}

inline int log_base(std::size_t count, std::int64_t p)
{
    int e = 0;
    std::size_t c = count;
    while (c > 1) {
        if (c % p != 0) throw std::logic_error("oracle: count is not a power of p");
        c /= p;
        ++e;
    }
    return e;
}

// Invariant exponents of a subgroup S of A, from the torsion filtration:
// #{x in S : p^j x = 0} = p^{sum_i min(e_i, j)}.
inline std::vector<int> subgroup_invariants(const ZModObject& a, const std::set<Elem>& sub)
{
    std::vector<int> logs{0};  // logs[j] = log_p #(p^j-torsion of S)
    for (int j = 1; j <= a.k; ++j) {
        std::size_t count = 0;
        for (const auto& x : sub)
            if (is_zero_elem(scale(a, ipow(a.p, j), x))) ++count;
        logs.push_back(log_base(count, a.p));
    }
    std::vector<int> at_least;  // at_least[j-1] = #{i : e_i >= j}
    for (int j = 1; j <= a.k; ++j)
        at_least.push_back(logs[j] - logs[j - 1]);
    at_least.push_back(0);
    std::vector<int> invariants;
    for (int j = 1; j <= a.k; ++j)
        for (int c = 0; c < at_least[j - 1] - at_least[j]; ++c)
            invariants.push_back(j);
    return invariants;
}

// Invariant exponents of B / S: #{cosets killed by p^j} = #{x : p^j x in S} / |S|.
inline std::vector<int> quotient_invariants(const ZModObject& b, const std::set<Elem>& sub)
{
    const auto all = elements(b);
    std::vector<int> logs{0};
    for (int j = 1; j <= b.k; ++j) {
        std::size_t count = 0;
        for (const auto& x : all)
            if (sub.count(scale(b, ipow(b.p, j), x))) ++count;
        logs.push_back(log_base(count / sub.size(), b.p));
    }
    std::vector<int> at_least;
    for (int j = 1; j <= b.k; ++j)
        at_least.push_back(logs[j] - logs[j - 1]);
    at_least.push_back(0);
    std::vector<int> invariants;
    for (int j = 1; j <= b.k; ++j)
        for (int c = 0; c < at_least[j - 1] - at_least[j]; ++c)
            invariants.push_back(j);
    return invariants;
}

inline std::set<Elem> kernel_set(const ZModMorphism& f)
{
    std::set<Elem> out;
    for (const auto& x : elements(f.src))
        if (is_zero_elem(apply(f, x))) out.insert(x);
    return out;
}

inline std::set<Elem> image_set(const ZModMorphism& f)
{
    std::set<Elem> out;
    for (const auto& x : elements(f.src))
        out.insert(apply(f, x));
    return out;
}

// Every homomorphism A -> B, enumerated entry by entry through the
// divisibility constraint.
inline std::vector<ZModMorphism> all_morphisms(const ZModCategory& C, const ZModObject& a,
                                               const ZModObject& b)
{
    const std::size_t rows = b.invariants.size();
    const std::size_t cols = a.invariants.size();
    std::vector<ZModMorphism> out;
    std::vector<std::int64_t> choice_count;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            choice_count.push_back(ipow(C.prime(), std::min(a.invariants[j], b.invariants[i])));

    std::vector<std::int64_t> idx(rows * cols, 0);
    while (true) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                const std::int64_t step =
                    ipow(C.prime(), std::max(0, b.invariants[i] - a.invariants[j]));
                const std::int64_t mod = ipow(C.prime(), b.invariants[i]);
                m(i, j) = floor_mod(idx[i * cols + j] * step, mod);
            }
        out.push_back(C.morphism(a, b, std::move(m)));

        std::size_t pos = 0;
        while (pos < idx.size()) {
            if (++idx[pos] < choice_count[pos]) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == idx.size()) break;
    }
    return out;
}

}  // namespace homcat::oracle
