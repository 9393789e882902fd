#include "homcat/zmod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

namespace homcat {

namespace zmod_detail {

SmithForm smith_form(Matrix a, std::int64_t p, int k)
{
    const std::int64_t pk = ipow(p, k);
    a = reduced_mod(std::move(a), pk);
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t steps = std::min(m, n);

    SmithForm s;
    s.row_ops = Matrix::identity(m);
    s.row_inv = Matrix::identity(m);
    s.col_ops = Matrix::identity(n);
    s.col_inv = Matrix::identity(n);
    s.val.assign(steps, k);

    for (std::size_t t = 0; t < steps; ++t) {
        // Pivot on the first entry of minimal valuation in the trailing block.
        int best = k;
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const int v = valuation(a(i, j), p, k);
                if (v < best) {
                    best = v;
                    bi = i;
                    bj = j;
                }
            }
        if (best == k) break;  // trailing block is zero; remaining diagonal entries are p^k = 0

        a.swap_rows(t, bi);
        s.row_ops.swap_rows(t, bi);
        s.row_inv.swap_cols(t, bi);
        a.swap_cols(t, bj);
        s.col_ops.swap_cols(t, bj);
        s.col_inv.swap_rows(t, bj);

        // Normalize the pivot to exactly p^best.
        const std::int64_t unit = a(t, t) / ipow(p, best);
        const std::int64_t uinv = mod_inverse(unit, pk);
        for (std::size_t j = 0; j < n; ++j)
            a(t, j) = floor_mod(a(t, j) * uinv, pk);
        for (std::size_t j = 0; j < m; ++j) {
            s.row_ops(t, j) = floor_mod(s.row_ops(t, j) * uinv, pk);
            s.row_inv(j, t) = floor_mod(s.row_inv(j, t) * unit, pk);
        }

        const std::int64_t piv = ipow(p, best);
        // Every remaining entry has valuation >= best, so the quotients are exact.
        for (std::size_t i = t + 1; i < m; ++i) {
            if (a(i, t) == 0) continue;
            const std::int64_t f = a(i, t) / piv;
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = floor_mod(a(i, j) - f * a(t, j), pk);
            for (std::size_t j = 0; j < m; ++j) {
                s.row_ops(i, j) = floor_mod(s.row_ops(i, j) - f * s.row_ops(t, j), pk);
                s.row_inv(j, t) = floor_mod(s.row_inv(j, t) + f * s.row_inv(j, i), pk);
            }
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (a(t, j) == 0) continue;
            const std::int64_t f = a(t, j) / piv;
            for (std::size_t i = 0; i < m; ++i)
                a(i, j) = floor_mod(a(i, j) - f * a(i, t), pk);
            for (std::size_t i = 0; i < n; ++i) {
                s.col_ops(i, j) = floor_mod(s.col_ops(i, j) - f * s.col_ops(i, t), pk);
                s.col_inv(t, i) = floor_mod(s.col_inv(t, i) + f * s.col_inv(j, i), pk);
            }
        }
        s.val[t] = best;
    }
    s.d = std::move(a);
    return s;
}

Matrix null_space(const Matrix& a, std::int64_t p, int k)
{
    const std::int64_t pk = ipow(p, k);
    SmithForm s = smith_form(a, p, k);
    const std::size_t n = a.cols();
    const std::size_t diag = s.val.size();

    // a z = 0  <=>  w = col_inv z has p^{val[l]} w_l = 0, w free past the diagonal.
    std::vector<std::size_t> keep;
    std::vector<std::int64_t> scale;
    for (std::size_t l = 0; l < n; ++l) {
        if (l < diag) {
            if (s.val[l] == 0) continue;  // unit pivot: no freedom
            keep.push_back(l);
            scale.push_back(ipow(p, k - s.val[l]));
        } else {
            keep.push_back(l);
            scale.push_back(1);
        }
    }
    Matrix gens(n, keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
        for (std::size_t i = 0; i < n; ++i)
            gens(i, c) = floor_mod(s.col_ops(i, keep[c]) * scale[c], pk);
    return gens;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b, std::int64_t p, int k)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("zmod solve: row counts differ");
    const std::int64_t pk = ipow(p, k);
    SmithForm s = smith_form(a, p, k);
    const std::size_t diag = s.val.size();
    const Matrix c = reduced_mod(mat_mul(s.row_ops, b), pk);

    Matrix w(a.cols(), b.cols());
    for (std::size_t col = 0; col < b.cols(); ++col) {
        for (std::size_t l = 0; l < a.rows(); ++l) {
            const std::int64_t r = c(l, col);
            if (l >= diag || s.val[l] == k) {
                if (r != 0) return std::nullopt;
                continue;
            }
            if (valuation(r, p, k) < s.val[l]) return std::nullopt;
            w(l, col) = r / ipow(p, s.val[l]);
        }
    }
    return reduced_mod(mat_mul(s.col_ops, w), pk);
}

namespace {

// Canonical form of the subquotient (columns of w) / (relations of the ambient
// module): invariant exponents plus the matrix of generators in ambient
// coordinates, one column per cyclic factor, exponents ascending.
struct Subquotient {
    std::vector<int> invariants;
    Matrix generators;
};

Subquotient canonical_subquotient(const Matrix& w, const Matrix& ambient_relations,
                                  std::int64_t p, int k)
{
    const std::int64_t pk = ipow(p, k);
    const std::size_t n = w.rows();
    const std::size_t t = w.cols();
    if (t == 0) return {{}, Matrix(n, 0)};

    // Relations among the columns of w, modulo the ambient relations.
    Matrix combined = hstack(w, ambient_relations);
    Matrix ns = null_space(combined, p, k);
    Matrix rel(t, ns.cols());
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < ns.cols(); ++j)
            rel(i, j) = ns(i, j);

    SmithForm s = smith_form(rel, p, k);
    std::vector<int> orders(t, k);  // unrelated generators are full Z/p^k factors
    for (std::size_t l = 0; l < s.val.size(); ++l)
        orders[l] = s.val[l];

    // Factor l is Z/p^{orders[l]}; order 0 factors are trivial.
    std::vector<std::size_t> kept;
    for (std::size_t l = 0; l < t; ++l)
        if (orders[l] > 0) kept.push_back(l);
    std::stable_sort(kept.begin(), kept.end(),
                     [&](std::size_t x, std::size_t y) { return orders[x] < orders[y]; });

    const Matrix gens_all = reduced_mod(mat_mul(w, s.row_inv), pk);
    Subquotient out;
    out.generators = Matrix(n, kept.size());
    for (std::size_t c = 0; c < kept.size(); ++c) {
        out.invariants.push_back(orders[kept[c]]);
        for (std::size_t i = 0; i < n; ++i)
            out.generators(i, c) = gens_all(i, kept[c]);
    }
    return out;
}

}  // namespace

}  // namespace zmod_detail

ZModCategory::ZModCategory(std::int64_t p, int k) : p_(p), k_(k)
{
    if (!is_prime(p))
        throw BackendMismatch("ZModCategory: " + std::to_string(p) + " is not prime");
    if (k < 1)
        throw BackendMismatch("ZModCategory: exponent bound must be >= 1");
    pk_ = 1;
    for (int i = 0; i < k; ++i) {
        pk_ *= p;
        // keeps every product and row-sum comfortably inside int64
        if (pk_ > (1 << 20))
            throw BackendMismatch("ZModCategory: p^k exceeds the supported modulus bound 2^20");
    }
}

ZModObject ZModCategory::object(std::vector<int> invariants) const
{
    for (int e : invariants)
        if (e < 1 || e > k_)
            throw InvalidMorphism("ZModCategory: invariant exponent " + std::to_string(e) +
                                  " outside [1, " + std::to_string(k_) + "]");
    std::sort(invariants.begin(), invariants.end());
    return ZModObject{p_, k_, std::move(invariants)};
}

bool ZModCategory::is_zero_object(const Object& a) const
{
    check_same_backend(a);
    return a.invariants.empty();
}

bool ZModCategory::obj_eq(const Object& a, const Object& b) const
{
    check_same_backend(a);
    check_same_backend(b);
    return a == b;
}

std::string ZModCategory::object_name(const Object& a) const
{
    if (a.invariants.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < a.invariants.size(); ++i) {
        if (i) os << " (+) ";
        os << "Z/" << a.p;
        if (a.invariants[i] > 1) os << "^" << a.invariants[i];
    }
    return os.str();
}

ZModMorphism ZModCategory::morphism(const Object& src, const Object& dst, Matrix mat) const
{
    check_same_backend(src);
    check_same_backend(dst);
    if (mat.rows() != dst.invariants.size() || mat.cols() != src.invariants.size())
        throw InvalidMorphism("ZModCategory: matrix shape " + std::to_string(mat.rows()) + "x" +
                              std::to_string(mat.cols()) + " does not match " + object_name(src) +
                              " -> " + object_name(dst));
    Matrix reduced = reduce_rows(std::move(mat), dst);
    check_divisibility(reduced, src, dst, "morphism");
    return Morphism{src, dst, std::move(reduced)};
}

ZModMorphism ZModCategory::identity(const Object& a) const
{
    return morphism(a, a, Matrix::identity(a.invariants.size()));
}

ZModMorphism ZModCategory::zero_morphism(const Object& src, const Object& dst) const
{
    return morphism(src, dst, Matrix(dst.invariants.size(), src.invariants.size()));
}

bool ZModCategory::mor_eq(const Morphism& f, const Morphism& g) const
{
    return f.src == g.src && f.dst == g.dst && f.mat == g.mat;
}

ZModMorphism ZModCategory::compose(const Morphism& g, const Morphism& f) const
{
    if (!(f.dst == g.src))
        throw CompositionMismatch("compose: target " + object_name(f.dst) +
                                  " does not match source " + object_name(g.src));
    return morphism(f.src, g.dst, mat_mul(g.mat, f.mat));
}

ZModMorphism ZModCategory::add(const Morphism& f, const Morphism& g) const
{
    if (!(f.src == g.src && f.dst == g.dst))
        throw ShapeMismatch("add: morphisms are not parallel");
    return morphism(f.src, f.dst, mat_add(f.mat, g.mat));
}

ZModMorphism ZModCategory::neg(const Morphism& f) const
{
    return morphism(f.src, f.dst, mat_neg(f.mat));
}

Biproduct<ZModCategory> ZModCategory::biproduct(const Object& a, const Object& b) const
{
    check_same_backend(a);
    check_same_backend(b);
    const std::size_t na = a.invariants.size();
    const std::size_t nb = b.invariants.size();

    // Stable merge of the two sorted exponent lists; a's summands come first
    // among equals, so the choice is canonical and associative on objects.
    std::vector<int> merged(na + nb);
    std::vector<std::size_t> slot_a(na), slot_b(nb);
    std::size_t ia = 0, ib = 0;
    for (std::size_t s = 0; s < na + nb; ++s) {
        const bool take_a =
            ia < na && (ib >= nb || a.invariants[ia] <= b.invariants[ib]);
        if (take_a) {
            merged[s] = a.invariants[ia];
            slot_a[ia++] = s;
        } else {
            merged[s] = b.invariants[ib];
            slot_b[ib++] = s;
        }
    }
    Object sum{p_, k_, std::move(merged)};

    Matrix p1(na, na + nb), p2(nb, na + nb), i1(na + nb, na), i2(na + nb, nb);
    for (std::size_t j = 0; j < na; ++j) {
        p1(j, slot_a[j]) = 1;
        i1(slot_a[j], j) = 1;
    }
    for (std::size_t j = 0; j < nb; ++j) {
        p2(j, slot_b[j]) = 1;
        i2(slot_b[j], j) = 1;
    }
    return Biproduct<ZModCategory>{sum, morphism(sum, a, std::move(p1)),
                                   morphism(sum, b, std::move(p2)),
                                   morphism(a, sum, std::move(i1)),
                                   morphism(b, sum, std::move(i2))};
}

ZModMorphism ZModCategory::product_universal(const Morphism& f, const Morphism& g) const
{
    if (!(f.src == g.src))
        throw ShapeMismatch("product_universal: sources differ");
    auto bp = biproduct(f.dst, g.dst);
    return add(compose(bp.i1, f), compose(bp.i2, g));
}

ZModMorphism ZModCategory::coproduct_universal(const Morphism& f, const Morphism& g) const
{
    if (!(f.dst == g.dst))
        throw ShapeMismatch("coproduct_universal: targets differ");
    auto bp = biproduct(f.src, g.src);
    return add(compose(f, bp.p1), compose(g, bp.p2));
}

Kernel<ZModCategory> ZModCategory::kernel(const Morphism& f) const
{
    const std::size_t n = f.src.invariants.size();
    // x lies in the kernel iff F x falls in the column span of the target
    // relations; project the null space of [F | P_dst] onto the x-part.
    Matrix g = hstack(f.mat, relation_matrix(f.dst));
    Matrix ns = zmod_detail::null_space(g, p_, k_);
    Matrix w(n, ns.cols());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < ns.cols(); ++j)
            w(i, j) = ns(i, j);

    auto sq = zmod_detail::canonical_subquotient(w, relation_matrix(f.src), p_, k_);
    Object ker = object(sq.invariants);
    Morphism incl = morphism(ker, f.src, std::move(sq.generators));
    return Kernel<ZModCategory>{std::move(ker), std::move(incl)};
}

Cokernel<ZModCategory> ZModCategory::cokernel(const Morphism& f) const
{
    const std::size_t m = f.dst.invariants.size();
    Matrix g = hstack(f.mat, relation_matrix(f.dst));
    auto s = zmod_detail::smith_form(g, p_, k_);

    // dst / (im f + relations) decomposes along the rows of row_ops; factor l
    // is Z/p^{val[l]}.
    std::vector<std::size_t> kept;
    for (std::size_t l = 0; l < m; ++l)
        if (s.val[l] > 0) kept.push_back(l);
    std::stable_sort(kept.begin(), kept.end(),
                     [&](std::size_t x, std::size_t y) { return s.val[x] < s.val[y]; });

    std::vector<int> invariants;
    Matrix proj(kept.size(), m);
    for (std::size_t r = 0; r < kept.size(); ++r) {
        invariants.push_back(s.val[kept[r]]);
        for (std::size_t j = 0; j < m; ++j)
            proj(r, j) = s.row_ops(kept[r], j);
    }
    Object cok = object(std::move(invariants));
    Morphism pr = morphism(f.dst, cok, std::move(proj));
    return Cokernel<ZModCategory>{std::move(cok), std::move(pr)};
}

std::optional<ZModMorphism> ZModCategory::try_lift_along_mono(const Morphism& m,
                                                              const Morphism& g) const
{
    if (!(m.dst == g.dst))
        throw ShapeMismatch("lift_along_mono: targets differ");
    const std::size_t nx = m.src.invariants.size();
    Matrix sys = hstack(m.mat, relation_matrix(m.dst));
    auto z = zmod_detail::solve(sys, g.mat, p_, k_);
    if (!z) return std::nullopt;
    Matrix u(nx, g.mat.cols());
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < g.mat.cols(); ++j)
            u(i, j) = (*z)(i, j);
    // With m monic the solution is automatically a well-defined map; a
    // divisibility failure means m was not monic after all.
    Matrix reduced = reduce_rows(std::move(u), m.src);
    for (std::size_t i = 0; i < reduced.rows(); ++i)
        for (std::size_t j = 0; j < reduced.cols(); ++j) {
            const int need = std::max(0, m.src.invariants[i] - g.src.invariants[j]);
            if (valuation(reduced(i, j), p_, k_) < need) return std::nullopt;
        }
    return Morphism{g.src, m.src, std::move(reduced)};
}

std::optional<ZModMorphism> ZModCategory::try_colift_along_epi(const Morphism& e,
                                                               const Morphism& g) const
{
    if (!(e.src == g.src))
        throw ShapeMismatch("colift_along_epi: sources differ");
    const std::size_t na = e.src.invariants.size();
    const std::size_t nx = e.dst.invariants.size();

    // Pick a preimage under e of each generator of the target, then push it
    // through g; the colift is unique, so the preimage choice cancels out.
    Matrix sys = hstack(e.mat, relation_matrix(e.dst));
    auto z = zmod_detail::solve(sys, Matrix::identity(nx), p_, k_);
    if (!z) return std::nullopt;
    Matrix pre(na, nx);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nx; ++j)
            pre(i, j) = (*z)(i, j);

    Matrix u = reduce_rows(mat_mul(g.mat, pre), g.dst);
    for (std::size_t i = 0; i < u.rows(); ++i)
        for (std::size_t j = 0; j < u.cols(); ++j) {
            const int need = std::max(0, g.dst.invariants[i] - e.dst.invariants[j]);
            if (valuation(u(i, j), p_, k_) < need) return std::nullopt;
        }
    Morphism out{e.dst, g.dst, std::move(u)};
    // The construction only guarantees u o e = g when ker e <= ker g.
    if (!mor_eq(compose(out, e), g)) return std::nullopt;
    return out;
}

bool ZModCategory::is_injective_object(const Object& a) const
{
    check_same_backend(a);
    for (int e : a.invariants)
        if (e != k_) return false;
    return true;
}

ZModMorphism ZModCategory::embed_into_injective(const Object& a) const
{
    check_same_backend(a);
    const std::size_t n = a.invariants.size();
    Object hull = object(std::vector<int>(n, k_));
    Matrix emb(n, n);
    for (std::size_t j = 0; j < n; ++j)
        emb(j, j) = ipow(p_, k_ - a.invariants[j]);
    return morphism(a, hull, std::move(emb));
}

ZModMorphism ZModCategory::inj_extend(const Morphism& m, const Morphism& alpha) const
{
    if (!(m.src == alpha.src))
        throw ShapeMismatch("inj_extend: sources differ");
    if (!is_injective_object(alpha.dst))
        throw NotInjectiveObject("inj_extend: target " + object_name(alpha.dst) +
                                 " is not injective");
    const std::size_t nb = m.dst.invariants.size();
    const std::size_t ni = alpha.dst.invariants.size();

    // Row r of beta must satisfy row . [M | P_dst] = (alpha_r | 0) mod p^k;
    // all target exponents equal k, so a single transpose solve suffices.
    Matrix sys = transpose(hstack(m.mat, relation_matrix(m.dst)));
    Matrix rhs = vstack(transpose(alpha.mat), Matrix(nb, ni));
    auto x = zmod_detail::solve(sys, rhs, p_, k_);
    if (!x)
        throw NotMonic("inj_extend: no extension exists (mono expected)");
    return morphism(m.dst, alpha.dst, transpose(*x));
}

void ZModCategory::check_same_backend(const Object& a) const
{
    if (a.p != p_ || a.k != k_)
        throw BackendMismatch("object over Z/" + std::to_string(a.p) + "^" +
                              std::to_string(a.k) + " used in category over Z/" +
                              std::to_string(p_) + "^" + std::to_string(k_));
}

Matrix ZModCategory::relation_matrix(const Object& a) const
{
    const std::size_t n = a.invariants.size();
    Matrix rel(n, n);
    for (std::size_t i = 0; i < n; ++i)
        rel(i, i) = floor_mod(ipow(p_, a.invariants[i]), pk_);
    return rel;
}

Matrix ZModCategory::reduce_rows(Matrix m, const Object& dst) const
{
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const std::int64_t mod = ipow(p_, dst.invariants[i]);
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = floor_mod(m(i, j), mod);
    }
    return m;
}

void ZModCategory::check_divisibility(const Matrix& m, const Object& src, const Object& dst,
                                      const char* who) const
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const int need = std::max(0, dst.invariants[i] - src.invariants[j]);
            if (valuation(m(i, j), p_, k_) < need)
                throw InvalidMorphism(std::string(who) + ": entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") = " + std::to_string(m(i, j)) +
                                      " violates the divisibility constraint for " +
                                      object_name(src) + " -> " + object_name(dst));
        }
}

}  // namespace homcat
