#include "homcat/vect.hpp"

#include <algorithm>
#include <sstream>

namespace homcat {

namespace vect_detail {

std::vector<std::size_t> rref(Matrix& m, std::int64_t p)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && floor_mod(m(sel, col), p) == 0)
            ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(row, sel);
        const std::int64_t inv = mod_inverse(m(row, col), p);
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(row, j) = floor_mod(m(row, j) * inv, p);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            const std::int64_t f = floor_mod(m(i, col), p);
            if (f == 0) continue;
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = floor_mod(m(i, j) - f * m(row, j), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

Matrix null_space(Matrix m, std::int64_t p)
{
    const std::size_t n = m.cols();
    auto pivots = rref(m, p);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis(fc, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            basis(pivots[r], k) = floor_mod(-m(r, fc), p);
    }
    return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b, std::int64_t p)
{
    Matrix aug = hstack(a, b);
    auto pivots = rref(aug, p);
    for (auto c : pivots)
        if (c >= a.cols()) return std::nullopt;  // pivot in the RHS block: inconsistent
    Matrix x(a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(pivots[r], j) = aug(r, a.cols() + j);
    return x;
}

}  // namespace vect_detail

VectCategory::VectCategory(std::int64_t p) : p_(p)
{
    if (!is_prime(p))
        throw BackendMismatch("VectCategory: characteristic " + std::to_string(p) + " is not prime");
    if (p > (1 << 20))
        throw BackendMismatch("VectCategory: characteristic exceeds the supported bound 2^20");
}

VectObject VectCategory::object(std::int64_t dim) const
{
    if (dim < 0)
        throw InvalidMorphism("VectCategory: negative dimension");
    return VectObject{p_, dim};
}

bool VectCategory::is_zero_object(const Object& a) const
{
    check_same_backend(a);
    return a.dim == 0;
}

bool VectCategory::obj_eq(const Object& a, const Object& b) const
{
    check_same_backend(a);
    check_same_backend(b);
    return a == b;
}

std::string VectCategory::object_name(const Object& a) const
{
    if (a.dim == 0) return "0";
    std::ostringstream os;
    os << "F_" << a.p;
    if (a.dim > 1) os << "^" << a.dim;
    return os.str();
}

VectMorphism VectCategory::morphism(const Object& src, const Object& dst, Matrix mat) const
{
    check_same_backend(src);
    check_same_backend(dst);
    if (mat.rows() != static_cast<std::size_t>(dst.dim) ||
        mat.cols() != static_cast<std::size_t>(src.dim))
        throw InvalidMorphism("VectCategory: matrix shape " + std::to_string(mat.rows()) + "x" +
                              std::to_string(mat.cols()) + " does not match " + object_name(src) +
                              " -> " + object_name(dst));
    return Morphism{src, dst, reduced_mod(std::move(mat), p_)};
}

VectMorphism VectCategory::identity(const Object& a) const
{
    return morphism(a, a, Matrix::identity(a.dim));
}

VectMorphism VectCategory::zero_morphism(const Object& src, const Object& dst) const
{
    return morphism(src, dst, Matrix(dst.dim, src.dim));
}

bool VectCategory::mor_eq(const Morphism& f, const Morphism& g) const
{
    return f.src == g.src && f.dst == g.dst && f.mat == g.mat;
}

VectMorphism VectCategory::compose(const Morphism& g, const Morphism& f) const
{
    if (!(f.dst == g.src))
        throw CompositionMismatch("compose: target " + object_name(f.dst) +
                                  " does not match source " + object_name(g.src));
    return morphism(f.src, g.dst, mat_mul(g.mat, f.mat));
}

VectMorphism VectCategory::add(const Morphism& f, const Morphism& g) const
{
    if (!(f.src == g.src && f.dst == g.dst))
        throw ShapeMismatch("add: morphisms are not parallel");
    return morphism(f.src, f.dst, mat_add(f.mat, g.mat));
}

VectMorphism VectCategory::neg(const Morphism& f) const
{
    return morphism(f.src, f.dst, mat_neg(f.mat));
}

Biproduct<VectCategory> VectCategory::biproduct(const Object& a, const Object& b) const
{
    check_same_backend(a);
    check_same_backend(b);
    const Object sum = object(a.dim + b.dim);
    Matrix p1(a.dim, sum.dim), p2(b.dim, sum.dim);
    Matrix i1(sum.dim, a.dim), i2(sum.dim, b.dim);
    for (std::int64_t j = 0; j < a.dim; ++j) {
        p1(j, j) = 1;
        i1(j, j) = 1;
    }
    for (std::int64_t j = 0; j < b.dim; ++j) {
        p2(j, a.dim + j) = 1;
        i2(a.dim + j, j) = 1;
    }
    return Biproduct<VectCategory>{sum, morphism(sum, a, std::move(p1)),
                                   morphism(sum, b, std::move(p2)),
                                   morphism(a, sum, std::move(i1)),
                                   morphism(b, sum, std::move(i2))};
}

VectMorphism VectCategory::product_universal(const Morphism& f, const Morphism& g) const
{
    if (!(f.src == g.src))
        throw ShapeMismatch("product_universal: sources differ");
    const Object sum = biproduct(f.dst, g.dst).obj;
    return morphism(f.src, sum, vstack(f.mat, g.mat));
}

VectMorphism VectCategory::coproduct_universal(const Morphism& f, const Morphism& g) const
{
    if (!(f.dst == g.dst))
        throw ShapeMismatch("coproduct_universal: targets differ");
    const Object sum = biproduct(f.src, g.src).obj;
    return morphism(sum, f.dst, hstack(f.mat, g.mat));
}

Kernel<VectCategory> VectCategory::kernel(const Morphism& f) const
{
    Matrix basis = vect_detail::null_space(f.mat, p_);
    const Object ker = object(static_cast<std::int64_t>(basis.cols()));
    return Kernel<VectCategory>{ker, morphism(ker, f.src, std::move(basis))};
}

Cokernel<VectCategory> VectCategory::cokernel(const Morphism& f) const
{
    // Rows of rref(f^T) are a reduced basis of the column space; the quotient
    // map reads off the non-pivot coordinates, corrected by the pivot ones.
    Matrix t = transpose(f.mat);
    auto pivots = vect_detail::rref(t, p_);
    const std::size_t dim_b = f.mat.rows();
    std::vector<bool> is_pivot(dim_b, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_coords;
    for (std::size_t c = 0; c < dim_b; ++c)
        if (!is_pivot[c]) free_coords.push_back(c);

    Matrix q(free_coords.size(), dim_b);
    for (std::size_t j = 0; j < free_coords.size(); ++j) {
        q(j, free_coords[j]) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            q(j, pivots[r]) = floor_mod(-t(r, free_coords[j]), p_);
    }
    const Object cok = object(static_cast<std::int64_t>(free_coords.size()));
    return Cokernel<VectCategory>{cok, morphism(f.dst, cok, std::move(q))};
}

std::optional<VectMorphism> VectCategory::try_lift_along_mono(const Morphism& m,
                                                              const Morphism& g) const
{
    if (!(m.dst == g.dst))
        throw ShapeMismatch("lift_along_mono: targets differ");
    auto x = vect_detail::solve(m.mat, g.mat, p_);
    if (!x) return std::nullopt;
    return morphism(g.src, m.src, std::move(*x));
}

std::optional<VectMorphism> VectCategory::try_colift_along_epi(const Morphism& e,
                                                               const Morphism& g) const
{
    if (!(e.src == g.src))
        throw ShapeMismatch("colift_along_epi: sources differ");
    // u o e = g  <=>  e^T u^T = g^T
    auto x = vect_detail::solve(transpose(e.mat), transpose(g.mat), p_);
    if (!x) return std::nullopt;
    return morphism(e.dst, g.dst, transpose(*x));
}

VectMorphism VectCategory::inj_extend(const Morphism& m, const Morphism& alpha) const
{
    if (!(m.src == alpha.src))
        throw ShapeMismatch("inj_extend: sources differ");
    // beta o m = alpha  <=>  m^T beta^T = alpha^T; canonical: free coordinates zero.
    auto x = vect_detail::solve(transpose(m.mat), transpose(alpha.mat), p_);
    if (!x)
        throw NotMonic("inj_extend: map does not extend (mono expected)");
    return morphism(m.dst, alpha.dst, transpose(*x));
}

void VectCategory::check_same_backend(const Object& a) const
{
    if (a.p != p_)
        throw BackendMismatch("object over F_" + std::to_string(a.p) +
                              " used in category over F_" + std::to_string(p_));
}

}  // namespace homcat
