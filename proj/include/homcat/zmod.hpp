#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "homcat/core.hpp"
#include "homcat/matrix.hpp"

namespace homcat {

// A finitely generated module over Z/p^k, in canonical form: the ascending
// multiset of exponents e with 1 <= e <= k, representing (+)_i Z/p^{e_i}.
struct ZModObject {
    std::int64_t p = 2;
    int k = 1;
    std::vector<int> invariants;  // sorted ascending

    bool operator==(const ZModObject&) const = default;
};

// A homomorphism between canonical modules. Entry (i, j) sends generator j of
// the source to entry * (generator i) of the target. Well-definedness requires
// p^{max(0, e_i^dst - e_j^src)} | entry; entries are reduced mod p^{e_i^dst}.
struct ZModMorphism {
    ZModObject src;
    ZModObject dst;
    Matrix mat;
};

// Finitely generated modules over the local ring Z/p^k. Kernels, cokernels,
// lifts and colifts are computed by diagonalizing presentation matrices with
// unimodular row/column operations, pivoting on entries of minimal p-adic
// valuation. Z/p^k is self-injective, so the backend has enough injectives:
// the injective objects are exactly the free modules (all exponents equal k).
class ZModCategory {
public:
    using Object = ZModObject;
    using Morphism = ZModMorphism;

    ZModCategory(std::int64_t p, int k);

    std::int64_t prime() const { return p_; }
    int exponent_bound() const { return k_; }
    std::int64_t ring_modulus() const { return pk_; }

    Object object(std::vector<int> invariants) const;
    Object zero_object() const { return object({}); }
    bool is_zero_object(const Object& a) const;
    bool obj_eq(const Object& a, const Object& b) const;
    std::string object_name(const Object& a) const;

    Morphism morphism(const Object& src, const Object& dst, Matrix mat) const;
    Morphism identity(const Object& a) const;
    Morphism zero_morphism(const Object& src, const Object& dst) const;
    bool mor_eq(const Morphism& f, const Morphism& g) const;

    Morphism compose(const Morphism& g, const Morphism& f) const;
    Morphism add(const Morphism& f, const Morphism& g) const;
    Morphism neg(const Morphism& f) const;

    Biproduct<ZModCategory> biproduct(const Object& a, const Object& b) const;
    Morphism product_universal(const Morphism& f, const Morphism& g) const;
    Morphism coproduct_universal(const Morphism& f, const Morphism& g) const;

    Kernel<ZModCategory> kernel(const Morphism& f) const;
    Cokernel<ZModCategory> cokernel(const Morphism& f) const;

    std::optional<Morphism> try_lift_along_mono(const Morphism& m, const Morphism& g) const;
    std::optional<Morphism> try_colift_along_epi(const Morphism& e, const Morphism& g) const;

    bool is_injective_object(const Object& a) const;
    Morphism embed_into_injective(const Object& a) const;
    Morphism inj_extend(const Morphism& m, const Morphism& alpha) const;

private:
    void check_same_backend(const Object& a) const;
    // Relation matrix diag(p^{e_i}) of a canonical module, as residues mod p^k.
    Matrix relation_matrix(const Object& a) const;
    Matrix reduce_rows(Matrix m, const Object& dst) const;
    void check_divisibility(const Matrix& m, const Object& src, const Object& dst,
                            const char* who) const;

    std::int64_t p_;
    int k_;
    std::int64_t pk_;
};

namespace zmod_detail {

// row_ops * a * col_ops == d (mod p^k), with d diagonal; d(l,l) = p^{val[l]}
// as a residue (so 0 when val[l] == k), val ascending.
struct SmithForm {
    Matrix d;
    Matrix row_ops, row_inv;
    Matrix col_ops, col_inv;
    std::vector<int> val;  // length min(rows, cols)
};

SmithForm smith_form(Matrix a, std::int64_t p, int k);

// Columns generating {z : a z = 0 mod p^k}.
Matrix null_space(const Matrix& a, std::int64_t p, int k);

// Canonical solution of a x = b over Z/p^k (free variables zero), or nullopt.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b, std::int64_t p, int k);

}  // namespace zmod_detail

}  // namespace homcat
