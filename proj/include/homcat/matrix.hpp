#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace homcat {

// Dense row-major integer matrix. Shapes with zero rows or zero columns are
// first-class values; they represent the linear maps into and out of the zero
// space. Entries are plain int64; modular reduction is the caller's business.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& other) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::int64_t> data_;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_neg(const Matrix& a);
Matrix transpose(const Matrix& a);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
bool is_zero(const Matrix& a);

// Entrywise least non-negative residues mod m.
Matrix reduced_mod(Matrix a, std::int64_t m);

std::string to_string(const Matrix& a);

// Least non-negative residue of v mod m (m > 0).
std::int64_t floor_mod(std::int64_t v, std::int64_t m);

// Extended gcd: returns g = gcd(a,b) and sets x, y with a*x + b*y = g.
std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y);

// Inverse of a unit mod m; throws std::invalid_argument if gcd(a, m) != 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

std::int64_t ipow(std::int64_t base, int exp);

// p-adic valuation of v, capping at `cap` (the valuation assigned to 0).
int valuation(std::int64_t v, std::int64_t p, int cap);

bool is_prime(std::int64_t n);

}  // namespace homcat
