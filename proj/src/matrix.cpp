#include "homcat/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace homcat {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

void Matrix::swap_rows(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(i, c), (*this)(j, c));
}

void Matrix::swap_cols(std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, i), (*this)(r, j));
}

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: inner dimensions differ");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const std::int64_t v = a(i, l);
            if (v == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += v * b(l, j);
        }
    return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("mat_add: shapes differ");
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) + b(i, j);
    return out;
}

Matrix mat_sub(const Matrix& a, const Matrix& b)
{
    return mat_add(a, mat_neg(b));
}

Matrix mat_neg(const Matrix& a)
{
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = -a(i, j);
    return out;
}

Matrix transpose(const Matrix& a)
{
    Matrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(j, i) = a(i, j);
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("hstack: row counts differ");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols())
        throw std::invalid_argument("vstack: column counts differ");
    Matrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, j) = b(i, j);
    return out;
}

bool is_zero(const Matrix& a)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != 0) return false;
    return true;
}

Matrix reduced_mod(Matrix a, std::int64_t m)
{
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            a(i, j) = floor_mod(a(i, j), m);
    return a;
}

std::string to_string(const Matrix& a)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) os << ",";
            os << a(i, j);
        }
        os << "]";
        if (i + 1 < a.rows()) os << ",";
    }
    os << "]";
    if (a.rows() == 0 || a.cols() == 0)
        os << "(" << a.rows() << "x" << a.cols() << ")";
    return os.str();
}

std::int64_t floor_mod(std::int64_t v, std::int64_t m)
{
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

std::int64_t egcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y)
{
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1 = 0, y1 = 0;
    std::int64_t g = egcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m)
{
    std::int64_t x = 0, y = 0;
    std::int64_t g = egcd(floor_mod(a, m), m, x, y);
    if (g != 1 && g != -1)
        throw std::invalid_argument("mod_inverse: not a unit");
    return floor_mod(x, m);
}

std::int64_t ipow(std::int64_t base, int exp)
{
    std::int64_t r = 1;
    for (int i = 0; i < exp; ++i)
        r *= base;
    return r;
}

int valuation(std::int64_t v, std::int64_t p, int cap)
{
    if (v == 0) return cap;
    int k = 0;
    while (k < cap && v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

bool is_prime(std::int64_t n)
{
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace homcat
