#include "subhom/field.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace subhom {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

PrimeField::PrimeField(Scalar p) : p_(p)
{
    if (!is_prime(p))
        throw std::invalid_argument("field modulus must be prime, got " + std::to_string(p));
}

Scalar PrimeField::inv(Scalar a) const
{
    if (a % p_ == 0)
        throw std::domain_error("inverse of zero in F_p");
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a % p_;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return reduce(t);
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, Scalar p)
    : rows_(rows), cols_(cols), p_(p), entries_(rows * cols, 0)
{
    if (!is_prime(p))
        throw std::invalid_argument("field modulus must be prime, got " + std::to_string(p));
}

FieldMatrix FieldMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, Scalar p)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    FieldMatrix m(r, c, p);
    const PrimeField f(p);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("ragged rows in matrix literal");
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = f.reduce(rows[i][j]);
    }
    return m;
}

FieldMatrix FieldMatrix::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                                   Scalar p)
{
    std::vector<std::vector<std::int64_t>> v;
    v.reserve(rows.size());
    for (const auto& row : rows)
        v.emplace_back(row);
    return from_rows(v, p);
}

FieldMatrix FieldMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& cols,
                                      Scalar p)
{
    FieldMatrix m(rows, cols.size(), p);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows)
            throw std::invalid_argument("column length does not match row count");
        for (std::size_t i = 0; i < rows; ++i)
            m(i, j) = cols[j][i] % p;
    }
    return m;
}

FieldMatrix FieldMatrix::identity(std::size_t n, Scalar p)
{
    FieldMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

std::vector<Scalar> FieldMatrix::column(std::size_t j) const
{
    std::vector<Scalar> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out[i] = (*this)(i, j);
    return out;
}

bool FieldMatrix::column_is_zero(std::size_t j) const
{
    for (std::size_t i = 0; i < rows_; ++i)
        if ((*this)(i, j) != 0)
            return false;
    return true;
}

bool FieldMatrix::is_zero() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](Scalar v) { return v == 0; });
}

FieldMatrix FieldMatrix::transpose() const
{
    FieldMatrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

FieldMatrix FieldMatrix::select_columns(std::span<const std::size_t> indices) const
{
    FieldMatrix out(rows_, indices.size(), p_);
    for (std::size_t jj = 0; jj < indices.size(); ++jj) {
        if (indices[jj] >= cols_)
            throw std::out_of_range("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i)
            out(i, jj) = (*this)(i, indices[jj]);
    }
    return out;
}

void FieldMatrix::append_column(std::span<const Scalar> values)
{
    if (values.size() != rows_)
        throw std::invalid_argument("appended column has wrong length");
    std::vector<Scalar> next(rows_ * (cols_ + 1));
    for (std::size_t i = 0; i < rows_; ++i) {
        std::copy_n(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_), cols_,
                    next.begin() + static_cast<std::ptrdiff_t>(i * (cols_ + 1)));
        next[i * (cols_ + 1) + cols_] = values[i] % p_;
    }
    entries_ = std::move(next);
    ++cols_;
}

void FieldMatrix::append_zero_rows(std::size_t count)
{
    rows_ += count;
    entries_.resize(rows_ * cols_, 0);
}

void FieldMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    std::swap_ranges(entries_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                     entries_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

void FieldMatrix::swap_columns(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

std::vector<Scalar> FieldMatrix::multiply(std::span<const Scalar> x) const
{
    if (x.size() != cols_)
        throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<Scalar> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            acc = (acc + std::uint64_t{(*this)(i, j)} * x[j]) % p_;
        y[i] = static_cast<Scalar>(acc);
    }
    return y;
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b)
{
    if (a.cols_ != b.rows_ || a.p_ != b.p_)
        throw std::invalid_argument("matrix product shape or modulus mismatch");
    FieldMatrix c(a.rows_, b.cols_, a.p_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const std::uint64_t aik = a(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c(i, j) = static_cast<Scalar>((c(i, j) + aik * b(k, j)) % a.p_);
        }
    return c;
}

FieldMatrix FieldMatrix::hconcat(const std::vector<FieldMatrix>& parts, Scalar p)
{
    std::size_t rows = 0;
    std::size_t cols = 0;
    bool have_rows = false;
    for (const auto& m : parts) {
        if (m.cols() == 0)
            continue;
        if (m.modulus() != p)
            throw std::invalid_argument("hconcat: modulus mismatch");
        if (have_rows && m.rows() != rows)
            throw std::invalid_argument("hconcat: row count mismatch");
        rows = m.rows();
        have_rows = true;
        cols += m.cols();
    }
    FieldMatrix out(rows, cols, p);
    std::size_t offset = 0;
    for (const auto& m : parts) {
        if (m.cols() == 0)
            continue;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                out(i, offset + j) = m(i, j);
        offset += m.cols();
    }
    return out;
}

LUFactorization lu_full_pivot(const FieldMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const PrimeField f(a.modulus());

    LUFactorization lu{FieldMatrix::identity(m, a.modulus()), a, {}, {}, 0};
    lu.row_perm.resize(m);
    lu.col_perm.resize(n);
    std::iota(lu.row_perm.begin(), lu.row_perm.end(), std::size_t{0});
    std::iota(lu.col_perm.begin(), lu.col_perm.end(), std::size_t{0});
    FieldMatrix& L = lu.lower;
    FieldMatrix& U = lu.upper;

    std::size_t k = 0;
    for (; k < std::min(m, n); ++k) {
        std::size_t pi = m, pj = n;
        for (std::size_t i = k; i < m && pi == m; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (U(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == m)
            break;

        if (pi != k) {
            U.swap_rows(k, pi);
            std::swap(lu.row_perm[k], lu.row_perm[pi]);
            for (std::size_t j = 0; j < k; ++j)
                std::swap(L(k, j), L(pi, j));
        }
        if (pj != k) {
            U.swap_columns(k, pj);
            std::swap(lu.col_perm[k], lu.col_perm[pj]);
        }

        const Scalar pivot_inv = f.inv(U(k, k));
        for (std::size_t i = k + 1; i < m; ++i) {
            if (U(i, k) == 0)
                continue;
            const Scalar factor = f.mul(U(i, k), pivot_inv);
            L(i, k) = factor;
            for (std::size_t j = k; j < n; ++j)
                U(i, j) = f.sub(U(i, j), f.mul(factor, U(k, j)));
        }
    }
    lu.rank = k;
    return lu;
}

FieldMatrix row_permutation_matrix(const LUFactorization& lu)
{
    const std::size_t m = lu.row_perm.size();
    FieldMatrix P(m, m, lu.lower.modulus());
    for (std::size_t i = 0; i < m; ++i)
        P(i, lu.row_perm[i]) = 1;
    return P;
}

FieldMatrix col_permutation_matrix(const LUFactorization& lu)
{
    const std::size_t n = lu.col_perm.size();
    FieldMatrix Q(n, n, lu.upper.modulus());
    for (std::size_t j = 0; j < n; ++j)
        Q(lu.col_perm[j], j) = 1;
    return Q;
}

std::optional<std::vector<Scalar>> solve_in_span(const FieldMatrix& basis, std::span<const Scalar> b)
{
    const std::size_t m = basis.rows();
    const std::size_t n = basis.cols();
    if (b.size() != m)
        return std::nullopt;

    const PrimeField f(basis.modulus());
    const LUFactorization lu = lu_full_pivot(basis);
    const FieldMatrix& L = lu.lower;
    const FieldMatrix& U = lu.upper;

    // Forward substitution: L w = P_row b.
    std::vector<Scalar> w(m);
    for (std::size_t i = 0; i < m; ++i) {
        Scalar acc = b[lu.row_perm[i]] % basis.modulus();
        for (std::size_t j = 0; j < i; ++j)
            acc = f.sub(acc, f.mul(L(i, j), w[j]));
        w[i] = acc;
    }
    // Rows of U past the rank are zero, so w must vanish there.
    for (std::size_t i = lu.rank; i < m; ++i)
        if (w[i] != 0)
            return std::nullopt;

    // Back substitution on the leading rank x rank block; free variables are zero.
    std::vector<Scalar> z(n, 0);
    for (std::size_t ii = lu.rank; ii-- > 0;) {
        Scalar acc = w[ii];
        for (std::size_t j = ii + 1; j < lu.rank; ++j)
            acc = f.sub(acc, f.mul(U(ii, j), z[j]));
        z[ii] = f.div(acc, U(ii, ii));
    }

    std::vector<Scalar> x(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        x[lu.col_perm[j]] = z[j];
    return x;
}

std::size_t rank(const FieldMatrix& a)
{
    return lu_full_pivot(a).rank;
}

FieldMatrix binarize(const FieldMatrix& a)
{
    FieldMatrix out(a.rows(), a.cols(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j) != 0 ? 1 : 0;
    return out;
}

}  // namespace subhom
