#ifndef SUBHOM_FIELD_HPP
#define SUBHOM_FIELD_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace subhom {

using Scalar = std::uint32_t;

inline constexpr Scalar kDefaultModulus = 3;

bool is_prime(std::uint64_t n);

/// Arithmetic in the prime field F_p. Values are kept in [0, p).
class PrimeField {
public:
    explicit PrimeField(Scalar p);

    Scalar modulus() const { return p_; }

    Scalar reduce(std::int64_t v) const
    {
        const auto m = static_cast<std::int64_t>(p_);
        const std::int64_t r = v % m;
        return static_cast<Scalar>(r < 0 ? r + m : r);
    }
    Scalar add(Scalar a, Scalar b) const
    {
        const std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Scalar>(s >= p_ ? s - p_ : s);
    }
    Scalar sub(Scalar a, Scalar b) const { return a >= b ? a - b : a + (p_ - b); }
    Scalar neg(Scalar a) const { return a == 0 ? 0 : p_ - a; }
    Scalar mul(Scalar a, Scalar b) const
    {
        return static_cast<Scalar>((std::uint64_t{a} * b) % p_);
    }
    /// Multiplicative inverse; `a` must be nonzero.
    Scalar inv(Scalar a) const;
    Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

private:
    Scalar p_;
};

/// Dense row-major matrix over F_p. Zero rows or zero columns are legal.
class FieldMatrix {
public:
    FieldMatrix() = default;
    FieldMatrix(std::size_t rows, std::size_t cols, Scalar p = kDefaultModulus);

    /// Builds from nested rows of integers, reducing each entry mod p.
    /// An empty list gives a 0x0 matrix.
    static FieldMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                 Scalar p = kDefaultModulus);
    static FieldMatrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                                 Scalar p = kDefaultModulus);
    /// Builds a matrix whose columns are the given vectors (all of length `rows`).
    static FieldMatrix from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& cols,
                                    Scalar p = kDefaultModulus);
    static FieldMatrix identity(std::size_t n, Scalar p = kDefaultModulus);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar modulus() const { return p_; }
    PrimeField field() const { return PrimeField(p_); }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    std::span<const Scalar> entries() const { return entries_; }
    std::span<const Scalar> row(std::size_t i) const
    {
        return std::span<const Scalar>(entries_).subspan(i * cols_, cols_);
    }

    std::vector<Scalar> column(std::size_t j) const;
    bool column_is_zero(std::size_t j) const;
    bool is_zero() const;

    FieldMatrix transpose() const;
    FieldMatrix select_columns(std::span<const std::size_t> indices) const;
    /// Appends a column; `values.size()` must equal rows().
    void append_column(std::span<const Scalar> values);
    void append_zero_rows(std::size_t count);
    void swap_rows(std::size_t a, std::size_t b);
    void swap_columns(std::size_t a, std::size_t b);

    std::vector<Scalar> multiply(std::span<const Scalar> x) const;

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
    friend bool operator==(const FieldMatrix& a, const FieldMatrix& b) = default;

    /// Horizontal concatenation. Matrices with zero columns are skipped; the
    /// remaining ones must agree on row count.
    static FieldMatrix hconcat(const std::vector<FieldMatrix>& parts, Scalar p = kDefaultModulus);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Scalar p_ = kDefaultModulus;
    std::vector<Scalar> entries_;
};

/// P_row * A * P_col = L * U, where (P_row * A * P_col)(i, j) = A(row_perm[i], col_perm[j]).
/// L is rows x rows unit lower triangular, U is rows x cols upper triangular with its
/// first `rank` diagonal entries nonzero and rows rank.. identically zero.
struct LUFactorization {
    FieldMatrix lower;
    FieldMatrix upper;
    std::vector<std::size_t> row_perm;
    std::vector<std::size_t> col_perm;
    std::size_t rank = 0;
};

/// LU with full (row and column) pivoting. The pivot at each step is the first
/// nonzero entry of the active submatrix in row-major order.
LUFactorization lu_full_pivot(const FieldMatrix& a);

/// Explicit permutation matrices for a factorization: P_row (rows x rows) and
/// P_col (cols x cols) with P_row * A * P_col = L * U.
FieldMatrix row_permutation_matrix(const LUFactorization& lu);
FieldMatrix col_permutation_matrix(const LUFactorization& lu);

/// Finds x with basis * x = b. Returns nullopt when b is outside the column span
/// or when b's length does not match the basis row count.
std::optional<std::vector<Scalar>> solve_in_span(const FieldMatrix& basis, std::span<const Scalar> b);

std::size_t rank(const FieldMatrix& a);

/// Entrywise nonzero -> 1.
FieldMatrix binarize(const FieldMatrix& a);

}  // namespace subhom

#endif  // SUBHOM_FIELD_HPP
