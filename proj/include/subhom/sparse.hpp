#ifndef SUBHOM_SPARSE_HPP
#define SUBHOM_SPARSE_HPP

#include "subhom/field.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace subhom {

struct SparseEntry {
    std::uint32_t index;
    Scalar value;

    friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Sparse vector over F_p: entries sorted by index, no stored zeros.
using SparseColumn = std::vector<SparseEntry>;

inline std::optional<std::uint32_t> low(const SparseColumn& c)
{
    if (c.empty())
        return std::nullopt;
    return c.back().index;
}

/// Returns y + a * x.
SparseColumn add_scaled(const SparseColumn& y, Scalar a, const SparseColumn& x, const PrimeField& f);

/// In-place y += a * x, using `scratch` as the merge buffer.
void add_scaled_inplace(SparseColumn& y, Scalar a, const SparseColumn& x, const PrimeField& f,
                        SparseColumn& scratch);

Scalar coefficient(const SparseColumn& c, std::uint32_t index);

/// Column-sparse matrix over F_p.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols, Scalar p = kDefaultModulus)
        : rows_(rows), p_(p), columns_(cols)
    {
    }

    static SparseMatrix identity(std::size_t n, Scalar p = kDefaultModulus);
    static SparseMatrix from_dense(const FieldMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    Scalar modulus() const { return p_; }

    const SparseColumn& column(std::size_t j) const { return columns_[j]; }
    SparseColumn& column(std::size_t j) { return columns_[j]; }
    const std::vector<SparseColumn>& columns() const { return columns_; }

    std::size_t nonzeros() const;
    bool is_zero() const;

    FieldMatrix to_dense() const;
    SparseColumn multiply(const SparseColumn& x) const;
    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::size_t rows_ = 0;
    Scalar p_ = kDefaultModulus;
    std::vector<SparseColumn> columns_;
};

}  // namespace subhom

#endif  // SUBHOM_SPARSE_HPP
