#include "subhom/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace subhom {

void add_scaled_inplace(SparseColumn& y, Scalar a, const SparseColumn& x, const PrimeField& f,
                        SparseColumn& scratch)
{
    if (a == 0 || x.empty())
        return;
    scratch.clear();
    scratch.reserve(y.size() + x.size());
    auto yi = y.begin();
    auto xi = x.begin();
    while (yi != y.end() || xi != x.end()) {
        if (xi == x.end() || (yi != y.end() && yi->index < xi->index)) {
            scratch.push_back(*yi++);
        } else if (yi == y.end() || xi->index < yi->index) {
            scratch.push_back({xi->index, f.mul(a, xi->value)});
            ++xi;
        } else {
            const Scalar v = f.add(yi->value, f.mul(a, xi->value));
            if (v != 0)
                scratch.push_back({yi->index, v});
            ++yi;
            ++xi;
        }
    }
    y.swap(scratch);
}

SparseColumn add_scaled(const SparseColumn& y, Scalar a, const SparseColumn& x, const PrimeField& f)
{
    SparseColumn out = y;
    SparseColumn scratch;
    add_scaled_inplace(out, a, x, f, scratch);
    return out;
}

Scalar coefficient(const SparseColumn& c, std::uint32_t index)
{
    const auto it = std::lower_bound(c.begin(), c.end(), index,
                                     [](const SparseEntry& e, std::uint32_t i) { return e.index < i; });
    return (it != c.end() && it->index == index) ? it->value : 0;
}

SparseMatrix SparseMatrix::identity(std::size_t n, Scalar p)
{
    SparseMatrix m(n, n, p);
    for (std::size_t j = 0; j < n; ++j)
        m.columns_[j].push_back({static_cast<std::uint32_t>(j), 1});
    return m;
}

SparseMatrix SparseMatrix::from_dense(const FieldMatrix& d)
{
    SparseMatrix m(d.rows(), d.cols(), d.modulus());
    for (std::size_t j = 0; j < d.cols(); ++j)
        for (std::size_t i = 0; i < d.rows(); ++i)
            if (d(i, j) != 0)
                m.columns_[j].push_back({static_cast<std::uint32_t>(i), d(i, j)});
    return m;
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (const auto& c : columns_)
        n += c.size();
    return n;
}

bool SparseMatrix::is_zero() const
{
    return std::all_of(columns_.begin(), columns_.end(), [](const SparseColumn& c) { return c.empty(); });
}

FieldMatrix SparseMatrix::to_dense() const
{
    FieldMatrix d(rows_, columns_.size(), p_);
    for (std::size_t j = 0; j < columns_.size(); ++j)
        for (const auto& e : columns_[j])
            d(e.index, j) = e.value;
    return d;
}

SparseColumn SparseMatrix::multiply(const SparseColumn& x) const
{
    const PrimeField f(p_);
    SparseColumn acc;
    SparseColumn scratch;
    for (const auto& e : x) {
        if (e.index >= columns_.size())
            throw std::invalid_argument("sparse matrix-vector shape mismatch");
        add_scaled_inplace(acc, e.value, columns_[e.index], f, scratch);
    }
    return acc;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols() != b.rows() || a.p_ != b.p_)
        throw std::invalid_argument("sparse product shape or modulus mismatch");
    SparseMatrix c(a.rows(), b.cols(), a.p_);
    for (std::size_t j = 0; j < b.cols(); ++j)
        c.columns_[j] = a.multiply(b.columns_[j]);
    return c;
}

}  // namespace subhom
