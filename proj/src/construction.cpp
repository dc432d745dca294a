#include "subhom/construction.hpp"

#include <algorithm>
#include <functional>

namespace subhom {

std::string to_string(ConstructionKind kind)
{
    return kind == ConstructionKind::figure8 ? "figure8" : "annulus";
}

namespace {

bool all_nonzero(const std::vector<Scalar>& x)
{
    return std::all_of(x.begin(), x.end(), [](Scalar v) { return v != 0; });
}

// Coefficients of column j over the columns `set`, if j is in their span.
std::optional<std::vector<Scalar>> represent(const FieldMatrix& h, const std::vector<std::size_t>& set,
                                             std::size_t j)
{
    const auto b = h.column(j);
    if (set.empty()) {
        if (h.column_is_zero(j))
            return std::vector<Scalar>{};
        return std::nullopt;
    }
    return solve_in_span(h.select_columns(set), b);
}

}  // namespace

std::vector<std::vector<std::size_t>> column_circuits(const FieldMatrix& h, std::size_t max_subset)
{
    std::vector<std::vector<std::size_t>> out;
    if (max_subset == 0)
        return out;
    std::vector<std::size_t> set;
    // `set` is independent; every circuit is found once, from its largest column.
    std::function<void(std::size_t)> extend = [&](std::size_t start) {
        for (std::size_t j = start; j < h.cols(); ++j) {
            if (const auto x = represent(h, set, j)) {
                if (all_nonzero(*x)) {
                    auto c = set;
                    c.push_back(j);
                    out.push_back(std::move(c));
                }
            } else if (set.size() + 1 < max_subset) {
                set.push_back(j);
                extend(j + 1);
                set.pop_back();
            }
        }
    };
    extend(0);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.back() != b.back())
            return a.back() < b.back();
        return a < b;
    });
    return out;
}

std::optional<std::vector<Scalar>> kernel_vector(const FieldMatrix& h, const std::vector<std::size_t>& subset)
{
    const PrimeField f(h.modulus());
    std::vector<std::size_t> prefix;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (const auto x = represent(h, prefix, subset[i])) {
            std::vector<Scalar> k(subset.size(), 0);
            std::copy(x->begin(), x->end(), k.begin());
            k[i] = f.neg(1);
            return k;
        }
        prefix.push_back(subset[i]);
    }
    return std::nullopt;
}

ConstructionReport check_annulus(const FieldMatrix& h, std::size_t max_subset)
{
    ConstructionReport report;
    report.kind = ConstructionKind::annulus;
    if (rank(h) == h.cols())
        return report;
    report.found = true;

    auto circuits = column_circuits(h, max_subset);
    if (!circuits.empty()) {
        const auto smallest = std::min_element(circuits.begin(), circuits.end(),
                                               [](const auto& a, const auto& b) { return a.size() < b.size(); });
        report.witness = ConstructionWitness{*smallest, {}, std::nullopt};
        return report;
    }
    std::vector<std::size_t> independent;
    for (std::size_t j = 0; j < h.cols(); ++j) {
        if (const auto x = represent(h, independent, j)) {
            std::vector<std::size_t> circuit;
            for (std::size_t i = 0; i < x->size(); ++i)
                if ((*x)[i] != 0)
                    circuit.push_back(independent[i]);
            circuit.push_back(j);
            report.witness = ConstructionWitness{std::move(circuit), {}, std::nullopt};
            return report;
        }
        independent.push_back(j);
    }
    return report;
}

ConstructionReport check_figure8(const FieldMatrix& h, std::size_t max_subset, Figure8Mode mode)
{
    ConstructionReport report;
    report.kind = ConstructionKind::figure8;
    const auto circuits = column_circuits(h, max_subset);

    for (std::size_t a = 0; a < circuits.size(); ++a)
        for (std::size_t b = a + 1; b < circuits.size(); ++b) {
            const auto& x = circuits[a];
            const auto& y = circuits[b];
            for (std::size_t c : x)
                if (std::binary_search(y.begin(), y.end(), c)) {
                    report.found = true;
                    report.witness = ConstructionWitness{x, y, c};
                    return report;
                }
        }

    if (mode == Figure8Mode::subsets) {
        for (const auto& c : circuits) {
            if (c.size() >= max_subset || c.size() >= h.cols())
                continue;
            std::size_t extra = 0;
            while (std::binary_search(c.begin(), c.end(), extra))
                ++extra;
            auto y = c;
            y.insert(std::lower_bound(y.begin(), y.end(), extra), extra);
            report.found = true;
            report.witness = ConstructionWitness{c, std::move(y), c.front()};
            return report;
        }
    }
    return report;
}

}  // namespace subhom
