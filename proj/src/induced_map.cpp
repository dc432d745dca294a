#include "subhom/induced_map.hpp"

#include "subhom/parallel.hpp"
#include "subhom/random.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <unordered_map>

namespace subhom {

namespace {

std::string ids_string(const SimplicialComplex& c, const Simplex& s)
{
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(c.vertex_ids()[s[i]]);
    }
    return out + "]";
}

double elapsed_ms(std::chrono::steady_clock::time_point since)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

// Solves U y = z for upper triangular U with nonzero diagonal.
SparseColumn solve_upper(const SparseMatrix& u, SparseColumn z, const PrimeField& f)
{
    SparseColumn y;
    SparseColumn scratch;
    while (!z.empty()) {
        const std::uint32_t m = z.back().index;
        const auto& col = u.column(m);
        if (col.empty() || col.back().index != m)
            throw std::logic_error("basis matrix is not upper triangular");
        const Scalar c = f.div(z.back().value, col.back().value);
        y.push_back({m, c});
        add_scaled_inplace(z, f.neg(c), col, f, scratch);
    }
    std::reverse(y.begin(), y.end());
    return y;
}

std::optional<std::size_t> generator_row(const std::vector<std::size_t>& gens, std::size_t index)
{
    const auto it = std::lower_bound(gens.begin(), gens.end(), index);
    if (it == gens.end() || *it != index)
        return std::nullopt;
    return static_cast<std::size_t>(it - gens.begin());
}

std::logic_error not_a_cycle(int k)
{
    return std::logic_error("image of a sub-sample " + std::to_string(k) +
                            "-cycle is not a cycle of the full complex");
}

}  // namespace

SparseMatrix inclusion_chain_map(const SimplicialComplex& sub, const SimplicialComplex& full, int k, Scalar p)
{
    if (k < 0 || k > sub.max_dim())
        throw std::invalid_argument("inclusion_chain_map: no " + std::to_string(k) + "-simplices in sub complex");
    const PrimeField f(p);
    std::vector<Vertex> vmap(sub.num_vertices());
    for (std::size_t v = 0; v < sub.num_vertices(); ++v) {
        const auto w = full.local_vertex(sub.vertex_ids()[v]);
        if (!w)
            throw PreconditionViolation("vertex " + std::to_string(sub.vertex_ids()[v]) +
                                        " of the sub-sample complex is not in the full complex");
        vmap[v] = *w;
    }

    SparseMatrix out(full.size(k), sub.size(k), p);
    Simplex mapped;
    for (std::size_t j = 0; j < sub.size(k); ++j) {
        const Simplex s = sub.simplex(k, j);
        mapped.resize(s.size());
        for (std::size_t i = 0; i < s.size(); ++i)
            mapped[i] = vmap[s[i]];
        bool odd = false;
        for (std::size_t i = 1; i < mapped.size(); ++i)
            for (std::size_t m = i; m > 0 && mapped[m - 1] > mapped[m]; --m) {
                std::swap(mapped[m - 1], mapped[m]);
                odd = !odd;
            }
        const auto idx = full.simplex_index(k, mapped);
        if (!idx)
            throw PreconditionViolation("simplex " + ids_string(sub, s) +
                                        " of the sub-sample complex is not in the full complex");
        out.column(j) = {{static_cast<std::uint32_t>(*idx), odd ? f.neg(1) : Scalar{1}}};
    }
    return out;
}

InducedMap induced_on_homology(const ReducedChainComplex& sub, const ReducedChainComplex& full,
                               const SparseMatrix& chain_map, int k, InducedMethod method)
{
    if (k < 0 || k > sub.max_dim() || k > full.max_dim())
        throw std::invalid_argument("induced_on_homology: dimension " + std::to_string(k) + " out of range");
    if (sub.modulus() != full.modulus() || chain_map.modulus() != full.modulus())
        throw std::invalid_argument("induced_on_homology: field mismatch");
    if (chain_map.rows() != full.size(k) || chain_map.cols() != sub.size(k))
        throw std::invalid_argument("induced_on_homology: chain map is " + std::to_string(chain_map.rows()) + "x" +
                                    std::to_string(chain_map.cols()) + ", expected " +
                                    std::to_string(full.size(k)) + "x" + std::to_string(sub.size(k)));

    const PrimeField f(full.modulus());
    const auto& sub_gens = sub.generators(k);
    const auto& full_gens = full.generators(k);
    const SparseMatrix& u_sub = sub.basis(k);
    const SparseMatrix& u_full = full.basis(k);
    const bool has_above = k + 1 <= full.max_dim();

    InducedMap out;
    out.k = k;
    out.matrix = FieldMatrix(full_gens.size(), sub_gens.size(), full.modulus());

    std::unordered_map<std::size_t, SparseColumn> boundary_cache;
    SparseColumn scratch;
    for (std::size_t c = 0; c < sub_gens.size(); ++c) {
        SparseColumn z = chain_map.multiply(u_sub.column(sub_gens[c]));

        if (method == InducedMethod::fast) {
            while (!z.empty()) {
                const std::uint32_t m = z.back().index;
                if (const auto pc = has_above ? full.pivot_column(k + 1, m) : std::nullopt) {
                    const auto& r = full.reduced(k + 1).column(*pc);
                    add_scaled_inplace(z, f.neg(f.div(z.back().value, r.back().value)), r, f, scratch);
                } else if (const auto row = generator_row(full_gens, m)) {
                    const auto& b = u_full.column(m);
                    const Scalar coeff = f.div(z.back().value, b.back().value);
                    out.matrix(*row, c) = coeff;
                    add_scaled_inplace(z, f.neg(coeff), b, f, scratch);
                } else {
                    throw not_a_cycle(k);
                }
            }
            continue;
        }

        SparseColumn y = solve_upper(u_full, std::move(z), f);
        // Walk the support from the top; eliminating at j only touches indices below j.
        std::size_t pos = y.size();
        while (pos > 0) {
            const std::uint32_t j = y[pos - 1].index;
            const auto pc = has_above ? full.pivot_column(k + 1, j) : std::nullopt;
            if (pc) {
                auto it = boundary_cache.find(*pc);
                if (it == boundary_cache.end())
                    it = boundary_cache.emplace(*pc, solve_upper(u_full, full.reduced(k + 1).column(*pc), f)).first;
                const auto& d = it->second;
                add_scaled_inplace(y, f.neg(f.div(y[pos - 1].value, d.back().value)), d, f, scratch);
            }
            pos = static_cast<std::size_t>(
                std::lower_bound(y.begin(), y.end(), j, [](const SparseEntry& e, std::uint32_t i) { return e.index < i; }) -
                y.begin());
        }
        for (const auto& e : y) {
            const auto row = generator_row(full_gens, e.index);
            if (!row)
                throw not_a_cycle(k);
            out.matrix(*row, c) = e.value;
        }
    }
    return out;
}

std::vector<InducedMap> EnsembleResult::maps() const
{
    std::vector<InducedMap> out;
    out.reserve(samples.size());
    for (const auto& s : samples)
        out.push_back(s.map);
    return out;
}

const SizeGroup& EnsembleResult::group(std::size_t size) const
{
    for (const auto& g : groups)
        if (g.size == size)
            return g;
    throw std::out_of_range("no size group " + std::to_string(size));
}

std::uint64_t sample_seed(std::uint64_t base, std::size_t size, std::size_t replicate)
{
    return derive_seed(derive_seed(base, size), replicate);
}

EnsembleResult induced_map_ensemble(const PointCloud& full, const SampleSchedule& schedule,
                                    const EnsembleOptions& options)
{
    schedule.validate(full.size());
    if (options.k < 0 || options.k > 1)
        throw std::invalid_argument("induced_map_ensemble: homology dimension must be 0 or 1");
    if (options.rule.kind == ThresholdRule::Kind::fixed && !(options.rule.radius > 0.0))
        throw std::invalid_argument("induced_map_ensemble: fixed threshold must be positive");
    if (options.rule.kind == ThresholdRule::Kind::hausdorff && !(options.rule.base >= 0.0))
        throw std::invalid_argument("induced_map_ensemble: threshold base must be nonnegative");

    const RipsOptions rips{options.use_grid};
    EnsembleResult result;

    std::optional<SimplicialComplex> full_complex;
    std::optional<ReducedChainComplex> full_rcc;
    double built_threshold = -1.0;

    std::size_t next_id = 0;
    for (std::size_t size : schedule.sizes) {
        const std::size_t first = result.samples.size();
        for (std::size_t r = 0; r < schedule.replicates; ++r) {
            SampleRecord rec;
            rec.sample_id = next_id++;
            rec.size = size;
            rec.replicate = r;
            rec.seed = sample_seed(schedule.seed, size, r);
            rec.indices = subsample_indices(full.size(), size, rec.seed);
            result.samples.push_back(std::move(rec));
        }
        std::span<SampleRecord> group(result.samples.begin() + static_cast<std::ptrdiff_t>(first),
                                      schedule.replicates);

        parallel_for(group.size(), options.threads, [&](std::size_t i) {
            if (options.rule.kind == ThresholdRule::Kind::fixed)
                group[i].threshold = options.rule.radius;
            else
                group[i].threshold = rips_threshold(full, select_points(full, group[i].indices), options.rule.base);
        });

        SizeGroup info;
        info.size = size;
        for (const auto& rec : group)
            info.threshold = std::max(info.threshold, rec.threshold);
        if (info.threshold != built_threshold) {
            const auto start = std::chrono::steady_clock::now();
            full_rcc.reset();
            full_complex = build_rips(full, info.threshold, 1, rips);
            full_rcc = reduce_flag(*full_complex, options.p);
            built_threshold = info.threshold;
            info.timing_ms = elapsed_ms(start);
        }
        info.betti_full = full_rcc->betti();
        result.groups.push_back(info);

        parallel_for(group.size(), options.threads, [&](std::size_t i) {
            SampleRecord& rec = group[i];
            const auto start = std::chrono::steady_clock::now();
            const PointCloud sub = select_points(full, rec.indices);
            const SimplicialComplex complex = build_rips(sub, rec.threshold, 1, rips);
            const ReducedChainComplex rcc = reduce_flag(complex, options.p);
            const SparseMatrix chain = inclusion_chain_map(complex, *full_complex, options.k, options.p);
            rec.map = induced_on_homology(rcc, *full_rcc, chain, options.k);
            rec.map.sample_id = rec.sample_id;
            rec.map.sample_size = rec.size;
            rec.betti_sub = rcc.betti();
            rec.timing_ms = elapsed_ms(start);
        });
    }
    return result;
}

}  // namespace subhom
