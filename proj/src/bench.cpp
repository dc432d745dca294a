#include "subhom/bench.hpp"

#include "subhom/parallel.hpp"
#include "subhom/persistence.hpp"
#include "subhom/rips.hpp"

#include <chrono>
#include <map>
#include <ostream>
#include <stdexcept>

namespace subhom {

std::string to_string(BenchMethod method)
{
    switch (method) {
    case BenchMethod::RC:
        return "RC";
    case BenchMethod::GMA:
        return "GMA";
    default:
        return "TB";
    }
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void accumulate(BettiVector& total, const BettiVector& b)
{
    if (total.betti.size() < b.betti.size())
        total.betti.resize(b.betti.size(), 0);
    for (std::size_t k = 0; k < b.betti.size(); ++k)
        total.betti[k] += b.betti[k];
}

BettiVector first_two(const BettiVector& b)
{
    return BettiVector{{b[0], b[1]}};
}

std::vector<std::vector<const SampleRecord*>> by_size(const EnsembleResult& ensemble)
{
    std::vector<std::vector<const SampleRecord*>> out;
    for (const auto& g : ensemble.groups) {
        out.emplace_back();
        for (const auto& s : ensemble.samples)
            if (s.size == g.size)
                out.back().push_back(&s);
    }
    return out;
}

// Most frequent vector; ties go to the one seen first.
BettiVector mode(const std::vector<BettiVector>& values)
{
    std::map<std::vector<std::size_t>, std::size_t> count;
    for (const auto& v : values)
        ++count[v.betti];
    BettiVector best;
    std::size_t best_count = 0;
    for (const auto& v : values)
        if (count[v.betti] > best_count) {
            best = v;
            best_count = count[v.betti];
        }
    return best;
}

}  // namespace

std::vector<BootstrapResult> bootstrap_from_ensemble(const EnsembleResult& ensemble)
{
    std::vector<BootstrapResult> out;
    const auto groups = by_size(ensemble);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        BootstrapResult r{ensemble.groups[g].size, BettiVector{{0, 0}}};
        for (const SampleRecord* s : groups[g])
            accumulate(r.homology, first_two(s->betti_sub));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<BootstrapResult> bootstrap_baseline(const PointCloud& full, const SampleSchedule& schedule,
                                                const EnsembleOptions& options)
{
    schedule.validate(full.size());
    const ThresholdRule& rule = options.rule;
    if (rule.kind == ThresholdRule::Kind::fixed && !(rule.radius > 0.0))
        throw std::invalid_argument("bootstrap_baseline: fixed threshold must be positive");
    std::vector<BootstrapResult> out;
    for (std::size_t size : schedule.sizes) {
        std::vector<BettiVector> betti(schedule.replicates);
        parallel_for(schedule.replicates, options.threads, [&](std::size_t r) {
            const PointCloud sub = subsample(full, size, sample_seed(schedule.seed, size, r));
            const double threshold = rule.kind == ThresholdRule::Kind::fixed ? rule.radius
                                                                             : rips_threshold(full, sub, rule.base);
            betti[r] = first_two(
                reduce_flag(build_rips(sub, threshold, 1, RipsOptions{options.use_grid}), options.p).betti());
        });
        BootstrapResult res{size, BettiVector{{0, 0}}};
        for (const auto& b : betti)
            accumulate(res.homology, b);
        out.push_back(std::move(res));
    }
    return out;
}

std::uint64_t sample_hash(const std::vector<const SampleRecord*>& samples)
{
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xFF;
            h *= 1099511628211ULL;
        }
    };
    for (const SampleRecord* s : samples) {
        mix(s->indices.size());
        for (std::size_t i : s->indices)
            mix(i);
    }
    return h;
}

std::vector<BenchmarkRecord> run_benchmark(const PointCloud& full, const SampleSchedule& schedule,
                                           const BenchmarkOptions& options)
{
    const EnsembleResult ensemble = induced_map_ensemble(full, schedule, options.ensemble);
    const auto groups = by_size(ensemble);
    std::vector<BenchmarkRecord> records;

    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto& samples = groups[g];
        const SizeGroup& info = ensemble.groups[g];
        const std::uint64_t hash = sample_hash(samples);
        std::vector<PointCloud> clouds;
        std::vector<InducedMap> maps;
        for (const SampleRecord* s : samples) {
            clouds.push_back(select_points(full, s->indices));
            maps.push_back(s->map);
        }

        BenchmarkRecord rc{BenchMethod::RC, info.size, schedule.seed, 0.0, {}, hash};
        std::vector<BettiVector> rc_betti;
        auto start = Clock::now();
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto pairs = persistence_baseline(clouds[i], samples[i]->threshold, options.persistence_steps,
                                                    options.ensemble.p);
            rc_betti.push_back(BettiVector{essential_counts(pairs)});
        }
        rc.wall_time_s = seconds_since(start);
        rc.homology = mode(rc_betti);
        records.push_back(rc);

        BenchmarkRecord gma{BenchMethod::GMA, info.size, schedule.seed, 0.0, {}, hash};
        start = Clock::now();
        const WeightedMapSet weighted = form_weights(maps, options.weights);
        const HomologyBasisEstimate est = greedy_basis(weighted);
        gma.wall_time_s = seconds_since(start);
        gma.homology = estimate_from_basis(est, info.betti_full[0]);
        records.push_back(gma);

        BenchmarkRecord tb{BenchMethod::TB, info.size, schedule.seed, 0.0, BettiVector{{0, 0}}, hash};
        start = Clock::now();
        for (std::size_t i = 0; i < samples.size(); ++i) {
            const auto skeleton =
                build_rips(clouds[i], samples[i]->threshold, 1, RipsOptions{options.ensemble.use_grid});
            accumulate(tb.homology, first_two(reduce_flag(skeleton, options.ensemble.p).betti()));
        }
        tb.wall_time_s = seconds_since(start);
        records.push_back(tb);
    }
    return records;
}

void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRecord>& records)
{
    out << "method,size,seed,wall_time_s,beta0,beta1\n";
    for (const auto& r : records)
        out << to_string(r.method) << ',' << r.size << ',' << r.seed << ',' << r.wall_time_s << ',' << r.homology[0]
            << ',' << r.homology[1] << '\n';
}

}  // namespace subhom
