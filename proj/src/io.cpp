#include "subhom/io.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <stdexcept>
#include <tuple>

namespace subhom {

Json matrix_to_json(const FieldMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"p", m.modulus()}, {"entries", std::move(rows)}};
}

namespace {

FieldMatrix rows_to_matrix(const Json& rows, std::size_t nrows, std::size_t ncols, Scalar p)
{
    if (!rows.is_array() || rows.size() != nrows)
        throw std::invalid_argument("matrix entries must be an array of " + std::to_string(nrows) + " rows");
    FieldMatrix m(nrows, ncols, p);
    const PrimeField f(p);
    for (std::size_t i = 0; i < nrows; ++i) {
        const Json& row = rows[i];
        if (!row.is_array() || row.size() != ncols)
            throw std::invalid_argument("matrix row " + std::to_string(i) + " must have " + std::to_string(ncols) +
                                        " entries");
        for (std::size_t j = 0; j < ncols; ++j) {
            if (!row[j].is_number_integer())
                throw std::invalid_argument("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                            ") is not an integer");
            m(i, j) = f.reduce(row[j].get<std::int64_t>());
        }
    }
    return m;
}

}  // namespace

FieldMatrix matrix_from_json(const Json& j, Scalar default_p)
{
    if (j.is_array()) {
        const std::size_t nrows = j.size();
        const std::size_t ncols = nrows > 0 && j[0].is_array() ? j[0].size() : 0;
        return rows_to_matrix(j, nrows, ncols, default_p);
    }
    if (!j.is_object())
        throw std::invalid_argument("matrix must be a JSON object or an array of rows");
    // Basis files store column vectors under "columns".
    if (j.contains("columns") && !j.contains("entries")) {
        if (!j.contains("rows") || !j["rows"].is_number_unsigned())
            throw std::invalid_argument("basis is missing \"rows\"");
        const Scalar p = j.contains("p") && j["p"].is_number_unsigned() ? j["p"].get<Scalar>() : default_p;
        if (!is_prime(p))
            throw std::invalid_argument("matrix modulus " + std::to_string(p) + " is not prime");
        return rows_to_matrix(j["columns"], j["columns"].size(), j["rows"].get<std::size_t>(), p).transpose();
    }
    for (const char* key : {"rows", "cols", "entries"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("matrix is missing \"") + key + "\"");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw std::invalid_argument("matrix rows and cols must be nonnegative integers");
    Scalar p = default_p;
    if (j.contains("p")) {
        if (!j["p"].is_number_unsigned())
            throw std::invalid_argument("matrix p must be a positive integer");
        p = j["p"].get<Scalar>();
    }
    if (!is_prime(p))
        throw std::invalid_argument("matrix modulus " + std::to_string(p) + " is not prime");
    return rows_to_matrix(j["entries"], j["rows"].get<std::size_t>(), j["cols"].get<std::size_t>(), p);
}

Json betti_to_json(const BettiVector& b)
{
    return Json(b.betti);
}

Json ensemble_to_json(const EnsembleResult& ensemble, bool omit_timings)
{
    Json out = Json::array();
    for (const auto& s : ensemble.samples) {
        Json e{{"sample_id", s.sample_id},
               {"size", s.size},
               {"seed", s.seed},
               {"k", s.map.k},
               {"matrix", matrix_to_json(s.map.matrix)},
               {"betti_sub", betti_to_json(s.betti_sub)}};
        if (!omit_timings)
            e["timing_ms"] = s.timing_ms;
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<InducedMap> maps_from_json(const Json& j, Scalar default_p)
{
    if (!j.is_array())
        throw std::invalid_argument("ensemble must be a JSON array");
    std::vector<InducedMap> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const Json& e = j[i];
        if (!e.is_object() || !e.contains("matrix"))
            throw std::invalid_argument("ensemble entry " + std::to_string(i) + " has no matrix");
        InducedMap im;
        im.matrix = matrix_from_json(e["matrix"], default_p);
        im.sample_id = e.value("sample_id", i);
        im.sample_size = e.value("size", std::size_t{0});
        im.k = e.value("k", 1);
        out.push_back(std::move(im));
    }
    return out;
}

Json basis_to_json(const HomologyBasisEstimate& est, const BettiVector& estimate)
{
    Json columns = Json::array();
    for (std::size_t j = 0; j < est.basis.cols(); ++j)
        columns.push_back(est.basis.column(j));
    Json provenance = Json::array();
    for (const auto& pr : est.provenance)
        provenance.push_back(Json{{"sample_id", pr.sample_id}, {"column", pr.column}});
    return Json{{"p", est.basis.modulus()},
                {"rows", est.basis.rows()},
                {"columns", std::move(columns)},
                {"provenance", std::move(provenance)},
                {"n_zeros", est.n_zeros},
                {"beta_estimate", betti_to_json(estimate)}};
}

Json report_to_json(const ConstructionReport& report)
{
    Json out{{"kind", to_string(report.kind)}, {"found", report.found}};
    if (report.witness) {
        Json w{{"subset", report.witness->first}};
        if (report.kind == ConstructionKind::figure8) {
            w["second_subset"] = report.witness->second;
            w["common"] = report.witness->common ? Json(*report.witness->common) : Json();
        }
        out["witness"] = std::move(w);
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

Json complex_to_json(const SimplicialComplex& complex)
{
    const auto ids = complex.vertex_ids();
    Json simplices = Json::array();
    for (int k = 0; k <= complex.max_dim(); ++k) {
        Json level = Json::array();
        for (std::size_t i = 0; i < complex.size(k); ++i) {
            Json s = Json::array();
            for (Vertex v : complex.simplex(k, i))
                s.push_back(ids[v]);
            level.push_back(std::move(s));
        }
        simplices.push_back(std::move(level));
    }
    return Json{{"dim", complex.max_dim()}, {"simplices", std::move(simplices)}};
}

Json persistence_to_json(const std::vector<PersistencePair>& pairs)
{
    Json out = Json::array();
    for (const auto& pr : pairs)
        out.push_back(Json{{"birth", pr.birth},
                           {"death", std::isinf(pr.death) ? Json("inf") : Json(pr.death)},
                           {"dim", pr.dim}});
    return out;
}

Json rank_statistics_to_json(const std::vector<RankStatistics>& stats)
{
    Json out = Json::array();
    for (const auto& s : stats) {
        Json hist = Json::object();
        for (const auto& [r, c] : s.histogram)
            hist[std::to_string(r)] = c;
        out.push_back(Json{{"size", s.size}, {"mean_rank", s.mean_rank}, {"histogram", std::move(hist)}});
    }
    return out;
}

Json benchmark_summary_json(const std::vector<BenchmarkRecord>& records)
{
    struct Acc {
        std::size_t n = 0;
        double time = 0.0;
        double beta0 = 0.0;
        double beta1 = 0.0;
        Json hashes = Json::array();
    };
    std::map<std::tuple<std::size_t, std::string>, Acc> acc;
    for (const auto& r : records) {
        auto& a = acc[{r.size, to_string(r.method)}];
        ++a.n;
        a.time += r.wall_time_s;
        a.beta0 += static_cast<double>(r.homology[0]);
        a.beta1 += static_cast<double>(r.homology[1]);
        a.hashes.push_back(Json{{"seed", r.seed}, {"sample_hash", r.sample_hash}});
    }
    Json out = Json::array();
    for (auto& [key, a] : acc) {
        const double n = static_cast<double>(a.n);
        out.push_back(Json{{"method", std::get<1>(key)},
                           {"size", std::get<0>(key)},
                           {"runs", a.n},
                           {"mean_wall_time_s", a.time / n},
                           {"mean_beta0", a.beta0 / n},
                           {"mean_beta1", a.beta1 / n},
                           {"samples", std::move(a.hashes)}});
    }
    return out;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace subhom
