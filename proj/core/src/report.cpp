#include "spanlab/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace spanlab {

using nlohmann::json;

void EvalReport::finalize() {
    max_stretch = 0.0;
    std::vector<double> stretches;
    for (const EvalRow& r : rows) {
        stretches.push_back(r.stretch);
        if (r.stretch > max_stretch) {
            max_stretch = r.stretch;
            worst = r;
        }
    }
    if (!stretches.empty()) {
        std::sort(stretches.begin(), stretches.end());
        size_t n = stretches.size();
        median_stretch =
            n % 2 == 1 ? stretches[n / 2] : 0.5 * (stretches[n / 2 - 1] + stretches[n / 2]);
    }
    if (declared_stretch > 0.0)
        guarantee_ok = max_stretch <= declared_stretch * (1.0 + 1e-9);
}

json EvalReport::to_json(bool include_rows) const {
    json j;
    j["schema"] = "spanlab-report-v1";
    j["oracle_kind"] = oracle_kind;
    j["knobs"] = knobs;
    j["seed"] = seed;
    j["declared_stretch"] = declared_stretch;
    j["queries"] = rows.size();
    j["max_stretch"] = max_stretch;
    j["median_stretch"] = median_stretch;
    j["spanner_edge_count"] = spanner_edge_count;
    j["storage_words"] = storage_words;
    j["guarantee_ok"] = guarantee_ok;
    if (!rows.empty()) {
        j["worst"] = {{"u", worst.u},
                      {"v", worst.v},
                      {"true_distance", worst.true_distance},
                      {"reported_weight", worst.reported_weight},
                      {"stretch", worst.stretch},
                      {"hops", worst.hops}};
    }
    j["runtime_seconds"] = runtime_seconds;
    if (include_rows) {
        json rws = json::array();
        for (const EvalRow& r : rows)
            rws.push_back({{"u", r.u},
                           {"v", r.v},
                           {"true_distance", r.true_distance},
                           {"reported_weight", r.reported_weight},
                           {"stretch", r.stretch},
                           {"hops", r.hops}});
        j["rows"] = rws;
    }
    return j;
}

std::string EvalReport::to_csv() const {
    std::ostringstream out;
    out << "u,v,true_distance,reported_weight,stretch,hops\n";
    for (const EvalRow& r : rows)
        out << r.u << "," << r.v << "," << r.true_distance << "," << r.reported_weight << ","
            << r.stretch << "," << r.hops << "\n";
    return out.str();
}

namespace {

json ledger_tz(const TZOracle& o) {
    size_t pivots = 0;
    for (const auto& lv : o.table.pivot) pivots += 2 * lv.size();
    json j;
    j["kind"] = "tz";
    j["pivot_table_words"] = pivots;
    j["bunch_words"] = 2 * o.table.bunch_entries();
    j["cluster_tree_words"] = 3 * o.table.cluster_entries();
    j["spanner_edges"] = o.spanner_edges.size();
    j["total_words"] = o.size_words();
    return j;
}

json ledger_pairwise(const PairwiseOracle& o) {
    json j;
    j["kind"] = "pairwise";
    j["mode"] = o.mode == PairwiseOracle::Mode::Exact
                    ? "exact"
                    : (o.mode == PairwiseOracle::Mode::Compose ? "compose" : "v2");
    j["pair_path_words"] = o.path_words();
    j["preserver_link_words"] = o.preserver_link_words();
    j["spanner_edges"] = o.spanner_edges.size();
    j["base_spanner_edges"] = o.base_spanner_edge_count();
    if (o.base) j["base"] = ledger_pairwise(*o.base);
    j["total_words"] = o.size_words();
    return j;
}

json ledger_hopset(const HopsetParts& p) {
    json j;
    j["kind"] = "hopset";
    j["h1"] = p.h1_count;
    j["h2"] = p.h2_count;
    j["h3"] = p.h3_count;
    j["preserver_links"] = p.h1_preserver_links() + p.h2_preserver_links();
    j["total_words"] = 3 * p.edges.size() + p.h1_preserver_links() + p.h2_preserver_links();
    return j;
}

json ledger_subset(const SubsetOracle& o) {
    json j;
    j["kind"] = "subset";
    j["subset_size"] = o.subset.size();
    j["emulator_edges"] = o.emulator.emulator_edges_original.size();
    j["emulator_oracle_words"] = o.emulator.oracle.size_words();
    j["pairwise"] = ledger_pairwise(o.pairwise);
    j["total_words"] = o.size_words();
    return j;
}

json ledger_sourcewise(const SourcewiseOracle& o) {
    json j;
    j["kind"] = "sourcewise";
    j["forest_words"] = 2 * o.nearest.size();
    j["subset"] = ledger_subset(o.subset);
    j["total_words"] = o.size_words();
    return j;
}

json ledger_prioritized(const PrioritizedOracle& o) {
    json j;
    j["kind"] = "prioritized";
    j["f_inverse_table_words"] = o.f_inverse.size();
    j["ranking_words"] = o.ranking.size();
    json prefixes = json::array();
    for (size_t i = 0; i < o.prefixes.size(); ++i) {
        json p = ledger_sourcewise(o.prefixes[i]);
        p["prefix_size"] = o.f_values[i];
        p["emulator_k"] = o.prefix_k[i];
        prefixes.push_back(p);
    }
    j["prefixes"] = prefixes;
    j["fallback"] = ledger_tz(o.fallback);
    j["total_words"] = o.size_words();
    return j;
}

json ledger_unweighted(const UnweightedPrdo& o) {
    json j;
    j["kind"] = "cluster-unweighted";
    j["cluster_count"] = o.clustering.count();
    j["forest_words"] = 3 * o.clustering.cluster_of.size();
    j["witness_words"] = o.cg.witness.size();
    j["tz"] = ledger_tz(o.tz);
    j["total_words"] = o.size_words();
    return j;
}

json ledger_weighted(const WeightedPrdo& o) {
    json j;
    j["kind"] = "cluster-weighted";
    j["levels"] = o.l;
    j["tree_counts"] = o.hierarchy.tree_counts;
    j["forest_words"] = 3 * o.hierarchy.tree_of.back().size();
    j["witness_words"] = o.top.witness.size();
    j["tz"] = ledger_tz(o.tz);
    j["total_words"] = o.size_words();
    return j;
}

}  // namespace

json size_ledger(const AnyOracle& o) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, TZOracle>) return ledger_tz(x);
            if constexpr (std::is_same_v<T, HopsetParts>) return ledger_hopset(x);
            if constexpr (std::is_same_v<T, PairwiseOracle>) return ledger_pairwise(x);
            if constexpr (std::is_same_v<T, SubsetOracle>) return ledger_subset(x);
            if constexpr (std::is_same_v<T, SourcewiseOracle>) return ledger_sourcewise(x);
            if constexpr (std::is_same_v<T, PrioritizedOracle>) return ledger_prioritized(x);
            if constexpr (std::is_same_v<T, UnweightedPrdo>) return ledger_unweighted(x);
            if constexpr (std::is_same_v<T, WeightedPrdo>) return ledger_weighted(x);
        },
        o);
}

std::string json_dump(const json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing: " + path);
}

}  // namespace spanlab
