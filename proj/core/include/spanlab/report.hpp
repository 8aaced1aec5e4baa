#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "spanlab/graph.hpp"
#include "spanlab/serialize.hpp"

namespace spanlab {

// One evaluated query against ground truth.
struct EvalRow {
    Vertex u = -1, v = -1;
    double true_distance = 0.0;
    double reported_weight = 0.0;
    double stretch = 0.0;
    int hops = 0;
};

// Machine-readable evaluation result. JSON keys are alphabetically ordered
// by the serializer, so identical runs produce byte-identical documents;
// runtime_seconds is the one field excluded from that guarantee.
struct EvalReport {
    std::string oracle_kind;
    nlohmann::json knobs;  // flags the run was configured with
    uint64_t seed = 0;
    double declared_stretch = 0.0;
    std::vector<EvalRow> rows;

    double max_stretch = 0.0;
    double median_stretch = 0.0;
    size_t spanner_edge_count = 0;
    size_t storage_words = 0;
    bool guarantee_ok = true;
    EvalRow worst;
    double runtime_seconds = 0.0;

    void finalize();  // computes aggregates from rows
    nlohmann::json to_json(bool include_rows) const;
    std::string to_csv() const;  // per-query table
};

// Itemized storage accounting (words) for a built oracle.
nlohmann::json size_ledger(const AnyOracle& o);

std::string json_dump(const nlohmann::json& j);  // canonical 2-space dump + newline
void write_text_file(const std::string& path, const std::string& content);

}  // namespace spanlab
