#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "spanlab/cluster_prdo.hpp"
#include "spanlab/graph.hpp"
#include "spanlab/hopset.hpp"
#include "spanlab/pairwise.hpp"
#include "spanlab/reductions.hpp"
#include "spanlab/tz_oracle.hpp"

namespace spanlab {

// Versioned little-endian container for built oracles. The file stores pure
// oracle state; the host graph is reattached at query time.
enum class OracleKind : uint8_t {
    TZ = 1,
    Hopset = 2,
    Pairwise = 3,
    Subset = 4,
    Sourcewise = 5,
    Prioritized = 6,
    ClusterUnweighted = 7,
    ClusterWeighted = 8,
};

using AnyOracle = std::variant<TZOracle, HopsetParts, PairwiseOracle, SubsetOracle,
                               SourcewiseOracle, PrioritizedOracle, UnweightedPrdo, WeightedPrdo>;

OracleKind kind_of(const AnyOracle& o);
std::string kind_name(OracleKind k);

std::string save_oracle(const AnyOracle& o);                 // to bytes
AnyOracle load_oracle(const std::string& bytes);             // from bytes
void save_oracle_file(const AnyOracle& o, const std::string& path);
AnyOracle load_oracle_file(const std::string& path);

}  // namespace spanlab
