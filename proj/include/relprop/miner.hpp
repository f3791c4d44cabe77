#ifndef RELPROP_MINER_HPP
#define RELPROP_MINER_HPP

#include <string>
#include <vector>

#include "relprop/logic.hpp"

namespace relprop {

struct MiningConfig {
    double min_support = 0.1;  // fraction of examples, in (0, 1]
    int max_length = 6;        // atoms per query
    std::vector<BiasDecl> bias;
};

/// The frequent queries found by one mining run, in discovery order, with
/// their exact supports in parallel. Discovery order is part of the
/// contract: matrices built from this set use it as the column order.
struct FeatureSet {
    std::vector<Query> queries;
    std::vector<double> supports;

    std::size_t size() const { return queries.size(); }
};

/// All one-atom extensions of q under the bias: the new atom's arguments are
/// existing variables of the position's declared type or fresh variables
/// (never fresh in a key position), at least one argument is an existing
/// variable, and extensions equivalent to q itself are dropped. No other
/// deduplication happens here; the level-wise search dedups across parents.
std::vector<Query> refine(const Query& q, const std::vector<BiasDecl>& bias);

/// Level-wise search for all frequent queries up to cfg.max_length, one
/// representative per OI-equivalence class, supports exact. Throws
/// ConfigError on an invalid configuration.
FeatureSet mine(const Dataset& data, const MiningConfig& cfg);

/// Non-fatal observations about a mining configuration, e.g. a support
/// threshold below one example. Empty when nothing is noteworthy.
std::vector<std::string> mining_warnings(const Dataset& data, const MiningConfig& cfg);

/// One `<support>\t<query>.` line per feature, supports at full precision.
std::string write_features(const FeatureSet& fs);
FeatureSet read_features(const std::string& text);

}  // namespace relprop

#endif
