#ifndef RELPROP_CROSSVAL_HPP
#define RELPROP_CROSSVAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relprop/ensemble.hpp"
#include "relprop/logic.hpp"
#include "relprop/miner.hpp"

namespace relprop {

struct EvalConfig {
    int folds = 10;
    std::uint64_t seed = 1;
    double min_support = 0.1;
    int max_length = 6;
    int maxiter = 100;
    int ensemble_size = 10;
    double smoothing = 1.0;
    Combination combination = Combination::MeanPosterior;
    int positive_class = 1;  // class index scored by the AUC metrics (binary data)
};

/// Everything observable about one fold: which examples were held out, what
/// was mined and searched on the training split, and the test metrics.
struct FoldResult {
    int fold = 1;  // 1-based
    std::vector<int> test_indices;
    std::vector<std::string> features;  // rendered training-split queries
    std::vector<double> supports;
    std::vector<int> archive_scores;
    std::vector<std::size_t> member_sizes;
    double accuracy = 0.0;
    std::optional<double> roc;
    std::optional<double> pr;
};

struct EvalReport {
    EvalConfig config;
    int n = 0;
    int num_classes = 0;
    std::vector<std::string> class_names;
    std::vector<FoldResult> folds;
    double accuracy_mean = 0.0;
    double accuracy_stddev = 0.0;
    std::optional<double> roc_mean, roc_stddev;
    std::optional<double> pr_mean, pr_stddev;
    std::vector<std::string> warnings;
};

/// Seeded stratified fold assignment: per class (in label order) the
/// example indices are shuffled, then dealt round-robin with one cursor
/// shared across classes, so each class spreads as evenly as possible over
/// the folds and no fold is empty while k <= n. Returns a 0-based fold id
/// per example.
std::vector<int> stratified_folds(const std::vector<int>& labels, int k,
                                  std::uint64_t seed);

/// k-fold cross-validation of the whole pipeline. Mining, subset search and
/// ensemble fitting see only the training split of each fold; test examples
/// are propositionalized against the training split's features. Throws
/// ConfigError on bad parameters, DataError when a fold's training split is
/// missing a class.
EvalReport cross_validate(const Dataset& data, const std::vector<BiasDecl>& bias,
                          const EvalConfig& cfg);

/// Deterministic text rendering: human-readable tables followed by a
/// machine-readable `key=value` block at full precision. Identical inputs
/// produce byte-identical text.
std::string render_report(const EvalReport& report);

}  // namespace relprop

#endif
