#ifndef RELPROP_GRASP_HPP
#define RELPROP_GRASP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relprop/bayes.hpp"
#include "relprop/rng.hpp"

namespace relprop {

/// A feature-index subset with its misclassification count on the training
/// matrix under the smoothing in force.
struct Solution {
    std::vector<int> subset;  // sorted ascending
    int score = 0;
};

struct GraspConfig {
    int maxiter = 100;
    std::uint64_t rng_seed = 1;
    double smoothing = 1.0;
    std::optional<int> max_subset_size;  // default: no cap
};

/// One archived solution and the 1-based iteration that produced it.
struct ArchiveEntry {
    int iteration = 0;
    Solution solution;
};

/// Randomized greedy construction. From the empty subset (scored as the
/// majority-class error), repeatedly score all one-feature additions, build
/// the restricted candidate list of those within alpha_blend of the best,
/// draw one uniformly (exactly one rng draw per pick), and keep it only if
/// it strictly improves the score; the first non-improving draw ends the
/// construction.
Solution construct(const SubsetScorer& scorer, double alpha_blend, Rng& rng, int max_size);

/// Best-improvement local search over the add-one/replace-one neighborhood;
/// ties go to the lexicographically smallest subset. Stops at a local
/// optimum.
Solution local_search(const SubsetScorer& scorer, Solution s, int max_size);

/// The full search: maxiter rounds of (draw alpha_blend, construct, local
/// search), archiving a result iff it strictly beats every archived score.
/// Archive scores are strictly decreasing; the last entry is the best.
std::vector<ArchiveEntry> grasp_fs(const FeatureMatrix& m, const GraspConfig& cfg);

/// One `iteration\tscore\tindex index ...` line per archive entry.
std::string write_archive(const std::vector<ArchiveEntry>& archive);

}  // namespace relprop

#endif
