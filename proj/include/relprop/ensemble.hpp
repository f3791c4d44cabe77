#ifndef RELPROP_ENSEMBLE_HPP
#define RELPROP_ENSEMBLE_HPP

#include <vector>

#include "relprop/bayes.hpp"
#include "relprop/grasp.hpp"

namespace relprop {

enum class Combination { MeanPosterior, MajorityVote };

/// A random-subspace ensemble: one naive-Bayes model per archived subset,
/// kept in archive order (the last member is the best-scoring subset).
struct Ensemble {
    std::vector<NBModel> members;
    int requested_size = 1;  // may exceed members.size() when the archive is short
    Combination combination = Combination::MeanPosterior;
    int num_classes = 0;
};

struct Prediction {
    int class_index = 0;             // 1-based; ties go to the lowest index
    std::vector<double> posterior;   // combined over members, sums to 1
};

/// Runs the subset search, takes the best min(ensemble_size, archive length)
/// archived solutions, and fits one model per subset on the full matrix.
/// An archive shorter than ensemble_size is not an error; the caller can see
/// it from members.size() vs requested_size. Pass archive_out to keep the
/// full archive.
Ensemble rsm_fit(const FeatureMatrix& m, const GraspConfig& cfg, int ensemble_size,
                 Combination combination = Combination::MeanPosterior,
                 std::vector<ArchiveEntry>* archive_out = nullptr);

/// Classifies a row over ALL features; each member reads its own subset's
/// coordinates. MeanPosterior averages the member posteriors (the mean is
/// clamped coordinate-wise to the members' range, so convexity survives
/// rounding); MajorityVote reports vote shares.
Prediction rsm_predict(const Ensemble& e, const std::vector<int>& full_row);

}  // namespace relprop

#endif
