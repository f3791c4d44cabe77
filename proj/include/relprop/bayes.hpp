#ifndef RELPROP_BAYES_HPP
#define RELPROP_BAYES_HPP

#include <vector>

#include "relprop/propmat.hpp"

namespace relprop {

/// Naive Bayes over boolean features, restricted to a feature subset.
///
/// Estimates: cond[i][j] = (count(x_i=1, c=j) + alpha) / (eta_j + 2*alpha),
/// priors eta_j/n unsmoothed. A row's discriminant per class is
///
///   g_j = sum_i x_i * ln(p_ij/(1-p_ij)) + sum_i ln(1-p_ij) + ln p(c_j)
///
/// Determinism contract: subset indices are sorted ascending, and every
/// evaluation path (discriminant, err, SubsetScorer) accumulates the two
/// sums feature-by-feature in that order with the same expressions, so the
/// same quantity is bit-identical no matter which path computed it.
struct NBModel {
    std::vector<int> subset;  // sorted ascending
    int num_classes = 0;
    std::vector<double> log_priors;                  // ln p(c_j), index j-1
    std::vector<std::vector<double>> cond;           // p_ij, [subset pos][class]
    std::vector<std::vector<double>> log_odds;       // ln(p_ij/(1-p_ij))
    std::vector<std::vector<double>> log_one_minus;  // ln(1-p_ij)
    std::vector<double> offsets;  // per class: sum of log_one_minus over the subset
};

/// Estimates an NBModel from the labeled matrix. Throws DataError if a class
/// has no rows, a label is out of range, or smoothing 0 meets a count of 0
/// or eta_j (openness needs alpha > 0); ConfigError on bad subset/smoothing.
NBModel fit(const FeatureMatrix& m, std::vector<int> subset, double smoothing);

/// Recomputes log_odds, log_one_minus, and offsets from subset, num_classes,
/// and cond, with the fitting expressions. Lets a deserialized model
/// evaluate bit-identically to the one that was written.
void rederive_tables(NBModel& model);

/// g_j for a row already restricted to model.subset (row[i] pairs with
/// subset[i]).
std::vector<double> discriminant(const NBModel& model, const std::vector<int>& row);

/// Softmax of the discriminants (log-sum-exp stabilized); sums to 1.
std::vector<double> posterior(const NBModel& model, const std::vector<int>& row);

/// Argmax class of the discriminant, 1-based; ties go to the lowest index.
int predict(const NBModel& model, const std::vector<int>& row);

/// Misclassification count of the subset's model over the whole matrix
/// (fit and evaluate on the same rows).
int err(const FeatureMatrix& m, const std::vector<int>& subset, double smoothing);

/// Precomputed per-feature statistics for scoring many subsets of one
/// matrix. err() here is bit-identical to the free err(): the conditional
/// probability of a feature does not depend on which subset it is in, so the
/// per-feature terms are cached once and summed in subset order on demand.
class SubsetScorer {
public:
    SubsetScorer(const FeatureMatrix& m, double smoothing);

    /// Misclassification count for a subset (indices sorted ascending).
    int err(const std::vector<int>& subset) const;

    /// err of the empty subset: the always-majority-class model.
    int majority_error() const;

    int num_features() const { return static_cast<int>(log_odds_.size()); }
    int num_classes() const { return num_classes_; }

private:
    const FeatureMatrix* m_;
    int num_classes_ = 0;
    std::vector<double> log_priors_;
    std::vector<std::vector<double>> log_odds_;       // [feature][class]
    std::vector<std::vector<double>> log_one_minus_;  // [feature][class]
};

}  // namespace relprop

#endif
