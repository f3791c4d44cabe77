#ifndef RELPROP_METRICS_HPP
#define RELPROP_METRICS_HPP

#include <optional>
#include <vector>

namespace relprop {

/// Area under the ROC curve of binary labels (1 = positive) ranked by
/// score: P(score+ > score-) + 0.5 * P(tie) over all positive/negative
/// pairs. Empty when there is no positive or no negative. The pair count is
/// accumulated exactly (integer half-units) and divided once.
std::optional<double> auc_roc(const std::vector<double>& scores,
                              const std::vector<int>& labels);

/// Area under the precision-recall curve: the non-interpolated step sum of
/// precision times recall increment over distinct score thresholds in
/// descending order. Empty when there is no positive.
std::optional<double> auc_pr(const std::vector<double>& scores,
                             const std::vector<int>& labels);

}  // namespace relprop

#endif
