#include "relprop/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "relprop/errors.hpp"

namespace relprop {

namespace {

/// Indices sorted by score descending; ties keep input order (irrelevant to
/// both metrics, which treat tied scores as one threshold).
std::vector<std::size_t> desc_order(const std::vector<double>& scores) {
    std::vector<std::size_t> order(scores.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] > scores[b];
    });
    return order;
}

void check_sizes(const std::vector<double>& scores, const std::vector<int>& labels) {
    if (scores.size() != labels.size()) {
        throw ConfigError("scores and labels have different lengths");
    }
}

}  // namespace

std::optional<double> auc_roc(const std::vector<double>& scores,
                              const std::vector<int>& labels) {
    check_sizes(scores, labels);
    std::int64_t pos = 0, neg = 0;
    for (int l : labels) (l ? pos : neg)++;
    if (pos == 0 || neg == 0) return std::nullopt;

    std::vector<std::size_t> order = desc_order(scores);
    std::int64_t half_units = 0;  // 2 per won pair, 1 per tied pair
    std::int64_t neg_below = neg;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        std::int64_t p = 0, q = 0;
        while (j < order.size() && scores[order[j]] == scores[order[i]]) {
            (labels[order[j]] ? p : q)++;
            ++j;
        }
        neg_below -= q;
        half_units += 2 * p * neg_below + p * q;
        i = j;
    }
    return static_cast<double>(half_units) /
           (2.0 * static_cast<double>(pos) * static_cast<double>(neg));
}

std::optional<double> auc_pr(const std::vector<double>& scores,
                             const std::vector<int>& labels) {
    check_sizes(scores, labels);
    std::int64_t pos = 0;
    for (int l : labels) pos += l ? 1 : 0;
    if (pos == 0) return std::nullopt;

    std::vector<std::size_t> order = desc_order(scores);
    double area = 0.0;
    double prev_recall = 0.0;
    std::int64_t tp = 0, fp = 0;
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j < order.size() && scores[order[j]] == scores[order[i]]) {
            (labels[order[j]] ? tp : fp)++;
            ++j;
        }
        double recall = static_cast<double>(tp) / static_cast<double>(pos);
        double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
        area += (recall - prev_recall) * precision;
        prev_recall = recall;
        i = j;
    }
    return area;
}

}  // namespace relprop
