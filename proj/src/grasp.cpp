#include "relprop/grasp.hpp"

#include <algorithm>

#include "relprop/errors.hpp"

namespace relprop {

namespace {

std::vector<int> with_feature(const std::vector<int>& subset, int f) {
    std::vector<int> out = subset;
    out.insert(std::lower_bound(out.begin(), out.end(), f), f);
    return out;
}

bool contains(const std::vector<int>& subset, int f) {
    return std::binary_search(subset.begin(), subset.end(), f);
}

}  // namespace

Solution construct(const SubsetScorer& scorer, double alpha_blend, Rng& rng, int max_size) {
    Solution s;
    s.score = scorer.majority_error();
    const int d = scorer.num_features();
    while (static_cast<int>(s.subset.size()) < std::min(max_size, d)) {
        std::vector<int> features;
        std::vector<int> scores;
        for (int f = 0; f < d; ++f) {
            if (contains(s.subset, f)) continue;
            features.push_back(f);
            scores.push_back(scorer.err(with_feature(s.subset, f)));
        }
        int s_min = *std::min_element(scores.begin(), scores.end());
        int s_max = *std::max_element(scores.begin(), scores.end());
        double threshold = static_cast<double>(s_min) +
                           alpha_blend * static_cast<double>(s_max - s_min);
        std::vector<std::size_t> rcl;
        for (std::size_t i = 0; i < features.size(); ++i) {
            if (static_cast<double>(scores[i]) <= threshold) rcl.push_back(i);
        }
        std::size_t pick = rcl[rng.index(rcl.size())];
        if (scores[pick] >= s.score) break;
        s.subset = with_feature(s.subset, features[pick]);
        s.score = scores[pick];
    }
    return s;
}

Solution local_search(const SubsetScorer& scorer, Solution s, int max_size) {
    const int d = scorer.num_features();
    while (true) {
        int best_score = 0;
        std::vector<int> best;
        bool improved = false;
        auto consider = [&](std::vector<int> cand, int sc) {
            if (sc >= s.score) return;
            if (!improved || sc < best_score || (sc == best_score && cand < best)) {
                improved = true;
                best_score = sc;
                best = std::move(cand);
            }
        };
        if (static_cast<int>(s.subset.size()) < max_size) {
            for (int f = 0; f < d; ++f) {
                if (contains(s.subset, f)) continue;
                std::vector<int> cand = with_feature(s.subset, f);
                int sc = scorer.err(cand);
                consider(std::move(cand), sc);
            }
        }
        for (std::size_t pos = 0; pos < s.subset.size(); ++pos) {
            std::vector<int> base = s.subset;
            base.erase(base.begin() + static_cast<std::ptrdiff_t>(pos));
            for (int f = 0; f < d; ++f) {
                if (contains(s.subset, f)) continue;
                std::vector<int> cand = with_feature(base, f);
                int sc = scorer.err(cand);
                consider(std::move(cand), sc);
            }
        }
        if (!improved) break;
        s.subset = std::move(best);
        s.score = best_score;
    }
    return s;
}

std::vector<ArchiveEntry> grasp_fs(const FeatureMatrix& m, const GraspConfig& cfg) {
    if (cfg.maxiter < 1) throw ConfigError("maxiter must be at least 1");
    if (m.cols() == 0) throw ConfigError("matrix has no feature columns to search");
    if (cfg.max_subset_size && *cfg.max_subset_size < 1) {
        throw ConfigError("max_subset_size must be at least 1");
    }
    SubsetScorer scorer(m, cfg.smoothing);
    const int cap =
        cfg.max_subset_size ? std::min(*cfg.max_subset_size, static_cast<int>(m.cols()))
                            : static_cast<int>(m.cols());
    Rng rng(cfg.rng_seed);
    std::vector<ArchiveEntry> archive;
    for (int iter = 1; iter <= cfg.maxiter; ++iter) {
        double alpha_blend = rng.unit();
        Solution s = local_search(scorer, construct(scorer, alpha_blend, rng, cap), cap);
        if (archive.empty() || s.score < archive.back().solution.score) {
            archive.push_back(ArchiveEntry{iter, std::move(s)});
        }
    }
    return archive;
}

std::string write_archive(const std::vector<ArchiveEntry>& archive) {
    std::string text;
    for (const ArchiveEntry& e : archive) {
        text += std::to_string(e.iteration);
        text += '\t';
        text += std::to_string(e.solution.score);
        text += '\t';
        for (std::size_t i = 0; i < e.solution.subset.size(); ++i) {
            if (i > 0) text += ' ';
            text += std::to_string(e.solution.subset[i]);
        }
        text += '\n';
    }
    return text;
}

}  // namespace relprop
