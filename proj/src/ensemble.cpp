#include "relprop/ensemble.hpp"

#include <algorithm>

#include "relprop/errors.hpp"

namespace relprop {

Ensemble rsm_fit(const FeatureMatrix& m, const GraspConfig& cfg, int ensemble_size,
                 Combination combination, std::vector<ArchiveEntry>* archive_out) {
    if (ensemble_size < 1) throw ConfigError("ensemble_size must be at least 1");
    std::vector<ArchiveEntry> archive = grasp_fs(m, cfg);
    std::size_t take = std::min<std::size_t>(archive.size(),
                                             static_cast<std::size_t>(ensemble_size));
    Ensemble e;
    e.requested_size = ensemble_size;
    e.combination = combination;
    e.num_classes = m.num_classes;
    for (std::size_t i = archive.size() - take; i < archive.size(); ++i) {
        e.members.push_back(fit(m, archive[i].solution.subset, cfg.smoothing));
    }
    if (archive_out) *archive_out = std::move(archive);
    return e;
}

namespace {

std::vector<int> member_row(const NBModel& model, const std::vector<int>& full_row) {
    std::vector<int> row(model.subset.size());
    for (std::size_t i = 0; i < model.subset.size(); ++i) {
        row[i] = full_row[static_cast<std::size_t>(model.subset[i])];
    }
    return row;
}

int argmax_lowest(const std::vector<double>& v) {
    int best = 0;
    for (int j = 1; j < static_cast<int>(v.size()); ++j) {
        if (v[j] > v[best]) best = j;
    }
    return best;
}

}  // namespace

Prediction rsm_predict(const Ensemble& e, const std::vector<int>& full_row) {
    if (e.members.empty()) throw ConfigError("ensemble has no members");
    const int q = e.num_classes;
    Prediction out;
    out.posterior.assign(q, 0.0);

    if (e.combination == Combination::MajorityVote) {
        std::vector<int> votes(q, 0);
        for (const NBModel& model : e.members) {
            ++votes[predict(model, member_row(model, full_row)) - 1];
        }
        for (int j = 0; j < q; ++j) {
            out.posterior[j] =
                static_cast<double>(votes[j]) / static_cast<double>(e.members.size());
        }
        out.class_index = argmax_lowest(out.posterior) + 1;
        return out;
    }

    std::vector<double> lo(q, 1.0), hi(q, 0.0);
    for (const NBModel& model : e.members) {
        std::vector<double> p = posterior(model, member_row(model, full_row));
        for (int j = 0; j < q; ++j) {
            out.posterior[j] += p[j];
            lo[j] = std::min(lo[j], p[j]);
            hi[j] = std::max(hi[j], p[j]);
        }
    }
    for (int j = 0; j < q; ++j) {
        double mean = out.posterior[j] / static_cast<double>(e.members.size());
        out.posterior[j] = std::min(std::max(mean, lo[j]), hi[j]);
    }
    out.class_index = argmax_lowest(out.posterior) + 1;
    return out;
}

}  // namespace relprop
