#include "relprop/crossval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "relprop/errors.hpp"
#include "relprop/metrics.hpp"
#include "relprop/propmat.hpp"
#include "relprop/rng.hpp"

namespace relprop {

namespace {

std::string fmt(const char* format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, v);
    return buf;
}

std::string opt_fmt(const char* format, const std::optional<double>& v) {
    return v ? fmt(format, *v) : std::string("n/a");
}

/// Independent search stream per fold, decorrelated across base seeds.
std::uint64_t fold_seed(std::uint64_t seed, int fold) {
    return mix_seed(mix_seed(seed) ^ static_cast<std::uint64_t>(fold + 1));
}

Dataset select(const Dataset& data, const std::vector<int>& assignment, int fold,
               bool take_fold) {
    Dataset out;
    out.num_classes = data.num_classes;
    out.class_names = data.class_names;
    for (std::size_t i = 0; i < data.examples.size(); ++i) {
        if ((assignment[i] == fold) == take_fold) out.examples.push_back(data.examples[i]);
    }
    return out;
}

struct Aggregate {
    double mean = 0.0;
    double stddev = 0.0;
};

Aggregate aggregate(const std::vector<double>& values) {
    Aggregate a;
    for (double v : values) a.mean += v;
    a.mean /= static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - a.mean) * (v - a.mean);
        a.stddev = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return a;
}

}  // namespace

std::vector<int> stratified_folds(const std::vector<int>& labels, int k,
                                  std::uint64_t seed) {
    std::vector<int> assignment(labels.size(), 0);
    int max_label = 0;
    for (int l : labels) max_label = std::max(max_label, l);
    Rng rng(mix_seed(seed));
    int cursor = 0;
    for (int c = 1; c <= max_label; ++c) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == c) members.push_back(i);
        }
        for (std::size_t i = members.size(); i > 1; --i) {
            std::swap(members[i - 1], members[rng.index(i)]);
        }
        for (std::size_t i : members) {
            assignment[i] = cursor % k;
            ++cursor;
        }
    }
    return assignment;
}

EvalReport cross_validate(const Dataset& data, const std::vector<BiasDecl>& bias,
                          const EvalConfig& cfg) {
    const int n = data.size();
    const int q = data.num_classes;
    if (cfg.folds < 2) throw ConfigError("folds must be at least 2");
    if (cfg.folds > n) throw ConfigError("folds exceed the number of examples");
    if (!(cfg.min_support > 0.0) || cfg.min_support > 1.0) {
        throw ConfigError("min_support must lie in (0, 1]");
    }
    if (cfg.max_length < 1) throw ConfigError("max_length must be at least 1");
    if (cfg.maxiter < 1) throw ConfigError("maxiter must be at least 1");
    if (cfg.ensemble_size < 1) throw ConfigError("ensemble_size must be at least 1");
    if (!(cfg.smoothing >= 0.0)) throw ConfigError("smoothing must be >= 0");
    if (cfg.positive_class < 1 || cfg.positive_class > q) {
        throw ConfigError("positive_class outside 1.." + std::to_string(q));
    }

    std::vector<int> labels;
    for (const Example& ex : data.examples) labels.push_back(ex.label);
    std::vector<int> assignment = stratified_folds(labels, cfg.folds, cfg.seed);

    for (int f = 0; f < cfg.folds; ++f) {
        std::vector<int> train_eta(q, 0);
        for (int i = 0; i < n; ++i) {
            if (assignment[i] != f) ++train_eta[labels[i] - 1];
        }
        for (int j = 0; j < q; ++j) {
            if (train_eta[j] == 0) {
                throw DataError("fold " + std::to_string(f + 1) +
                                " training split lacks class '" + data.class_names[j] +
                                "'");
            }
        }
    }

    EvalReport report;
    report.config = cfg;
    report.n = n;
    report.num_classes = q;
    report.class_names = data.class_names;

    MiningConfig mcfg{cfg.min_support, cfg.max_length, bias};
    for (int f = 0; f < cfg.folds; ++f) {
        Dataset train = select(data, assignment, f, false);
        Dataset test = select(data, assignment, f, true);
        for (const std::string& w : mining_warnings(train, mcfg)) {
            report.warnings.push_back("fold " + std::to_string(f + 1) + ": " + w);
        }

        FoldResult fr;
        fr.fold = f + 1;
        for (int i = 0; i < n; ++i) {
            if (assignment[i] == f) fr.test_indices.push_back(i);
        }

        FeatureSet fs = mine(train, mcfg);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            fr.features.push_back(to_string(fs.queries[i]));
            fr.supports.push_back(fs.supports[i]);
        }

        FeatureMatrix train_m = build_matrix(train, fs);
        Ensemble ensemble;
        if (fs.size() == 0) {
            report.warnings.push_back("fold " + std::to_string(f + 1) +
                                      ": no frequent queries; prior-only model");
            ensemble.members.push_back(fit(train_m, {}, cfg.smoothing));
            ensemble.requested_size = cfg.ensemble_size;
            ensemble.combination = cfg.combination;
            ensemble.num_classes = q;
        } else {
            GraspConfig gcfg;
            gcfg.maxiter = cfg.maxiter;
            gcfg.rng_seed = fold_seed(cfg.seed, f);
            gcfg.smoothing = cfg.smoothing;
            std::vector<ArchiveEntry> archive;
            ensemble = rsm_fit(train_m, gcfg, cfg.ensemble_size, cfg.combination, &archive);
            for (const ArchiveEntry& e : archive) fr.archive_scores.push_back(e.solution.score);
        }
        for (const NBModel& member : ensemble.members) {
            fr.member_sizes.push_back(member.subset.size());
        }

        FeatureMatrix test_m = build_matrix(test, fs);
        int correct = 0;
        std::vector<double> scores;
        std::vector<int> binary;
        for (std::size_t r = 0; r < test_m.rows(); ++r) {
            Prediction p = rsm_predict(ensemble, test_m.full_row(r));
            if (p.class_index == test_m.labels[r]) ++correct;
            if (q == 2) {
                scores.push_back(p.posterior[cfg.positive_class - 1]);
                binary.push_back(test_m.labels[r] == cfg.positive_class ? 1 : 0);
            }
        }
        fr.accuracy = static_cast<double>(correct) / static_cast<double>(test_m.rows());
        if (q == 2) {
            fr.roc = auc_roc(scores, binary);
            fr.pr = auc_pr(scores, binary);
        }
        report.folds.push_back(std::move(fr));
    }

    std::vector<double> acc, rocs, prs;
    for (const FoldResult& fr : report.folds) {
        acc.push_back(fr.accuracy);
        if (fr.roc) rocs.push_back(*fr.roc);
        if (fr.pr) prs.push_back(*fr.pr);
    }
    Aggregate a = aggregate(acc);
    report.accuracy_mean = a.mean;
    report.accuracy_stddev = a.stddev;
    if (!rocs.empty()) {
        Aggregate r = aggregate(rocs);
        report.roc_mean = r.mean;
        report.roc_stddev = r.stddev;
    }
    if (!prs.empty()) {
        Aggregate p = aggregate(prs);
        report.pr_mean = p.mean;
        report.pr_stddev = p.stddev;
    }
    return report;
}

std::string render_report(const EvalReport& report) {
    const EvalConfig& cfg = report.config;
    std::string text;
    text += "cross-validation report\n";
    text += "=======================\n";
    text += "examples: " + std::to_string(report.n) + "  classes:";
    for (const std::string& name : report.class_names) text += ' ' + name;
    text += "\n";
    if (report.num_classes == 2) {
        text += "positive class: " + report.class_names[cfg.positive_class - 1] + "\n";
    }
    text += "folds: " + std::to_string(cfg.folds) +
            "  seed: " + std::to_string(cfg.seed) + "\n";
    text += "mining: min_support=" + fmt("%g", cfg.min_support) +
            " max_length=" + std::to_string(cfg.max_length) + "\n";
    text += "search: maxiter=" + std::to_string(cfg.maxiter) +
            " smoothing=" + fmt("%g", cfg.smoothing) +
            " ensemble_size=" + std::to_string(cfg.ensemble_size) + " combination=" +
            (cfg.combination == Combination::MeanPosterior ? "mean" : "vote") + "\n";
    text += "auc-pr convention: non-interpolated step area over distinct score "
            "thresholds\n\n";

    text += "fold  test_n  features  archive_scores  member_sizes  accuracy  auc_roc  "
            "auc_pr\n";
    for (const FoldResult& fr : report.folds) {
        std::string archive;
        for (std::size_t i = 0; i < fr.archive_scores.size(); ++i) {
            if (i > 0) archive += '>';
            archive += std::to_string(fr.archive_scores[i]);
        }
        if (archive.empty()) archive = "-";
        std::string sizes;
        for (std::size_t i = 0; i < fr.member_sizes.size(); ++i) {
            if (i > 0) sizes += ',';
            sizes += std::to_string(fr.member_sizes[i]);
        }
        char line[256];
        std::snprintf(line, sizeof line, "%4d  %6zu  %8zu  %14s  %12s  %8.6f  %7s  %6s\n",
                      fr.fold, fr.test_indices.size(), fr.features.size(),
                      archive.c_str(), sizes.c_str(), fr.accuracy,
                      opt_fmt("%.6f", fr.roc).c_str(), opt_fmt("%.6f", fr.pr).c_str());
        text += line;
    }
    text += "\n";
    text += "accuracy: " + fmt("%.6f", report.accuracy_mean) + " +/- " +
            fmt("%.6f", report.accuracy_stddev) + "\n";
    text += "auc_roc:  " + opt_fmt("%.6f", report.roc_mean) + " +/- " +
            opt_fmt("%.6f", report.roc_stddev) + "\n";
    text += "auc_pr:   " + opt_fmt("%.6f", report.pr_mean) + " +/- " +
            opt_fmt("%.6f", report.pr_stddev) + "\n";

    if (!report.warnings.empty()) {
        text += "\nwarnings:\n";
        for (const std::string& w : report.warnings) text += "  " + w + "\n";
    }

    text += "\nmachine-readable\n";
    text += "----------------\n";
    text += "n=" + std::to_string(report.n) + "\n";
    std::string classes;
    for (const std::string& name : report.class_names) {
        if (!classes.empty()) classes += ',';
        classes += name;
    }
    text += "classes=" + classes + "\n";
    text += "folds=" + std::to_string(cfg.folds) + "\n";
    text += "seed=" + std::to_string(cfg.seed) + "\n";
    text += "min_support=" + fmt("%.17g", cfg.min_support) + "\n";
    text += "max_length=" + std::to_string(cfg.max_length) + "\n";
    text += "maxiter=" + std::to_string(cfg.maxiter) + "\n";
    text += "ensemble_size=" + std::to_string(cfg.ensemble_size) + "\n";
    text += "smoothing=" + fmt("%.17g", cfg.smoothing) + "\n";
    text += std::string("combination=") +
            (cfg.combination == Combination::MeanPosterior ? "mean" : "vote") + "\n";
    if (report.num_classes == 2) {
        text += "positive_class=" + report.class_names[cfg.positive_class - 1] + "\n";
    }
    for (const FoldResult& fr : report.folds) {
        std::string prefix = "fold." + std::to_string(fr.fold);
        text += prefix + ".test_n=" + std::to_string(fr.test_indices.size()) + "\n";
        text += prefix + ".features=" + std::to_string(fr.features.size()) + "\n";
        text += prefix + ".accuracy=" + fmt("%.17g", fr.accuracy) + "\n";
        text += prefix + ".auc_roc=" + opt_fmt("%.17g", fr.roc) + "\n";
        text += prefix + ".auc_pr=" + opt_fmt("%.17g", fr.pr) + "\n";
    }
    text += "accuracy.mean=" + fmt("%.17g", report.accuracy_mean) + "\n";
    text += "accuracy.stddev=" + fmt("%.17g", report.accuracy_stddev) + "\n";
    text += "auc_roc.mean=" + opt_fmt("%.17g", report.roc_mean) + "\n";
    text += "auc_roc.stddev=" + opt_fmt("%.17g", report.roc_stddev) + "\n";
    text += "auc_pr.mean=" + opt_fmt("%.17g", report.pr_mean) + "\n";
    text += "auc_pr.stddev=" + opt_fmt("%.17g", report.pr_stddev) + "\n";
    return text;
}

}  // namespace relprop
