#include "relprop/bayes.hpp"

#include <algorithm>
#include <cmath>

#include "relprop/errors.hpp"

namespace relprop {

namespace {

struct ClassCounts {
    int num_classes = 0;
    std::vector<int> eta;               // rows per class
    std::vector<double> log_priors;
};

ClassCounts count_classes(const FeatureMatrix& m) {
    ClassCounts cc;
    cc.num_classes = m.num_classes;
    if (cc.num_classes < 1) throw DataError("matrix declares no classes");
    cc.eta.assign(cc.num_classes, 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        int label = m.labels[r];
        if (label < 1 || label > cc.num_classes) {
            throw DataError("row " + std::to_string(r) + " has label " +
                            std::to_string(label) + ", outside 1.." +
                            std::to_string(cc.num_classes));
        }
        ++cc.eta[label - 1];
    }
    for (int j = 0; j < cc.num_classes; ++j) {
        if (cc.eta[j] == 0) {
            throw DataError("class " + std::to_string(j + 1) + " has no training rows");
        }
        cc.log_priors.push_back(std::log(static_cast<double>(cc.eta[j]) /
                                         static_cast<double>(m.rows())));
    }
    return cc;
}

/// The only places the estimate and its logs are computed; every path that
/// needs them goes through here so repeated computation is bit-identical.
void log_terms(double p, double& lo, double& l1m) {
    if (p <= 0.0 || p >= 1.0) {
        throw DataError("conditional estimate " + std::to_string(p) +
                        " is degenerate; use smoothing > 0");
    }
    lo = std::log(p / (1.0 - p));
    l1m = std::log(1.0 - p);
}

void cond_terms(int count, int eta, double alpha, double& p, double& lo, double& l1m) {
    p = (static_cast<double>(count) + alpha) / (static_cast<double>(eta) + 2.0 * alpha);
    log_terms(p, lo, l1m);
}

void check_smoothing(double alpha) {
    if (!(alpha >= 0.0)) throw ConfigError("smoothing must be >= 0");
}

std::vector<int> checked_subset(std::vector<int> subset, std::size_t cols) {
    std::sort(subset.begin(), subset.end());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (subset[i] < 0 || static_cast<std::size_t>(subset[i]) >= cols) {
            throw ConfigError("feature index " + std::to_string(subset[i]) +
                              " outside 0.." + std::to_string(cols) + "-1");
        }
        if (i > 0 && subset[i] == subset[i - 1]) {
            throw ConfigError("duplicate feature index " + std::to_string(subset[i]));
        }
    }
    return subset;
}

int argmax_lowest(const std::vector<double>& g) {
    int best = 0;
    for (int j = 1; j < static_cast<int>(g.size()); ++j) {
        if (g[j] > g[best]) best = j;
    }
    return best;
}

}  // namespace

NBModel fit(const FeatureMatrix& m, std::vector<int> subset, double smoothing) {
    check_smoothing(smoothing);
    NBModel model;
    model.subset = checked_subset(std::move(subset), m.cols());
    ClassCounts cc = count_classes(m);
    model.num_classes = cc.num_classes;
    model.log_priors = cc.log_priors;

    const std::size_t k = model.subset.size();
    model.cond.assign(k, std::vector<double>(cc.num_classes, 0.0));
    model.log_odds.assign(k, std::vector<double>(cc.num_classes, 0.0));
    model.log_one_minus.assign(k, std::vector<double>(cc.num_classes, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<int> counts(cc.num_classes, 0);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (m.bit(r, static_cast<std::size_t>(model.subset[i]))) ++counts[m.labels[r] - 1];
        }
        for (int j = 0; j < cc.num_classes; ++j) {
            cond_terms(counts[j], cc.eta[j], smoothing, model.cond[i][j],
                       model.log_odds[i][j], model.log_one_minus[i][j]);
        }
    }
    model.offsets.assign(cc.num_classes, 0.0);
    for (int j = 0; j < cc.num_classes; ++j) {
        double t = 0.0;
        for (std::size_t i = 0; i < k; ++i) t += model.log_one_minus[i][j];
        model.offsets[j] = t;
    }
    return model;
}

void rederive_tables(NBModel& model) {
    const std::size_t k = model.subset.size();
    const int q = model.num_classes;
    model.log_odds.assign(k, std::vector<double>(q, 0.0));
    model.log_one_minus.assign(k, std::vector<double>(q, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        for (int j = 0; j < q; ++j) {
            log_terms(model.cond[i][j], model.log_odds[i][j], model.log_one_minus[i][j]);
        }
    }
    model.offsets.assign(q, 0.0);
    for (int j = 0; j < q; ++j) {
        double t = 0.0;
        for (std::size_t i = 0; i < k; ++i) t += model.log_one_minus[i][j];
        model.offsets[j] = t;
    }
}

std::vector<double> discriminant(const NBModel& model, const std::vector<int>& row) {
    std::vector<double> g(model.num_classes);
    for (int j = 0; j < model.num_classes; ++j) {
        double t = 0.0;
        for (std::size_t i = 0; i < model.subset.size(); ++i) {
            if (row[i]) t += model.log_odds[i][j];
        }
        g[j] = t + model.offsets[j] + model.log_priors[j];
    }
    return g;
}

std::vector<double> posterior(const NBModel& model, const std::vector<int>& row) {
    std::vector<double> g = discriminant(model, row);
    double gmax = g[argmax_lowest(g)];
    double total = 0.0;
    for (double& v : g) {
        v = std::exp(v - gmax);
        total += v;
    }
    for (double& v : g) v /= total;
    return g;
}

int predict(const NBModel& model, const std::vector<int>& row) {
    return argmax_lowest(discriminant(model, row)) + 1;
}

int err(const FeatureMatrix& m, const std::vector<int>& subset, double smoothing) {
    NBModel model = fit(m, subset, smoothing);
    int mistakes = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (predict(model, m.restricted_row(r, model.subset)) != m.labels[r]) ++mistakes;
    }
    return mistakes;
}

SubsetScorer::SubsetScorer(const FeatureMatrix& m, double smoothing) : m_(&m) {
    check_smoothing(smoothing);
    ClassCounts cc = count_classes(m);
    num_classes_ = cc.num_classes;
    log_priors_ = cc.log_priors;
    log_odds_.assign(m.cols(), std::vector<double>(num_classes_, 0.0));
    log_one_minus_.assign(m.cols(), std::vector<double>(num_classes_, 0.0));
    for (std::size_t f = 0; f < m.cols(); ++f) {
        std::vector<int> counts(num_classes_, 0);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (m.bit(r, f)) ++counts[m.labels[r] - 1];
        }
        for (int j = 0; j < num_classes_; ++j) {
            double p;
            cond_terms(counts[j], cc.eta[j], smoothing, p, log_odds_[f][j],
                       log_one_minus_[f][j]);
        }
    }
}

int SubsetScorer::err(const std::vector<int>& subset) const {
    std::vector<double> offsets(num_classes_);
    for (int j = 0; j < num_classes_; ++j) {
        double t = 0.0;
        for (std::size_t i = 0; i < subset.size(); ++i) t += log_one_minus_[subset[i]][j];
        offsets[j] = t;
    }
    int mistakes = 0;
    std::vector<double> g(num_classes_);
    for (std::size_t r = 0; r < m_->rows(); ++r) {
        for (int j = 0; j < num_classes_; ++j) {
            double t = 0.0;
            for (std::size_t i = 0; i < subset.size(); ++i) {
                if (m_->bit(r, static_cast<std::size_t>(subset[i]))) t += log_odds_[subset[i]][j];
            }
            g[j] = t + offsets[j] + log_priors_[j];
        }
        if (argmax_lowest(g) + 1 != m_->labels[r]) ++mistakes;
    }
    return mistakes;
}

int SubsetScorer::majority_error() const { return err({}); }

}  // namespace relprop
