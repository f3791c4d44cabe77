// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each criterion re-checks the library against the naive oracles in
// oracles.cpp, so a FAIL here always names the optimized code.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "relprop/bayes.hpp"
#include "relprop/crossval.hpp"
#include "relprop/ensemble.hpp"
#include "relprop/grasp.hpp"
#include "relprop/logic.hpp"
#include "relprop/metrics.hpp"
#include "relprop/miner.hpp"
#include "relprop/parser.hpp"
#include "relprop/propmat.hpp"
#include "relprop/subsume.hpp"

using namespace relprop;

namespace {

int failures = 0;

void outcome(int n, const char* status, const std::string& desc) {
    std::printf("criterion %d: %s  %s\n", n, status, desc.c_str());
    std::fflush(stdout);
}

template <class Fn>
void criterion(int n, const std::string& desc, Fn body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    outcome(n, ok ? "PASS" : "FAIL", desc + note);
    if (!ok) ++failures;
}

// --- criterion 1 -----------------------------------------------------------

bool subsumption_matches_brute_force() {
    std::mt19937_64 gen(20240816);
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < 1000; ++i) {
        Query q = fixture::random_query(gen);
        Example ex = fixture::random_example(gen);
        if (oi_subsumes(q, ex) != oracle::subsumes(q, ex)) return false;
    }
    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count() < 10.0;
}

// --- criterion 2 -----------------------------------------------------------

bool same_frequent_set(const FeatureSet& got, const std::vector<oracle::MinedQuery>& want) {
    if (got.size() != want.size()) return false;
    std::vector<bool> taken(want.size(), false);
    for (std::size_t i = 0; i < got.size(); ++i) {
        bool found = false;
        for (std::size_t j = 0; j < want.size() && !found; ++j) {
            if (!taken[j]) {
                if (oracle::equivalent(got.queries[i], want[j].query) &&
                    got.supports[i] == want[j].support) {
                    taken[j] = true;
                    found = true;
                }
            }
        }
        if (!found) return false;
    }
    return true;
}

bool has_all_deletion_subqueries(const FeatureSet& fs) {
    for (const Query& q : fs.queries) {
        if (q.length() < 2) continue;
        for (int drop = 0; drop < q.length(); ++drop) {
            std::vector<Atom> atoms;
            for (int k = 0; k < q.length(); ++k) {
                if (k != drop) atoms.push_back(q.atoms[static_cast<std::size_t>(k)]);
            }
            Query sub = make_query(std::move(atoms));
            bool present = false;
            for (const Query& other : fs.queries) {
                if (oracle::equivalent(sub, other)) present = true;
            }
            if (!present) return false;
        }
    }
    return true;
}

bool miner_is_exact() {
    const auto& [data, bias] = fixture::t1();
    for (double min_support : {0.25, 0.5}) {
        MiningConfig cfg;
        cfg.min_support = min_support;
        cfg.max_length = 2;
        cfg.bias = bias;
        FeatureSet fs = mine(data, cfg);
        if (!same_frequent_set(fs, oracle::mine_all(data, bias, min_support, 2))) {
            return false;
        }
        if (!has_all_deletion_subqueries(fs)) return false;
    }
    return true;
}

// --- criterion 3 -----------------------------------------------------------

bool bayes_matches_product_form() {
    std::mt19937_64 gen(77);
    int checked = 0;
    while (checked < 500) {
        FeatureMatrix m = fixture::random_matrix(gen);
        std::vector<int> subset;
        for (int f = 0; f < static_cast<int>(m.cols()); ++f) {
            if (gen() % 2 == 0) subset.push_back(f);
        }
        double smoothing = 0.5 + static_cast<double>(gen() % 3);
        NBModel model = fit(m, subset, smoothing);
        for (std::size_t r = 0; r < m.rows() && checked < 500; ++r, ++checked) {
            std::vector<int> row = m.restricted_row(r, model.subset);
            std::vector<double> g = discriminant(model, row);
            for (int j = 0; j < model.num_classes; ++j) {
                double want = oracle::product_discriminant(model, row, j);
                double scale = std::max(1.0, std::fabs(want));
                if (std::fabs(g[static_cast<std::size_t>(j)] - want) > 1e-9 * scale) {
                    return false;
                }
            }
            std::vector<double> post = posterior(model, row);
            double sum = 0.0;
            for (double p : post) sum += p;
            if (std::fabs(sum - 1.0) > 1e-12) return false;
        }
    }

    // Unsmoothed estimates are the raw per-class frequencies. Crafted so no
    // count is 0 or eta: class 1 has f0 once in 4 rows and f1 three times,
    // class 2 has f0 twice in 4 rows and f1 once.
    FeatureMatrix crafted = matrix_from_rows(
        {{1, 1}, {0, 1}, {0, 1}, {0, 0}, {1, 1}, {1, 0}, {0, 0}, {0, 0}},
        {1, 1, 1, 1, 2, 2, 2, 2});
    NBModel raw = fit(crafted, {0, 1}, 0.0);
    return raw.cond[0][0] == 1.0 / 4.0 && raw.cond[0][1] == 2.0 / 4.0 &&
           raw.cond[1][0] == 3.0 / 4.0 && raw.cond[1][1] == 1.0 / 4.0;
}

// --- criterion 4 -----------------------------------------------------------

bool err_counts_are_exact() {
    const FeatureMatrix& m = fixture::t1_matrix();
    SubsetScorer scorer(m, 1.0);
    for (int mask = 0; mask < (1 << 9); ++mask) {
        std::vector<int> subset;
        for (int f = 0; f < 9; ++f) {
            if (mask & (1 << f)) subset.push_back(f);
        }
        int want = oracle::err_count(m, subset, 1.0);
        if (err(m, subset, 1.0) != want) return false;
        if (scorer.err(subset) != want) return false;
    }
    return true;
}

// --- criterion 5 -----------------------------------------------------------

bool locally_optimal(const FeatureMatrix& m, const Solution& s, double smoothing) {
    int d = static_cast<int>(m.cols());
    std::vector<char> in(static_cast<std::size_t>(d), 0);
    for (int f : s.subset) in[static_cast<std::size_t>(f)] = 1;
    for (int f = 0; f < d; ++f) {
        if (in[static_cast<std::size_t>(f)]) continue;
        std::vector<int> cand = s.subset;
        cand.push_back(f);
        std::sort(cand.begin(), cand.end());
        if (oracle::err_count(m, cand, smoothing) < s.score) return false;
    }
    for (std::size_t i = 0; i < s.subset.size(); ++i) {
        for (int f = 0; f < d; ++f) {
            if (in[static_cast<std::size_t>(f)]) continue;
            std::vector<int> cand = s.subset;
            cand[i] = f;
            std::sort(cand.begin(), cand.end());
            if (oracle::err_count(m, cand, smoothing) < s.score) return false;
        }
    }
    return true;
}

bool search_reaches_the_optimum() {
    const FeatureMatrix& m = fixture::t1_matrix();
    oracle::BestSubset best = oracle::exhaustive_best(m, 1.0);
    int hits = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        GraspConfig cfg;
        cfg.maxiter = 100;
        cfg.rng_seed = seed;
        std::vector<ArchiveEntry> archive = grasp_fs(m, cfg);
        if (archive.empty()) return false;
        for (std::size_t i = 0; i < archive.size(); ++i) {
            const Solution& s = archive[i].solution;
            if (i > 0 && s.score >= archive[i - 1].solution.score) return false;
            if (oracle::err_count(m, s.subset, cfg.smoothing) != s.score) return false;
            if (!locally_optimal(m, s, cfg.smoothing)) return false;
        }
        if (archive.back().solution.score == best.err) ++hits;
    }
    return hits >= 90;
}

// --- criterion 6 -----------------------------------------------------------

bool ensemble_is_identity_and_convex() {
    const FeatureMatrix& m = fixture::t1_matrix();
    GraspConfig cfg;
    cfg.maxiter = 60;
    cfg.rng_seed = 9;

    std::vector<ArchiveEntry> archive;
    Ensemble solo = rsm_fit(m, cfg, 1, Combination::MeanPosterior, &archive);
    NBModel best = fit(m, archive.back().solution.subset, cfg.smoothing);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Prediction p = rsm_predict(solo, m.full_row(r));
        std::vector<int> restricted = m.restricted_row(r, best.subset);
        if (p.class_index != predict(best, restricted)) return false;
        if (p.posterior != posterior(best, restricted)) return false;
    }

    Ensemble many = rsm_fit(m, cfg, 3);
    std::mt19937_64 gen(55);
    for (int t = 0; t < 1000; ++t) {
        std::vector<int> row(m.cols());
        for (int& x : row) x = static_cast<int>(gen() % 2);
        Prediction p = rsm_predict(many, row);
        double sum = 0.0;
        for (std::size_t j = 0; j < p.posterior.size(); ++j) {
            double lo = 2.0, hi = -1.0;
            for (const NBModel& member : many.members) {
                std::vector<int> restricted;
                for (int f : member.subset) {
                    restricted.push_back(row[static_cast<std::size_t>(f)]);
                }
                double pj = posterior(member, restricted)[j];
                lo = std::min(lo, pj);
                hi = std::max(hi, pj);
            }
            if (p.posterior[j] < lo || p.posterior[j] > hi) return false;
            sum += p.posterior[j];
        }
        if (std::fabs(sum - 1.0) > 1e-12) return false;
    }
    return true;
}

// --- criterion 7 -----------------------------------------------------------

bool reports_are_deterministic() {
    const auto& [data, bias] = fixture::t1();
    EvalConfig cfg;
    cfg.folds = 4;
    cfg.seed = 7;
    cfg.min_support = 0.25;
    cfg.max_length = 2;
    cfg.maxiter = 30;
    cfg.ensemble_size = 3;
    std::string first = render_report(cross_validate(data, bias, cfg));
    std::string second = render_report(cross_validate(data, bias, cfg));
    return !first.empty() && first == second;
}

// --- criterion 8 -----------------------------------------------------------

bool metrics_match_enumeration() {
    std::mt19937_64 gen(88);
    const double grid[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int instance = 0; instance < 500; ++instance) {
        int n = 1 + static_cast<int>(gen() % 20);
        bool smooth = instance % 3 == 2;
        std::vector<double> scores(static_cast<std::size_t>(n));
        std::vector<int> labels(static_cast<std::size_t>(n));
        bool has_pos = false, has_neg = false;
        for (int i = 0; i < n; ++i) {
            scores[static_cast<std::size_t>(i)] = smooth ? unit(gen) : grid[gen() % 5];
            labels[static_cast<std::size_t>(i)] = static_cast<int>(gen() % 2);
            (labels[static_cast<std::size_t>(i)] ? has_pos : has_neg) = true;
        }
        std::optional<double> roc = auc_roc(scores, labels);
        std::optional<double> pr = auc_pr(scores, labels);
        if (!has_pos) {
            if (roc || pr) return false;
            continue;
        }
        if (!has_neg) {
            if (roc) return false;
            if (!pr || *pr != 1.0) return false;
            continue;
        }
        if (!roc || *roc != oracle::auc_roc_pairs(scores, labels)) return false;
        if (!pr || std::fabs(*pr - oracle::auc_pr_thresholds(scores, labels)) > 1e-12) {
            return false;
        }
    }
    return true;
}

// --- criterion 9 (conditional) ---------------------------------------------

void reference_dataset_criterion() {
    std::string facts_path = fixture::data_dir() + "/mutagenesis.facts";
    std::string bias_path = fixture::data_dir() + "/mutagenesis.bias";
    std::ifstream facts(facts_path), bias(bias_path);
    if (!facts || !bias) {
        outcome(9, "SKIP",
                "reference-dataset accuracy band (mutagenesis.facts/.bias not present; "
                "criteria 1-8 constitute full acceptance)");
        return;
    }
    criterion(9, "10-fold accuracy on the reference dataset within 86.7 +/- 6.2 for some seed",
              [&] {
                  ParsedDataset parsed =
                      parse_dataset(fixture::slurp(facts_path), fixture::slurp(bias_path));
                  EvalConfig cfg;
                  cfg.folds = 10;
                  cfg.max_length = 6;
                  cfg.maxiter = 100;
                  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                      cfg.seed = seed;
                      EvalReport report = cross_validate(parsed.dataset, parsed.bias, cfg);
                      if (std::fabs(report.accuracy_mean * 100.0 - 86.7) <= 6.2) return true;
                  }
                  return false;
              });
}

}  // namespace

int main() {
    criterion(1, "subsumption agrees with the injective brute-force oracle on 1000 random pairs in <10s",
              subsumption_matches_brute_force);
    criterion(2, "mining equals exhaustive enumeration with identical supports; deletion subqueries present",
              miner_is_exact);
    criterion(3, "discriminant matches the product form within 1e-9; posteriors normalized; unsmoothed = raw frequencies",
              bayes_matches_product_form);
    criterion(4, "training-error counts equal the oracle for all 512 subsets, zero tolerance",
              err_counts_are_exact);
    criterion(5, "search attains the exhaustive optimum for >=90/100 seeds; archives strictly improving and locally optimal",
              search_reaches_the_optimum);
    criterion(6, "single-member ensemble equals its one model; combined posteriors stay within member ranges",
              ensemble_is_identity_and_convex);
    criterion(7, "repeated cross-validation renders byte-identical reports",
              reports_are_deterministic);
    criterion(8, "auc_roc equals the all-pairs oracle exactly; auc_pr within 1e-12 of the threshold oracle",
              metrics_match_enumeration);
    reference_dataset_criterion();

    if (failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
