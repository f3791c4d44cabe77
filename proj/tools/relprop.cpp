#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "relprop/crossval.hpp"
#include "relprop/ensemble.hpp"
#include "relprop/errors.hpp"
#include "relprop/grasp.hpp"
#include "relprop/metrics.hpp"
#include "relprop/miner.hpp"
#include "relprop/model_io.hpp"
#include "relprop/parser.hpp"
#include "relprop/propmat.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw relprop::DataError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw relprop::DataError("cannot write file '" + path + "'");
    out << text;
    if (!out.flush()) throw relprop::DataError("cannot write file '" + path + "'");
}

struct CommonFitFlags {
    int maxiter = 100;
    int ensemble_size = 10;
    double smoothing = 1.0;
    std::uint64_t seed = 1;
    std::string combination = "mean";
};

relprop::Combination parse_combination(const std::string& rule) {
    return rule == "vote" ? relprop::Combination::MajorityVote
                          : relprop::Combination::MeanPosterior;
}

void add_fit_flags(CLI::App* cmd, CommonFitFlags& flags) {
    cmd->add_option("--maxiter", flags.maxiter, "search iterations")
        ->capture_default_str();
    cmd->add_option("--ensemble-size", flags.ensemble_size,
                    "archived subsets kept as ensemble members")
        ->capture_default_str();
    cmd->add_option("--smoothing", flags.smoothing, "Laplace smoothing alpha")
        ->capture_default_str();
    cmd->add_option("--seed", flags.seed, "random seed")->capture_default_str();
    cmd->add_option("--combination", flags.combination, "posterior combination rule")
        ->check(CLI::IsMember({"mean", "vote"}))
        ->capture_default_str();
}

int run_mine(const std::string& facts_path, const std::string& bias_path,
             double min_support, int max_length, const std::string& out_path) {
    relprop::ParsedDataset parsed =
        relprop::parse_dataset(read_file(facts_path), read_file(bias_path));
    relprop::MiningConfig cfg{min_support, max_length, parsed.bias};
    for (const std::string& w : relprop::mining_warnings(parsed.dataset, cfg)) {
        std::cerr << "warning: " << w << "\n";
    }
    relprop::FeatureSet fs = relprop::mine(parsed.dataset, cfg);
    write_file(out_path, relprop::write_features(fs));
    std::cout << "mined " << fs.size() << " frequent queries from "
              << parsed.dataset.size() << " examples; written to " << out_path << "\n";
    return 0;
}

int run_fit(const std::string& facts_path, const std::string& bias_path,
            const std::string& features_path, const CommonFitFlags& flags,
            const std::string& archive_path, const std::string& out_path) {
    relprop::ParsedDataset parsed =
        relprop::parse_dataset(read_file(facts_path), read_file(bias_path));
    relprop::FeatureSet fs = relprop::read_features(read_file(features_path));
    relprop::FeatureMatrix matrix = relprop::build_matrix(parsed.dataset, fs);

    relprop::GraspConfig gcfg;
    gcfg.maxiter = flags.maxiter;
    gcfg.rng_seed = flags.seed;
    gcfg.smoothing = flags.smoothing;
    std::vector<relprop::ArchiveEntry> archive;
    relprop::Ensemble ensemble =
        relprop::rsm_fit(matrix, gcfg, flags.ensemble_size,
                         parse_combination(flags.combination), &archive);
    if (!archive_path.empty()) {
        write_file(archive_path, relprop::write_archive(archive));
    }
    if (static_cast<int>(ensemble.members.size()) < ensemble.requested_size) {
        std::cerr << "note: archive holds " << ensemble.members.size()
                  << " solutions, fewer than the requested ensemble size "
                  << ensemble.requested_size << "\n";
    }
    relprop::ModelFile model{parsed.dataset.class_names, parsed.bias, std::move(fs),
                             std::move(ensemble)};
    write_file(out_path, relprop::write_model(model));
    std::cout << "archive of " << archive.size() << " solutions, best training error "
              << archive.back().solution.score << "/" << parsed.dataset.size() << "; "
              << model.ensemble.members.size() << "-member model written to " << out_path
              << "\n";
    return 0;
}

int run_predict(const std::string& model_path, const std::string& facts_path,
                const std::string& out_path) {
    relprop::ModelFile model = relprop::read_model(read_file(model_path));
    relprop::Dataset data = relprop::parse_dataset_with_classes(
        read_file(facts_path), model.bias, model.class_names);
    relprop::FeatureMatrix matrix = relprop::build_matrix(data, model.features);

    std::string csv = "id,predicted_label";
    for (const std::string& name : model.class_names) csv += ",posterior_" + name;
    csv += "\n";
    char buf[64];
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        relprop::Prediction p = relprop::rsm_predict(model.ensemble, matrix.full_row(r));
        csv += data.examples[r].id + "," + model.class_names[p.class_index - 1];
        for (double v : p.posterior) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            csv += ',';
            csv += buf;
        }
        csv += "\n";
    }
    write_file(out_path, csv);
    std::cout << matrix.rows() << " predictions written to " << out_path << "\n";
    return 0;
}

int run_cv(const std::string& facts_path, const std::string& bias_path, int folds,
           double min_support, int max_length, const CommonFitFlags& flags,
           const std::string& positive_label, const std::string& report_path) {
    relprop::ParsedDataset parsed =
        relprop::parse_dataset(read_file(facts_path), read_file(bias_path));

    relprop::EvalConfig cfg;
    cfg.folds = folds;
    cfg.seed = flags.seed;
    cfg.min_support = min_support;
    cfg.max_length = max_length;
    cfg.maxiter = flags.maxiter;
    cfg.ensemble_size = flags.ensemble_size;
    cfg.smoothing = flags.smoothing;
    cfg.combination = parse_combination(flags.combination);
    if (!positive_label.empty()) {
        cfg.positive_class = 0;
        for (std::size_t j = 0; j < parsed.dataset.class_names.size(); ++j) {
            if (parsed.dataset.class_names[j] == positive_label) {
                cfg.positive_class = static_cast<int>(j) + 1;
            }
        }
        if (cfg.positive_class == 0) {
            throw relprop::ConfigError("positive label '" + positive_label +
                                       "' is not a class of the dataset");
        }
    }

    relprop::EvalReport report = relprop::cross_validate(parsed.dataset, parsed.bias, cfg);
    for (const std::string& w : report.warnings) std::cerr << "warning: " << w << "\n";
    write_file(report_path, relprop::render_report(report));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f +/- %.4f", report.accuracy_mean,
                  report.accuracy_stddev);
    std::cout << folds << "-fold accuracy " << buf << "; report written to "
              << report_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relational propositionalization, subset search, and ensemble "
                 "classification"};
    app.require_subcommand(1);

    std::string facts, bias, features, model_path, out, report, archive_out;
    std::string positive_label;
    double min_support = 0.1;
    int max_length = 6;
    int folds = 10;
    CommonFitFlags fit_flags, cv_flags;

    CLI::App* mine_cmd = app.add_subcommand("mine", "mine frequent queries");
    mine_cmd->add_option("--facts", facts, "facts file")->required();
    mine_cmd->add_option("--bias", bias, "bias file")->required();
    mine_cmd->add_option("--min-support", min_support, "minimum support fraction")
        ->capture_default_str();
    mine_cmd->add_option("--max-length", max_length, "maximum atoms per query")
        ->capture_default_str();
    mine_cmd->add_option("--out", out, "features output file")->required();

    CLI::App* fit_cmd = app.add_subcommand("fit", "select subsets and fit an ensemble");
    fit_cmd->add_option("--facts", facts, "facts file")->required();
    fit_cmd->add_option("--bias", bias, "bias file")->required();
    fit_cmd->add_option("--features", features, "mined features file")->required();
    add_fit_flags(fit_cmd, fit_flags);
    fit_cmd->add_option("--archive-out", archive_out, "also write the search archive");
    fit_cmd->add_option("--out", out, "model output file")->required();

    CLI::App* predict_cmd = app.add_subcommand("predict", "classify a facts file");
    predict_cmd->add_option("--model", model_path, "model file")->required();
    predict_cmd->add_option("--facts", facts, "facts file")->required();
    predict_cmd->add_option("--out", out, "CSV output file")->required();

    CLI::App* cv_cmd = app.add_subcommand("cv", "k-fold cross-validation");
    cv_cmd->add_option("--facts", facts, "facts file")->required();
    cv_cmd->add_option("--bias", bias, "bias file")->required();
    cv_cmd->add_option("--folds", folds, "number of folds")->capture_default_str();
    cv_cmd->add_option("--min-support", min_support, "minimum support fraction")
        ->capture_default_str();
    cv_cmd->add_option("--max-length", max_length, "maximum atoms per query")
        ->capture_default_str();
    add_fit_flags(cv_cmd, cv_flags);
    cv_cmd->add_option("--positive-label", positive_label,
                       "class scored by the AUC metrics (default: first declared)");
    cv_cmd->add_option("--report", report, "report output file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (mine_cmd->parsed()) return run_mine(facts, bias, min_support, max_length, out);
        if (fit_cmd->parsed()) {
            return run_fit(facts, bias, features, fit_flags, archive_out, out);
        }
        if (predict_cmd->parsed()) return run_predict(model_path, facts, out);
        if (cv_cmd->parsed()) {
            return run_cv(facts, bias, folds, min_support, max_length, cv_flags,
                          positive_label, report);
        }
    } catch (const relprop::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const relprop::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const relprop::DataError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
