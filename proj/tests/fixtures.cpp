#include "fixtures.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fixture {

using relprop::Atom;
using relprop::Example;
using relprop::FeatureMatrix;
using relprop::Query;
using relprop::Term;

std::string data_dir() { return RELPROP_DATA_DIR; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::fprintf(stderr, "fixture file missing: %s\n", path.c_str());
        std::abort();
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

const relprop::ParsedDataset& t1() {
    static const relprop::ParsedDataset parsed = relprop::parse_dataset(
        slurp(data_dir() + "/t1.facts"), slurp(data_dir() + "/t1.bias"));
    return parsed;
}

const relprop::FeatureSet& t1_features() {
    static const relprop::FeatureSet fs = [] {
        relprop::MiningConfig cfg;
        cfg.min_support = 0.25;
        cfg.max_length = 2;
        cfg.bias = t1().bias;
        return relprop::mine(t1().dataset, cfg);
    }();
    return fs;
}

const relprop::FeatureMatrix& t1_matrix() {
    static const relprop::FeatureMatrix m =
        relprop::build_matrix(t1().dataset, t1_features());
    return m;
}

namespace {

struct Vocab {
    std::vector<std::pair<std::string, int>> preds = {{"r", 1}, {"s", 2}, {"t", 3}};
    std::vector<std::string> consts = {"a", "b", "c", "d", "e", "f"};
    std::vector<std::string> vars = {"X", "Y", "Z", "W"};
};

}  // namespace

relprop::Query random_query(std::mt19937_64& gen, int max_atoms, int max_vars) {
    Vocab v;
    int natoms = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(max_atoms));
    int used = 0;
    std::vector<Atom> atoms;
    for (int k = 0; k < natoms; ++k) {
        int prev = used;  // variables visible to earlier atoms
        auto [pred, arity] = v.preds[gen() % v.preds.size()];
        Atom a{pred, {}};
        for (int p = 0; p < arity; ++p) {
            std::uint64_t roll = gen() % 10;
            if (roll < 4 && used > 0) {
                a.args.push_back(relprop::make_var(v.vars[gen() % used]));
            } else if (roll < 7 && used < max_vars) {
                a.args.push_back(relprop::make_var(v.vars[used++]));
            } else {
                a.args.push_back(relprop::make_const(v.consts[gen() % v.consts.size()]));
            }
        }
        // Linkedness: the first atom carries at least one variable, later
        // atoms at least one variable already present before them.
        if (k == 0) {
            bool has_var = false;
            for (const Term& t : a.args) has_var = has_var || t.is_variable();
            if (!has_var) {
                if (used == 0) ++used;
                a.args[gen() % a.args.size()] = relprop::make_var(v.vars[0]);
            }
        } else {
            bool shares = false;
            for (const Term& t : a.args) {
                if (t.is_variable() &&
                    std::find(v.vars.begin(), v.vars.begin() + prev, t.name) !=
                        v.vars.begin() + prev) {
                    shares = true;
                }
            }
            if (!shares) {
                a.args[gen() % a.args.size()] = relprop::make_var(v.vars[gen() % prev]);
            }
        }
        atoms.push_back(std::move(a));
    }
    return relprop::make_query(std::move(atoms));
}

relprop::Example random_example(std::mt19937_64& gen, int max_facts) {
    Vocab v;
    Example ex;
    ex.id = "ex";
    int nfacts = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(max_facts));
    for (int k = 0; k < nfacts; ++k) {
        auto [pred, arity] = v.preds[gen() % v.preds.size()];
        Atom a{pred, {}};
        for (int p = 0; p < arity; ++p) {
            a.args.push_back(relprop::make_const(v.consts[gen() % v.consts.size()]));
        }
        ex.facts.push_back(std::move(a));
    }
    return ex;
}

relprop::FeatureMatrix random_matrix(std::mt19937_64& gen, int min_rows, int max_rows,
                                     int max_cols, int max_classes) {
    int q = 2 + static_cast<int>(gen() % static_cast<std::uint64_t>(max_classes - 1));
    int n = min_rows + static_cast<int>(
                           gen() % static_cast<std::uint64_t>(max_rows - min_rows + 1));
    if (n < q) n = q;
    int d = 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(max_cols));
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(d), 0));
    std::vector<int> labels(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < d; ++c) {
            rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                static_cast<int>(gen() & 1);
        }
        labels[static_cast<std::size_t>(r)] =
            r < q ? r + 1 : 1 + static_cast<int>(gen() % static_cast<std::uint64_t>(q));
    }
    return relprop::matrix_from_rows(rows, labels);
}

}  // namespace fixture
