#include "relprop/miner.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>

#include "relprop/errors.hpp"
#include "relprop/parser.hpp"
#include "relprop/subsume.hpp"

namespace relprop {

namespace {

const BiasDecl* find_decl(const std::vector<BiasDecl>& bias, const std::string& pred) {
    for (const BiasDecl& d : bias) {
        if (d.predicate == pred) return &d;
    }
    return nullptr;
}

/// Type of each query variable, read off the positions it occupies.
std::map<std::string, std::string> variable_types(const Query& q,
                                                  const std::vector<BiasDecl>& bias) {
    std::map<std::string, std::string> types;
    for (const Atom& a : q.atoms) {
        const BiasDecl* d = find_decl(bias, a.predicate);
        if (!d) continue;
        for (int i = 0; i < a.arity() && i < d->arity(); ++i) {
            if (a.args[i].is_variable()) types.emplace(a.args[i].name, d->arg_types[i]);
        }
    }
    return types;
}

/// Next unused variable name of the form V<n>, counting up from the parent
/// query's variable count and stepping over names it already uses.
std::string fresh_name(const Query& q, int& counter) {
    while (true) {
        std::string name = "V" + std::to_string(counter);
        ++counter;
        if (var_index(q, name) < 0) return name;
    }
}

/// Rename-invariant bucket key for duplicate detection: atom and variable
/// counts plus the sorted per-atom argument patterns. Equivalent queries
/// always collide; colliding queries are confirmed with oi_equivalent.
std::string canonical_key(const Query& q) {
    std::vector<std::string> sigs;
    for (const Atom& a : q.atoms) {
        std::map<std::string, int> local;
        std::string s = a.predicate;
        s += '(';
        for (const Term& t : a.args) {
            if (t.is_variable()) {
                auto it = local.emplace(t.name, static_cast<int>(local.size())).first;
                s += 'v' + std::to_string(it->second);
            } else {
                s += '\'' + t.name;
            }
            s += ',';
        }
        s += ')';
        sigs.push_back(std::move(s));
    }
    std::sort(sigs.begin(), sigs.end());
    std::string key =
        std::to_string(q.atoms.size()) + "|" + std::to_string(q.vars.size());
    for (const std::string& s : sigs) {
        key += '|';
        key += s;
    }
    return key;
}

std::vector<Query> seed_queries(const std::vector<BiasDecl>& bias) {
    std::vector<Query> seeds;
    for (const BiasDecl& d : bias) {
        Atom a;
        a.predicate = d.predicate;
        for (int i = 0; i < d.arity(); ++i) {
            a.args.push_back(make_var("V" + std::to_string(i)));
        }
        seeds.push_back(make_query({std::move(a)}));
    }
    return seeds;
}

/// Keeps the first representative of every equivalence class, in input order.
std::vector<Query> dedup_candidates(std::vector<Query> candidates) {
    std::vector<Query> kept;
    std::map<std::string, std::vector<std::size_t>> buckets;
    for (Query& c : candidates) {
        std::vector<std::size_t>& bucket = buckets[canonical_key(c)];
        bool duplicate = false;
        for (std::size_t i : bucket) {
            if (oi_equivalent(c, kept[i])) {
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            bucket.push_back(kept.size());
            kept.push_back(std::move(c));
        }
    }
    return kept;
}

}  // namespace

std::vector<Query> refine(const Query& q, const std::vector<BiasDecl>& bias) {
    std::map<std::string, std::string> types = variable_types(q, bias);
    std::vector<Query> out;

    for (const BiasDecl& d : bias) {
        // Per-position options: existing variables of the declared type in
        // first-occurrence order, then (except for key positions) one fresh
        // slot, marked by an empty name.
        std::vector<std::vector<Term>> options(d.arity());
        for (int pos = 0; pos < d.arity(); ++pos) {
            const std::string& want = d.arg_types[pos];
            for (const Term& v : q.vars) {
                auto it = types.find(v.name);
                if (it != types.end() && it->second == want) options[pos].push_back(v);
            }
            if (want != "key") options[pos].push_back(Term{TermKind::Variable, ""});
        }
        if (std::any_of(options.begin(), options.end(),
                        [](const std::vector<Term>& o) { return o.empty(); })) {
            continue;
        }

        // Odometer over the option lists, rightmost position fastest.
        std::vector<std::size_t> pick(d.arity(), 0);
        while (true) {
            bool links = false;
            for (int pos = 0; pos < d.arity(); ++pos) {
                if (!options[pos][pick[pos]].name.empty()) links = true;
            }
            if (links) {
                Atom a;
                a.predicate = d.predicate;
                int counter = static_cast<int>(q.vars.size());
                for (int pos = 0; pos < d.arity(); ++pos) {
                    const Term& t = options[pos][pick[pos]];
                    a.args.push_back(t.name.empty() ? make_var(fresh_name(q, counter)) : t);
                }
                std::vector<Atom> atoms = q.atoms;
                atoms.push_back(std::move(a));
                Query ext = make_query(std::move(atoms));
                if (!oi_equivalent(ext, q)) out.push_back(std::move(ext));
            }
            int pos = d.arity() - 1;
            while (pos >= 0 && ++pick[pos] == options[pos].size()) {
                pick[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return out;
}

FeatureSet mine(const Dataset& data, const MiningConfig& cfg) {
    if (!(cfg.min_support > 0.0) || cfg.min_support > 1.0) {
        throw ConfigError("min_support must lie in (0, 1]");
    }
    if (cfg.max_length < 1) throw ConfigError("max_length must be at least 1");
    if (data.examples.empty()) throw DataError("cannot mine an empty dataset");

    std::vector<ExampleIndex> indexes;
    indexes.reserve(data.examples.size());
    for (const Example& ex : data.examples) indexes.emplace_back(ex);
    const int n = data.size();

    FeatureSet out;
    std::vector<Query> frontier;
    for (int level = 1; level <= cfg.max_length; ++level) {
        std::vector<Query> candidates;
        if (level == 1) {
            candidates = seed_queries(cfg.bias);
        } else {
            for (const Query& q : frontier) {
                std::vector<Query> exts = refine(q, cfg.bias);
                std::move(exts.begin(), exts.end(), std::back_inserter(candidates));
            }
        }

        std::vector<Query> next;
        for (Query& c : dedup_candidates(std::move(candidates))) {
            int count = 0;
            for (const ExampleIndex& idx : indexes) {
                if (oi_subsumes(c, idx)) ++count;
            }
            double support = static_cast<double>(count) / n;
            if (support >= cfg.min_support) {
                out.queries.push_back(c);
                out.supports.push_back(support);
                next.push_back(std::move(c));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return out;
}

std::vector<std::string> mining_warnings(const Dataset& data, const MiningConfig& cfg) {
    std::vector<std::string> warnings;
    char buf[64];
    if (cfg.min_support * data.size() < 1.0 && cfg.min_support > 0.0) {
        std::snprintf(buf, sizeof buf, "%g", cfg.min_support);
        warnings.push_back(std::string("min_support ") + buf + " on " +
                           std::to_string(data.size()) +
                           " examples is below one example; every query with a single "
                           "match counts as frequent");
    }
    if (cfg.bias.empty()) {
        warnings.push_back("bias declares no predicates; mining will find nothing");
    }
    return warnings;
}

std::string write_features(const FeatureSet& fs) {
    std::string text;
    char buf[64];
    for (std::size_t i = 0; i < fs.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", fs.supports[i]);
        text += buf;
        text += '\t';
        text += to_string(fs.queries[i]);
        text += ".\n";
    }
    return text;
}

FeatureSet read_features(const std::string& text) {
    FeatureSet fs;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        std::string line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (line.empty() || line[0] == '%') {
            if (start > text.size()) break;
            continue;
        }
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ParseError(line_no, 1, "expected '<support>\\t<query>.'");
        }
        std::string num = line.substr(0, tab);
        char* after = nullptr;
        double support = std::strtod(num.c_str(), &after);
        if (after == num.c_str() || *after != '\0') {
            throw ParseError(line_no, 1, "bad support value '" + num + "'");
        }
        try {
            fs.queries.push_back(parse_query(line.substr(tab + 1)));
        } catch (const ParseError& e) {
            throw ParseError(line_no, static_cast<int>(tab) + 1 + e.column(), e.detail());
        }
        fs.supports.push_back(support);
        if (start > text.size()) break;
    }
    return fs;
}

}  // namespace relprop
