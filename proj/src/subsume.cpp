#include "relprop/subsume.hpp"

#include <algorithm>
#include <set>

namespace relprop {

const std::vector<Atom> ExampleIndex::empty_{};

ExampleIndex::ExampleIndex(const Example& ex) {
    for (const Atom& fact : ex.facts) {
        by_predicate_[fact.predicate].push_back(fact);
        for (const Term& t : fact.args) {
            constants_.push_back(t.name);
        }
    }
    std::sort(constants_.begin(), constants_.end());
    constants_.erase(std::unique(constants_.begin(), constants_.end()), constants_.end());
}

const std::vector<Atom>& ExampleIndex::candidates(const std::string& predicate) const {
    auto it = by_predicate_.find(predicate);
    return it == by_predicate_.end() ? empty_ : it->second;
}

bool ExampleIndex::has_constant(const std::string& name) const {
    return std::binary_search(constants_.begin(), constants_.end(), name);
}

namespace {

struct Matcher {
    const Query& q;
    const ExampleIndex& index;
    std::set<std::string> query_constants;
    std::map<std::string, std::string> binding;  // variable name -> constant
    std::set<std::string> used;                  // constants already bound

    Matcher(const Query& q_, const ExampleIndex& index_) : q(q_), index(index_) {
        for (const Atom& a : q.atoms) {
            for (const Term& t : a.args) {
                if (!t.is_variable()) query_constants.insert(t.name);
            }
        }
    }

    bool solve(std::size_t atom_idx) {
        if (atom_idx == q.atoms.size()) return true;
        const Atom& a = q.atoms[atom_idx];
        for (const Atom& fact : index.candidates(a.predicate)) {
            if (fact.arity() != a.arity()) continue;
            std::vector<std::string> newly_bound;
            if (try_bind(a, fact, newly_bound)) {
                if (solve(atom_idx + 1)) return true;
            }
            for (const std::string& v : newly_bound) {
                used.erase(binding[v]);
                binding.erase(v);
            }
        }
        return false;
    }

    /// Extends the binding so that a maps onto fact, or fails without
    /// touching it. Object identity: a variable may not bind a constant that
    /// is already bound, nor one that occurs in the query itself.
    bool try_bind(const Atom& a, const Atom& fact, std::vector<std::string>& newly_bound) {
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            const Term& t = a.args[i];
            const std::string& value = fact.args[i].name;
            if (!t.is_variable()) {
                if (t.name != value) return rollback(newly_bound);
            } else {
                auto it = binding.find(t.name);
                if (it != binding.end()) {
                    if (it->second != value) return rollback(newly_bound);
                } else {
                    if (used.count(value) || query_constants.count(value)) {
                        return rollback(newly_bound);
                    }
                    binding[t.name] = value;
                    used.insert(value);
                    newly_bound.push_back(t.name);
                }
            }
        }
        return true;
    }

    bool rollback(std::vector<std::string>& newly_bound) {
        for (const std::string& v : newly_bound) {
            used.erase(binding[v]);
            binding.erase(v);
        }
        newly_bound.clear();
        return false;
    }
};

/// Rewrites the query's variables to constants no source text can produce,
/// so the result can stand in as an example for matching against.
Example freeze(const Query& q) {
    Example ex;
    ex.id = "\x01frozen";
    for (const Atom& a : q.atoms) {
        Atom fa;
        fa.predicate = a.predicate;
        for (const Term& t : a.args) {
            fa.args.push_back(t.is_variable() ? make_const("\x01" + t.name) : t);
        }
        ex.facts.push_back(std::move(fa));
    }
    return ex;
}

}  // namespace

bool oi_subsumes(const Query& q, const ExampleIndex& index) {
    Matcher m(q, index);
    return m.solve(0);
}

bool oi_subsumes(const Query& q, const Example& ex) {
    return oi_subsumes(q, ExampleIndex(ex));
}

bool oi_equivalent(const Query& a, const Query& b) {
    return oi_subsumes(a, freeze(b)) && oi_subsumes(b, freeze(a));
}

}  // namespace relprop
