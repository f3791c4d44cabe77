#include "relprop/logic.hpp"

#include <algorithm>

namespace relprop {

Term make_var(std::string name) { return Term{TermKind::Variable, std::move(name)}; }
Term make_const(std::string name) { return Term{TermKind::Constant, std::move(name)}; }

bool is_variable_name(const std::string& name) {
    if (name.empty()) return false;
    char c = name[0];
    return (c >= 'A' && c <= 'Z') || c == '_';
}

bool Atom::is_ground() const {
    return std::none_of(args.begin(), args.end(),
                        [](const Term& t) { return t.is_variable(); });
}

Query make_query(std::vector<Atom> atoms) {
    Query q;
    q.atoms = std::move(atoms);
    for (const Atom& a : q.atoms) {
        for (const Term& t : a.args) {
            if (t.is_variable() && var_index(q, t.name) < 0) q.vars.push_back(t);
        }
    }
    return q;
}

int var_index(const Query& q, const std::string& name) {
    for (size_t i = 0; i < q.vars.size(); ++i) {
        if (q.vars[i].name == name) return static_cast<int>(i);
    }
    return -1;
}

bool is_linked(const Query& q) {
    std::vector<std::string> seen;
    for (size_t k = 0; k < q.atoms.size(); ++k) {
        const Atom& a = q.atoms[k];
        bool shares = false;
        for (const Term& t : a.args) {
            if (!t.is_variable()) continue;
            if (std::find(seen.begin(), seen.end(), t.name) != seen.end()) shares = true;
        }
        if (k > 0 && !shares) return false;
        for (const Term& t : a.args) {
            if (t.is_variable() &&
                std::find(seen.begin(), seen.end(), t.name) == seen.end()) {
                seen.push_back(t.name);
            }
        }
    }
    return true;
}

std::string to_string(const Term& t) { return t.name; }

std::string to_string(const Atom& a) {
    std::string s = a.predicate;
    s += '(';
    for (size_t i = 0; i < a.args.size(); ++i) {
        if (i > 0) s += ", ";
        s += a.args[i].name;
    }
    s += ')';
    return s;
}

std::string to_string(const Query& q) {
    std::string s;
    for (size_t i = 0; i < q.atoms.size(); ++i) {
        if (i > 0) s += ", ";
        s += to_string(q.atoms[i]);
    }
    return s;
}

std::string to_string(const BiasDecl& d) {
    std::string s = "decl(" + d.predicate + "(";
    for (size_t i = 0; i < d.arg_types.size(); ++i) {
        if (i > 0) s += ", ";
        s += d.arg_types[i];
    }
    s += ")).";
    return s;
}

}  // namespace relprop
