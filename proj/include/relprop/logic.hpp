#ifndef RELPROP_LOGIC_HPP
#define RELPROP_LOGIC_HPP

#include <string>
#include <vector>

namespace relprop {

enum class TermKind { Variable, Constant };

/// A logic term. Variable names start with an uppercase letter or '_',
/// constant names with a lowercase letter or a digit (Prolog convention).
struct Term {
    TermKind kind;
    std::string name;

    bool is_variable() const { return kind == TermKind::Variable; }
    bool operator==(const Term& o) const { return kind == o.kind && name == o.name; }
    bool operator!=(const Term& o) const { return !(*this == o); }
};

Term make_var(std::string name);
Term make_const(std::string name);

/// True if `name` lexes as a variable (uppercase or '_' start).
bool is_variable_name(const std::string& name);

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    int arity() const { return static_cast<int>(args.size()); }
    bool is_ground() const;
    bool operator==(const Atom& o) const { return predicate == o.predicate && args == o.args; }
    bool operator!=(const Atom& o) const { return !(*this == o); }
};

/// One labeled observation: an id, its ground facts, and a 1-based class
/// index. Label 0 marks an example whose class is unknown; such examples are
/// produced only when parsing data for prediction and are rejected by fitting.
struct Example {
    std::string id;
    std::vector<Atom> facts;
    int label = 0;
};

struct Dataset {
    std::vector<Example> examples;
    int num_classes = 0;
    /// Class names in first-appearance order; class_names[j-1] is class j.
    std::vector<std::string> class_names;

    int size() const { return static_cast<int>(examples.size()); }
};

/// Language-bias declaration for one predicate: the argument types, with the
/// reserved type "key" marking the positions that hold the example id.
struct BiasDecl {
    std::string predicate;
    std::vector<std::string> arg_types;
    std::vector<int> key_positions;

    int arity() const { return static_cast<int>(arg_types.size()); }
};

/// An ordered conjunction of atoms. `vars` lists the distinct variables in
/// first-occurrence order. Atoms after the first must each share a variable
/// with the preceding atoms (linkedness).
struct Query {
    std::vector<Atom> atoms;
    std::vector<Term> vars;

    int length() const { return static_cast<int>(atoms.size()); }
    bool operator==(const Query& o) const { return atoms == o.atoms; }
};

/// Builds a Query from atoms, collecting vars in first-occurrence order.
/// Does not check linkedness (the parser and refinement operator do).
Query make_query(std::vector<Atom> atoms);

/// Index of `name` in q.vars, or -1.
int var_index(const Query& q, const std::string& name);

/// True if every atom after the first shares a variable with the atoms before it.
bool is_linked(const Query& q);

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Query& q);
std::string to_string(const BiasDecl& d);

}  // namespace relprop

#endif
