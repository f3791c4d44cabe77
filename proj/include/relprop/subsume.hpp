#ifndef RELPROP_SUBSUME_HPP
#define RELPROP_SUBSUME_HPP

#include <map>
#include <string>
#include <vector>

#include "relprop/logic.hpp"

namespace relprop {

/// Facts of one example indexed by predicate, for fast candidate lookup
/// during matching.
class ExampleIndex {
public:
    explicit ExampleIndex(const Example& ex);

    const std::vector<Atom>& candidates(const std::string& predicate) const;
    bool has_constant(const std::string& name) const;

private:
    std::map<std::string, std::vector<Atom>> by_predicate_;
    std::vector<std::string> constants_;  // sorted
    static const std::vector<Atom> empty_;
};

/// Tests whether the query matches the example under object identity:
/// there must be a substitution mapping each query variable to a distinct
/// constant of the example, distinct also from every constant appearing in
/// the query itself, such that every substituted atom is a fact of the
/// example.
bool oi_subsumes(const Query& q, const ExampleIndex& index);
bool oi_subsumes(const Query& q, const Example& ex);

/// Tests whether two queries are equivalent under object identity, i.e.
/// each OI-subsumes the other when the other's variables are frozen to
/// fresh constants.
bool oi_equivalent(const Query& a, const Query& b);

}  // namespace relprop

#endif
