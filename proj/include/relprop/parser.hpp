#ifndef RELPROP_PARSER_HPP
#define RELPROP_PARSER_HPP

#include <string>
#include <vector>

#include "relprop/logic.hpp"

namespace relprop {

struct ParsedDataset {
    Dataset dataset;
    std::vector<BiasDecl> bias;
};

/// Parses a bias file: one `decl(pred(type,...)).` clause per predicate.
/// Exactly one declaration per predicate; each must type exactly one
/// argument with the reserved type `key` (the example-id slot).
std::vector<BiasDecl> parse_bias(const std::string& bias_text);

/// Parses a facts file (example/2 declarations plus ground facts keyed by
/// example id) against a bias file. Labels are mapped to 1-based class
/// indices in first-appearance order. Throws ParseError on syntax problems,
/// DataError on semantic ones (unknown example id, undeclared predicate,
/// arity mismatch, fewer than two classes).
ParsedDataset parse_dataset(const std::string& facts_text, const std::string& bias_text);

/// Like parse_dataset, but for prediction data: labels are mapped through
/// `class_names` (a trained model's table); labels not in the table yield
/// label 0 (unknown), and a single-class file is acceptable.
Dataset parse_dataset_with_classes(const std::string& facts_text,
                                   const std::vector<BiasDecl>& bias,
                                   const std::vector<std::string>& class_names);

/// Parses a comma-separated atom conjunction, e.g. "bond(K,X,Y), bond(K,Y,Z)".
/// A trailing '.' is accepted. Same-name variables are interned to the same
/// Term; atoms after the first must share a variable with the preceding ones.
Query parse_query(const std::string& text);

}  // namespace relprop

#endif
