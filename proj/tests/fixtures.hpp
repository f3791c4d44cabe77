#ifndef RELPROP_TESTS_FIXTURES_HPP
#define RELPROP_TESTS_FIXTURES_HPP

#include <random>
#include <string>
#include <vector>

#include "relprop/logic.hpp"
#include "relprop/miner.hpp"
#include "relprop/parser.hpp"
#include "relprop/propmat.hpp"

namespace fixture {

/// Reads a whole file or aborts; paths are usually rooted at data_dir().
std::string slurp(const std::string& path);
std::string data_dir();

/// The t1 dataset parsed once: 12 examples, two balanced classes (pos, neg),
/// a unary tag predicate p and a binary edge predicate q.
const relprop::ParsedDataset& t1();

/// t1 mined at min_support 0.25, max_length 2 (9 queries), and the matrix
/// built from it. Computed once.
const relprop::FeatureSet& t1_features();
const relprop::FeatureMatrix& t1_matrix();

/// Random well-formed (linked, interned) query over predicates r/1, s/2,
/// t/3, with at most max_vars distinct variables and constants drawn from a
/// six-constant pool.
relprop::Query random_query(std::mt19937_64& gen, int max_atoms = 3, int max_vars = 4);

/// Random ground example over the same vocabulary, at most max_facts facts.
relprop::Example random_example(std::mt19937_64& gen, int max_facts = 6);

/// Random labeled boolean matrix: rows in [min_rows, max_rows], 1..max_cols
/// columns, 2..max_classes classes, every class inhabited.
relprop::FeatureMatrix random_matrix(std::mt19937_64& gen, int min_rows = 4,
                                     int max_rows = 20, int max_cols = 12,
                                     int max_classes = 3);

/// True if fn() throws E whose what() contains `needle`.
template <class E, class Fn>
bool throws_containing(Fn fn, const std::string& needle) {
    try {
        fn();
    } catch (const E& e) {
        return std::string(e.what()).find(needle) != std::string::npos;
    } catch (...) {
        return false;
    }
    return false;
}

}  // namespace fixture

#endif
