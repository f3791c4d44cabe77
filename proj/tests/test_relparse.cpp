#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "relprop/errors.hpp"
#include "relprop/logic.hpp"
#include "relprop/parser.hpp"

using fixture::throws_containing;
using namespace relprop;

TEST_SUITE("relparse") {

TEST_CASE("bias declarations parse with types and key positions") {
    auto bias = parse_bias(
        "% comment line\n"
        "decl(bond(key, atom, atom)).\n"
        "decl(charge(key, level)).\n");
    REQUIRE(bias.size() == 2);
    CHECK(bias[0].predicate == "bond");
    CHECK(bias[0].arg_types == std::vector<std::string>{"key", "atom", "atom"});
    CHECK(bias[0].key_positions == std::vector<int>{0});
    CHECK(bias[1].predicate == "charge");
    CHECK(bias[1].arity() == 2);
    CHECK(to_string(bias[0]) == "decl(bond(key, atom, atom)).");
}

TEST_CASE("bias rejects malformed and duplicate declarations") {
    CHECK_THROWS_AS(parse_bias("decl(p(key, obj))"), ParseError);   // missing dot
    CHECK_THROWS_AS(parse_bias("p(key, obj)."), ParseError);        // not a decl
    CHECK_THROWS_AS(parse_bias("decl(p(obj, obj))."), ParseError);  // no key slot
    CHECK(throws_containing<ParseError>(
        [] { parse_bias("decl(p(key, key))."); }, "exactly one"));
    CHECK(throws_containing<ParseError>(
        [] { parse_bias("decl(example(key))."); }, "reserved"));
    CHECK(throws_containing<ParseError>(
        [] { parse_bias("decl(decl(key))."); }, "reserved"));
    CHECK(throws_containing<ParseError>(
        [] { parse_bias("decl(p(key)).\ndecl(p(key, obj))."); }, "duplicate"));
}

TEST_CASE("t1 dataset loads with first-appearance class order") {
    const auto& [data, bias] = fixture::t1();
    CHECK(data.size() == 12);
    CHECK(data.num_classes == 2);
    CHECK(data.class_names == std::vector<std::string>{"pos", "neg"});
    CHECK(bias.size() == 2);
    CHECK(data.examples[0].id == "e1");
    CHECK(data.examples[0].label == 1);
    CHECK(data.examples[0].facts.size() == 3);
    CHECK(data.examples[6].id == "e7");
    CHECK(data.examples[6].label == 2);
    // Facts keep their file order within an example.
    CHECK(to_string(data.examples[0].facts[0]) == "p(e1, a)");
    CHECK(to_string(data.examples[0].facts[1]) == "q(e1, a, b)");
}

TEST_CASE("exact duplicate facts collapse") {
    auto parsed = parse_dataset(
        "example(e1, yes). example(e2, no).\n"
        "p(e1, a). p(e1, a).\n"
        "p(e2, b).\n",
        "decl(p(key, obj)).");
    CHECK(parsed.dataset.examples[0].facts.size() == 1);
}

TEST_CASE("semantic errors carry line numbers and are DataErrors") {
    const std::string bias = "decl(p(key, obj)).";
    CHECK(throws_containing<DataError>(
        [&] {
            parse_dataset("example(e1, yes).\nexample(e2, no).\np(e9, a).\n", bias);
        },
        "line 3"));
    CHECK(throws_containing<DataError>(
        [&] {
            parse_dataset("example(e1, yes).\nexample(e2, no).\nq(e1, a).\n", bias);
        },
        "no bias declaration"));
    CHECK(throws_containing<DataError>(
        [&] {
            parse_dataset("example(e1, yes).\nexample(e2, no).\np(e1, a, b).\n", bias);
        },
        "arity"));
    CHECK(throws_containing<DataError>(
        [&] {
            parse_dataset("example(e1, yes).\nexample(e2, no).\np(e1, X).\n", bias);
        },
        "ground"));
    CHECK(throws_containing<DataError>(
        [&] { parse_dataset("p(e1, a).\n", bias); }, "example"));
    CHECK(throws_containing<DataError>(
        [&] { parse_dataset("example(e1, yes).\np(e1, a).\n", bias); }, "class"));
}

TEST_CASE("syntax errors are ParseErrors with positions") {
    const std::string bias = "decl(p(key, obj)).";
    CHECK_THROWS_AS(parse_dataset("example(e1 yes).\n", bias), ParseError);
    CHECK_THROWS_AS(parse_dataset("example(e1, yes)\nexample(e2, no).\n", bias),
                    ParseError);
    CHECK(throws_containing<ParseError>(
        [&] { parse_dataset("example(e1, yes).\nexample(e1, no).\n", bias); },
        "duplicate"));
    try {
        parse_dataset("example(e1, yes).\n@@\n", bias);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("2:") != std::string::npos);
    }
}

TEST_CASE("prediction parsing maps labels through a fixed class table") {
    auto bias = parse_bias("decl(p(key, obj)).");
    Dataset d = parse_dataset_with_classes(
        "example(m1, neg). example(m2, odd). example(m3, pos).\n"
        "p(m1, a).\n",
        bias, {"pos", "neg"});
    CHECK(d.examples[0].label == 2);
    CHECK(d.examples[1].label == 0);  // not in the table: unknown
    CHECK(d.examples[2].label == 1);
    CHECK(d.num_classes == 2);
    CHECK(d.class_names == std::vector<std::string>{"pos", "neg"});
}

TEST_CASE("queries parse with interned variables") {
    Query q = parse_query("bond(K, X, Y), bond(K, Y, Z).");
    CHECK(q.length() == 2);
    REQUIRE(q.vars.size() == 4);
    CHECK(q.vars[0].name == "K");
    CHECK(q.vars[3].name == "Z");
    // Same-name variables are the same Term.
    CHECK(q.atoms[0].args[2] == q.atoms[1].args[1]);
    CHECK(to_string(q) == "bond(K, X, Y), bond(K, Y, Z)");

    // Trailing dot optional; constants stay constants.
    Query ground = parse_query("p(a)");
    CHECK(ground.length() == 1);
    CHECK(ground.vars.empty());
}

TEST_CASE("queries must be linked and syntactically clean") {
    CHECK(throws_containing<ParseError>(
        [] { parse_query("p(X, Y), q(Z, Z, W)."); }, "share"));
    CHECK_THROWS_AS(parse_query("p(X,"), ParseError);
    CHECK_THROWS_AS(parse_query("p(X). q(X)."), ParseError);  // trailing input
    CHECK_THROWS_AS(parse_query(""), ParseError);
}

}  // TEST_SUITE
