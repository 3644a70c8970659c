#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "subpair/cli.hpp"
#include "subpair/functor.hpp"

using namespace subpair;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_doc(const std::string& name, const std::string& text) {
    std::string path = "cli_" + name + ".json";
    std::ofstream f(path);
    f << text;
    return path;
}

bool has(const std::string& s, const std::string& needle) {
    return s.find(needle) != std::string::npos;
}

const char* q13_zmod = R"({"ring": {"kind": "zmod", "p": 2, "n": 3}, "B": [3, 1], "A": [[2, 1]]})";
const char* q13_trunc =
    R"({"ring": {"kind": "truncpoly", "p": 2, "n": 3}, "B": [3, 1], "A": [[[0, 1], [1]]]})";

}  // namespace

TEST_CASE("pair documents parse for both ring encodings") {
    PairDocument dz = parse_pair_document(q13_zmod);
    CHECK(dz.ring == RingSpec::zmod(2, 3));
    CHECK(dz.parts == std::vector<int>{3, 1});
    CHECK(dz.agens == std::vector<std::vector<i64>>{{2, 1}});
    CHECK(dz.m == 2);

    PairDocument dt = parse_pair_document(q13_trunc);
    CHECK(dt.ring == RingSpec::truncpoly(2, 3));
    CHECK(dt.agens == std::vector<std::vector<i64>>{{2, 1}});

    DecompReport expect;
    expect.add(PairLabel::qpair(1, 3));
    CHECK(classify_s2(document_pair(dz)) == expect);
    CHECK(classify_s2(document_pair(dt)) == expect);

    PairDocument dm = parse_pair_document(
        R"({"ring": {"kind": "zmod", "p": 2, "n": 2}, "B": [2], "A": [[2]], "m": 1})");
    CHECK(dm.m == 1);
    CHECK(document_pair(dm).A().length() == 1);
}

TEST_CASE("zmod coordinates accept integers and decimal strings") {
    PairDocument d = parse_pair_document(
        R"({"ring": {"kind": "zmod", "p": 2, "n": 3}, "B": [3], "A": [["123456789890"], [-3]]})");
    CHECK(d.agens[0][0] == 2);
    CHECK(d.agens[1][0] == 5);

    PairDocument big = parse_pair_document(
        R"({"ring": {"kind": "zmod", "p": 3, "n": 2},
            "B": [2], "A": [["99999999999999999999999999994"]]})");
    CHECK(big.agens[0][0] == 4);
}

TEST_CASE("truncpoly digit arrays are validated and reduced") {
    PairDocument d = parse_pair_document(
        R"({"ring": {"kind": "truncpoly", "p": 2, "n": 2},
            "B": [2, 1], "A": [[[1, 1], [1, 0, 0, 0]]]})");
    CHECK(d.agens[0][0] == 3);
    CHECK(d.agens[0][1] == 1);

    CHECK_THROWS_AS(parse_pair_document(R"({"ring": {"kind": "truncpoly", "p": 2, "n": 2},
                                            "B": [2], "A": [[[2]]]})"),
                    input_error);
    CHECK_THROWS_AS(parse_pair_document(R"({"ring": {"kind": "truncpoly", "p": 2, "n": 2},
                                            "B": [2], "A": [[7]]})"),
                    input_error);
}

TEST_CASE("pair documents reject malformed input with located messages") {
    CHECK_THROWS_AS(parse_pair_document("{"), input_error);
    CHECK_THROWS_AS(parse_pair_document("[1, 2]"), input_error);
    CHECK_THROWS_AS(parse_pair_document(R"({"B": [1]})"), input_error);
    CHECK_THROWS_AS(parse_pair_document(
                        R"({"ring": {"kind": "galois", "p": 2, "n": 1}, "B": [1]})"),
                    input_error);
    CHECK_THROWS_AS(parse_pair_document(
                        R"({"ring": {"kind": "zmod", "p": 4, "n": 1}, "B": [1]})"),
                    input_error);
    CHECK_THROWS_AS(parse_pair_document(
                        R"({"ring": {"kind": "zmod", "p": 2, "n": 2}, "B": []})"),
                    input_error);
    CHECK_THROWS_AS(parse_pair_document(
                        R"({"ring": {"kind": "zmod", "p": 2, "n": 2}, "B": [1, 2]})"),
                    input_error);
    CHECK_THROWS_AS(parse_pair_document(
                        R"({"ring": {"kind": "zmod", "p": 2, "n": 2}, "B": [3]})"),
                    input_error);
    CHECK_THROWS_AS(parse_pair_document(
                        R"({"ring": {"kind": "zmod", "p": 2, "n": 2}, "B": [2], "m": 3})"),
                    input_error);
    CHECK_THROWS_AS(parse_pair_document(
                        R"({"ring": {"kind": "zmod", "p": 2, "n": 2}, "B": [2], "A": [[1, 0]]})"),
                    input_error);
    CHECK_THROWS_AS(parse_pair_document(
                        R"({"ring": {"kind": "zmod", "p": 2, "n": 2}, "B": [2], "A": [[1.5]]})"),
                    input_error);

    try {
        parse_pair_document(R"({"ring": {"kind": "truncpoly", "p": 2, "n": 2},
                                "B": [2, 1], "A": [[[0], [3]]]})");
        CHECK(false);
    } catch (const input_error& e) {
        CHECK(has(e.what(), "A[0][1]"));
    }
}

TEST_CASE("document torsion bound is enforced") {
    CHECK_THROWS_AS(document_pair(parse_pair_document(
                        R"({"ring": {"kind": "zmod", "p": 2, "n": 3}, "B": [3], "A": [[1]]})")),
                    input_error);
    CHECK_THROWS_AS(document_pair(parse_pair_document(
                        R"({"ring": {"kind": "zmod", "p": 2, "n": 3},
                            "B": [3], "A": [[2]], "m": 1})")),
                    input_error);
    CHECK_THROWS_AS(document_pair(parse_pair_document(
                        R"({"ring": {"kind": "zmod", "p": 2, "n": 2},
                            "B": [2], "A": [[2]], "m": 0})")),
                    input_error);
    Pair ok = document_pair(parse_pair_document(
        R"({"ring": {"kind": "zmod", "p": 2, "n": 3}, "B": [3], "A": [[4]], "m": 1})"));
    CHECK(ok.A().length() == 1);
}

TEST_CASE("classify command reports, witnesses and oracle checks") {
    std::string path = write_doc("q13", q13_zmod);
    CliResult plain = run({"classify", path});
    CHECK(plain.code == 0);
    CHECK(has(plain.out, "report: Q(1,3)"));
    CHECK(has(plain.out, "status: pass"));

    CliResult wit = run({"classify", path, "--witness", "--check"});
    CHECK(wit.code == 0);
    CHECK(has(wit.out, "witness: verified"));
    CHECK(has(wit.out, "oracle: agrees"));

    std::string sum = write_doc("sum", R"({"ring": {"kind": "zmod", "p": 2, "n": 2},
        "B": [2, 1], "A": [[1, 0], [0, 1]]})");
    CliResult s = run({"classify", sum, "--witness"});
    CHECK(s.code == 0);
    CHECK(has(s.out, "P(1,1) + P(2,2)"));

    std::string soc = write_doc("soc", R"({"ring": {"kind": "zmod", "p": 2, "n": 2},
        "B": [2, 1], "A": [[2, 0], [0, 1]]})");
    CliResult sr = run({"classify", soc});
    CHECK(sr.code == 0);
    CHECK(has(sr.out, "P(1,1) + P(1,2)"));
}

TEST_CASE("classify exit codes distinguish input and verification errors") {
    std::string bad = write_doc("bad", "{ this is not json");
    CliResult r = run({"classify", bad});
    CHECK(r.code == 2);
    CHECK(has(r.err, "input error"));

    CliResult missing = run({"classify", "cli_no_such_file.json"});
    CHECK(missing.code == 2);
    CHECK(has(missing.err, "cannot read file"));

    std::string torsion = write_doc("torsion",
        R"({"ring": {"kind": "zmod", "p": 2, "n": 3}, "B": [3], "A": [[1]]})");
    CHECK(run({"classify", torsion}).code == 2);
}

TEST_CASE("indecomposables command counts labels") {
    CliResult n3 = run({"indecomposables", "--p", "2", "--n", "3"});
    CHECK(n3.code == 0);
    CHECK(has(n3.out, "count: 9"));
    CHECK(has(n3.out, "Q(1,3)"));
    CHECK(has(n3.out, "ring: Z/8"));

    CliResult n1 = run({"indecomposables", "--p", "3", "--n", "1"});
    CHECK(n1.code == 0);
    CHECK(has(n1.out, "count: 2"));

    CliResult n4 = run({"indecomposables", "--n", "4", "--ring", "truncpoly", "--format", "json"});
    CHECK(n4.code == 0);
    nlohmann::json j = nlohmann::json::parse(n4.out);
    CHECK(j.at("count").get<int>() == 14);
    CHECK(j.at("labels").size() == 14);
    CHECK(j.at("ring").at("kind").get<std::string>() == "truncpoly");
}

TEST_CASE("hom command reports group structure and the quotient") {
    std::string p11 = write_doc("p11",
        R"({"ring": {"kind": "zmod", "p": 2, "n": 1}, "B": [1], "A": [[1]]})");
    std::string p01 = write_doc("p01",
        R"({"ring": {"kind": "zmod", "p": 2, "n": 1}, "B": [1], "A": []})");
    CliResult r = run({"hom", p11, p01});
    CHECK(r.code == 0);
    CHECK(has(r.out, "hom length: 0"));
    CHECK(has(r.out, "quotient dim: 0"));
    CHECK(has(r.out, "rep hom dim: 0"));
    CHECK(has(r.out, "status: pass"));

    std::string q13 = write_doc("q13b", q13_zmod);
    CliResult self = run({"hom", q13, q13, "--format", "json"});
    CHECK(self.code == 0);
    nlohmann::json j = nlohmann::json::parse(self.out);
    CHECK(j.at("contains_identity").get<bool>());
    CHECK(j.at("dims_equal").get<bool>());
    CHECK(j.at("quotient_dim").get<int>() == j.at("rep_hom_dim").get<int>());

    std::string trunc = write_doc("q13t", q13_trunc);
    CHECK(run({"hom", q13, trunc}).code == 2);
}

TEST_CASE("census command verifies within the cardinality cap") {
    CliResult small = run({"census", "--p", "2", "--n", "2", "--max-parts", "2"});
    CHECK(small.code == 0);
    CHECK(has(small.out, "failures: 0"));
    CHECK(has(small.out, "status: pass"));

    setenv("SUBPAIR_MAX_CARDINALITY", "100", 1);
    CliResult capped = run({"census", "--p", "2", "--n", "3", "--max-parts", "3"});
    unsetenv("SUBPAIR_MAX_CARDINALITY");
    CHECK(capped.code == 2);
    CHECK(has(capped.err, "input error"));

    CliResult json_run = run({"census", "--p", "3", "--n", "2", "--max-parts", "2",
                              "--ring", "truncpoly", "--format", "json"});
    CHECK(json_run.code == 0);
    nlohmann::json j = nlohmann::json::parse(json_run.out);
    CHECK(j.at("failures").get<int>() == 0);
    CHECK(j.at("total_submodules").get<i64>() > 0);
    CHECK(j.at("status").get<std::string>() == "pass");
}

TEST_CASE("compare-rings command matches reports across encodings") {
    CliResult batch = run({"compare-rings", "--p", "2", "--n", "3"});
    CHECK(batch.code == 0);
    CHECK(has(batch.out, "compared: 9"));
    CHECK(has(batch.out, "status: pass"));

    std::string q13 = write_doc("q13c", q13_zmod);
    CliResult file = run({"compare-rings", q13});
    CHECK(file.code == 0);
    CHECK(has(file.out, "zmod: Q(1,3)"));
    CHECK(has(file.out, "truncpoly: Q(1,3)"));

    std::string trunc = write_doc("q13d", q13_trunc);
    CHECK(run({"compare-rings", trunc}).code == 2);
    CHECK(run({"compare-rings", "--p", "3", q13}).code == 2);
    CHECK(run({"compare-rings"}).code == 2);
}

TEST_CASE("ring mirroring preserves the classification") {
    RingSpec R = RingSpec::zmod(2, 3);
    std::vector<PairLabel> labels = all_pair_labels(3);
    for (const auto& label : labels) {
        Pair x = realize_label(R, label);
        Pair t = mirror_to_truncpoly(x);
        CHECK(t.ring() == RingSpec::truncpoly(2, 3));
        CHECK(classify_s2(t) == classify_s2(x));
    }
    Pair mixed = document_pair(parse_pair_document(
        R"({"ring": {"kind": "zmod", "p": 2, "n": 3},
            "B": [3, 2, 1], "A": [[2, 1, 0], [4, 2, 1]]})"));
    CHECK(classify_s2(mirror_to_truncpoly(mixed)) == classify_s2(mixed));
    CHECK_THROWS_AS(mirror_to_truncpoly(mirror_to_truncpoly(mixed)), input_error);
}

TEST_CASE("json output is deterministic and parseable") {
    std::string path = write_doc("q13e", q13_zmod);
    CliResult a = run({"classify", path, "--witness", "--format", "json"});
    CliResult b = run({"classify", path, "--witness", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    nlohmann::json j = nlohmann::json::parse(a.out);
    CHECK(j.at("report").get<std::string>() == "Q(1,3)");
    CHECK(j.at("witness").at("two_sided").get<bool>());
    CHECK(j.at("witness").at("preserves_submodule").get<bool>());
    CHECK(j.at("summands")[0].at("height_sequence") == nlohmann::json({0, 2}));
}

TEST_CASE("cli parse errors and help") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"indecomposables"}).code == 2);
    CHECK(run({"indecomposables", "--n", "three"}).code == 2);
    CHECK(run({"indecomposables", "--n", "2", "--ring", "galois"}).code == 2);
    CHECK(run({"census", "--n", "2", "--m", "5"}).code == 2);
    CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(has(help.out, "classify"));
    CHECK(has(help.out, "census"));
}
