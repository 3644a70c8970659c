#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "subpair/oracle.hpp"

using namespace subpair;

namespace {

std::string mat_key(const ModMatrix& M) {
    std::string s;
    for (const auto& row : M)
        for (i64 v : row) {
            s += std::to_string(v);
            s += ',';
        }
    return s;
}

// Subgroup generated by the matrices; generators of a finite group close
// under forward products.
std::vector<ModMatrix> closure(const LambdaModule& B, const std::vector<ModMatrix>& gens) {
    ModMatrix id(B.rank(), std::vector<i64>(B.rank(), 0));
    for (int i = 0; i < B.rank(); ++i) id[i][i] = 1;
    std::map<std::string, int> seen;
    std::vector<ModMatrix> out{id};
    seen[mat_key(id)] = 0;
    for (size_t qi = 0; qi < out.size(); ++qi)
        for (const ModMatrix& g : gens) {
            ModMatrix m = compose_endo(B, g, out[qi]);
            if (seen.emplace(mat_key(m), 1).second) out.push_back(m);
        }
    return out;
}

std::vector<std::string> sorted_keys(const std::vector<ModMatrix>& ms) {
    std::vector<std::string> ks;
    for (const ModMatrix& m : ms) ks.push_back(mat_key(m));
    std::sort(ks.begin(), ks.end());
    return ks;
}

}  // namespace

TEST_CASE("submodule enumeration matches direct counts") {
    RingSpec z21 = RingSpec::zmod(2, 1);
    CHECK(enumerate_submodules(LambdaModule(z21, {1}), 2).size() == 2);

    RingSpec z22 = RingSpec::zmod(2, 2);
    CHECK(enumerate_submodules(LambdaModule(z22, {2}), 2).size() == 3);
    CHECK(enumerate_submodules(LambdaModule(z22, {2, 1}), 1).size() == 5);
    CHECK(enumerate_submodules(LambdaModule(z22, {2, 1}), 2).size() == 8);

    RingSpec t22 = RingSpec::truncpoly(2, 2);
    CHECK(enumerate_submodules(LambdaModule(t22, {2}), 2).size() == 3);
    CHECK(enumerate_submodules(LambdaModule(t22, {2, 1}), 2).size() == 8);

    RingSpec z32 = RingSpec::zmod(3, 2);
    CHECK(enumerate_submodules(LambdaModule(z32, {2}), 2).size() == 3);

    // Subspace counts of F_p^r: Gaussian binomial column sums.
    CHECK(enumerate_submodules(LambdaModule(z21, {1, 1}), 1).size() == 5);
    CHECK(enumerate_submodules(LambdaModule(z21, {1, 1, 1}), 1).size() == 16);
    RingSpec z31 = RingSpec::zmod(3, 1);
    CHECK(enumerate_submodules(LambdaModule(z31, {1, 1}), 1).size() == 6);
}

TEST_CASE("enumerated submodules are distinct, bounded and sorted") {
    RingSpec R = RingSpec::zmod(2, 3);
    LambdaModule B(R, {3, 1});
    std::vector<Submodule> subs = enumerate_submodules(B, 2);
    for (size_t i = 0; i < subs.size(); ++i) {
        CHECK(scalar_image(subs[i], 2).is_zero());
        if (i > 0) CHECK(subs[i - 1].key() < subs[i].key());
    }
    // Second-socle submodules of Z/8 + Z/2 equal those of <2> + Z/2 = Z/4 + Z/2.
    CHECK(subs.size() == 8);
}

TEST_CASE("submodule enumeration refuses oversized modules") {
    RingSpec R = RingSpec::zmod(2, 3);
    CHECK_THROWS_AS(enumerate_submodules(LambdaModule(R, {3, 3, 3}), 2, 100), input_error);
}

TEST_CASE("automorphism counts match group orders") {
    CHECK(all_automorphisms(LambdaModule(RingSpec::zmod(2, 1), {1})).size() == 1);
    CHECK(all_automorphisms(LambdaModule(RingSpec::zmod(3, 1), {1})).size() == 2);
    CHECK(all_automorphisms(LambdaModule(RingSpec::zmod(2, 1), {1, 1})).size() == 6);
    CHECK(all_automorphisms(LambdaModule(RingSpec::zmod(3, 1), {1, 1})).size() == 48);
    CHECK(all_automorphisms(LambdaModule(RingSpec::zmod(2, 2), {2})).size() == 2);
    CHECK(all_automorphisms(LambdaModule(RingSpec::truncpoly(2, 2), {2})).size() == 2);
    CHECK(all_automorphisms(LambdaModule(RingSpec::zmod(2, 2), {2, 1})).size() == 8);
    CHECK(all_automorphisms(LambdaModule(RingSpec::truncpoly(2, 2), {2, 1})).size() == 8);
    CHECK(all_automorphisms(LambdaModule(RingSpec::zmod(2, 2), {2, 2})).size() == 96);
    CHECK_THROWS_AS(all_automorphisms(LambdaModule(RingSpec::zmod(2, 3), {3, 3}), 100),
                    input_error);
}

TEST_CASE("elementary matrices generate the automorphism group") {
    std::vector<LambdaModule> shapes = {
        LambdaModule(RingSpec::zmod(2, 1), {1}),
        LambdaModule(RingSpec::zmod(2, 1), {1, 1}),
        LambdaModule(RingSpec::zmod(2, 1), {1, 1, 1}),
        LambdaModule(RingSpec::zmod(2, 2), {2}),
        LambdaModule(RingSpec::zmod(2, 2), {2, 1}),
        LambdaModule(RingSpec::zmod(2, 2), {2, 2}),
        LambdaModule(RingSpec::truncpoly(2, 2), {2, 1}),
        LambdaModule(RingSpec::zmod(3, 1), {1, 1}),
    };
    for (const LambdaModule& B : shapes) {
        CAPTURE(B.show());
        std::vector<ModMatrix> gens = automorphism_generators(B);
        for (const ModMatrix& g : gens) CHECK(is_automorphism(B, g));
        CHECK(sorted_keys(closure(B, gens)) == sorted_keys(all_automorphisms(B)));
    }
}

TEST_CASE("random automorphisms are valid and varied") {
    std::mt19937_64 rng(77);
    LambdaModule B(RingSpec::zmod(2, 2), {2, 1});
    std::map<std::string, int> seen;
    for (int i = 0; i < 50; ++i) {
        ModMatrix M = random_automorphism(B, rng);
        CHECK(is_automorphism(B, M));
        seen[mat_key(M)]++;
    }
    CHECK(seen.size() > 1);
}

TEST_CASE("orbits partition the submodules") {
    LambdaModule B(RingSpec::zmod(2, 2), {2, 1});
    std::vector<Submodule> subs = enumerate_submodules(B, 2);
    CHECK(automorphism_orbit(B, Submodule::zero(B)).size() == 1);
    CHECK(automorphism_orbit(B, Submodule::full(B)).size() == 1);

    std::map<std::string, i64> orbit_of;
    i64 covered = 0;
    i64 group = i64(all_automorphisms(B).size());
    for (const Submodule& s : subs) {
        if (orbit_of.count(s.key())) continue;
        std::vector<Submodule> orb = automorphism_orbit(B, s);
        for (const Submodule& t : orb) CHECK(orbit_of.emplace(t.key(), orb.size()).second);
        covered += i64(orb.size());
        CHECK(group % i64(orb.size()) == 0);
    }
    CHECK(covered == i64(subs.size()));

    // Lines of F_2^2 form one orbit of size 3.
    LambdaModule V(RingSpec::zmod(2, 1), {1, 1});
    LambdaModule::Elem e1{i64(1), i64(0)};
    CHECK(automorphism_orbit(V, Submodule::span(V, {e1})).size() == 3);
}

TEST_CASE("brute-force isomorphism separates the known cases") {
    RingSpec R = RingSpec::zmod(2, 3);
    Pair q13 = realize_label(R, PairLabel::qpair(1, 3));
    CHECK(is_isomorphic_bruteforce(q13, q13));

    RingSpec R1 = RingSpec::zmod(2, 1);
    CHECK_FALSE(is_isomorphic_bruteforce(realize_label(R1, PairLabel::picket(1, 1)),
                                         realize_label(R1, PairLabel::picket(0, 1))));

    // Same partition [3,1], same subgroup type [2], still not isomorphic.
    Pair other = direct_sum({realize_label(R, PairLabel::picket(2, 3)),
                             realize_label(R, PairLabel::picket(0, 1))})
                     .pair;
    CHECK(q13.B().parts() == other.B().parts());
    CHECK(q13.A().type() == other.A().type());
    CHECK_FALSE(is_isomorphic_bruteforce(q13, other));

    std::mt19937_64 rng(78);
    for (int trial = 0; trial < 10; ++trial) {
        ModMatrix M = random_automorphism(q13.B(), rng);
        Pair moved(q13.B(), apply_endo(q13.B(), M, q13.A()), 2);
        CHECK(is_isomorphic_bruteforce(q13, moved));
    }
}

TEST_CASE("brute-force isomorphism agrees with the classifier") {
    RingSpec R = RingSpec::zmod(2, 2);
    LambdaModule B(R, {2, 1});
    std::vector<Submodule> subs = enumerate_submodules(B, 2);
    for (const Submodule& a : subs)
        for (const Submodule& b : subs) {
            Pair x(B, a, 2), y(B, b, 2);
            CHECK(is_isomorphic_bruteforce(x, y) == (classify_s2(x) == classify_s2(y)));
        }
}

TEST_CASE("scrambled canonical sums classify to their multiset") {
    std::mt19937_64 rng(80);
    for (const RingSpec& R : {RingSpec::zmod(2, 3), RingSpec::truncpoly(2, 3)}) {
        std::vector<PairLabel> labels = all_pair_labels(R.n());
        std::uniform_int_distribution<size_t> pick(0, labels.size() - 1);
        std::uniform_int_distribution<int> cnt(1, 3);
        for (int trial = 0; trial < 20; ++trial) {
            DecompReport want;
            std::vector<Pair> parts;
            for (int k = cnt(rng); k > 0; --k) {
                PairLabel l = labels[pick(rng)];
                want.add(l);
                parts.push_back(realize_label(R, l));
            }
            Pair plain = direct_sum(parts).pair;
            ModMatrix M = random_automorphism(plain.B(), rng);
            Pair moved(plain.B(), apply_endo(plain.B(), M, plain.A()), 2);
            CHECK(classify_s2(moved) == want);
        }
    }
}

TEST_CASE("bounded partitions enumerate the requested shapes") {
    CensusOptions opt;
    opt.max_parts = 3;
    opt.max_part = 3;
    opt.max_length = 5;
    std::vector<std::vector<int>> want = {
        {1},    {2},    {1, 1},    {3},    {2, 1},    {1, 1, 1},
        {3, 1}, {2, 2}, {2, 1, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}};
    CHECK(bounded_partitions(3, opt) == want);

    CensusOptions two;
    two.max_parts = 2;
    std::vector<std::vector<int>> want2 = {{1}, {2}, {1, 1}, {2, 1}, {2, 2}};
    CHECK(bounded_partitions(2, two) == want2);
}

TEST_CASE("the census verifies the classification at p=2, n=2") {
    RingSpec R = RingSpec::zmod(2, 2);
    CensusOptions opt;
    opt.max_parts = 3;
    Census c = verify_census(R, opt);
    CHECK(c.failures == 0);
    CHECK(c.notes.empty());

    int indecomposable = 0;
    std::map<std::vector<int>, i64> orbit_mass;
    for (const CensusEntry& e : c.classes) {
        if (e.report.total() == 1) indecomposable++;
        orbit_mass[e.parts] += e.orbit_size;
    }
    CHECK(indecomposable == 5);  // (n^2+3n)/2 at n=2
    for (const auto& [parts, mass] : orbit_mass)
        CHECK(mass == i64(enumerate_submodules(LambdaModule(R, parts), opt.m).size()));

    // Representative reports re-classify to themselves.
    for (size_t i = 0; i < c.classes.size(); i += 7) {
        const CensusEntry& e = c.classes[i];
        CHECK(classify_s2(Pair(LambdaModule(R, e.parts), e.rep, 2)) == e.report);
    }
}

TEST_CASE("census reports are ring independent") {
    CensusOptions opt;
    opt.max_parts = 2;
    auto report_multiset = [&](const RingSpec& R) {
        Census c = verify_census(R, opt);
        CHECK(c.failures == 0);
        std::vector<std::string> rs;
        for (const CensusEntry& e : c.classes) rs.push_back(e.report.show());
        std::sort(rs.begin(), rs.end());
        return rs;
    };
    std::vector<std::string> z = report_multiset(RingSpec::zmod(2, 2));
    CHECK(z == report_multiset(RingSpec::truncpoly(2, 2)));
    CHECK(z == report_multiset(RingSpec::zmod(3, 2)));
}

TEST_CASE("census runs are deterministic") {
    RingSpec R = RingSpec::zmod(2, 2);
    CensusOptions opt;
    opt.max_parts = 2;
    Census a = verify_census(R, opt), b = verify_census(R, opt);
    CHECK(a.total_submodules == b.total_submodules);
    CHECK(a.classes.size() == b.classes.size());
    for (size_t i = 0; i < a.classes.size(); ++i) {
        CHECK(a.classes[i].rep.key() == b.classes[i].rep.key());
        CHECK(a.classes[i].report == b.classes[i].report);
        CHECK(a.classes[i].orbit_size == b.classes[i].orbit_size);
    }
}

TEST_CASE("reports shrink consistently when a label is removed") {
    std::mt19937_64 rng(81);
    RingSpec R = RingSpec::zmod(2, 3);
    std::vector<PairLabel> labels = all_pair_labels(R.n());
    std::uniform_int_distribution<size_t> pick(0, labels.size() - 1);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<PairLabel> chosen;
        for (int k = 0; k < 3; ++k) chosen.push_back(labels[pick(rng)]);
        std::vector<Pair> parts;
        for (const PairLabel& l : chosen) parts.push_back(realize_label(R, l));
        DecompReport whole = classify_s2(direct_sum(parts).pair);

        std::vector<Pair> rest(parts.begin() + 1, parts.end());
        DecompReport smaller = classify_s2(direct_sum(rest).pair);
        smaller.add(chosen[0]);
        CHECK(whole == smaller);
    }
}

TEST_CASE("cardinality cap env override") {
    CHECK(cardinality_cap_from_env(4096) >= 2);
}
