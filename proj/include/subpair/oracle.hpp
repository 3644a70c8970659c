#pragma once

#include <random>
#include <string>
#include <vector>

#include "subpair/functor.hpp"

namespace subpair {

// Brute-force ground truth at tiny sizes: exhaustive submodule enumeration,
// automorphism orbits, and independent verification of the classifier.

// Endomorphism of B as a matrix: entry (i,j) is the coefficient of e_i in
// the image of e_j, reduced mod p^(lambda_i).  Well defined exactly when
// val(entry) >= lambda_i - lambda_j.
using ModMatrix = std::vector<std::vector<i64>>;

bool is_valid_endo(const LambdaModule& B, const ModMatrix& M);
// Valid and the image columns span B.
bool is_automorphism(const LambdaModule& B, const ModMatrix& M);
// A after C, entries reduced per target coordinate.
ModMatrix compose_endo(const LambdaModule& B, const ModMatrix& A, const ModMatrix& C);
Submodule apply_endo(const LambdaModule& B, const ModMatrix& M, const Submodule& A);

// Every invertible matrix, by enumerating all valid entry combinations; the
// cap bounds the raw candidate count p^(sum of min(lambda_i, lambda_j)).
std::vector<ModMatrix> all_automorphisms(const LambdaModule& B, i64 cap = i64(1) << 20);

// Diagonal unit scalings and transvections id + c E_ij.  Generate the full
// automorphism group (verified against all_automorphisms in the tests).
std::vector<ModMatrix> automorphism_generators(const LambdaModule& B);

ModMatrix random_automorphism(const LambdaModule& B, std::mt19937_64& rng);

// All submodules A with p^m A = 0, canonical and deterministic; requires
// |B| <= cap.
std::vector<Submodule> enumerate_submodules(const LambdaModule& B, int m,
                                            i64 cap = 4096);

// Orbit of A under the automorphism group of B.
std::vector<Submodule> automorphism_orbit(const LambdaModule& B, const Submodule& A);

// True iff the partitions agree and some automorphism of B carries x.A()
// onto y.A().
bool is_isomorphic_bruteforce(const Pair& x, const Pair& y);

struct CensusOptions {
    int m = 2;                   // enumerate A with p^m A = 0
    int max_parts = 3;           // number of parts per shape
    int max_part = 0;            // largest part; 0 means n
    int max_length = 0;          // total length cap; 0 means none
    i64 max_cardinality = 4096;  // |B| cap for enumeration
};

// Weakly decreasing nonempty part lists within the option caps.
std::vector<std::vector<int>> bounded_partitions(int n, const CensusOptions& opt);

struct CensusEntry {
    std::vector<int> parts;
    Submodule rep;  // orbit representative
    i64 orbit_size;
    DecompReport report;
};

struct Census {
    RingSpec spec;
    CensusOptions opt;
    i64 total_submodules = 0;
    std::vector<CensusEntry> classes;
    int failures = 0;
    std::vector<std::string> notes;  // counterexamples for failed checks
};

// Enumerates every shape within the caps and checks, per orbit:
//   (a) the classifier is constant on the orbit,
//   (b) distinct orbits of the same B get distinct reports,
//   (c) the orbits with one-label reports match the label list exactly,
//   (d) indecomposables have A zero or cyclic,
//   (e) height sequences of indecomposables with A != 0 are pairwise
//       distinct across the census and match the label formulas.
Census verify_census(const RingSpec& R, const CensusOptions& opt);

// SUBPAIR_MAX_CARDINALITY environment override for the enumeration cap.
i64 cardinality_cap_from_env(i64 fallback);

}  // namespace subpair
