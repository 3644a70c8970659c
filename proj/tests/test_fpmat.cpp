#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "subpair/fpmat.hpp"

using namespace subpair;

namespace {

// All vectors of the column space, by running over every coefficient tuple.
std::set<std::vector<i64>> colspan_set(const FpMat& A) {
    std::set<std::vector<i64>> out;
    std::vector<i64> coef(A.cols, 0);
    while (true) {
        std::vector<i64> v(A.rows, 0);
        for (int j = 0; j < A.cols; ++j)
            for (int i = 0; i < A.rows; ++i)
                v[i] = (v[i] + coef[j] * A.at(i, j)) % A.p;
        out.insert(v);
        int j = 0;
        while (j < A.cols && ++coef[j] == A.p) coef[j++] = 0;
        if (j == A.cols) break;
    }
    return out;
}

FpMat random_mat(std::mt19937_64& rng, i64 p, int r, int c) {
    FpMat A(p, r, c);
    for (i64& x : A.a) x = i64(rng() % p);
    return A;
}

FpMat random_invertible(std::mt19937_64& rng, i64 p, int n) {
    while (true) {
        FpMat G = random_mat(rng, p, n, n);
        if (rank(G) == n) return G;
    }
}

}  // namespace

TEST_CASE("rref is idempotent and preserves the row space") {
    std::mt19937_64 rng(11);
    for (i64 p : {2, 3}) {
        for (int trial = 0; trial < 40; ++trial) {
            FpMat A = random_mat(rng, p, 3, 4);
            FpMat R = rref(A);
            CHECK(rref(R) == R);
            CHECK(colspan_set(transpose(A)) == colspan_set(transpose(R)));
        }
    }
}

TEST_CASE("col_basis canonicalizes column spaces") {
    std::mt19937_64 rng(12);
    for (i64 p : {2, 3}) {
        for (int trial = 0; trial < 40; ++trial) {
            FpMat A = random_mat(rng, p, 4, 3);
            FpMat B = col_basis(A);
            CHECK(B.cols == rank(A));
            CHECK(colspan_set(A) == colspan_set(B));
            // Same span from a scrambled generating set gives the same basis.
            FpMat G = random_invertible(rng, p, A.cols);
            CHECK(col_basis(mul(A, G)) == B);
        }
    }
}

TEST_CASE("nullspace matches the brute-force kernel") {
    std::mt19937_64 rng(13);
    for (i64 p : {2, 3}) {
        for (int trial = 0; trial < 30; ++trial) {
            FpMat A = random_mat(rng, p, 3, 3);
            FpMat N = nullspace(A);
            CHECK(mul(A, N).is_zero());
            CHECK(N.cols == A.cols - rank(A));
            // Every brute kernel vector lies in span(N).
            std::set<std::vector<i64>> wanted;
            for (const auto& v : colspan_set(FpMat::identity(p, A.cols))) {
                std::vector<i64> Av(A.rows, 0);
                for (int i = 0; i < A.rows; ++i)
                    for (int j = 0; j < A.cols; ++j)
                        Av[i] = (Av[i] + A.at(i, j) * v[j]) % p;
                if (std::all_of(Av.begin(), Av.end(), [](i64 x) { return x == 0; }))
                    wanted.insert(v);
            }
            CHECK(colspan_set(N) == wanted);
        }
    }
}

TEST_CASE("solve agrees with exhaustive search") {
    std::mt19937_64 rng(14);
    for (i64 p : {2, 3}) {
        for (int trial = 0; trial < 40; ++trial) {
            FpMat A = random_mat(rng, p, 3, 2);
            std::vector<i64> b(3);
            for (i64& x : b) x = i64(rng() % p);
            bool brute = false;
            for (const auto& v : colspan_set(FpMat::identity(p, 2))) {
                std::vector<i64> Av(3, 0);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 2; ++j) Av[i] = (Av[i] + A.at(i, j) * v[j]) % p;
                if (Av == b) brute = true;
            }
            auto x = solve(A, b);
            CHECK(x.has_value() == brute);
            if (x) {
                std::vector<i64> Ax(3, 0);
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 2; ++j) Ax[i] = (Ax[i] + A.at(i, j) * (*x)[j]) % p;
                CHECK(Ax == b);
            }
        }
    }
}

TEST_CASE("inverse and identity") {
    std::mt19937_64 rng(15);
    for (i64 p : {i64(2), i64(3), i64(1000000007)}) {
        FpMat G = random_invertible(rng, p, 4);
        CHECK(mul(G, inverse(G)) == FpMat::identity(p, 4));
        CHECK(mul(inverse(G), G) == FpMat::identity(p, 4));
    }
    FpMat S(2, 2, 2);
    S.at(0, 0) = S.at(0, 1) = S.at(1, 0) = S.at(1, 1) = 1;
    CHECK_THROWS_AS(inverse(S), internal_error);
}

TEST_CASE("left annihilator kills the matrix and has full complement rank") {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 30; ++trial) {
        FpMat A = random_mat(rng, 3, 4, 2);
        FpMat L = left_annihilator(A);
        CHECK(mul(L, A).is_zero());
        CHECK(L.rows == A.rows - rank(A));
        CHECK(rank(L) == L.rows);
    }
}

TEST_CASE("column space sum, intersection and containment match set oracles") {
    std::mt19937_64 rng(17);
    for (i64 p : {2, 3}) {
        for (int trial = 0; trial < 40; ++trial) {
            FpMat A = random_mat(rng, p, 3, 2);
            FpMat B = random_mat(rng, p, 3, 2);
            auto sa = colspan_set(A), sb = colspan_set(B);
            std::set<std::vector<i64>> inter;
            for (const auto& v : sa)
                if (sb.count(v)) inter.insert(v);
            CHECK(colspan_set(colspace_intersect(A, B)) == inter);
            std::set<std::vector<i64>> uni;
            for (const auto& va : sa)
                for (const auto& vb : sb) {
                    std::vector<i64> v(3);
                    for (int i = 0; i < 3; ++i) v[i] = (va[i] + vb[i]) % p;
                    uni.insert(v);
                }
            CHECK(colspan_set(colspace_sum(A, B)) == uni);
            bool contains = true;
            for (const auto& v : sb)
                if (!sa.count(v)) contains = false;
            CHECK(colspace_contains(A, B) == contains);
        }
    }
}

TEST_CASE("degenerate shapes") {
    FpMat Z(2, 0, 3);
    CHECK(nullspace(Z) == FpMat::identity(2, 3));
    CHECK(rank(Z) == 0);
    FpMat E(2, 3, 0);
    CHECK(nullspace(E).cols == 0);
    CHECK(col_basis(FpMat(3, 3, 2)).cols == 0);
    CHECK(mul(Z, transpose(Z)).rows == 0);
    auto x = solve(E, {0, 0, 0});
    CHECK(x.has_value());
    CHECK(x->empty());
}
