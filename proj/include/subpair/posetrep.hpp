#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "subpair/fpmat.hpp"

namespace subpair {

// Representation of the poset with a chain of n-1 points plus two
// incomparable points (prime and double prime): a total space V0 = k^dim0
// over F_p and subspaces V^1 >= V^2 >= ... >= V^(n-1), V', V''.
// Subspaces are stored as canonical column bases inside V0.
struct PosetRep {
    i64 p;
    int n;
    int dim0;
    std::vector<FpMat> chain;  // chain[i] spans V^(i+1); size n-1
    FpMat vprime, vdprime;

    // V^i for 0 <= i <= n-1, with V^0 the full space.
    FpMat chain_at(int i) const;
    // All poset subspaces in fixed order: V^1..V^(n-1), V', V''.
    std::vector<FpMat> points() const;
    bool operator==(const PosetRep& o) const;
};

PosetRep make_rep(i64 p, int n, int dim0, std::vector<FpMat> chain, FpMat vprime,
                  FpMat vdprime);
PosetRep zero_rep(i64 p, int n);

// Labels of the indecomposable representations.
//   V(l, l', l''): dim0 = 1, V^i = k iff i <= l (0 <= l <= n-1), V' = k iff
//                  l' = 1, V'' = k iff l'' = 1.
//   W(s, t):       dim0 = 2, V^i = k^2 iff i <= s, the diagonal iff
//                  s < i <= t, else 0; V' = <e1>, V'' = <e2>; 0 <= s < t <= n-1.
struct RepLabel {
    enum class Kind { V, W };
    Kind kind;
    int a, b, c;  // V: (l, l', l''); W: (s, t, unused 0)

    static RepLabel vlabel(int l, int lp, int lpp);
    static RepLabel wlabel(int s, int t);
    std::string show() const;
    int dim0() const { return kind == Kind::V ? 1 : 2; }

    bool operator==(const RepLabel& o) const {
        return kind == o.kind && a == o.a && b == o.b && c == o.c;
    }
    bool operator<(const RepLabel& o) const {
        if (kind != o.kind) return kind == Kind::V;
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// All labels for this n: 4n one-dimensional plus n(n-1)/2 two-dimensional,
// in total n^2/2 + 7n/2.
std::vector<RepLabel> all_rep_labels(int n);

PosetRep make_indecomposable(i64 p, int n, const RepLabel& label);

// V^(n-1) <= V' and V' + V'' = V0; for n = 1 the chain is empty and V^(n-1)
// is read as V0.  Characterizes the image of the pair functor.
bool satisfies_rep_prime(const PosetRep& V);

// dim V0, dim V^i, dim V', dim V'', dim(V^i cap V'), dim(V^i cap V''),
// dim(V' cap V''), dim(V^i cap V' cap V''), i = 1..n-1; 4n integers.
std::vector<int> rank_invariants(const PosetRep& V);

// Basis of { h : V0_x -> V0_y linear, h(S_j) <= T_j for all poset points }.
std::vector<FpMat> rep_hom_basis(const PosetRep& x, const PosetRep& y);
int hom_dim(const PosetRep& x, const PosetRep& y);

// Multiplicity of every label in the (unique) decomposition, via the
// hom-dimension system: dim Hom(L_j, V) = sum_i m_i dim Hom(L_j, L_i).
std::map<RepLabel, int> multiplicities(const PosetRep& V);

struct RepSummand {
    RepLabel label;
    // Columns: basis of the summand inside V0.  The subrepresentation
    // carried by these columns is the label's literal subspace pattern in
    // these coordinates.
    FpMat basis;
};

// Split off indecomposable summands with explicit bases; labels agree with
// multiplicities and the bases jointly span V0.
std::vector<RepSummand> decompose(const PosetRep& V);

PosetRep rep_direct_sum(const std::vector<PosetRep>& xs);

// Invertible H with H(S_j^V) = S_j^W for every poset point, if one exists.
std::optional<FpMat> reps_isomorphic(const PosetRep& V, const PosetRep& W);

}  // namespace subpair
