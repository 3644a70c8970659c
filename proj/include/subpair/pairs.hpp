#pragma once

#include <map>
#include <string>
#include <vector>

#include "subpair/lambda_module.hpp"

namespace subpair {

// Labels of the indecomposable pairs.
//   P(m,l): B = Lambda/(p^l), A = p^(l-m) B; 0 <= m <= 2, l >= max(1, m).
//   Q(s,t): B = Lambda/(p^t) + Lambda/(p^s), A generated by (p^(t-2), p^(s-1));
//           1 <= s < t-1.
// Upper bounds against the ring length n are checked when a label is
// realized or enumerated for a concrete n.
struct PairLabel {
    enum class Kind { P, Q };
    Kind kind;
    int a, b;  // P: (m, l); Q: (s, t)

    static PairLabel picket(int m, int l);
    static PairLabel qpair(int s, int t);

    // Partition of B, weakly decreasing.
    std::vector<int> partition_parts() const;
    // Length of A: m for pickets, 2 for Q.
    int sub_length() const;
    // Height sequence of a generator of A; empty for P(0,l) where A = 0.
    // P(m,l), m > 0: (l-m, ..., l-1); Q(s,t): (s-1, t-1).
    std::vector<int> expected_height_seq() const;
    std::string show() const;

    bool operator==(const PairLabel& o) const {
        return kind == o.kind && a == o.a && b == o.b;
    }
    // Pickets before Q-pairs, then lexicographic; fixes report order.
    bool operator<(const PairLabel& o) const {
        if (kind != o.kind) return kind == Kind::P;
        if (a != o.a) return a < o.a;
        return b < o.b;
    }
};

// All labels admissible for ring length n; exactly (n^2 + 3n)/2 of them.
std::vector<PairLabel> all_pair_labels(int n);

// Object of S_m: module B with submodule A satisfying p^m A = 0.
class Pair {
public:
    Pair(LambdaModule B, Submodule A, int bound);

    const LambdaModule& B() const { return b_; }
    const Submodule& A() const { return a_; }
    int bound() const { return bound_; }
    const RingSpec& ring() const { return b_.ring(); }
    // Whether p^m A = 0.
    bool in_s(int m) const { return scalar_image(a_, m).is_zero(); }

    bool operator==(const Pair& o) const {
        return b_ == o.b_ && a_ == o.a_;
    }

private:
    LambdaModule b_;
    Submodule a_;
    int bound_;
};

Pair make_picket(const RingSpec& R, int m, int l);
Pair make_q(const RingSpec& R, int s, int t);
Pair realize_label(const RingSpec& R, const PairLabel& label);

// Direct sum with the partition re-sorted; block_cols[i][c] is the ambient
// column holding component c of input pair i.
struct DirectSumPair {
    Pair pair;
    std::vector<std::vector<int>> block_cols;
};
DirectSumPair direct_sum(const std::vector<Pair>& xs);

// A^- = rad A = pA.
Submodule a_minus(const Pair& x);
// A^+ = A + soc B; checked to equal p^{-1}(rad A).
Submodule a_plus(const Pair& x);

// Multiset of labels.
struct DecompReport {
    std::map<PairLabel, int> labels;

    void add(const PairLabel& l, int count = 1);
    int total() const;
    bool operator==(const DecompReport& o) const { return labels == o.labels; }
    bool operator!=(const DecompReport& o) const { return !(*this == o); }
    std::string show() const;
};

// Sum of label partitions equals the partition of B and label A-lengths sum
// to length(A).
bool report_consistent_with(const DecompReport& r, const Pair& x);

}  // namespace subpair
