#pragma once

#include <vector>

#include "subpair/homs.hpp"
#include "subpair/posetrep.hpp"

namespace subpair {

// The total space A^+/A^- of a pair as a k-vector space with an explicit
// basis of module elements and a coordinate procedure.  The basis is chosen
// greedily from the canonical generators of A^+, so it is deterministic:
// pairs sharing the frame (A^+, A^-) get identical coordinates.
class TildeSpace {
public:
    explicit TildeSpace(Pair x);

    const Pair& pair() const { return x_; }
    const Submodule& up() const { return up_; }      // A^+
    const Submodule& down() const { return down_; }  // A^-
    int dim() const { return int(basis_.size()); }
    const std::vector<LambdaModule::Elem>& basis() const { return basis_; }

    // k-coordinates of an element of A^+; well-defined modulo A^-.
    std::vector<i64> coords(const LambdaModule::Elem& v) const;
    // sum coords_k * basis_k, one representative of the class.
    LambdaModule::Elem lift(const std::vector<i64>& coords) const;
    // Canonical column basis of ((C cap A^+) + A^-)/A^- in these coordinates.
    FpMat subspace(const Submodule& C) const;

private:
    Pair x_;
    Submodule up_, down_;
    std::vector<LambdaModule::Elem> basis_;
};

// V^l = tilde(p^l B), V' = tilde(soc B), V'' = tilde(A) over k = Lambda/(p);
// the output satisfies the subspace conditions of the essential image.
PosetRep apply_F(const Pair& x);

// Induced map on the total spaces, as a matrix in the tilde coordinates of
// source and target.  Functorial and zero exactly on the ideal N.
FpMat apply_F_morphism(const PairMorphism& f);

// The correspondence table between pair labels and representation labels.
//   P(0,l) <-> V(l-1,1,0);  P(1,l) <-> V(l-1,1,1);
//   P(2,l) <-> V(l-2,0,1);  Q(s,t) <-> W(s-1,t-2).
RepLabel expected_rep_label(const PairLabel& l);
// Inverse direction; rejects labels outside the essential image for this n
// (V(*,0,0), V(n-1,0,1), W(*,n-1)).
PairLabel label_to_pair(int n, const RepLabel& rl);

// Krull-Remak-Schmidt decomposition of any pair with p^2 A = 0, through the
// representation side.  The result is checked for partition and length
// consistency with the input.
DecompReport classify_s2(const Pair& x);

// The unique submodule A with A^- <= A <= A^+ whose class space is U, for a
// frame given as the tilde space of a pair; inverse of TildeSpace::subspace
// restricted to subgroups between A^- and A^+.
Pair pullback_pair(const TildeSpace& frame, const FpMat& U);
// Same, with the frame spelled out: requires soc B <= up and p^2 up = 0.
Pair pullback_pair(const LambdaModule& B, const Submodule& up, const FpMat& U);

// An explicit direct-sum decomposition: labels in split-off order (ambient
// parts weakly decreasing), the realized canonical direct sum, and a
// two-sided pair isomorphism onto it.
struct SplitWitness {
    DecompReport report;
    std::vector<PairLabel> order;
    Pair canonical;
    PairMorphism to_canonical;
    PairMorphism from_canonical;
};

// Constructive decomposition for pA = 0: pickets P(0,l) and P(1,l).
SplitWitness decompose_s1(const Pair& x);
// Constructive decomposition for soc B <= A: pickets P(1,l) and P(2,l),
// obtained from the splitting of (B; pA) which is compatible with A.
SplitWitness decompose_socle_contained(const Pair& x);

// A morphism f: x -> y with apply_F_morphism(f) = h, for any representation
// morphism h between the images; existence is what makes F full.
PairMorphism lift_morphism(const Pair& x, const Pair& y, const FpMat& h);

// Invertible pair morphism from x onto the direct sum named by its report.
struct IsoWitness {
    Pair canonical;
    PairMorphism iso;      // x -> canonical
    PairMorphism inverse;  // canonical -> x
};
IsoWitness iso_witness(const Pair& x, const DecompReport& report);

}  // namespace subpair
