#pragma once

#include <optional>
#include <vector>

#include "subpair/pairs.hpp"

namespace subpair {

// Morphism of pairs f: (B;A) -> (D;C): a Lambda-linear map B -> D with
// f(A) inside C.  Stored as a matrix over the cyclic coordinates, rows
// indexed by the components of D.  Entry (i,j) is reduced mod p^{mu_i} and
// must satisfy val >= mu_i - lambda_j so that the map is well defined on
// Lambda/(p^{lambda_j}).
class PairMorphism {
public:
    PairMorphism(Pair source, Pair target, std::vector<std::vector<i64>> matrix);

    const Pair& source() const { return source_; }
    const Pair& target() const { return target_; }
    const std::vector<std::vector<i64>>& matrix() const { return m_; }

    LambdaModule::Elem apply(const LambdaModule::Elem& x) const;
    bool is_zero() const;

    bool operator==(const PairMorphism& o) const {
        return source_ == o.source_ && target_ == o.target_ && m_ == o.m_;
    }
    bool operator!=(const PairMorphism& o) const { return !(*this == o); }

private:
    Pair source_, target_;
    std::vector<std::vector<i64>> m_;
};

PairMorphism zero_morphism(const Pair& x, const Pair& y);
PairMorphism identity_morphism(const Pair& x);
// g after f.
PairMorphism compose(const PairMorphism& g, const PairMorphism& f);
PairMorphism add(const PairMorphism& f, const PairMorphism& g);
PairMorphism negate(const PairMorphism& f);
// c is a ring code.
PairMorphism scale(i64 c, const PairMorphism& f);

// Hom(x,y) as a finite abelian group.  The ambient group has one cyclic
// coordinate of order p^{min(lambda_j, mu_i)} per matrix cell (i,j), sorted
// into partition order; `group` is the subgroup cut out by f(A) in C.
struct HomStructure {
    Pair x, y;
    LambdaModule cells;
    Submodule group;
    std::vector<PairMorphism> gens;      // canonical generating set
    std::vector<int> cyclic_orders;      // exponents of the invariant factors
    int length;                          // total length of the group
};

HomStructure hom_basis(const Pair& x, const Pair& y);

// Conversion between morphisms and coordinates in the cells module.
PairMorphism morphism_from_cells(const Pair& x, const Pair& y,
                                 const LambdaModule::Elem& t);
LambdaModule::Elem cells_of_morphism(const PairMorphism& f);
// Combination sum coeffs_k * gens_k; coeffs are ring codes.
PairMorphism hom_element(const HomStructure& h, const std::vector<i64>& coeffs);

// The ideal N: morphisms with f(A^+) inside C^-.
bool in_ideal_N(const PairMorphism& f);
// N(x,y) as a subgroup of the same cells module; always inside Hom(x,y).
Submodule ideal_N_subgroup(const Pair& x, const Pair& y);
// k-dimension of Hom(x,y) / N(x,y); the quotient is elementwise p-torsion
// (p Hom is inside N), which is checked, so lengths subtract.
int quotient_dim_mod_N(const Pair& x, const Pair& y);

// Whether the composite of the chain (listed source to sink) is zero.
bool nilpotency_check(const std::vector<PairMorphism>& chain);

// g with g f = id and f g = id, if f is invertible in the pair category.
std::optional<PairMorphism> two_sided_inverse(const PairMorphism& f);

}  // namespace subpair
