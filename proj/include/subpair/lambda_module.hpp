#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subpair/ring.hpp"

namespace subpair {

// Finite module over the uniserial ring: a direct sum of cyclic components
// Lambda/(p^lambda_i) with the partition lambda weakly decreasing, parts in
// [1, n].  Elements are coordinate vectors, component i reduced mod
// p^lambda_i.
class LambdaModule {
public:
    using Elem = std::vector<i64>;

    LambdaModule(RingSpec ring, std::vector<int> parts);

    const RingSpec& ring() const { return ring_; }
    int rank() const { return int(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[i]; }
    int length() const;
    // Largest part; the least m with p^m B = 0.  Zero for the zero module.
    int loewy_length() const;

    bool operator==(const LambdaModule& o) const {
        return ring_ == o.ring_ && parts_ == o.parts_;
    }
    bool operator!=(const LambdaModule& o) const { return !(*this == o); }

    Elem zero() const { return Elem(parts_.size(), 0); }
    Elem reduce(Elem v) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    // c is a ring code.
    Elem scalar(i64 c, const Elem& a) const;
    Elem mul_ppow(const Elem& a, int e) const;
    bool is_zero(const Elem& a) const;
    bool is_elem(const Elem& a) const;

    std::string show_elem(const Elem& a) const;
    std::string show() const;

private:
    RingSpec ring_;
    std::vector<int> parts_;
};

// Linear system over the full ring Lambda = Z/p^n or F_p[T]/(T^n):
// rows * x = rhs (mod p^n).  Equations that only hold modulo p^mu are
// encoded by scaling the whole row by p^(n-mu) first.
struct SmithSolveResult {
    bool consistent;
    std::vector<i64> particular;            // one solution, size num_unknowns
    std::vector<std::vector<i64>> kernel;   // generators of all homogeneous solutions
};

SmithSolveResult smith_solve(const RingSpec& R, std::vector<std::vector<i64>> rows,
                             std::vector<i64> rhs, int num_unknowns);

// Coefficients c with sum c_j gens_j = target inside M, if any.
std::optional<std::vector<i64>> solve_combination(const LambdaModule& M,
                                                  const std::vector<LambdaModule::Elem>& gens,
                                                  const LambdaModule::Elem& target);

// Submodule in canonical form: rows in echelon form with pivot entries p^v in
// strictly increasing columns, other rows reduced below p^v at each pivot
// column, closed under annihilator tails (Howell property).  Two generating
// sets span the same submodule exactly when the canonical rows agree.
class Submodule {
public:
    using Elem = LambdaModule::Elem;

    static Submodule span(const LambdaModule& M, std::vector<Elem> gens);
    static Submodule zero(const LambdaModule& M);
    static Submodule full(const LambdaModule& M);

    const LambdaModule& module() const { return mod_; }
    const std::vector<Elem>& gens() const { return rows_; }
    // Per canonical row: (pivot column, pivot valuation).
    const std::vector<std::pair<int, int>>& pivots() const { return piv_; }

    bool contains(const Elem& x) const;
    bool contains(const Submodule& other) const;
    bool is_zero() const { return rows_.empty(); }
    int length() const;
    // Partition of the submodule itself as a Lambda-module.
    std::vector<int> type() const;

    bool operator==(const Submodule& o) const {
        return mod_ == o.mod_ && rows_ == o.rows_;
    }
    bool operator!=(const Submodule& o) const { return !(*this == o); }

    // Compact serialization of the canonical rows; equal exactly for equal
    // submodules of the same module.
    std::string key() const;

private:
    Submodule(LambdaModule m) : mod_(std::move(m)) {}

    LambdaModule mod_;
    std::vector<Elem> rows_;
    std::vector<std::pair<int, int>> piv_;
};

Submodule sum(const Submodule& U, const Submodule& W);
Submodule intersect(const Submodule& U, const Submodule& W);
// p^e U.
Submodule scalar_image(const Submodule& U, int e);
// { x in M : p^e x in U }.
Submodule scalar_preimage(const Submodule& U, int e);
// { x : p x = 0 } of the whole module.
Submodule socle(const LambdaModule& M);
// p^l M.
Submodule radical_power(const LambdaModule& M, int l);

// Largest m with x in p^m M; x must be nonzero.  Equals the least valuation
// of a nonzero coordinate.
int height(const LambdaModule& M, const LambdaModule::Elem& x);

// (h(x), h(px), h(p^2 x), ...) over the nonzero multiples; x nonzero.
std::vector<int> height_sequence(const LambdaModule& M, const LambdaModule::Elem& x);

}  // namespace subpair
