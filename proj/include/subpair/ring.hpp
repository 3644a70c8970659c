#pragma once

#include <string>
#include <vector>

#include "subpair/common.hpp"

namespace subpair {

// Two families of commutative local uniserial rings of length n over the
// prime p: Z/p^n and F_p[T]/(T^n).  Both have residue field F_p and maximal
// ideal generated by a single element ("p" below: the integer p, or T).
enum class RingKind { zmod, truncpoly };

// Elements of either ring are stored as integer codes in [0, p^n):
//   zmod:      the canonical residue,
//   truncpoly: sum c_i p^i where the element is sum c_i T^i, 0 <= c_i < p.
// With this encoding the operations val, unit_part, mod_ppow, div_ppow and
// mul_ppow are the same integer formulas for both rings; only add, mul and
// inv depend on the ring kind (zmod carries between digits, truncpoly does
// not).
class RingSpec {
public:
    static RingSpec make(RingKind kind, i64 p, int n);
    static RingSpec zmod(i64 p, int n) { return make(RingKind::zmod, p, n); }
    static RingSpec truncpoly(i64 p, int n) { return make(RingKind::truncpoly, p, n); }

    RingKind kind() const { return kind_; }
    i64 p() const { return p_; }
    int n() const { return n_; }
    i64 cardinality() const { return pow_[n_]; }
    // p^e for 0 <= e <= n.
    i64 pow_p(int e) const;

    bool operator==(const RingSpec& o) const {
        return kind_ == o.kind_ && p_ == o.p_ && n_ == o.n_;
    }
    bool operator!=(const RingSpec& o) const { return !(*this == o); }

    bool is_code(i64 a) const { return 0 <= a && a < pow_[n_]; }

    i64 add(i64 a, i64 b) const;
    i64 sub(i64 a, i64 b) const;
    i64 neg(i64 a) const;
    i64 mul(i64 a, i64 b) const;

    // Largest e with a in (p^e), i.e. trailing zero digits base p; val(0) = n.
    int val(i64 a) const;
    // a / p^val(a); a unit for a != 0, and unit_part(0) = 0.
    i64 unit_part(i64 a) const;
    // Inverse of a unit.  Newton iteration from the residue-field inverse.
    i64 inv(i64 a) const;

    // Remainder of the code modulo p^e; both rings: the low e digits.
    i64 mod_ppow(i64 a, int e) const { return a % pow_p(e); }
    // Quotient of the code by p^e; both rings: digits shifted down by e.
    // Exact ring division when val(a) >= e, and for any a satisfies
    // a = div_ppow(a,e)*p^e + mod_ppow(a,e) in the ring.
    i64 div_ppow(i64 a, int e) const { return a / pow_p(e); }
    // (a * p^e) mod p^n; both rings: digits shifted up by e, truncated.
    i64 mul_ppow(i64 a, int e) const;

    // Image of an arbitrary integer under the unique map Z -> ring.
    i64 from_int(i64 k) const;

    // Little-endian base-p digits, length n, and the inverse map.  For
    // truncpoly these are the polynomial coefficients.
    std::vector<i64> digits(i64 a) const;
    i64 from_digits(const std::vector<i64>& d) const;

    std::string show(i64 a) const;
    std::string show_ring() const;

private:
    RingSpec(RingKind kind, i64 p, int n);

    RingKind kind_;
    i64 p_;
    int n_;
    std::vector<i64> pow_;  // pow_[e] = p^e, e = 0..n
};

// Checked element wrapper for public use; internal code paths work with raw
// codes plus a RingSpec.
struct RingElem {
    RingSpec spec;
    i64 code;

    RingElem(RingSpec s, i64 c) : spec(s), code(c) {
        require(spec.is_code(code), "ring element code out of range");
    }
    bool operator==(const RingElem& o) const {
        return spec == o.spec && code == o.code;
    }
};

RingElem add(const RingElem& a, const RingElem& b);
RingElem mul(const RingElem& a, const RingElem& b);
int valuation(const RingElem& a);
RingElem unit_part(const RingElem& a);
RingElem inverse(const RingElem& a);

}  // namespace subpair
