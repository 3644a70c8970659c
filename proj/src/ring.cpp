#include "subpair/ring.hpp"

namespace subpair {

namespace {

bool is_prime(i64 p) {
    if (p < 2) return false;
    for (i64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

i64 mod_pow(i64 base, i64 exp, i64 m) {
    i64 r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return r;
}

}  // namespace

RingSpec RingSpec::make(RingKind kind, i64 p, int n) {
    require(is_prime(p), "ring prime p must be a prime number");
    require(n >= 1, "ring length n must be at least 1");
    // p^n < 2^31 keeps every code product within int64.
    i64 lim = i64(1) << 31;
    i64 c = 1;
    for (int e = 0; e < n; ++e) {
        require(c <= (lim - 1) / p, "p^n too large; require p^n < 2^31");
        c *= p;
    }
    return RingSpec(kind, p, n);
}

RingSpec::RingSpec(RingKind kind, i64 p, int n) : kind_(kind), p_(p), n_(n) {
    pow_.resize(n + 1);
    pow_[0] = 1;
    for (int e = 1; e <= n; ++e) pow_[e] = pow_[e - 1] * p;
}

i64 RingSpec::pow_p(int e) const {
    ensure(0 <= e && e <= n_, "pow_p exponent out of range");
    return pow_[e];
}

i64 RingSpec::add(i64 a, i64 b) const {
    if (kind_ == RingKind::zmod) return (a + b) % pow_[n_];
    i64 r = 0;
    for (int e = 0; e < n_; ++e) {
        i64 d = (a % p_ + b % p_) % p_;
        r += d * pow_[e];
        a /= p_;
        b /= p_;
    }
    return r;
}

i64 RingSpec::neg(i64 a) const {
    if (kind_ == RingKind::zmod) return (pow_[n_] - a) % pow_[n_];
    i64 r = 0;
    for (int e = 0; e < n_; ++e) {
        i64 d = (p_ - a % p_) % p_;
        r += d * pow_[e];
        a /= p_;
    }
    return r;
}

i64 RingSpec::sub(i64 a, i64 b) const { return add(a, neg(b)); }

i64 RingSpec::mul(i64 a, i64 b) const {
    if (kind_ == RingKind::zmod) return a * b % pow_[n_];
    // Truncated digit convolution; no carries.
    std::vector<i64> da = digits(a), db = digits(b), dr(n_, 0);
    for (int i = 0; i < n_; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; i + j < n_; ++j)
            dr[i + j] = (dr[i + j] + da[i] * db[j]) % p_;
    }
    return from_digits(dr);
}

int RingSpec::val(i64 a) const {
    if (a == 0) return n_;
    int v = 0;
    while (a % p_ == 0) {
        a /= p_;
        ++v;
    }
    return v;
}

i64 RingSpec::unit_part(i64 a) const {
    if (a == 0) return 0;
    return a / pow_[val(a)];
}

i64 RingSpec::inv(i64 a) const {
    require(val(a) == 0, "inv requires a unit");
    // Residue-field inverse, then Newton: x <- x(2 - a x) doubles the number
    // of correct p-adic digits each step.
    i64 x = mod_pow(a % p_, p_ - 2, p_);
    if (kind_ == RingKind::truncpoly) x = from_int(x);
    for (int it = 0; it <= n_ + 2; ++it) {
        if (mul(a, x) == from_int(1)) return x;
        x = mul(x, sub(from_int(2), mul(a, x)));
    }
    ensure(false, "Newton inverse failed to converge");
    return 0;
}

i64 RingSpec::mul_ppow(i64 a, int e) const {
    ensure(0 <= e && e <= n_, "mul_ppow exponent out of range");
    return a % pow_[n_ - e] * pow_[e];
}

i64 RingSpec::from_int(i64 k) const {
    i64 m = kind_ == RingKind::zmod ? pow_[n_] : p_;
    return (k % m + m) % m;
}

std::vector<i64> RingSpec::digits(i64 a) const {
    std::vector<i64> d(n_);
    for (int e = 0; e < n_; ++e) {
        d[e] = a % p_;
        a /= p_;
    }
    return d;
}

i64 RingSpec::from_digits(const std::vector<i64>& d) const {
    require(int(d.size()) <= n_, "too many digits for ring length");
    i64 a = 0;
    for (int e = int(d.size()) - 1; e >= 0; --e) {
        i64 c = (d[e] % p_ + p_) % p_;
        a = a * p_ + c;
    }
    return a;
}

std::string RingSpec::show(i64 a) const {
    if (kind_ == RingKind::zmod) return std::to_string(a);
    if (a == 0) return "0";
    std::string s;
    std::vector<i64> d = digits(a);
    for (int e = 0; e < n_; ++e) {
        if (d[e] == 0) continue;
        if (!s.empty()) s += "+";
        if (e == 0) {
            s += std::to_string(d[e]);
        } else {
            if (d[e] != 1) s += std::to_string(d[e]);
            s += e == 1 ? "T" : "T^" + std::to_string(e);
        }
    }
    return s;
}

std::string RingSpec::show_ring() const {
    if (kind_ == RingKind::zmod)
        return "Z/" + std::to_string(pow_[n_]);
    return "F" + std::to_string(p_) + "[T]/(T^" + std::to_string(n_) + ")";
}

RingElem add(const RingElem& a, const RingElem& b) {
    require(a.spec == b.spec, "ring mismatch");
    return RingElem(a.spec, a.spec.add(a.code, b.code));
}

RingElem mul(const RingElem& a, const RingElem& b) {
    require(a.spec == b.spec, "ring mismatch");
    return RingElem(a.spec, a.spec.mul(a.code, b.code));
}

int valuation(const RingElem& a) { return a.spec.val(a.code); }

RingElem unit_part(const RingElem& a) {
    return RingElem(a.spec, a.spec.unit_part(a.code));
}

RingElem inverse(const RingElem& a) {
    return RingElem(a.spec, a.spec.inv(a.code));
}

}  // namespace subpair
