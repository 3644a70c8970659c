#include "subpair/lambda_module.hpp"

#include <algorithm>
#include <deque>

namespace subpair {

LambdaModule::LambdaModule(RingSpec ring, std::vector<int> parts)
    : ring_(ring), parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        require(1 <= parts_[i] && parts_[i] <= ring_.n(),
                "module part out of range [1, n]");
        require(i == 0 || parts_[i - 1] >= parts_[i],
                "module parts must be weakly decreasing");
    }
}

int LambdaModule::length() const {
    int s = 0;
    for (int l : parts_) s += l;
    return s;
}

int LambdaModule::loewy_length() const { return parts_.empty() ? 0 : parts_[0]; }

LambdaModule::Elem LambdaModule::reduce(Elem v) const {
    ensure(v.size() == parts_.size(), "element size mismatch");
    for (size_t i = 0; i < v.size(); ++i) v[i] = ring_.mod_ppow(v[i], parts_[i]);
    return v;
}

LambdaModule::Elem LambdaModule::add(const Elem& a, const Elem& b) const {
    ensure(a.size() == parts_.size() && b.size() == parts_.size(),
           "element size mismatch");
    Elem r(parts_.size());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = ring_.mod_ppow(ring_.add(a[i], b[i]), parts_[i]);
    return r;
}

LambdaModule::Elem LambdaModule::sub(const Elem& a, const Elem& b) const {
    return add(a, neg(b));
}

LambdaModule::Elem LambdaModule::neg(const Elem& a) const {
    ensure(a.size() == parts_.size(), "element size mismatch");
    Elem r(parts_.size());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = ring_.mod_ppow(ring_.neg(a[i]), parts_[i]);
    return r;
}

LambdaModule::Elem LambdaModule::scalar(i64 c, const Elem& a) const {
    ensure(a.size() == parts_.size(), "element size mismatch");
    Elem r(parts_.size());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = ring_.mod_ppow(ring_.mul(c, a[i]), parts_[i]);
    return r;
}

LambdaModule::Elem LambdaModule::mul_ppow(const Elem& a, int e) const {
    ensure(a.size() == parts_.size(), "element size mismatch");
    Elem r(parts_.size());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = ring_.mod_ppow(ring_.mul_ppow(a[i], std::min(e, ring_.n())), parts_[i]);
    return r;
}

bool LambdaModule::is_zero(const Elem& a) const {
    ensure(a.size() == parts_.size(), "element size mismatch");
    return std::all_of(a.begin(), a.end(), [](i64 x) { return x == 0; });
}

bool LambdaModule::is_elem(const Elem& a) const {
    if (a.size() != parts_.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] < 0 || a[i] >= ring_.pow_p(parts_[i])) return false;
    return true;
}

std::string LambdaModule::show_elem(const Elem& a) const {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += ring_.show(a[i]);
    }
    return s + ")";
}

std::string LambdaModule::show() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += " + ";
        if (ring_.kind() == RingKind::zmod)
            s += "Z/" + std::to_string(ring_.pow_p(parts_[i]));
        else
            s += "F" + std::to_string(ring_.p()) + "[T]/(T^" +
                 std::to_string(parts_[i]) + ")";
    }
    return s;
}

SmithSolveResult smith_solve(const RingSpec& R, std::vector<std::vector<i64>> M,
                             std::vector<i64> b, int c) {
    int r = int(M.size());
    ensure(int(b.size()) == r, "rhs size mismatch");
    for (const auto& row : M) ensure(int(row.size()) == c, "row size mismatch");
    int n = R.n();

    // Column operations are recorded in V so that x = V y.
    std::vector<std::vector<i64>> V(c, std::vector<i64>(c, 0));
    for (int i = 0; i < c; ++i) V[i][i] = 1;

    std::vector<int> pv;  // pivot valuations, diagonal after reduction
    int k = 0;
    while (k < r && k < c) {
        // Global minimum valuation in the remaining submatrix; every later
        // exact division below relies on this minimality.
        int bi = -1, bj = -1, bv = n;
        for (int j = k; j < c; ++j)
            for (int i = k; i < r; ++i) {
                int v = R.val(M[i][j]);
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bi < 0) break;
        std::swap(M[k], M[bi]);
        std::swap(b[k], b[bi]);
        if (bj != k) {
            for (int i = 0; i < r; ++i) std::swap(M[i][k], M[i][bj]);
            for (int i = 0; i < c; ++i) std::swap(V[i][k], V[i][bj]);
        }
        i64 iu = R.inv(R.unit_part(M[k][k]));
        for (int j = k; j < c; ++j) M[k][j] = R.mul(iu, M[k][j]);
        b[k] = R.mul(iu, b[k]);
        for (int i = k + 1; i < r; ++i) {
            if (M[i][k] == 0) continue;
            i64 f = R.div_ppow(M[i][k], bv);
            for (int j = k; j < c; ++j) M[i][j] = R.sub(M[i][j], R.mul(f, M[k][j]));
            b[i] = R.sub(b[i], R.mul(f, b[k]));
        }
        // Column k is zero off the diagonal now, so clearing row k by column
        // operations touches row k only.
        for (int j = k + 1; j < c; ++j) {
            if (M[k][j] == 0) continue;
            i64 g = R.div_ppow(M[k][j], bv);
            M[k][j] = R.sub(M[k][j], R.mul(g, M[k][k]));
            ensure(M[k][j] == 0, "column clearing left a residue");
            for (int i = 0; i < c; ++i) V[i][j] = R.sub(V[i][j], R.mul(g, V[i][k]));
        }
        pv.push_back(bv);
        ++k;
    }

    int rk = int(pv.size());
    SmithSolveResult res;
    res.consistent = true;
    std::vector<i64> y(c, 0);
    for (int i = 0; i < rk; ++i) {
        if (R.val(b[i]) < pv[i]) res.consistent = false;
        else y[i] = R.div_ppow(b[i], pv[i]);
    }
    for (int i = rk; i < r; ++i)
        if (b[i] != 0) res.consistent = false;

    if (res.consistent) {
        res.particular.assign(c, 0);
        for (int i = 0; i < c; ++i) {
            i64 s = 0;
            for (int j = 0; j < c; ++j) s = R.add(s, R.mul(V[i][j], y[j]));
            res.particular[i] = s;
        }
    }
    for (int i = 0; i < rk; ++i) {
        if (pv[i] == 0) continue;
        std::vector<i64> g(c);
        for (int t = 0; t < c; ++t) g[t] = R.mul_ppow(V[t][i], n - pv[i]);
        res.kernel.push_back(std::move(g));
    }
    for (int j = rk; j < c; ++j) {
        std::vector<i64> g(c);
        for (int t = 0; t < c; ++t) g[t] = V[t][j];
        res.kernel.push_back(std::move(g));
    }
    return res;
}

std::optional<std::vector<i64>> solve_combination(const LambdaModule& M,
                                                  const std::vector<LambdaModule::Elem>& gens,
                                                  const LambdaModule::Elem& target) {
    const RingSpec& R = M.ring();
    int n = R.n();
    std::vector<std::vector<i64>> rows;
    std::vector<i64> rhs;
    for (int i = 0; i < M.rank(); ++i) {
        std::vector<i64> row(gens.size());
        for (size_t j = 0; j < gens.size(); ++j)
            row[j] = R.mul_ppow(gens[j][i], n - M.part(i));
        rows.push_back(std::move(row));
        rhs.push_back(R.mul_ppow(target[i], n - M.part(i)));
    }
    SmithSolveResult s = smith_solve(R, std::move(rows), std::move(rhs), int(gens.size()));
    if (!s.consistent) return std::nullopt;
    return s.particular;
}

Submodule Submodule::span(const LambdaModule& M, std::vector<Elem> gens) {
    const RingSpec& R = M.ring();
    Submodule U(M);
    std::deque<Elem> pool;
    for (Elem& g : gens) {
        Elem e = M.reduce(std::move(g));
        if (!M.is_zero(e)) pool.push_back(std::move(e));
    }
    std::vector<Elem> rows;
    std::vector<std::pair<int, int>> piv;

    // Column-major Howell reduction.  Invariant: pool rows vanish on all
    // columns already processed, so each column yields at most one pivot.
    for (int col = 0; col < M.rank(); ++col) {
        int best = -1, bv = R.n();
        for (size_t i = 0; i < pool.size(); ++i) {
            if (pool[i][col] == 0) continue;
            int v = R.val(pool[i][col]);
            if (v < bv) {
                bv = v;
                best = int(i);
            }
        }
        if (best < 0) continue;
        Elem row = pool[best];
        pool.erase(pool.begin() + best);
        row = M.scalar(R.inv(R.unit_part(row[col])), row);
        ensure(row[col] == R.pow_p(bv), "pivot normalization failed");
        for (Elem& q : pool) {
            if (q[col] == 0) continue;
            ensure(R.val(q[col]) >= bv, "pool entry below pivot valuation");
            q = M.sub(q, M.scalar(R.div_ppow(q[col], bv), row));
            ensure(q[col] == 0, "pool elimination failed");
        }
        std::erase_if(pool, [&](const Elem& q) { return M.is_zero(q); });
        // Annihilator tail keeps the span closed for membership by division.
        Elem tail = M.mul_ppow(row, M.part(col) - bv);
        if (!M.is_zero(tail)) pool.push_back(std::move(tail));
        rows.push_back(std::move(row));
        piv.emplace_back(col, bv);
    }

    // Reduce entries over each pivot below p^v; left-to-right keeps earlier
    // reductions intact because row t vanishes left of its own pivot.
    for (size_t t = 0; t < rows.size(); ++t) {
        auto [col, v] = piv[t];
        for (size_t s = 0; s < rows.size(); ++s) {
            if (s == t || rows[s][col] == 0) continue;
            i64 q = R.div_ppow(rows[s][col], v);
            if (q == 0) continue;
            rows[s] = M.sub(rows[s], M.scalar(q, rows[t]));
            ensure(rows[s][col] < R.pow_p(v), "pivot reduction failed");
        }
    }

    U.rows_ = std::move(rows);
    U.piv_ = std::move(piv);
    return U;
}

Submodule Submodule::zero(const LambdaModule& M) { return Submodule(M); }

Submodule Submodule::full(const LambdaModule& M) {
    std::vector<Elem> gens;
    for (int i = 0; i < M.rank(); ++i) {
        Elem e = M.zero();
        e[i] = 1;
        gens.push_back(std::move(e));
    }
    return span(M, std::move(gens));
}

bool Submodule::contains(const Elem& x) const {
    return solve_combination(mod_, rows_, mod_.reduce(x)).has_value();
}

bool Submodule::contains(const Submodule& other) const {
    ensure(mod_ == other.mod_, "submodules of different modules");
    for (const Elem& g : other.rows_)
        if (!contains(g)) return false;
    return true;
}

int Submodule::length() const {
    int s = 0;
    for (auto [col, v] : piv_) s += mod_.part(col) - v;
    return s;
}

std::vector<int> Submodule::type() const {
    int n = mod_.ring().n();
    std::vector<int> len(n + 2, 0);
    for (int e = 0; e <= n; ++e) len[e] = scalar_image(*this, e).length();
    std::vector<int> parts;
    for (int j = 1;; ++j) {
        int mu = 0;
        for (int e = 0; e <= n; ++e)
            if (len[e] - len[e + 1] >= j) ++mu;
        if (mu == 0) break;
        parts.push_back(mu);
    }
    return parts;
}

std::string Submodule::key() const {
    std::string s;
    for (const Elem& r : rows_) {
        for (i64 x : r) s += std::to_string(x) + ",";
        s += ";";
    }
    return s;
}

Submodule sum(const Submodule& U, const Submodule& W) {
    ensure(U.module() == W.module(), "sum of submodules of different modules");
    std::vector<Submodule::Elem> gens = U.gens();
    for (const auto& g : W.gens()) gens.push_back(g);
    return Submodule::span(U.module(), std::move(gens));
}

Submodule intersect(const Submodule& U, const Submodule& W) {
    ensure(U.module() == W.module(), "intersection of submodules of different modules");
    const LambdaModule& M = U.module();
    const RingSpec& R = M.ring();
    int n = R.n();
    int gu = int(U.gens().size()), gw = int(W.gens().size());
    // a . U.gens = b . W.gens, unknowns (a, b).
    std::vector<std::vector<i64>> rows;
    for (int i = 0; i < M.rank(); ++i) {
        std::vector<i64> row(gu + gw);
        for (int j = 0; j < gu; ++j)
            row[j] = R.mul_ppow(U.gens()[j][i], n - M.part(i));
        for (int j = 0; j < gw; ++j)
            row[gu + j] = R.neg(R.mul_ppow(W.gens()[j][i], n - M.part(i)));
        rows.push_back(std::move(row));
    }
    SmithSolveResult s = smith_solve(R, std::move(rows), std::vector<i64>(M.rank(), 0), gu + gw);
    std::vector<Submodule::Elem> gens;
    for (const auto& k : s.kernel) {
        Submodule::Elem x = M.zero();
        for (int j = 0; j < gu; ++j) x = M.add(x, M.scalar(k[j], U.gens()[j]));
        gens.push_back(std::move(x));
    }
    return Submodule::span(M, std::move(gens));
}

Submodule scalar_image(const Submodule& U, int e) {
    const LambdaModule& M = U.module();
    std::vector<Submodule::Elem> gens;
    for (const auto& g : U.gens()) gens.push_back(M.mul_ppow(g, e));
    return Submodule::span(M, std::move(gens));
}

Submodule scalar_preimage(const Submodule& U, int e) {
    const LambdaModule& M = U.module();
    const RingSpec& R = M.ring();
    int n = R.n();
    int gu = int(U.gens().size());
    // p^e x = b . U.gens, unknowns (x, b).
    i64 pe = e >= n ? 0 : R.pow_p(e);
    std::vector<std::vector<i64>> rows;
    for (int i = 0; i < M.rank(); ++i) {
        std::vector<i64> row(M.rank() + gu, 0);
        row[i] = R.mul_ppow(pe, n - M.part(i));
        for (int j = 0; j < gu; ++j)
            row[M.rank() + j] = R.neg(R.mul_ppow(U.gens()[j][i], n - M.part(i)));
        rows.push_back(std::move(row));
    }
    SmithSolveResult s =
        smith_solve(R, std::move(rows), std::vector<i64>(M.rank(), 0), M.rank() + gu);
    std::vector<Submodule::Elem> gens;
    for (const auto& k : s.kernel) {
        Submodule::Elem x(k.begin(), k.begin() + M.rank());
        gens.push_back(M.reduce(std::move(x)));
    }
    return Submodule::span(M, std::move(gens));
}

Submodule socle(const LambdaModule& M) {
    std::vector<Submodule::Elem> gens;
    for (int i = 0; i < M.rank(); ++i) {
        Submodule::Elem e = M.zero();
        e[i] = M.ring().pow_p(M.part(i) - 1);
        gens.push_back(std::move(e));
    }
    return Submodule::span(M, std::move(gens));
}

Submodule radical_power(const LambdaModule& M, int l) {
    std::vector<Submodule::Elem> gens;
    for (int i = 0; i < M.rank(); ++i) {
        if (M.part(i) <= l) continue;
        Submodule::Elem e = M.zero();
        e[i] = M.ring().pow_p(l);
        gens.push_back(std::move(e));
    }
    return Submodule::span(M, std::move(gens));
}

int height(const LambdaModule& M, const LambdaModule::Elem& x) {
    require(!M.is_zero(x), "height of the zero element is not defined");
    int h = 0;
    for (int m = 1; m <= M.loewy_length(); ++m) {
        if (!radical_power(M, m).contains(x)) break;
        h = m;
    }
    return h;
}

std::vector<int> height_sequence(const LambdaModule& M, const LambdaModule::Elem& x) {
    require(!M.is_zero(x), "height sequence of the zero element is not defined");
    std::vector<int> hs;
    LambdaModule::Elem cur = x;
    while (!M.is_zero(cur)) {
        hs.push_back(height(M, cur));
        cur = M.mul_ppow(cur, 1);
    }
    return hs;
}

}  // namespace subpair
