#include "subpair/posetrep.hpp"

#include <algorithm>

namespace subpair {

FpMat PosetRep::chain_at(int i) const {
    ensure(0 <= i && i <= n - 1, "chain index out of range");
    return i == 0 ? FpMat::identity(p, dim0) : chain[i - 1];
}

std::vector<FpMat> PosetRep::points() const {
    std::vector<FpMat> pts = chain;
    pts.push_back(vprime);
    pts.push_back(vdprime);
    return pts;
}

bool PosetRep::operator==(const PosetRep& o) const {
    return p == o.p && n == o.n && dim0 == o.dim0 && chain == o.chain &&
           vprime == o.vprime && vdprime == o.vdprime;
}

PosetRep make_rep(i64 p, int n, int dim0, std::vector<FpMat> chain, FpMat vprime,
                  FpMat vdprime) {
    require(n >= 1 && dim0 >= 0, "bad representation shape");
    require(int(chain.size()) == n - 1, "chain must have n-1 subspaces");
    PosetRep V{p, n, dim0, {}, col_basis(vprime), col_basis(vdprime)};
    for (FpMat& m : chain) V.chain.push_back(col_basis(m));
    for (const FpMat& m : V.points()) {
        ensure(m.p == p && m.rows == dim0, "subspace outside the total space");
    }
    for (int i = 0; i + 1 < n - 1; ++i)
        require(colspace_contains(V.chain[i], V.chain[i + 1]),
                "chain subspaces must be nested");
    return V;
}

PosetRep zero_rep(i64 p, int n) {
    std::vector<FpMat> chain(n - 1, FpMat(p, 0, 0));
    return make_rep(p, n, 0, chain, FpMat(p, 0, 0), FpMat(p, 0, 0));
}

RepLabel RepLabel::vlabel(int l, int lp, int lpp) {
    require(l >= 0, "V label needs l >= 0");
    require((lp == 0 || lp == 1) && (lpp == 0 || lpp == 1), "V label marks are 0/1");
    return RepLabel{Kind::V, l, lp, lpp};
}

RepLabel RepLabel::wlabel(int s, int t) {
    require(0 <= s && s < t, "W label needs 0 <= s < t");
    return RepLabel{Kind::W, s, t, 0};
}

std::string RepLabel::show() const {
    if (kind == Kind::V)
        return "V(" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + ")";
    return "W(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::vector<RepLabel> all_rep_labels(int n) {
    require(n >= 1, "n must be at least 1");
    std::vector<RepLabel> out;
    for (int l = 0; l <= n - 1; ++l)
        for (int lp = 0; lp <= 1; ++lp)
            for (int lpp = 0; lpp <= 1; ++lpp) out.push_back(RepLabel::vlabel(l, lp, lpp));
    for (int s = 0; s <= n - 2; ++s)
        for (int t = s + 1; t <= n - 1; ++t) out.push_back(RepLabel::wlabel(s, t));
    std::sort(out.begin(), out.end());
    ensure(int(out.size()) == (n * n + 7 * n) / 2, "rep label census mismatch");
    return out;
}

PosetRep make_indecomposable(i64 p, int n, const RepLabel& label) {
    auto line = [&](bool full) { return full ? FpMat::identity(p, 1) : FpMat(p, 1, 0); };
    if (label.kind == RepLabel::Kind::V) {
        require(label.a <= n - 1, "V label chain level exceeds n-1");
        std::vector<FpMat> chain;
        for (int i = 1; i <= n - 1; ++i) chain.push_back(line(i <= label.a));
        return make_rep(p, n, 1, chain, line(label.b == 1), line(label.c == 1));
    }
    require(label.b <= n - 1, "W label t exceeds n-1");
    FpMat full = FpMat::identity(p, 2);
    FpMat delta(p, 2, 1);
    delta.at(0, 0) = delta.at(1, 0) = 1;
    FpMat zer(p, 2, 0);
    FpMat e1(p, 2, 1), e2(p, 2, 1);
    e1.at(0, 0) = 1;
    e2.at(1, 0) = 1;
    std::vector<FpMat> chain;
    for (int i = 1; i <= n - 1; ++i)
        chain.push_back(i <= label.a ? full : (i <= label.b ? delta : zer));
    return make_rep(p, n, 2, chain, e1, e2);
}

bool satisfies_rep_prime(const PosetRep& V) {
    FpMat last = V.chain_at(V.n - 1);
    if (!colspace_contains(V.vprime, last)) return false;
    return rank(hstack(V.vprime, V.vdprime)) == V.dim0;
}

std::vector<int> rank_invariants(const PosetRep& V) {
    std::vector<int> inv;
    inv.push_back(V.dim0);
    for (int i = 1; i <= V.n - 1; ++i) inv.push_back(V.chain_at(i).cols);
    inv.push_back(V.vprime.cols);
    inv.push_back(V.vdprime.cols);
    for (int i = 1; i <= V.n - 1; ++i)
        inv.push_back(colspace_intersect(V.chain_at(i), V.vprime).cols);
    for (int i = 1; i <= V.n - 1; ++i)
        inv.push_back(colspace_intersect(V.chain_at(i), V.vdprime).cols);
    FpMat pp = colspace_intersect(V.vprime, V.vdprime);
    inv.push_back(pp.cols);
    for (int i = 1; i <= V.n - 1; ++i)
        inv.push_back(colspace_intersect(V.chain_at(i), pp).cols);
    ensure(int(inv.size()) == 4 * V.n, "invariant vector has wrong size");
    return inv;
}

std::vector<FpMat> rep_hom_basis(const PosetRep& x, const PosetRep& y) {
    ensure(x.p == y.p && x.n == y.n, "representations over different posets");
    i64 p = x.p;
    int rx = x.dim0, ry = y.dim0;
    // Unknown H (ry x rx) flattened row-major; constraint per poset point j:
    // L_j H S_j = 0 where L_j annihilates the target subspace.
    std::vector<std::vector<i64>> rows;
    std::vector<FpMat> xs = x.points(), ys = y.points();
    for (size_t j = 0; j < xs.size(); ++j) {
        FpMat L = left_annihilator(ys[j]);
        const FpMat& S = xs[j];
        for (int r = 0; r < L.rows; ++r)
            for (int c = 0; c < S.cols; ++c) {
                std::vector<i64> row(i64(rx) * ry, 0);
                for (int a = 0; a < ry; ++a)
                    for (int b = 0; b < rx; ++b)
                        row[i64(a) * rx + b] = L.at(r, a) * S.at(b, c) % p;
                rows.push_back(std::move(row));
            }
    }
    FpMat sys(p, int(rows.size()), rx * ry);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < rx * ry; ++j) sys.at(int(i), j) = rows[i][j];
    FpMat N = nullspace(sys);
    std::vector<FpMat> basis;
    for (int kcol = 0; kcol < N.cols; ++kcol) {
        FpMat H(p, ry, rx);
        for (int a = 0; a < ry; ++a)
            for (int b = 0; b < rx; ++b) H.at(a, b) = N.at(a * rx + b, kcol);
        basis.push_back(std::move(H));
    }
    return basis;
}

int hom_dim(const PosetRep& x, const PosetRep& y) {
    return int(rep_hom_basis(x, y).size());
}

namespace {

struct LabelSystem {
    std::vector<RepLabel> labels;
    std::vector<PosetRep> reps;
    FpMat T;  // T[j][i] = dim Hom(L_j, L_i), over the solving prime

    LabelSystem(i64 p, int n) : T(1000000007, 0, 0) {
        labels = all_rep_labels(n);
        int L = int(labels.size());
        for (const RepLabel& l : labels) reps.push_back(make_indecomposable(p, n, l));
        T = FpMat(T.p, L, L);
        for (int j = 0; j < L; ++j)
            for (int i = 0; i < L; ++i) T.at(j, i) = hom_dim(reps[j], reps[i]);
        ensure(rank(T) == L, "hom-dimension matrix is singular");
    }
};

const LabelSystem& label_system(i64 p, int n) {
    static std::map<std::pair<i64, int>, LabelSystem> cache;
    auto it = cache.find({p, n});
    if (it == cache.end()) it = cache.emplace(std::make_pair(p, n), LabelSystem(p, n)).first;
    return it->second;
}

}  // namespace

std::map<RepLabel, int> multiplicities(const PosetRep& V) {
    // dim Hom(L_j, V) = sum_i m_i dim Hom(L_j, L_i); the hom-dimension matrix
    // is invertible, so m is determined.  Solved modulo a large prime; the
    // multiplicities are tiny nonnegative integers, so no wraparound.
    const LabelSystem& sys = label_system(V.p, V.n);
    const std::vector<RepLabel>& labels = sys.labels;
    int L = int(labels.size());
    std::vector<i64> h(L);
    for (int j = 0; j < L; ++j) h[j] = hom_dim(sys.reps[j], V);
    auto m = solve(sys.T, h);
    ensure(m.has_value(), "hom-dimension system inconsistent");

    std::map<RepLabel, int> out;
    int total_dim = 0;
    for (int i = 0; i < L; ++i) {
        i64 mi = (*m)[i];
        ensure(0 <= mi && mi <= V.dim0, "multiplicity out of range");
        total_dim += int(mi) * labels[i].dim0();
        if (mi > 0) out[labels[i]] = int(mi);
    }
    ensure(total_dim == V.dim0, "multiplicities do not fill the total space");
    return out;
}

namespace {

// Restriction of V to the columns of K (a subrepresentation as a subspace):
// subspaces become (S_j cap K) written in K-coordinates.
PosetRep restrict_to(const PosetRep& V, const FpMat& K) {
    std::vector<FpMat> chain;
    auto in_k = [&](const FpMat& S) {
        FpMat W = colspace_intersect(S, K);
        auto X = solve_matrix(K, W);
        ensure(X.has_value(), "subspace does not meet the complement cleanly");
        return col_basis(*X);
    };
    for (const FpMat& S : V.chain) chain.push_back(in_k(S));
    return make_rep(V.p, V.n, K.cols, chain, in_k(V.vprime), in_k(V.vdprime));
}

}  // namespace

std::vector<RepSummand> decompose(const PosetRep& V) {
    std::vector<RepSummand> out;
    PosetRep cur = V;
    FpMat E = FpMat::identity(V.p, V.dim0);  // embedding of cur into V
    while (cur.dim0 > 0) {
        std::map<RepLabel, int> mult = multiplicities(cur);
        ensure(!mult.empty(), "positive dimension but no multiplicities");
        RepLabel label = mult.begin()->first;
        PosetRep L = make_indecomposable(cur.p, cur.n, label);

        // A split pair: maps f: L -> cur and g: cur -> L with g f = s id,
        // s != 0.  End(L) is one-dimensional, so every composite is scalar;
        // a nonzero one exists exactly because the multiplicity is positive.
        std::vector<FpMat> fs = rep_hom_basis(L, cur), gs = rep_hom_basis(cur, L);
        FpMat iota(V.p, 0, 0), pi(V.p, 0, 0);
        bool found = false;
        for (const FpMat& g : gs) {
            for (const FpMat& f : fs) {
                FpMat comp = mul(g, f);
                i64 s = comp.at(0, 0);
                ensure(comp == scale(s, FpMat::identity(V.p, L.dim0)),
                       "endomorphism of an indecomposable is not scalar");
                if (s == 0) continue;
                iota = f;
                // pi = s^{-1} g so that pi iota = id.
                pi = mul(inverse(scale(s, FpMat::identity(V.p, L.dim0))), g);
                found = true;
                break;
            }
            if (found) break;
        }
        ensure(found, "no split idempotent for a positive multiplicity");
        ensure(mul(pi, iota) == FpMat::identity(V.p, L.dim0), "split pair broken");

        out.push_back(RepSummand{label, mul(E, iota)});
        FpMat K = nullspace(pi);
        ensure(K.cols == cur.dim0 - L.dim0, "complement has wrong dimension");
        cur = restrict_to(cur, K);
        E = mul(E, K);
    }
    std::sort(out.begin(), out.end(),
              [](const RepSummand& a, const RepSummand& b) { return a.label < b.label; });
    return out;
}

PosetRep rep_direct_sum(const std::vector<PosetRep>& xs) {
    require(!xs.empty(), "direct sum of an empty list is not supported");
    i64 p = xs[0].p;
    int n = xs[0].n;
    int dim0 = 0;
    for (const PosetRep& x : xs) {
        require(x.p == p && x.n == n, "direct sum across different posets");
        dim0 += x.dim0;
    }
    auto stack = [&](auto pick) {
        int cols = 0;
        for (const PosetRep& x : xs) cols += pick(x).cols;
        FpMat M(p, dim0, cols);
        int ro = 0, co = 0;
        for (const PosetRep& x : xs) {
            FpMat b = pick(x);
            for (int i = 0; i < b.rows; ++i)
                for (int j = 0; j < b.cols; ++j) M.at(ro + i, co + j) = b.at(i, j);
            ro += x.dim0;
            co += b.cols;
        }
        return M;
    };
    std::vector<FpMat> chain;
    for (int i = 0; i < n - 1; ++i)
        chain.push_back(stack([&](const PosetRep& x) { return x.chain[i]; }));
    return make_rep(p, n, dim0, chain, stack([](const PosetRep& x) { return x.vprime; }),
                    stack([](const PosetRep& x) { return x.vdprime; }));
}

std::optional<FpMat> reps_isomorphic(const PosetRep& V, const PosetRep& W) {
    if (V.p != W.p || V.n != W.n || V.dim0 != W.dim0) return std::nullopt;
    std::vector<RepSummand> dv = decompose(V), dw = decompose(W);
    if (dv.size() != dw.size()) return std::nullopt;
    for (size_t i = 0; i < dv.size(); ++i)
        if (!(dv[i].label == dw[i].label)) return std::nullopt;
    // Both sorted by label; matching columns of the stacked bases summand by
    // summand carries each subspace onto its counterpart.
    auto stack_bases = [&](const std::vector<RepSummand>& ds) {
        FpMat P(V.p, V.dim0, 0);
        for (const RepSummand& s : ds) P = hstack(P, s.basis);
        return P;
    };
    FpMat H = mul(stack_bases(dw), inverse(stack_bases(dv)));
    std::vector<FpMat> sv = V.points(), sw = W.points();
    for (size_t j = 0; j < sv.size(); ++j)
        ensure(col_basis(mul(H, sv[j])) == sw[j], "isomorphism does not match subspaces");
    return H;
}

}  // namespace subpair
