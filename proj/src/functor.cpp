#include "subpair/functor.hpp"

#include <algorithm>

namespace subpair {

TildeSpace::TildeSpace(Pair x)
    : x_(std::move(x)), up_(a_plus(x_)), down_(a_minus(x_)) {
    // Greedy basis of the k-space A^+/A^-: classes of canonical generators,
    // keeping those outside the span of A^- and the picks so far.
    const LambdaModule& B = x_.B();
    std::vector<LambdaModule::Elem> picked = down_.gens();
    Submodule cur = down_;
    for (const LambdaModule::Elem& g : up_.gens()) {
        if (cur.contains(g)) continue;
        basis_.push_back(g);
        picked.push_back(g);
        cur = Submodule::span(B, picked);
    }
    ensure(cur == up_, "basis does not span the total space");
    ensure(int(basis_.size()) == up_.length() - down_.length(),
           "total space dimension mismatch");
}

std::vector<i64> TildeSpace::coords(const LambdaModule::Elem& v) const {
    require(up_.contains(v), "element outside A^+ has no tilde coordinates");
    std::vector<LambdaModule::Elem> gens = basis_;
    for (const LambdaModule::Elem& g : down_.gens()) gens.push_back(g);
    auto c = solve_combination(x_.B(), gens, v);
    ensure(c.has_value(), "containment without a combination");
    std::vector<i64> out(basis_.size());
    // Modulo A^- the coefficients act through k; two solutions differ by
    // multiples of p because the basis classes are independent.
    for (size_t k = 0; k < basis_.size(); ++k) out[k] = (*c)[k] % x_.ring().p();
    return out;
}

LambdaModule::Elem TildeSpace::lift(const std::vector<i64>& coords) const {
    require(coords.size() == basis_.size(), "one coordinate per basis vector");
    const LambdaModule& B = x_.B();
    LambdaModule::Elem v = B.zero();
    for (size_t k = 0; k < coords.size(); ++k)
        v = B.add(v, B.scalar(coords[k], basis_[k]));
    return v;
}

FpMat TildeSpace::subspace(const Submodule& C) const {
    require(C.module() == x_.B(), "subspace of a different module");
    Submodule W = sum(intersect(C, up_), down_);
    FpMat M(x_.ring().p(), dim(), int(W.gens().size()));
    for (size_t j = 0; j < W.gens().size(); ++j) {
        std::vector<i64> c = coords(W.gens()[j]);
        for (int i = 0; i < dim(); ++i) M.at(i, int(j)) = c[i];
    }
    return col_basis(M);
}

PosetRep apply_F(const Pair& x) {
    const RingSpec& R = x.ring();
    TildeSpace T(x);
    std::vector<FpMat> chain;
    for (int l = 1; l <= R.n() - 1; ++l)
        chain.push_back(T.subspace(radical_power(x.B(), l)));
    PosetRep rep = make_rep(R.p(), R.n(), T.dim(), chain, T.subspace(socle(x.B())),
                            T.subspace(x.A()));
    ensure(satisfies_rep_prime(rep), "image violates the subspace conditions");
    return rep;
}

FpMat apply_F_morphism(const PairMorphism& f) {
    TildeSpace tx(f.source()), ty(f.target());
    FpMat M(f.source().ring().p(), ty.dim(), tx.dim());
    for (int j = 0; j < tx.dim(); ++j) {
        // f maps A + soc B into C + soc D, so the image has coordinates.
        std::vector<i64> c = ty.coords(f.apply(tx.basis()[j]));
        for (int i = 0; i < ty.dim(); ++i) M.at(i, j) = c[i];
    }
    return M;
}

RepLabel expected_rep_label(const PairLabel& l) {
    if (l.kind == PairLabel::Kind::Q) return RepLabel::wlabel(l.a - 1, l.b - 2);
    if (l.a == 0) return RepLabel::vlabel(l.b - 1, 1, 0);
    if (l.a == 1) return RepLabel::vlabel(l.b - 1, 1, 1);
    return RepLabel::vlabel(l.b - 2, 0, 1);
}

PairLabel label_to_pair(int n, const RepLabel& rl) {
    if (rl.kind == RepLabel::Kind::W) {
        require(0 <= rl.a && rl.a < rl.b && rl.b <= n - 1, "malformed W label");
        require(rl.b <= n - 2, "W(s,t) with t > n-2 is not in the image");
        return PairLabel::qpair(rl.a + 1, rl.b + 2);
    }
    require(0 <= rl.a && rl.a <= n - 1 && (rl.b == 0 || rl.b == 1) &&
                (rl.c == 0 || rl.c == 1),
            "malformed V label");
    if (rl.b == 1) return PairLabel::picket(rl.c == 0 ? 0 : 1, rl.a + 1);
    require(rl.c == 1, "V(l,0,0) is not in the image");
    require(rl.a <= n - 2, "V(n-1,0,1) is not in the image");
    return PairLabel::picket(2, rl.a + 2);
}

DecompReport classify_s2(const Pair& x) {
    PosetRep rep = apply_F(x);
    DecompReport r;
    for (const RepSummand& s : decompose(rep))
        r.add(label_to_pair(x.ring().n(), s.label));
    ensure(report_consistent_with(r, x), "report inconsistent with the input pair");
    return r;
}

Pair pullback_pair(const TildeSpace& frame, const FpMat& U) {
    const LambdaModule& B = frame.pair().B();
    require(U.p == B.ring().p() && U.rows == frame.dim(), "subspace has a wrong shape");
    std::vector<LambdaModule::Elem> gens = frame.down().gens();
    for (int j = 0; j < U.cols; ++j) {
        std::vector<i64> c(U.rows);
        for (int i = 0; i < U.rows; ++i) c[i] = U.at(i, j);
        gens.push_back(frame.lift(c));
    }
    Pair out(B, Submodule::span(B, gens), 2);
    ensure(frame.subspace(out.A()) == col_basis(U), "pulled-back subgroup mismatch");
    return out;
}

Pair pullback_pair(const LambdaModule& B, const Submodule& up, const FpMat& U) {
    require(up.contains(socle(B)), "frame must contain the socle");
    return pullback_pair(TildeSpace(Pair(B, up, 2)), U);
}

namespace {

// One peeled picket plus the data of the recursion step.
struct S1Result {
    std::vector<PairLabel> labels;
    // Per label k: coefficient-extraction row (maps B onto Lambda/(p^{l_k}))
    // and the summand generator column, both over the current coordinates.
    std::vector<std::vector<i64>> trows;
    std::vector<std::vector<i64>> scols;
};

// Splits (B;A) with A inside soc B into pickets, peeling a summand of
// maximal Loewy length each round.
S1Result decompose_s1_impl(const RingSpec& R, const std::vector<int>& parts,
                           const std::vector<LambdaModule::Elem>& agens_in) {
    S1Result res;
    if (parts.empty()) return res;
    LambdaModule M(R, parts);
    std::vector<LambdaModule::Elem> agens;
    for (const LambdaModule::Elem& a : agens_in)
        if (!M.is_zero(a)) agens.push_back(M.reduce(a));
    int rank = M.rank();
    int l = parts[0];

    Submodule A = Submodule::span(M, agens);
    Submodule U = intersect(A, radical_power(M, l - 1));

    int istar = -1;
    std::vector<i64> row(rank, 0), col(rank, 0);
    std::vector<i64> dcol(rank, 0), erow(rank, 0);  // indexed by cur coords
    std::vector<LambdaModule::Elem> next_agens;
    PairLabel label = PairLabel::picket(0, l);

    if (!U.is_zero()) {
        // P(1,l): peel (b Lambda; u Lambda) with p^{l-1} b = u in A.  Since
        // A is in the socle, the coordinate projection onto b automatically
        // maps A into u Lambda, so the coordinate complement splits A.
        label = PairLabel::picket(1, l);
        const LambdaModule::Elem& u = U.gens()[0];
        std::vector<i64> b(rank, 0);
        for (int j = 0; j < rank; ++j) {
            if (M.part(j) == l) b[j] = R.div_ppow(u[j], l - 1);
            else ensure(u[j] == 0, "socle element of full height has short support");
        }
        for (int j = 0; j < rank && istar < 0; ++j)
            if (M.part(j) == l && b[j] != 0 && R.val(b[j]) == 0) istar = j;
        ensure(istar >= 0, "no unit coordinate in a maximal-height generator");
        i64 binv = R.inv(b[istar]);
        row[istar] = R.mod_ppow(binv, l);
        col = b;
        for (int j = 0; j < rank; ++j)
            if (j != istar) dcol[j] = R.mod_ppow(R.neg(R.mul(binv, b[j])), M.part(j));
        for (const LambdaModule::Elem& a : agens) {
            i64 c = R.mul(binv, a[istar]);
            LambdaModule::Elem an(rank, 0);
            for (int j = 0; j < rank; ++j)
                if (j != istar) an[j] = R.mod_ppow(R.sub(a[j], R.mul(c, b[j])), M.part(j));
            next_agens.push_back(an);
        }
    } else {
        // P(0,l): peel (e_istar Lambda; 0).  The complement is tilted by a
        // map phi so that it swallows A: phi solves
        // sum_{j != istar} phi_j a_j = a_istar for every generator a of A,
        // which is solvable because A meets p^{l-1} B trivially.
        for (int j = 0; j < rank && istar < 0; ++j)
            if (M.part(j) == l) istar = j;
        ensure(istar >= 0, "partition lost its maximal part");
        std::vector<int> shift(rank, 0);
        for (int j = 0; j < rank; ++j) shift[j] = std::max(0, l - M.part(j));
        std::vector<std::vector<i64>> rows;
        std::vector<i64> rhs;
        for (const LambdaModule::Elem& a : agens) {
            std::vector<i64> r(rank, 0);
            for (int j = 0; j < rank; ++j)
                if (j != istar)
                    r[j] = R.mul_ppow(R.mul_ppow(a[j], shift[j]), R.n() - l);
            rows.push_back(std::move(r));
            rhs.push_back(R.mul_ppow(a[istar], R.n() - l));
        }
        SmithSolveResult sol = smith_solve(R, std::move(rows), std::move(rhs), rank);
        ensure(sol.consistent, "complement-tilting system inconsistent");
        std::vector<i64> phi(rank, 0);
        for (int j = 0; j < rank; ++j)
            if (j != istar) phi[j] = R.mod_ppow(R.mul_ppow(sol.particular[j], shift[j]), l);
        row[istar] = 1;
        for (int j = 0; j < rank; ++j)
            if (j != istar) row[j] = R.mod_ppow(R.neg(phi[j]), l);
        col[istar] = 1;
        erow = phi;
        for (const LambdaModule::Elem& a : agens) {
            LambdaModule::Elem an = a;
            an[istar] = 0;
            next_agens.push_back(an);
        }
    }

    std::vector<int> next_parts;
    std::vector<int> keep;  // next coordinate -> current coordinate
    for (int j = 0; j < rank; ++j)
        if (j != istar) {
            next_parts.push_back(M.part(j));
            keep.push_back(j);
        }
    std::vector<LambdaModule::Elem> sub_agens;
    for (const LambdaModule::Elem& a : next_agens) {
        LambdaModule::Elem v;
        for (int j : keep) v.push_back(a[j]);
        sub_agens.push_back(std::move(v));
    }

    S1Result sub = decompose_s1_impl(R, next_parts, sub_agens);

    res.labels.push_back(label);
    res.trows.push_back(row);
    res.scols.push_back(col);
    for (size_t k = 0; k < sub.labels.size(); ++k) {
        int lk = sub.labels[k].b;
        std::vector<i64> tr(rank, 0), sc(rank, 0);
        i64 at_istar_t = 0, at_istar_s = 0;
        for (size_t jj = 0; jj < keep.size(); ++jj) {
            int j = keep[jj];
            tr[j] = sub.trows[k][jj];
            sc[j] = sub.scols[k][jj];
            // x -> next coordinates inserts the correction d_col at istar;
            // next basis -> x inserts the tilt e_row at istar.
            at_istar_t = R.add(at_istar_t, R.mul(sub.trows[k][jj], dcol[j]));
            at_istar_s = R.add(at_istar_s, R.mul(erow[j], sub.scols[k][jj]));
        }
        tr[istar] = R.mod_ppow(at_istar_t, lk);
        sc[istar] = R.mod_ppow(at_istar_s, M.part(istar));
        res.labels.push_back(sub.labels[k]);
        res.trows.push_back(std::move(tr));
        res.scols.push_back(std::move(sc));
    }
    return res;
}

// Realize the labels, embed the rows/columns into matrices, and validate the
// witness as a pair of mutually inverse morphisms.
SplitWitness package_witness(const Pair& x, const std::vector<PairLabel>& order,
                             const std::vector<std::vector<i64>>& trows,
                             const std::vector<std::vector<i64>>& scols) {
    const RingSpec& R = x.ring();
    int rank = x.B().rank();
    int K = int(order.size());
    if (K == 0) {
        ensure(rank == 0, "empty decomposition of a nonzero module");
        PairMorphism id = identity_morphism(x);
        return SplitWitness{DecompReport{}, {}, x, id, id};
    }
    std::vector<Pair> parts;
    for (const PairLabel& l : order) parts.push_back(realize_label(R, l));
    DirectSumPair ds = direct_sum(parts);

    std::vector<std::vector<i64>> T(K, std::vector<i64>(rank, 0));
    std::vector<std::vector<i64>> S(rank, std::vector<i64>(K, 0));
    for (int k = 0; k < K; ++k) {
        int citem = ds.block_cols[k][0];
        T[citem] = trows[k];
        for (int j = 0; j < rank; ++j) S[j][citem] = scols[k][j];
    }
    PairMorphism to(x, ds.pair, T);
    PairMorphism from(ds.pair, x, S);
    ensure(compose(from, to) == identity_morphism(x), "witness is not left invertible");
    ensure(compose(to, from) == identity_morphism(ds.pair),
           "witness is not right invertible");
    DecompReport rep;
    for (const PairLabel& l : order) rep.add(l);
    ensure(report_consistent_with(rep, x), "picket report inconsistent");
    return SplitWitness{rep, order, ds.pair, to, from};
}

}  // namespace

SplitWitness decompose_s1(const Pair& x) {
    require(x.in_s(1), "decomposition requires pA = 0");
    S1Result res = decompose_s1_impl(x.ring(), x.B().parts(), x.A().gens());
    return package_witness(x, res.labels, res.trows, res.scols);
}

SplitWitness decompose_socle_contained(const Pair& x) {
    require(x.A().contains(socle(x.B())), "decomposition requires soc B <= A");
    const RingSpec& R = x.ring();
    Submodule rad = scalar_image(x.A(), 1);
    S1Result res = decompose_s1_impl(R, x.B().parts(), rad.gens());

    // The module splitting computed for (B; pA) is compatible with A itself:
    // A is the direct sum of its intersections with the cyclic blocks, each
    // of length 1 or 2.
    std::vector<PairLabel> order;
    Submodule together = Submodule::zero(x.B());
    for (size_t k = 0; k < res.labels.size(); ++k) {
        int l = res.labels[k].b;
        Submodule block = Submodule::span(x.B(), {res.scols[k]});
        Submodule meet = intersect(x.A(), block);
        int m = meet.length();
        ensure(m == 1 || m == 2, "block intersection is not a picket subgroup");
        order.push_back(PairLabel::picket(m, l));
        together = sum(together, meet);
    }
    ensure(together == x.A(), "subgroup does not split along the blocks");
    return package_witness(x, order, res.trows, res.scols);
}

PairMorphism lift_morphism(const Pair& x, const Pair& y, const FpMat& h) {
    const RingSpec& R = x.ring();
    require(y.ring() == R, "endpoints over different rings");
    PosetRep fx = apply_F(x), fy = apply_F(y);
    require(h.p == R.p() && h.rows == fy.dim0 && h.cols == fx.dim0,
            "map has a wrong shape");
    {
        std::vector<FpMat> xs = fx.points(), ys = fy.points();
        for (size_t j = 0; j < xs.size(); ++j)
            require(colspace_contains(ys[j], mul(h, xs[j])),
                    "map is not a morphism of representations");
    }

    // Pass to the frames (B; A^+): they have the same tilde coordinates, and
    // both sides split into pickets with m >= 1.
    Pair xplus(x.B(), a_plus(x), 2);
    Pair yplus(y.B(), a_plus(y), 2);
    SplitWitness wx = decompose_socle_contained(xplus);
    SplitWitness wy = decompose_socle_contained(yplus);
    FpMat fux = apply_F_morphism(wx.to_canonical);
    FpMat fuy = apply_F_morphism(wy.to_canonical);
    FpMat ht = mul(fuy, mul(h, inverse(fux)));

    int Kx = int(wx.order.size()), Ky = int(wy.order.size());
    ensure(ht.rows == Ky && ht.cols == Kx, "frame decomposition dimension mismatch");
    // Canonical coordinate k carries the picket P(m,l) whose tilde basis
    // vector is the class of p^(l-m) e_k, so the entries of ht are block
    // scalars between cyclic summands.
    auto picket_shape = [](const Pair& can, std::vector<int>& ls, std::vector<int>& ms) {
        const LambdaModule& B = can.B();
        for (int k = 0; k < B.rank(); ++k) {
            ls.push_back(B.part(k));
            LambdaModule::Elem e(B.rank(), 0);
            e[k] = 1;
            ms.push_back(intersect(can.A(), Submodule::span(B, {e})).length());
        }
    };
    std::vector<int> lx, mx, ly, my;
    picket_shape(wx.canonical, lx, mx);
    picket_shape(wy.canonical, ly, my);

    std::vector<std::vector<i64>> g(Ky, std::vector<i64>(Kx, 0));
    for (int j = 0; j < Ky; ++j)
        for (int i = 0; i < Kx; ++i) {
            i64 gamma = ht.at(j, i);
            if (gamma == 0) continue;
            int e = (ly[j] - my[j]) - (lx[i] - mx[i]);
            ensure(e >= 0 && e >= ly[j] - lx[i], "infeasible block in a lift");
            g[j][i] = R.mul_ppow(gamma, e);
        }
    PairMorphism gmor(wx.canonical, wy.canonical, g);
    PairMorphism on_plus = compose(wy.from_canonical, compose(gmor, wx.to_canonical));
    PairMorphism f(x, y, on_plus.matrix());
    ensure(apply_F_morphism(f) == h, "lift does not induce the requested map");
    return f;
}

IsoWitness iso_witness(const Pair& x, const DecompReport& report) {
    const RingSpec& R = x.ring();
    std::vector<Pair> parts;
    for (const auto& [label, count] : report.labels)
        for (int i = 0; i < count; ++i) parts.push_back(realize_label(R, label));
    require(!parts.empty(), "empty report has no realization");
    Pair y = direct_sum(parts).pair;
    auto h = reps_isomorphic(apply_F(x), apply_F(y));
    ensure(h.has_value(), "report does not match the image up to isomorphism");
    PairMorphism f = lift_morphism(x, y, *h);
    auto g = two_sided_inverse(f);
    ensure(g.has_value(), "lifted isomorphism is not invertible");
    return IsoWitness{y, f, *g};
}

}  // namespace subpair
