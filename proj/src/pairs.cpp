#include "subpair/pairs.hpp"

#include <algorithm>

namespace subpair {

PairLabel PairLabel::picket(int m, int l) {
    require(0 <= m && m <= 2, "picket subgroup length m must be 0, 1 or 2");
    require(l >= std::max(1, m), "picket needs l >= max(1, m)");
    return PairLabel{Kind::P, m, l};
}

PairLabel PairLabel::qpair(int s, int t) {
    require(s >= 1, "Q label needs s >= 1");
    require(s < t - 1, "Q label needs s < t-1");
    return PairLabel{Kind::Q, s, t};
}

std::vector<int> PairLabel::partition_parts() const {
    if (kind == Kind::P) return {b};
    return {b, a};  // t > s
}

int PairLabel::sub_length() const { return kind == Kind::P ? a : 2; }

std::vector<int> PairLabel::expected_height_seq() const {
    if (kind == Kind::Q) return {a - 1, b - 1};
    std::vector<int> hs;
    for (int h = b - a; h < b; ++h) hs.push_back(h);
    return hs;
}

std::string PairLabel::show() const {
    std::string s = kind == Kind::P ? "P(" : "Q(";
    return s + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::vector<PairLabel> all_pair_labels(int n) {
    require(n >= 1, "n must be at least 1");
    std::vector<PairLabel> out;
    for (int m = 0; m <= 2; ++m)
        for (int l = std::max(1, m); l <= n; ++l) out.push_back(PairLabel::picket(m, l));
    for (int s = 1; s <= n; ++s)
        for (int t = s + 2; t <= n; ++t) out.push_back(PairLabel::qpair(s, t));
    std::sort(out.begin(), out.end());
    ensure(int(out.size()) == n * (n + 3) / 2, "label census does not match (n^2+3n)/2");
    return out;
}

Pair::Pair(LambdaModule B, Submodule A, int bound)
    : b_(std::move(B)), a_(std::move(A)), bound_(bound) {
    require(a_.module() == b_, "submodule does not live in the given module");
    require(0 <= bound_ && bound_ <= 2, "pair bound must be 0, 1 or 2");
    require(scalar_image(a_, bound_).is_zero(), "p^bound A = 0 violated");
}

Pair make_picket(const RingSpec& R, int m, int l) {
    PairLabel lab = PairLabel::picket(m, l);
    require(l <= R.n(), "picket length l exceeds ring length n");
    LambdaModule B(R, {l});
    std::vector<Submodule::Elem> gens;
    if (m > 0) gens.push_back({R.pow_p(l - m)});
    return Pair(B, Submodule::span(B, gens), lab.sub_length() == 0 ? 0 : m);
}

Pair make_q(const RingSpec& R, int s, int t) {
    PairLabel lab = PairLabel::qpair(s, t);
    (void)lab;
    require(t <= R.n(), "Q label t exceeds ring length n");
    LambdaModule B(R, {t, s});
    Submodule A = Submodule::span(B, {{R.pow_p(t - 2), R.pow_p(s - 1)}});
    return Pair(B, A, 2);
}

Pair realize_label(const RingSpec& R, const PairLabel& label) {
    if (label.kind == PairLabel::Kind::P) return make_picket(R, label.a, label.b);
    return make_q(R, label.a, label.b);
}

DirectSumPair direct_sum(const std::vector<Pair>& xs) {
    require(!xs.empty(), "direct sum of an empty list is not supported");
    const RingSpec& R = xs[0].ring();
    for (const Pair& x : xs) require(x.ring() == R, "direct sum across different rings");

    // Stable sort by decreasing part keeps a deterministic column order.
    struct Comp {
        int part, pair_idx, comp_idx;
    };
    std::vector<Comp> comps;
    for (size_t i = 0; i < xs.size(); ++i)
        for (int c = 0; c < xs[i].B().rank(); ++c)
            comps.push_back({xs[i].B().part(c), int(i), c});
    std::stable_sort(comps.begin(), comps.end(),
                     [](const Comp& a, const Comp& b) { return a.part > b.part; });

    std::vector<int> parts;
    std::vector<std::vector<int>> block_cols(xs.size());
    for (size_t i = 0; i < xs.size(); ++i)
        block_cols[i].resize(xs[i].B().rank());
    for (size_t col = 0; col < comps.size(); ++col) {
        parts.push_back(comps[col].part);
        block_cols[comps[col].pair_idx][comps[col].comp_idx] = int(col);
    }

    LambdaModule B(R, parts);
    std::vector<Submodule::Elem> gens;
    int bound = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        bound = std::max(bound, xs[i].bound());
        for (const auto& g : xs[i].A().gens()) {
            Submodule::Elem e = B.zero();
            for (int c = 0; c < xs[i].B().rank(); ++c) e[block_cols[i][c]] = g[c];
            gens.push_back(std::move(e));
        }
    }
    return DirectSumPair{Pair(B, Submodule::span(B, std::move(gens)), bound),
                         std::move(block_cols)};
}

Submodule a_minus(const Pair& x) { return scalar_image(x.A(), 1); }

Submodule a_plus(const Pair& x) {
    Submodule up = sum(x.A(), socle(x.B()));
    // A + soc B = p^{-1}(rad A) holds for every pair.
    ensure(up == scalar_preimage(a_minus(x), 1), "A^+ identity violated");
    return up;
}

void DecompReport::add(const PairLabel& l, int count) { labels[l] += count; }

int DecompReport::total() const {
    int t = 0;
    for (const auto& [l, c] : labels) t += c;
    return t;
}

std::string DecompReport::show() const {
    if (labels.empty()) return "0";
    std::string s;
    for (const auto& [l, c] : labels) {
        if (!s.empty()) s += " + ";
        if (c != 1) s += std::to_string(c) + "*";
        s += l.show();
    }
    return s;
}

bool report_consistent_with(const DecompReport& r, const Pair& x) {
    std::vector<int> parts;
    int sublen = 0;
    for (const auto& [l, c] : r.labels) {
        require(c >= 0, "negative multiplicity in report");
        for (int i = 0; i < c; ++i) {
            for (int pp : l.partition_parts()) parts.push_back(pp);
            sublen += l.sub_length();
        }
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts == x.B().parts() && sublen == x.A().length();
}

}  // namespace subpair
