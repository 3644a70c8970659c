#include "subpair/homs.hpp"

#include <algorithm>
#include <numeric>

namespace subpair {

namespace {

// Matrix cells (i,j) carry cyclic groups of order p^{min(lambda_j, mu_i)}:
// the entry is p^{shift} * t with t determined mod p^{min}.  The cells are
// permuted into weakly decreasing order to form a module.
struct CellLayout {
    int src_rank, tgt_rank;
    std::vector<int> min_exp;       // per cell i*src_rank+j
    std::vector<int> shift_exp;     // max(0, mu_i - lambda_j)
    std::vector<int> cell_to_slot;  // cell index -> coordinate of the module
    std::vector<int> slot_to_cell;
    LambdaModule cells;

    int cell(int i, int j) const { return i * src_rank + j; }
};

CellLayout make_layout(const Pair& x, const Pair& y) {
    require(x.ring() == y.ring(), "morphism endpoints over different rings");
    const LambdaModule& B = x.B();
    const LambdaModule& D = y.B();
    int sr = B.rank(), tr = D.rank();
    std::vector<int> min_exp(size_t(sr) * tr), shift_exp(size_t(sr) * tr);
    for (int i = 0; i < tr; ++i)
        for (int j = 0; j < sr; ++j) {
            min_exp[size_t(i) * sr + j] = std::min(B.part(j), D.part(i));
            shift_exp[size_t(i) * sr + j] = std::max(0, D.part(i) - B.part(j));
        }
    std::vector<int> slot_to_cell(min_exp.size());
    std::iota(slot_to_cell.begin(), slot_to_cell.end(), 0);
    std::stable_sort(slot_to_cell.begin(), slot_to_cell.end(),
                     [&](int a, int b) { return min_exp[a] > min_exp[b]; });
    std::vector<int> cell_to_slot(min_exp.size());
    std::vector<int> parts;
    for (size_t s = 0; s < slot_to_cell.size(); ++s) {
        cell_to_slot[slot_to_cell[s]] = int(s);
        parts.push_back(min_exp[slot_to_cell[s]]);
    }
    return CellLayout{sr,           tr,           std::move(min_exp),
                      std::move(shift_exp),       std::move(cell_to_slot),
                      std::move(slot_to_cell),    LambdaModule(x.ring(), parts)};
}

// Subgroup of the cells module given by f(span agens) inside span cgens.
// Unknowns: one t per cell plus one auxiliary coefficient per (agen, cgen);
// one equation per (agen, target coordinate), taken mod p^{mu_i}.
Submodule constrained_homs(const Pair& x, const Pair& y,
                           const std::vector<LambdaModule::Elem>& agens,
                           const std::vector<LambdaModule::Elem>& cgens) {
    const RingSpec& R = x.ring();
    CellLayout lay = make_layout(x, y);
    int cells = lay.cells.rank();
    int aux = int(agens.size() * cgens.size());
    int unknowns = cells + aux;

    std::vector<std::vector<i64>> rows;
    for (size_t ai = 0; ai < agens.size(); ++ai)
        for (int i = 0; i < lay.tgt_rank; ++i) {
            int scale_up = R.n() - y.B().part(i);
            std::vector<i64> row(unknowns, 0);
            for (int j = 0; j < lay.src_rank; ++j) {
                int c = lay.cell(i, j);
                i64 coef = R.mul_ppow(agens[ai][j], lay.shift_exp[c]);
                row[lay.cell_to_slot[c]] = R.mul_ppow(coef, scale_up);
            }
            for (size_t k = 0; k < cgens.size(); ++k)
                row[cells + ai * cgens.size() + k] =
                    R.neg(R.mul_ppow(cgens[k][i], scale_up));
            rows.push_back(std::move(row));
        }

    std::vector<i64> rhs(rows.size(), 0);
    SmithSolveResult sol = smith_solve(R, std::move(rows), std::move(rhs), unknowns);
    ensure(sol.consistent, "homogeneous system reported inconsistent");
    std::vector<LambdaModule::Elem> span_gens;
    for (const std::vector<i64>& k : sol.kernel)
        span_gens.push_back(
            lay.cells.reduce(LambdaModule::Elem(k.begin(), k.begin() + cells)));
    return Submodule::span(lay.cells, span_gens);
}

}  // namespace

PairMorphism::PairMorphism(Pair source, Pair target, std::vector<std::vector<i64>> matrix)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(matrix)) {
    require(source_.ring() == target_.ring(), "morphism endpoints over different rings");
    const RingSpec& R = source_.ring();
    const LambdaModule& B = source_.B();
    const LambdaModule& D = target_.B();
    require(int(m_.size()) == D.rank(), "matrix row count must match the target");
    for (int i = 0; i < D.rank(); ++i) {
        require(int(m_[i].size()) == B.rank(), "matrix column count must match the source");
        for (int j = 0; j < B.rank(); ++j) {
            require(R.is_code(m_[i][j]), "matrix entry is not a ring code");
            m_[i][j] = R.mod_ppow(m_[i][j], D.part(i));
            require(m_[i][j] == 0 || R.val(m_[i][j]) >= D.part(i) - B.part(j),
                    "matrix entry does not define a map of cyclic modules");
        }
    }
    for (const LambdaModule::Elem& a : source_.A().gens())
        require(target_.A().contains(apply(a)), "morphism does not map A into C");
}

LambdaModule::Elem PairMorphism::apply(const LambdaModule::Elem& x) const {
    const RingSpec& R = source_.ring();
    require(source_.B().is_elem(x), "element outside the source module");
    LambdaModule::Elem out(target_.B().rank(), 0);
    for (int i = 0; i < target_.B().rank(); ++i)
        for (int j = 0; j < source_.B().rank(); ++j)
            out[i] = R.add(out[i], R.mul(m_[i][j], x[j]));
    return target_.B().reduce(out);
}

bool PairMorphism::is_zero() const {
    for (const std::vector<i64>& row : m_)
        for (i64 e : row)
            if (e != 0) return false;
    return true;
}

PairMorphism zero_morphism(const Pair& x, const Pair& y) {
    std::vector<std::vector<i64>> m(y.B().rank(), std::vector<i64>(x.B().rank(), 0));
    return PairMorphism(x, y, std::move(m));
}

PairMorphism identity_morphism(const Pair& x) {
    std::vector<std::vector<i64>> m(x.B().rank(), std::vector<i64>(x.B().rank(), 0));
    for (int i = 0; i < x.B().rank(); ++i) m[i][i] = 1;
    return PairMorphism(x, x, std::move(m));
}

PairMorphism compose(const PairMorphism& g, const PairMorphism& f) {
    require(g.source() == f.target(), "chain is not composable");
    const RingSpec& R = f.source().ring();
    int rows = g.target().B().rank(), mid = g.source().B().rank(),
        cols = f.source().B().rank();
    std::vector<std::vector<i64>> m(rows, std::vector<i64>(cols, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            i64 acc = 0;
            for (int k = 0; k < mid; ++k)
                acc = R.add(acc, R.mul(g.matrix()[i][k], f.matrix()[k][j]));
            m[i][j] = acc;
        }
    return PairMorphism(f.source(), g.target(), std::move(m));
}

PairMorphism add(const PairMorphism& f, const PairMorphism& g) {
    require(f.source() == g.source() && f.target() == g.target(),
            "sum of morphisms with different endpoints");
    const RingSpec& R = f.source().ring();
    std::vector<std::vector<i64>> m = f.matrix();
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) m[i][j] = R.add(m[i][j], g.matrix()[i][j]);
    return PairMorphism(f.source(), f.target(), std::move(m));
}

PairMorphism negate(const PairMorphism& f) {
    const RingSpec& R = f.source().ring();
    std::vector<std::vector<i64>> m = f.matrix();
    for (std::vector<i64>& row : m)
        for (i64& e : row) e = R.neg(e);
    return PairMorphism(f.source(), f.target(), std::move(m));
}

PairMorphism scale(i64 c, const PairMorphism& f) {
    const RingSpec& R = f.source().ring();
    require(R.is_code(c), "scalar is not a ring code");
    std::vector<std::vector<i64>> m = f.matrix();
    for (std::vector<i64>& row : m)
        for (i64& e : row) e = R.mul(c, e);
    return PairMorphism(f.source(), f.target(), std::move(m));
}

HomStructure hom_basis(const Pair& x, const Pair& y) {
    Submodule group = constrained_homs(x, y, x.A().gens(), y.A().gens());
    std::vector<PairMorphism> gens;
    for (const LambdaModule::Elem& t : group.gens())
        gens.push_back(morphism_from_cells(x, y, t));
    return HomStructure{x,
                        y,
                        group.module(),
                        group,
                        std::move(gens),
                        group.type(),
                        group.length()};
}

PairMorphism morphism_from_cells(const Pair& x, const Pair& y,
                                 const LambdaModule::Elem& t) {
    const RingSpec& R = x.ring();
    CellLayout lay = make_layout(x, y);
    require(lay.cells.is_elem(t), "coordinates outside the cells module");
    std::vector<std::vector<i64>> m(lay.tgt_rank, std::vector<i64>(lay.src_rank, 0));
    for (int i = 0; i < lay.tgt_rank; ++i)
        for (int j = 0; j < lay.src_rank; ++j) {
            int c = lay.cell(i, j);
            m[i][j] = R.mul_ppow(t[lay.cell_to_slot[c]], lay.shift_exp[c]);
        }
    return PairMorphism(x, y, std::move(m));
}

LambdaModule::Elem cells_of_morphism(const PairMorphism& f) {
    const RingSpec& R = f.source().ring();
    CellLayout lay = make_layout(f.source(), f.target());
    LambdaModule::Elem t(lay.cells.rank(), 0);
    for (int i = 0; i < lay.tgt_rank; ++i)
        for (int j = 0; j < lay.src_rank; ++j) {
            int c = lay.cell(i, j);
            t[lay.cell_to_slot[c]] = R.div_ppow(f.matrix()[i][j], lay.shift_exp[c]);
        }
    return lay.cells.reduce(t);
}

PairMorphism hom_element(const HomStructure& h, const std::vector<i64>& coeffs) {
    require(coeffs.size() == h.group.gens().size(),
            "one coefficient per generator expected");
    LambdaModule::Elem t = h.cells.zero();
    for (size_t k = 0; k < coeffs.size(); ++k)
        t = h.cells.add(t, h.cells.scalar(coeffs[k], h.group.gens()[k]));
    return morphism_from_cells(h.x, h.y, t);
}

bool in_ideal_N(const PairMorphism& f) {
    Submodule up = a_plus(f.source());
    Submodule target = a_minus(f.target());
    for (const LambdaModule::Elem& g : up.gens())
        if (!target.contains(f.apply(g))) return false;
    return true;
}

Submodule ideal_N_subgroup(const Pair& x, const Pair& y) {
    // f(A^+) in C^- already forces f(A) in C because A is inside A^+ and C^-
    // inside C, so this subgroup sits inside Hom(x,y).
    return constrained_homs(x, y, a_plus(x).gens(), a_minus(y).gens());
}

int quotient_dim_mod_N(const Pair& x, const Pair& y) {
    Submodule hom = constrained_homs(x, y, x.A().gens(), y.A().gens());
    Submodule nsub = ideal_N_subgroup(x, y);
    ensure(hom.contains(nsub), "ideal subgroup escapes the hom group");
    // p f maps A^+ into p(C + soc D) = C^-, so the quotient is elementwise
    // p-torsion and its k-dimension is the difference of lengths.
    ensure(nsub.contains(scalar_image(hom, 1)), "quotient is not p-torsion");
    return hom.length() - nsub.length();
}

bool nilpotency_check(const std::vector<PairMorphism>& chain) {
    require(!chain.empty(), "empty chain has no composite");
    PairMorphism acc = chain.front();
    for (size_t i = 1; i < chain.size(); ++i) acc = compose(chain[i], acc);
    return acc.is_zero();
}

std::optional<PairMorphism> two_sided_inverse(const PairMorphism& f) {
    const Pair& x = f.source();
    const Pair& y = f.target();
    const RingSpec& R = x.ring();
    // Unknown g: y -> x with g f = id_x, f g = id_y, g(C) in A.  Same cell
    // encoding as for hom groups, now for maps D -> B.
    CellLayout lay = make_layout(y, x);
    int cells = lay.cells.rank();
    std::vector<LambdaModule::Elem> cgens = y.A().gens();
    std::vector<LambdaModule::Elem> agens = x.A().gens();
    int aux = int(cgens.size() * agens.size());
    int unknowns = cells + aux;
    std::vector<std::vector<i64>> rows;
    std::vector<i64> rhs;

    // g f = id_x: entry (i,k) mod p^{lambda_i}.
    for (int i = 0; i < x.B().rank(); ++i)
        for (int k = 0; k < x.B().rank(); ++k) {
            int scale_up = R.n() - x.B().part(i);
            std::vector<i64> row(unknowns, 0);
            for (int j = 0; j < y.B().rank(); ++j) {
                int c = lay.cell(i, j);
                i64 coef = R.mul_ppow(f.matrix()[j][k], lay.shift_exp[c]);
                row[lay.cell_to_slot[c]] = R.mul_ppow(coef, scale_up);
            }
            rows.push_back(std::move(row));
            rhs.push_back(i == k ? R.pow_p(scale_up) : 0);
        }
    // f g = id_y: entry (j,k) mod p^{mu_j}.
    for (int j = 0; j < y.B().rank(); ++j)
        for (int k = 0; k < y.B().rank(); ++k) {
            int scale_up = R.n() - y.B().part(j);
            std::vector<i64> row(unknowns, 0);
            for (int i = 0; i < x.B().rank(); ++i) {
                int c = lay.cell(i, k);
                i64 coef = R.mul_ppow(f.matrix()[j][i], lay.shift_exp[c]);
                row[lay.cell_to_slot[c]] = R.mul_ppow(coef, scale_up);
            }
            rows.push_back(std::move(row));
            rhs.push_back(j == k ? R.pow_p(scale_up) : 0);
        }
    // g(C) in A: per C-generator and coordinate i of B, mod p^{lambda_i}.
    for (size_t ci = 0; ci < cgens.size(); ++ci)
        for (int i = 0; i < x.B().rank(); ++i) {
            int scale_up = R.n() - x.B().part(i);
            std::vector<i64> row(unknowns, 0);
            for (int j = 0; j < y.B().rank(); ++j) {
                int c = lay.cell(i, j);
                i64 coef = R.mul_ppow(cgens[ci][j], lay.shift_exp[c]);
                row[lay.cell_to_slot[c]] = R.mul_ppow(coef, scale_up);
            }
            for (size_t k = 0; k < agens.size(); ++k)
                row[cells + ci * agens.size() + k] =
                    R.neg(R.mul_ppow(agens[k][i], scale_up));
            rows.push_back(std::move(row));
            rhs.push_back(0);
        }

    SmithSolveResult sol = smith_solve(R, std::move(rows), std::move(rhs), unknowns);
    if (!sol.consistent) return std::nullopt;
    LambdaModule::Elem t = lay.cells.reduce(
        LambdaModule::Elem(sol.particular.begin(), sol.particular.begin() + cells));
    PairMorphism g = morphism_from_cells(y, x, t);
    ensure(compose(g, f) == identity_morphism(x), "left inverse check failed");
    ensure(compose(f, g) == identity_morphism(y), "right inverse check failed");
    return g;
}

}  // namespace subpair
