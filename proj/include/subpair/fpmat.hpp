#pragma once

#include <optional>
#include <vector>

#include "subpair/common.hpp"

namespace subpair {

// Dense matrix over the prime field F_p, row-major, entries in [0, p).
// p may be any prime below 2^31 so that entry products fit in int64.
struct FpMat {
    i64 p;
    int rows, cols;
    std::vector<i64> a;

    FpMat(i64 p_, int r, int c) : p(p_), rows(r), cols(c), a(i64(r) * c, 0) {
        require(p_ >= 2 && r >= 0 && c >= 0, "bad matrix shape");
    }
    static FpMat identity(i64 p, int n);

    i64& at(int i, int j) { return a[i64(i) * cols + j]; }
    i64 at(int i, int j) const { return a[i64(i) * cols + j]; }

    bool operator==(const FpMat& o) const {
        return p == o.p && rows == o.rows && cols == o.cols && a == o.a;
    }
    bool is_zero() const;
};

FpMat mul(const FpMat& A, const FpMat& B);
FpMat add(const FpMat& A, const FpMat& B);
FpMat scale(i64 c, const FpMat& A);
FpMat transpose(const FpMat& A);
FpMat hstack(const FpMat& A, const FpMat& B);
FpMat vstack(const FpMat& A, const FpMat& B);

// Reduced row echelon form; same shape, zero rows at the bottom.  Unique for
// a given row space, so it canonicalizes row spaces.
FpMat rref(const FpMat& A);
int rank(const FpMat& A);

// Nonzero rows of rref(A): canonical row-space basis.
FpMat row_basis(const FpMat& A);
// Canonical column-space basis (cols = rank): transpose of row_basis of the
// transpose.  Equal column spaces give equal results.
FpMat col_basis(const FpMat& A);

// Columns form a basis of { x : A x = 0 }, from the rref free-variable
// parametrization.
FpMat nullspace(const FpMat& A);
// Rows form a basis of { y : y A = 0 }.
FpMat left_annihilator(const FpMat& A);

std::optional<std::vector<i64>> solve(const FpMat& A, const std::vector<i64>& b);
// X with A X = B, solved column by column.
std::optional<FpMat> solve_matrix(const FpMat& A, const FpMat& B);
// Throws internal_error when A is singular; callers use it only where
// invertibility is an established invariant.
FpMat inverse(const FpMat& A);

// Column spaces as subspaces: canonical bases of sum and intersection, and
// containment of span(B) in span(A).
FpMat colspace_sum(const FpMat& A, const FpMat& B);
FpMat colspace_intersect(const FpMat& A, const FpMat& B);
bool colspace_contains(const FpMat& A, const FpMat& B);

}  // namespace subpair
