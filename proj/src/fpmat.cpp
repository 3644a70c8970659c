#include "subpair/fpmat.hpp"

#include <algorithm>

namespace subpair {

namespace {

i64 inv_mod(i64 a, i64 p) {
    // Extended Euclid; a nonzero mod p, p prime.
    i64 t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        i64 q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    ensure(r == 1, "inv_mod of a non-unit");
    return (t % p + p) % p;
}

void check_same_field(const FpMat& A, const FpMat& B) {
    ensure(A.p == B.p, "matrix modulus mismatch");
}

// Pivot columns of a matrix already in rref.
std::vector<int> pivot_cols(const FpMat& R) {
    std::vector<int> piv;
    for (int i = 0; i < R.rows; ++i)
        for (int j = int(piv.size()); j < R.cols; ++j)
            if (R.at(i, j) != 0) {
                piv.push_back(j);
                break;
            }
    return piv;
}

}  // namespace

FpMat FpMat::identity(i64 p, int n) {
    FpMat I(p, n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

bool FpMat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](i64 x) { return x == 0; });
}

FpMat mul(const FpMat& A, const FpMat& B) {
    check_same_field(A, B);
    ensure(A.cols == B.rows, "matrix product shape mismatch");
    FpMat C(A.p, A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            i64 v = A.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = (C.at(i, j) + v * B.at(k, j)) % A.p;
        }
    return C;
}

FpMat add(const FpMat& A, const FpMat& B) {
    check_same_field(A, B);
    ensure(A.rows == B.rows && A.cols == B.cols, "matrix sum shape mismatch");
    FpMat C = A;
    for (size_t i = 0; i < C.a.size(); ++i) C.a[i] = (C.a[i] + B.a[i]) % A.p;
    return C;
}

FpMat scale(i64 c, const FpMat& A) {
    FpMat C = A;
    c = (c % A.p + A.p) % A.p;
    for (i64& x : C.a) x = x * c % A.p;
    return C;
}

FpMat transpose(const FpMat& A) {
    FpMat T(A.p, A.cols, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    return T;
}

FpMat hstack(const FpMat& A, const FpMat& B) {
    check_same_field(A, B);
    ensure(A.rows == B.rows, "hstack row mismatch");
    FpMat C(A.p, A.rows, A.cols + B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
        for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
    }
    return C;
}

FpMat vstack(const FpMat& A, const FpMat& B) {
    check_same_field(A, B);
    ensure(A.cols == B.cols, "vstack column mismatch");
    FpMat C(A.p, A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + A.a.size());
    return C;
}

FpMat rref(const FpMat& A) {
    FpMat M = A;
    int r = 0;
    for (int j = 0; j < M.cols && r < M.rows; ++j) {
        int piv = -1;
        for (int i = r; i < M.rows; ++i)
            if (M.at(i, j) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        for (int c = 0; c < M.cols; ++c) std::swap(M.at(piv, c), M.at(r, c));
        i64 inv = inv_mod(M.at(r, j), M.p);
        for (int c = j; c < M.cols; ++c) M.at(r, c) = M.at(r, c) * inv % M.p;
        for (int i = 0; i < M.rows; ++i) {
            if (i == r || M.at(i, j) == 0) continue;
            i64 f = M.at(i, j);
            for (int c = j; c < M.cols; ++c)
                M.at(i, c) = ((M.at(i, c) - f * M.at(r, c)) % M.p + M.p) % M.p;
        }
        ++r;
    }
    return M;
}

int rank(const FpMat& A) { return int(pivot_cols(rref(A)).size()); }

FpMat row_basis(const FpMat& A) {
    FpMat R = rref(A);
    int rk = int(pivot_cols(R).size());
    FpMat B(A.p, rk, A.cols);
    std::copy(R.a.begin(), R.a.begin() + i64(rk) * A.cols, B.a.begin());
    return B;
}

FpMat col_basis(const FpMat& A) { return transpose(row_basis(transpose(A))); }

FpMat nullspace(const FpMat& A) {
    FpMat R = rref(A);
    std::vector<int> piv = pivot_cols(R);
    std::vector<int> free_cols;
    {
        size_t k = 0;
        for (int j = 0; j < A.cols; ++j) {
            if (k < piv.size() && piv[k] == j)
                ++k;
            else
                free_cols.push_back(j);
        }
    }
    FpMat N(A.p, A.cols, int(free_cols.size()));
    for (size_t c = 0; c < free_cols.size(); ++c) {
        int j = free_cols[c];
        N.at(j, int(c)) = 1;
        for (size_t k = 0; k < piv.size(); ++k)
            N.at(piv[k], int(c)) = (A.p - R.at(int(k), j)) % A.p;
    }
    return N;
}

FpMat left_annihilator(const FpMat& A) { return transpose(nullspace(transpose(A))); }

std::optional<std::vector<i64>> solve(const FpMat& A, const std::vector<i64>& b) {
    ensure(int(b.size()) == A.rows, "solve rhs size mismatch");
    FpMat Ab(A.p, A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) Ab.at(i, j) = A.at(i, j);
        Ab.at(i, A.cols) = (b[i] % A.p + A.p) % A.p;
    }
    FpMat R = rref(Ab);
    std::vector<int> piv = pivot_cols(R);
    if (!piv.empty() && piv.back() == A.cols) return std::nullopt;
    std::vector<i64> x(A.cols, 0);
    for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = R.at(int(k), A.cols);
    return x;
}

std::optional<FpMat> solve_matrix(const FpMat& A, const FpMat& B) {
    check_same_field(A, B);
    ensure(A.rows == B.rows, "solve_matrix shape mismatch");
    FpMat X(A.p, A.cols, B.cols);
    for (int j = 0; j < B.cols; ++j) {
        std::vector<i64> b(A.rows);
        for (int i = 0; i < A.rows; ++i) b[i] = B.at(i, j);
        auto x = solve(A, b);
        if (!x) return std::nullopt;
        for (int i = 0; i < A.cols; ++i) X.at(i, j) = (*x)[i];
    }
    return X;
}

FpMat inverse(const FpMat& A) {
    ensure(A.rows == A.cols, "inverse of a non-square matrix");
    FpMat R = rref(hstack(A, FpMat::identity(A.p, A.rows)));
    for (int i = 0; i < A.rows; ++i)
        ensure(R.at(i, i) == 1, "matrix not invertible");
    FpMat Inv(A.p, A.rows, A.rows);
    for (int i = 0; i < A.rows; ++i)
        for (int j = 0; j < A.rows; ++j) Inv.at(i, j) = R.at(i, A.rows + j);
    return Inv;
}

FpMat colspace_sum(const FpMat& A, const FpMat& B) { return col_basis(hstack(A, B)); }

FpMat colspace_intersect(const FpMat& A, const FpMat& B) {
    check_same_field(A, B);
    ensure(A.rows == B.rows, "intersect ambient mismatch");
    // A x + B y = 0 gives the intersection as { A x }.
    FpMat N = nullspace(hstack(A, B));
    FpMat X(A.p, A.cols, N.cols);
    for (int i = 0; i < A.cols; ++i)
        for (int j = 0; j < N.cols; ++j) X.at(i, j) = N.at(i, j);
    return col_basis(mul(A, X));
}

bool colspace_contains(const FpMat& A, const FpMat& B) {
    check_same_field(A, B);
    ensure(A.rows == B.rows, "contains ambient mismatch");
    return rank(hstack(A, B)) == rank(A);
}

}  // namespace subpair
