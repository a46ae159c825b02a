// Exact rational linear and multilinear algebra. Conventions used everywhere:
//   - Mat stores row-major; column j holds the image of basis vector e_j,
//     so composition of maps is the matrix product with no transposes.
//   - MultTensor c encodes a bilinear product e_i . e_j = sum_k c(i,j,k) e_k.
//   - CoprodTensor f encodes Delta(e_k) = sum_{i,j} f(k,i,j) e_i (x) e_j.
//   - Elements of A (x) A are flat vectors of length dim^2 with coefficient
//     of e_i (x) e_j at position i*dim + j.

#pragma once

#include "workbench/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace wb {

using Vec = std::vector<Scalar>;

// Inconsistent dimensions between operands. Reaches the user as an input
// error, never as a mathematical failure.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<Scalar> a; // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

    Scalar& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Scalar& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    bool operator==(const Mat&) const = default;

    static Mat identity(int n);
    bool is_square() const { return rows == cols; }
};

struct MultTensor {
    int dim = 0;
    std::vector<Scalar> c;

    MultTensor() = default;
    explicit MultTensor(int n) : dim(n), c(static_cast<std::size_t>(n) * n * n) {}

    Scalar& at(int i, int j, int k) {
        return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    const Scalar& at(int i, int j, int k) const {
        return c[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }

    bool operator==(const MultTensor&) const = default;
};

struct CoprodTensor {
    int dim = 0;
    std::vector<Scalar> f;

    CoprodTensor() = default;
    explicit CoprodTensor(int n) : dim(n), f(static_cast<std::size_t>(n) * n * n) {}

    Scalar& at(int k, int i, int j) {
        return f[(static_cast<std::size_t>(k) * dim + i) * dim + j];
    }
    const Scalar& at(int k, int i, int j) const {
        return f[(static_cast<std::size_t>(k) * dim + i) * dim + j];
    }

    bool operator==(const CoprodTensor&) const = default;
};

// x -> l(x) as a family of matrices over the domain basis; l(x) = sum_i x[i] * fam[i].
using ActionFamily = std::vector<Mat>;

// vectors
Vec vzero(int n);
Vec basis_vec(int n, int i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec smul(const Scalar& s, const Vec& v);
Scalar dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

// matrices
Vec mat_apply(const Mat& m, const Vec& v);
Vec mat_col(const Mat& m, int j);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_smul(const Scalar& s, const Mat& m);
Mat mat_pow(const Mat& m, int n); // n >= 0
Mat transpose(const Mat& m);
Mat block_diag(const Mat& a, const Mat& b);
bool is_zero(const Mat& m);

// The dual (transpose) map: <v, dual_map(m)(u*)> = <m(v), u*> in the
// standard dual-basis pairing.
inline Mat dual_map(const Mat& m) { return transpose(m); }

// Exact determinant by fraction-free (Bareiss) elimination: denominators are
// cleared row by row, the integer Bareiss recursion runs on cpp_int, and the
// accumulated row factors divide out at the end.
Scalar det_exact(const Mat& m);

// Exact Gauss-Jordan; nullopt when the matrix is singular.
std::optional<Mat> mat_inverse(const Mat& m);
std::optional<Vec> mat_solve(const Mat& m, const Vec& rhs);

// products and actions
Vec mult_apply(const MultTensor& c, const Vec& x, const Vec& y);
Vec mult_basis(const MultTensor& c, int i, int j); // e_i . e_j
MultTensor mult_add(const MultTensor& a, const MultTensor& b);
Mat act_mat(const ActionFamily& fam, const Vec& x);
Vec act(const ActionFamily& fam, const Vec& x, const Vec& v);
ActionFamily zero_actions(int n_alg, int dim_v);
ActionFamily act_add(const ActionFamily& a, const ActionFamily& b);
ActionFamily act_smul(const Scalar& s, const ActionFamily& fam);
// family for x -> (action of m(x)); new[i] = sum_q m(q,i) fam[q]
ActionFamily act_precompose(const ActionFamily& fam, const Mat& m);
// per-element transpose: the dual action <fam*(x)u*, v> = <u*, fam(x)v>
ActionFamily act_dual(const ActionFamily& fam);

// coproducts
Vec coprod_apply(const CoprodTensor& f, const Vec& x);

// tensor-square helpers
Vec exchange_sigma(const Vec& t);                            // sigma(x (x) y) = y (x) x
Vec kron_apply(const Mat& a, const Mat& b, const Vec& t);    // (a (x) b) acting on A (x) A
Mat kron(const Mat& a, const Mat& b);                        // (a (x) b) as a matrix

} // namespace wb
