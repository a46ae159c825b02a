#include "workbench/linalg.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <cmath>

namespace wb {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw DimensionError(what);
}

int isqrt_exact(std::size_t n) {
    int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    while (static_cast<std::size_t>(r) * r > n) --r;
    while (static_cast<std::size_t>(r + 1) * (r + 1) <= n) ++r;
    require(static_cast<std::size_t>(r) * r == n, "tensor-square vector length is not a perfect square");
    return r;
}

} // namespace

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Vec vzero(int n) { return Vec(static_cast<std::size_t>(n)); }

Vec basis_vec(int n, int i) {
    Vec v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "vector size mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "vector size mismatch");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec smul(const Scalar& s, const Vec& v) {
    Vec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
    return out;
}

Scalar dot(const Vec& a, const Vec& b) {
    require(a.size() == b.size(), "vector size mismatch");
    Scalar out = 0;
    for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
    return out;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

bool is_zero(const Mat& m) {
    for (const auto& x : m.a)
        if (x != 0) return false;
    return true;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    require(static_cast<std::size_t>(m.cols) == v.size(), "matrix-vector dimension mismatch");
    Vec out(static_cast<std::size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) {
        Scalar acc = 0;
        for (int j = 0; j < m.cols; ++j) acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    require(a.cols == b.rows, "matrix-matrix dimension mismatch");
    Mat out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Scalar& s = a.at(i, k);
            if (s == 0) continue;
            for (int j = 0; j < b.cols; ++j) out.at(i, j) += s * b.at(k, j);
        }
    return out;
}

Mat mat_add(const Mat& a, const Mat& b) {
    require(a.rows == b.rows && a.cols == b.cols, "matrix shape mismatch");
    Mat out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.a.size(); ++i) out.a[i] = a.a[i] + b.a[i];
    return out;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    require(a.rows == b.rows && a.cols == b.cols, "matrix shape mismatch");
    Mat out(a.rows, a.cols);
    for (std::size_t i = 0; i < a.a.size(); ++i) out.a[i] = a.a[i] - b.a[i];
    return out;
}

Mat mat_smul(const Scalar& s, const Mat& m) {
    Mat out(m.rows, m.cols);
    for (std::size_t i = 0; i < m.a.size(); ++i) out.a[i] = s * m.a[i];
    return out;
}

Mat mat_pow(const Mat& m, int n) {
    require(m.is_square(), "power of a non-square matrix");
    require(n >= 0, "negative matrix power");
    Mat out = Mat::identity(m.rows);
    for (int i = 0; i < n; ++i) out = mat_mul(out, m);
    return out;
}

Mat transpose(const Mat& m) {
    Mat out(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j);
    return out;
}

Mat block_diag(const Mat& a, const Mat& b) {
    Mat out(a.rows + b.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) out.at(a.rows + i, a.cols + j) = b.at(i, j);
    return out;
}

Vec mat_col(const Mat& m, int j) {
    Vec out(static_cast<std::size_t>(m.rows));
    for (int i = 0; i < m.rows; ++i) out[static_cast<std::size_t>(i)] = m.at(i, j);
    return out;
}

Scalar det_exact(const Mat& m) {
    require(m.is_square(), "determinant of a non-square matrix");
    const int n = m.rows;
    if (n == 0) return 1;

    // clear denominators: row i scaled by the lcm of its entries' denominators
    std::vector<std::vector<Int>> w(static_cast<std::size_t>(n), std::vector<Int>(static_cast<std::size_t>(n)));
    Int row_factor_product = 1;
    for (int i = 0; i < n; ++i) {
        Int l = 1;
        for (int j = 0; j < n; ++j) l = boost::integer::lcm(l, denom(m.at(i, j)));
        for (int j = 0; j < n; ++j) {
            const Scalar v = m.at(i, j) * Scalar(l);
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = numer(v);
        }
        row_factor_product *= l;
    }

    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != k) {
            std::swap(w[static_cast<std::size_t>(pivot)], w[static_cast<std::size_t>(k)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * w[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                        w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * w[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                w[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t / prev; // exact by Bareiss
            }
            w[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev = w[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    Scalar det(w[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)], row_factor_product);
    if (sign < 0) det = -det;
    return det;
}

std::optional<Mat> mat_inverse(const Mat& m) {
    require(m.is_square(), "inverse of a non-square matrix");
    const int n = m.rows;
    Mat w = m;
    Mat inv = Mat::identity(n);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (w.at(i, k) != 0) { pivot = i; break; }
        if (pivot < 0) return std::nullopt;
        if (pivot != k)
            for (int j = 0; j < n; ++j) {
                std::swap(w.at(pivot, j), w.at(k, j));
                std::swap(inv.at(pivot, j), inv.at(k, j));
            }
        const Scalar p = w.at(k, k);
        for (int j = 0; j < n; ++j) {
            w.at(k, j) /= p;
            inv.at(k, j) /= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            const Scalar f = w.at(i, k);
            if (f == 0) continue;
            for (int j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

std::optional<Vec> mat_solve(const Mat& m, const Vec& rhs) {
    auto inv = mat_inverse(m);
    if (!inv) return std::nullopt;
    return mat_apply(*inv, rhs);
}

Vec mult_apply(const MultTensor& c, const Vec& x, const Vec& y) {
    require(x.size() == static_cast<std::size_t>(c.dim) && y.size() == static_cast<std::size_t>(c.dim),
            "product argument dimension mismatch");
    Vec out(static_cast<std::size_t>(c.dim));
    for (int i = 0; i < c.dim; ++i) {
        if (x[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < c.dim; ++j) {
            if (y[static_cast<std::size_t>(j)] == 0) continue;
            const Scalar s = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            for (int k = 0; k < c.dim; ++k) out[static_cast<std::size_t>(k)] += s * c.at(i, j, k);
        }
    }
    return out;
}

MultTensor mult_add(const MultTensor& a, const MultTensor& b) {
    require(a.dim == b.dim, "product tensor dimension mismatch");
    MultTensor out(a.dim);
    for (std::size_t i = 0; i < a.c.size(); ++i) out.c[i] = a.c[i] + b.c[i];
    return out;
}

Mat act_mat(const ActionFamily& fam, const Vec& x) {
    require(fam.size() == x.size() && !fam.empty(), "action family dimension mismatch");
    Mat out(fam[0].rows, fam[0].cols);
    for (std::size_t i = 0; i < fam.size(); ++i) {
        if (x[i] == 0) continue;
        require(fam[i].rows == out.rows && fam[i].cols == out.cols, "ragged action family");
        for (std::size_t e = 0; e < out.a.size(); ++e) out.a[e] += x[i] * fam[i].a[e];
    }
    return out;
}

Vec act(const ActionFamily& fam, const Vec& x, const Vec& v) {
    require(fam.size() == x.size(), "action family dimension mismatch");
    Vec out(v.size());
    for (std::size_t i = 0; i < fam.size(); ++i) {
        if (x[i] == 0) continue;
        Vec t = mat_apply(fam[i], v);
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += x[i] * t[k];
    }
    return out;
}

Vec mult_basis(const MultTensor& c, int i, int j) {
    Vec out(static_cast<std::size_t>(c.dim));
    for (int k = 0; k < c.dim; ++k) out[static_cast<std::size_t>(k)] = c.at(i, j, k);
    return out;
}

ActionFamily zero_actions(int n_alg, int dim_v) {
    return ActionFamily(static_cast<std::size_t>(n_alg), Mat(dim_v, dim_v));
}

ActionFamily act_add(const ActionFamily& a, const ActionFamily& b) {
    require(a.size() == b.size(), "action family size mismatch");
    ActionFamily out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = mat_add(a[i], b[i]);
    return out;
}

ActionFamily act_smul(const Scalar& s, const ActionFamily& fam) {
    ActionFamily out(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) out[i] = mat_smul(s, fam[i]);
    return out;
}

ActionFamily act_precompose(const ActionFamily& fam, const Mat& m) {
    require(static_cast<std::size_t>(m.rows) == fam.size(), "twist rows differ from family size");
    ActionFamily out(static_cast<std::size_t>(m.cols));
    for (int i = 0; i < m.cols; ++i) out[static_cast<std::size_t>(i)] = act_mat(fam, mat_col(m, i));
    return out;
}

ActionFamily act_dual(const ActionFamily& fam) {
    ActionFamily out(fam.size());
    for (std::size_t i = 0; i < fam.size(); ++i) out[i] = transpose(fam[i]);
    return out;
}

Vec coprod_apply(const CoprodTensor& f, const Vec& x) {
    require(x.size() == static_cast<std::size_t>(f.dim), "coproduct argument dimension mismatch");
    const int n = f.dim;
    Vec out(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        if (x[static_cast<std::size_t>(k)] == 0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out[static_cast<std::size_t>(i) * n + j] += x[static_cast<std::size_t>(k)] * f.at(k, i, j);
    }
    return out;
}

Vec exchange_sigma(const Vec& t) {
    const int n = isqrt_exact(t.size());
    Vec out(t.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out[static_cast<std::size_t>(j) * n + i] = t[static_cast<std::size_t>(i) * n + j];
    return out;
}

Vec kron_apply(const Mat& a, const Mat& b, const Vec& t) {
    require(t.size() == static_cast<std::size_t>(a.cols) * b.cols, "tensor-square dimension mismatch");
    Vec out(static_cast<std::size_t>(a.rows) * b.rows);
    for (int p = 0; p < a.cols; ++p)
        for (int q = 0; q < b.cols; ++q) {
            const Scalar& s = t[static_cast<std::size_t>(p) * b.cols + q];
            if (s == 0) continue;
            for (int i = 0; i < a.rows; ++i) {
                if (a.at(i, p) == 0) continue;
                const Scalar f = a.at(i, p) * s;
                for (int j = 0; j < b.rows; ++j)
                    out[static_cast<std::size_t>(i) * b.rows + j] += f * b.at(j, q);
            }
        }
    return out;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows * b.rows, a.cols * b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) {
            if (a.at(i, j) == 0) continue;
            for (int k = 0; k < b.rows; ++k)
                for (int l = 0; l < b.cols; ++l)
                    out.at(i * b.rows + k, j * b.cols + l) = a.at(i, j) * b.at(k, l);
        }
    return out;
}

} // namespace wb
