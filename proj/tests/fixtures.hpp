// Canonical fixtures shared by the test suites, plus small builders and a
// deterministic scalar generator for property tests.

#pragma once

#include "workbench/hom.hpp"

#include <random>
#include <vector>

namespace wb::fixtures {

inline Mat mat_rows(const std::vector<std::vector<int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r ? static_cast<int>(rows[0].size()) : 0;
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

inline Vec vec_of(const std::vector<int>& xs) {
    Vec v(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) v[i] = xs[i];
    return v;
}

// dim-1 unital algebra, alpha = id
inline HomAlgebra f1() {
    HomAlgebra a;
    a.dim = 1;
    a.mult = MultTensor(1);
    a.mult.at(0, 0, 0) = 1;
    a.alpha = Mat::identity(1);
    return a;
}

// 3-dim family: e1.e1=e1, e1.e2=e2.e1=e3; alpha(e1)=a1 e2+a2 e3,
// alpha(e2)=b1 e2+b2 e3, alpha(e3)=c1 e2+c2 e3
inline HomAlgebra f2(const Scalar& a1, const Scalar& a2, const Scalar& b1,
                     const Scalar& b2, const Scalar& c1, const Scalar& c2) {
    HomAlgebra a;
    a.dim = 3;
    a.mult = MultTensor(3);
    a.mult.at(0, 0, 0) = 1;
    a.mult.at(0, 1, 2) = 1;
    a.mult.at(1, 0, 2) = 1;
    a.alpha = Mat(3, 3);
    a.alpha.at(1, 0) = a1;
    a.alpha.at(2, 0) = a2;
    a.alpha.at(1, 1) = b1;
    a.alpha.at(2, 1) = b2;
    a.alpha.at(1, 2) = c1;
    a.alpha.at(2, 2) = c2;
    return a;
}

// dim-2 truncated polynomials K[x]/(x^2): e1 is the unit, e2.e2 = 0
inline HomAlgebra f3() {
    HomAlgebra a;
    a.dim = 2;
    a.mult = MultTensor(2);
    a.mult.at(0, 0, 0) = 1;
    a.mult.at(0, 1, 1) = 1;
    a.mult.at(1, 0, 1) = 1;
    a.alpha = Mat::identity(2);
    return a;
}

// zero-product algebra of any dimension with the given twist
inline HomAlgebra f4(int dim, Mat alpha) {
    HomAlgebra a;
    a.dim = dim;
    a.mult = MultTensor(dim);
    a.alpha = std::move(alpha);
    return a;
}

// dim-2 algebra e1.e1 = e2 (all other products zero), alpha = id
inline HomAlgebra f5() {
    HomAlgebra a;
    a.dim = 2;
    a.mult = MultTensor(2);
    a.mult.at(0, 0, 1) = 1;
    a.alpha = Mat::identity(2);
    return a;
}

// the Rota-Baxter operator paired with f5: f(e1)=2e1, f(e2)=e2
inline Mat f5_rb() { return mat_rows({{2, 0}, {0, 1}}); }

// dim-2 zero-product algebra with the standard symplectic form
inline Mat f6_omega() { return mat_rows({{0, 1}, {-1, 0}}); }

// Deterministic generator for small exact scalars.
class ScalarGen {
public:
    explicit ScalarGen(unsigned seed) : rng_(seed) {}

    // integers in [-2, 2]
    Scalar small_int() { return std::uniform_int_distribution<int>(-2, 2)(rng_); }

    // rationals with numerator in [-2, 2], denominator in {1, 2, 3}
    Scalar small_rational() {
        const int num = std::uniform_int_distribution<int>(-2, 2)(rng_);
        const int den = std::uniform_int_distribution<int>(1, 3)(rng_);
        return Scalar(num, den);
    }

    int index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

    Mat matrix(int rows, int cols, bool rational = false) {
        Mat m(rows, cols);
        for (auto& e : m.a) e = rational ? small_rational() : small_int();
        return m;
    }

    Vec vector(int n, bool rational = false) {
        Vec v(static_cast<std::size_t>(n));
        for (auto& e : v) e = rational ? small_rational() : small_int();
        return v;
    }

    MultTensor mult_tensor(int dim) {
        MultTensor t(dim);
        for (auto& e : t.c) e = small_int();
        return t;
    }

    ActionFamily actions(int n_alg, int dim_v) {
        ActionFamily fam;
        fam.reserve(static_cast<std::size_t>(n_alg));
        for (int i = 0; i < n_alg; ++i) fam.push_back(matrix(dim_v, dim_v));
        return fam;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

} // namespace wb::fixtures
