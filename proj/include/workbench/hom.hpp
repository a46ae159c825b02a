// Hom-associative algebras given by structure constants and a twist map:
// axiom checkers, bimodules, semidirect sums, matched pairs, and bicrossed
// sums. Every identity is verified on all basis tuples, which suffices by
// multilinearity; residuals are reported exactly.

#pragma once

#include "workbench/linalg.hpp"
#include "workbench/report.hpp"

#include <array>
#include <utility>

namespace wb {

// (A, ., alpha): alpha(x).(y.z) = (x.y).alpha(z).
struct HomAlgebra {
    int dim = 0;
    MultTensor mult;
    Mat alpha;
};

// (l, r, beta, V): l[i], r[i] are the actions of e_i on V.
struct HomBimodule {
    HomAlgebra algebra;
    int dim_v = 0;
    ActionFamily l;
    ActionFamily r;
    Mat beta;
};

// A acts on B through (lA, rA), B acts on A through (lB, rB); the module
// twists are the other algebra's own twist.
struct HomMatchedPair {
    HomAlgebra A;
    HomAlgebra B;
    ActionFamily lA, rA; // dim(B) x dim(B) matrices, one per basis vector of A
    ActionFamily lB, rB; // dim(A) x dim(A) matrices, one per basis vector of B
};

// condition: hom_assoc over (i,j,k)
CheckReport check_hom_associative(const HomAlgebra& a, const CheckOptions& opt = {});

// condition: multiplicative over (i,j)
CheckReport check_multiplicative(const HomAlgebra& a, const CheckOptions& opt = {});

bool check_involutive(const Mat& m);

// L(x)y = x.y and R(x)y = y.x as matrix families over the basis.
std::pair<ActionFamily, ActionFamily> mult_operators(const HomAlgebra& a);

// The three bimodules (L o alpha^n, 0), (0, R o alpha^n), (L o alpha^n,
// R o alpha^n) on V = A with twist alpha. Requires a multiplicative
// Hom-associative algebra; n < 0 additionally requires invertible alpha.
std::array<HomBimodule, 3> regular_bimodules(const HomAlgebra& a, int n,
                                             const CheckOptions& opt = {});

// conditions: lpb, rpb, lar over (i,j,t) and bl, br over (i,t)
//   lpb: l(x.y) beta(v) = l(alpha(x)) l(y) v
//   rpb: r(x.y) beta(v) = r(alpha(y)) r(x) v
//   lar: l(alpha(x)) r(y) v = r(alpha(y)) l(x) v
//   bl:  beta(l(x)v) = l(alpha(x)) beta(v)
//   br:  beta(r(x)v) = r(alpha(x)) beta(v)
CheckReport check_bimodule(const HomBimodule& b, const CheckOptions& opt = {});

// A (+) V with (x1+v1)(x2+v2) = x1.x2 + (l(x1)v2 + r(x2)v1) and twist
// alpha (+) beta. Requires conditions lpb, rpb, lar; refuses otherwise.
HomAlgebra semidirect_sum(const HomBimodule& b, const CheckOptions& opt = {});

// Both bimodule checks plus the six cross conditions mp1..mp6:
//   mp1: lA(alpha(x))(a.b) = lA(rB(a)x) beta(b) + (lA(x)a).beta(b)
//   mp2: rA(alpha(x))(a.b) = rA(lB(b)x) beta(a) + beta(a).(rA(x)b)
//   mp3: lB(beta(a))(x.y) = lB(rA(x)a) alpha(y) + (lB(a)x).alpha(y)
//   mp4: rB(beta(a))(x.y) = rB(lA(y)a) alpha(x) + alpha(x).(rB(a)y)
//   mp5: lA(lB(a)x) beta(b) + (rA(x)a).beta(b)
//          - rA(rB(b)x) beta(a) - beta(a).(lA(x)b) = 0
//   mp6: lB(lA(x)a) alpha(y) + (rB(a)x).alpha(y)
//          - rB(rA(y)a) alpha(x) - alpha(x).(lB(a)y) = 0
// Witness indices: (i,u,t) for mp1/mp2/mp5 with x=e_i, a=f_u, b=f_t;
// (u,i,j) for mp3/mp4/mp6 with a=f_u, x=e_i, y=e_j.
CheckReport check_matched_pair(const HomMatchedPair& p, const CheckOptions& opt = {});

// A (+) B with (x+a)(y+b) = (x.y + lB(a)y + rB(b)x) + (a.b + lA(x)b + rA(y)a)
// and twist alpha (+) beta. Refuses unless check_matched_pair passes.
HomAlgebra bicrossed_sum(const HomMatchedPair& p, const CheckOptions& opt = {});

// (A, beta o mult, beta o alpha). Yields a multiplicative Hom-associative
// algebra when a is multiplicative Hom-associative and beta is an algebra
// morphism commuting with alpha.
HomAlgebra yau_twist(const HomAlgebra& a, const Mat& beta);

// Shared product kernel on A (+) B used by semidirect sums, bicrossed sums,
// and the doubles: (x+a)(y+b) = (x.y + lB(a)y + rB(b)x) + (a.b + lA(x)b + rA(y)a).
MultTensor bicrossed_mult(const MultTensor& mult_a, const MultTensor& mult_b,
                          const ActionFamily& lA, const ActionFamily& rA,
                          const ActionFamily& lB, const ActionFamily& rB);

} // namespace wb
