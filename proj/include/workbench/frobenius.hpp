// Bilinear forms on Hom-associative algebras, dual structures, and the
// Frobenius double A (+) A*: an algebra on the direct sum, built from the
// four transpose action families, that carries the standard hyperbolic
// pairing as an invariant form. The coproduct side packages the same data
// as two tensor identities on A, checked coefficient by coefficient.

#pragma once

#include "workbench/hom.hpp"

namespace wb {

// B(e_i, e_j) = gram(i, j).
struct HomBilinearForm {
    HomAlgebra algebra;
    Mat gram;
};

// An involutive multiplicative algebra together with a coproduct; the
// coproduct doubles as the structure tensor of a product on the dual.
struct HomBialgebraData {
    HomAlgebra algebra;
    CoprodTensor coprod;
};

// Algebra on A (+) A*, first dim_a coordinates spanning A. The pairing
// gram is always the standard one, [[0, I], [I, 0]].
struct FrobeniusDouble {
    HomAlgebra total;
    Mat gram;
    int dim_a = 0;

    HomBilinearForm form() const { return HomBilinearForm{total, gram}; }
};

// B(u, v) = u^T gram v.
Scalar form_eval(const Mat& gram, const Vec& u, const Vec& v);

// The 2n x 2n block matrix [[0, I], [I, 0]]: B(x + a*, y + b*) = <x, b*> + <a*, y>.
Mat standard_pairing_form(int n);

// conditions: symmetric over (i,j), nondegenerate, alpha_invariant over
// (i,j,k), alpha_compatible over (i,j)
//   symmetric:        B(x, y) = B(y, x)
//   nondegenerate:    det(gram) != 0
//   alpha_invariant:  B(alpha(x).alpha(y), alpha(z)) = B(alpha(x), alpha(y).alpha(z))
//   alpha_compatible: B(alpha(x), y) = B(x, alpha(y))
CheckReport check_form(const HomBilinearForm& f, const CheckOptions& opt = {});

// Product on A* read off the coproduct: f*_i f*_j = sum_k coprod(k,i,j) f*_k,
// twist the transpose of alpha. No verification; pair with the checkers.
HomAlgebra dual_algebra(const HomBialgebraData& d);

// Inverse of dual_algebra: repackage a product on the dual as a coproduct.
CoprodTensor coproduct_of(const HomAlgebra& dual);

// (r*, l*, beta*, V*): actions swap roles and transpose. Requires the base
// algebra multiplicative and involutive and b a bimodule; refuses otherwise.
HomBimodule dual_bimodule(const HomBimodule& b, const CheckOptions& opt = {});

// (alpha (x) L, R (x) alpha, alpha (x) alpha) on V = A (x) A. Requires a
// multiplicative Hom-associative algebra; refuses otherwise.
HomBimodule tensor_bimodule(const HomAlgebra& a, const CheckOptions& opt = {});

// conditions: infinitesimal_identity, antisymmetric_identity over (i,j)
//   Delta o alpha(x.y) = (alpha (x) L(x)) Delta(y) + (R(y) (x) alpha) Delta(x)
//   (L(y) (x) alpha - alpha (x) R(y)) Delta(x)
//     + sigma[(L(x) (x) alpha - alpha (x) R(x)) Delta(y)] = 0
// Refuses when the algebra is not involutive or not multiplicative, or when
// the dual product fails Hom-associativity.
CheckReport check_hom_bialgebra(const HomBialgebraData& d, const CheckOptions& opt = {});

// conditions: infinitesimal_condition, antisymmetric_condition over (i,j,k)
// with x = e_i, a* = f*_j, b* = f*_k:
//   R*.(alpha(x))(a* o b*) = R*.(L*o(a*)x) alpha*(b*) + (R*.(x)a*) o alpha*(b*)
//   R*.(R*o(a*)x) alpha*(b*) + (L*.(x)a*) o alpha*(b*)
//     = L*.(L*o(b*)x) alpha*(a*) + alpha*(a*) o (R*.(x)b*)
// Refuses when the algebra is not involutive or not multiplicative.
CheckReport check_hom_matched_criterion(const HomBialgebraData& d, const CheckOptions& opt = {});

// The octuple pairing A with a product on its dual: A acts on A* through
// (R*., L*.) and A* acts on A through (R*o, L*o). No verification.
HomMatchedPair frobenius_matched_pair(const HomAlgebra& a, const HomAlgebra& dual);

// Product on A (+) A* from the four transpose families, twist
// alpha (+) alpha*, standard pairing. No verification; pair with the checkers.
FrobeniusDouble assemble_frobenius_double(const HomAlgebra& a, const HomAlgebra& dual);

// Full construction: requires the algebra and its dual involutive,
// multiplicative, and Hom-associative and check_hom_bialgebra to pass, then
// verifies the double (Hom-associativity, all four form conditions, and the
// untwisted invariance B(u v, w) = B(u, v w)); refuses on any failure.
FrobeniusDouble double_construct_frobenius(const HomBialgebraData& d,
                                           const CheckOptions& opt = {});

} // namespace wb
