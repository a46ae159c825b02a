#include "workbench/frobenius.hpp"

namespace wb {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw DimensionError(msg);
}

void validate(const HomAlgebra& a) {
    require(a.dim > 0, "algebra dimension must be positive");
    require(a.mult.dim == a.dim, "product tensor does not match the algebra dimension");
    require(a.alpha.rows == a.dim && a.alpha.cols == a.dim,
            "twist does not match the algebra dimension");
}

ConditionResult bool_condition(const char* id, bool ok) {
    ConditionResult c;
    c.id = id;
    c.ok = ok;
    c.violations = ok ? 0 : 1;
    return c;
}

void push_condition(CheckReport& rep, ConditionResult c) {
    if (!c.ok) rep.ok = false;
    rep.conditions.push_back(std::move(c));
}

// Shared refusal gate: the dual-side theorems all assume an involutive
// multiplicative base algebra.
void require_involutive_multiplicative(const HomAlgebra& a, const char* check_id,
                                       const CheckOptions& opt) {
    CheckReport pre;
    pre.check_id = check_id;
    push_condition(pre, bool_condition("involutive", check_involutive(a.alpha)));
    merge_into(pre, check_multiplicative(a, opt), "");
    if (!pre.ok) {
        if (!pre.conditions.front().ok) pre.notes.push_back("twist is not involutive");
        throw CheckFailure("precondition failed: involutive multiplicative algebra required",
                           pre);
    }
}

} // namespace

Scalar form_eval(const Mat& gram, const Vec& u, const Vec& v) {
    return dot(u, mat_apply(gram, v));
}

Mat standard_pairing_form(int n) {
    require(n >= 1, "pairing needs a positive dimension");
    Mat g(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        g.at(i, n + i) = 1;
        g.at(n + i, i) = 1;
    }
    return g;
}

CheckReport check_form(const HomBilinearForm& f, const CheckOptions& opt) {
    validate(f.algebra);
    const int n = f.algebra.dim;
    require(f.gram.rows == n && f.gram.cols == n, "gram matrix does not match the algebra");

    CheckReport rep;
    rep.check_id = "form";

    Condition sym("symmetric", opt);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            sym.expect_zero({i, j}, Vec{f.gram.at(i, j) - f.gram.at(j, i)});
    finish(rep, std::move(sym));

    ConditionResult nondeg = bool_condition("nondegenerate", det_exact(f.gram) != 0);
    if (!nondeg.ok) rep.notes.push_back("gram determinant is zero");
    push_condition(rep, std::move(nondeg));

    std::vector<Vec> ae(n);
    for (int i = 0; i < n; ++i) ae[i] = mat_col(f.algebra.alpha, i);

    Condition inv("alpha_invariant", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec left = mult_apply(f.algebra.mult, ae[i], ae[j]);
            for (int k = 0; k < n; ++k) {
                const Vec right = mult_apply(f.algebra.mult, ae[j], ae[k]);
                inv.expect_zero({i, j, k}, Vec{form_eval(f.gram, left, ae[k]) -
                                               form_eval(f.gram, ae[i], right)});
            }
        }
    finish(rep, std::move(inv));

    Condition comp("alpha_compatible", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            comp.expect_zero({i, j}, Vec{form_eval(f.gram, ae[i], basis_vec(n, j)) -
                                         form_eval(f.gram, basis_vec(n, i), ae[j])});
    finish(rep, std::move(comp));

    return rep;
}

HomAlgebra dual_algebra(const HomBialgebraData& d) {
    validate(d.algebra);
    require(d.coprod.dim == d.algebra.dim, "coproduct does not match the algebra dimension");
    const int n = d.algebra.dim;
    HomAlgebra dual;
    dual.dim = n;
    dual.mult = MultTensor(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                dual.mult.at(i, j, k) = d.coprod.at(k, i, j);
    dual.alpha = transpose(d.algebra.alpha);
    return dual;
}

CoprodTensor coproduct_of(const HomAlgebra& dual) {
    validate(dual);
    const int n = dual.dim;
    CoprodTensor f(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                f.at(k, i, j) = dual.mult.at(i, j, k);
    return f;
}

HomBimodule dual_bimodule(const HomBimodule& b, const CheckOptions& opt) {
    validate(b.algebra);
    CheckReport pre;
    pre.check_id = "dual_bimodule_pre";
    push_condition(pre, bool_condition("involutive", check_involutive(b.algebra.alpha)));
    merge_into(pre, check_multiplicative(b.algebra, opt), "");
    merge_into(pre, check_bimodule(b, opt), "");
    if (!pre.ok) {
        if (!pre.conditions.front().ok) pre.notes.push_back("twist is not involutive");
        throw CheckFailure("dual_bimodule requires an involutive multiplicative algebra "
                           "and a verified bimodule", pre);
    }
    return HomBimodule{b.algebra, b.dim_v, act_dual(b.r), act_dual(b.l), transpose(b.beta)};
}

HomBimodule tensor_bimodule(const HomAlgebra& a, const CheckOptions& opt) {
    validate(a);
    CheckReport pre;
    pre.check_id = "tensor_bimodule_pre";
    merge_into(pre, check_hom_associative(a, opt), "");
    merge_into(pre, check_multiplicative(a, opt), "");
    if (!pre.ok)
        throw CheckFailure("tensor_bimodule requires a multiplicative Hom-associative algebra",
                           pre);

    auto [lmul, rmul] = mult_operators(a);
    HomBimodule out;
    out.algebra = a;
    out.dim_v = a.dim * a.dim;
    out.l.reserve(a.dim);
    out.r.reserve(a.dim);
    for (int i = 0; i < a.dim; ++i) {
        out.l.push_back(kron(a.alpha, lmul[i]));
        out.r.push_back(kron(rmul[i], a.alpha));
    }
    out.beta = kron(a.alpha, a.alpha);
    return out;
}

CheckReport check_hom_bialgebra(const HomBialgebraData& d, const CheckOptions& opt) {
    require_involutive_multiplicative(d.algebra, "hom_bialgebra_pre", opt);
    const HomAlgebra dual = dual_algebra(d);
    {
        CheckReport pre;
        pre.check_id = "hom_bialgebra_pre";
        merge_into(pre, check_hom_associative(dual, opt), "dual_");
        if (!pre.ok)
            throw CheckFailure("the coproduct does not induce a Hom-associative dual product",
                               pre);
    }

    const int n = d.algebra.dim;
    const Mat& alpha = d.algebra.alpha;
    auto [lmul, rmul] = mult_operators(d.algebra);
    std::vector<Vec> delta(n);
    for (int i = 0; i < n; ++i) delta[i] = coprod_apply(d.coprod, basis_vec(n, i));

    CheckReport rep;
    rep.check_id = "hom_bialgebra";

    // Delta o alpha(x.y) = (alpha (x) L(x)) Delta(y) + (R(y) (x) alpha) Delta(x)
    Condition inf("infinitesimal_identity", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec lhs =
                coprod_apply(d.coprod, mat_apply(alpha, mult_basis(d.algebra.mult, i, j)));
            const Vec rhs = add(kron_apply(alpha, lmul[i], delta[j]),
                                kron_apply(rmul[j], alpha, delta[i]));
            inf.expect_zero({i, j}, sub(lhs, rhs));
        }
    finish(rep, std::move(inf));

    // (L(y) (x) alpha - alpha (x) R(y)) Delta(x)
    //   + sigma[(L(x) (x) alpha - alpha (x) R(x)) Delta(y)] = 0
    Condition anti("antisymmetric_identity", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec t1 = sub(kron_apply(lmul[j], alpha, delta[i]),
                               kron_apply(alpha, rmul[j], delta[i]));
            const Vec t2 = sub(kron_apply(lmul[i], alpha, delta[j]),
                               kron_apply(alpha, rmul[i], delta[j]));
            anti.expect_zero({i, j}, add(t1, exchange_sigma(t2)));
        }
    finish(rep, std::move(anti));

    return rep;
}

CheckReport check_hom_matched_criterion(const HomBialgebraData& d, const CheckOptions& opt) {
    require_involutive_multiplicative(d.algebra, "hom_matched_criterion_pre", opt);
    const HomAlgebra dual = dual_algebra(d);

    const int n = d.algebra.dim;
    const Mat& alpha = d.algebra.alpha;
    const Mat& alphastar = dual.alpha;
    auto [lmul, rmul] = mult_operators(d.algebra);
    auto [lcirc, rcirc] = mult_operators(dual);
    const ActionFamily rstar_dot = act_dual(rmul);   // R*.(e_i) on A*
    const ActionFamily lstar_dot = act_dual(lmul);   // L*.(e_i) on A*
    const ActionFamily rstar_circ = act_dual(rcirc); // R*o(f*_u) on A
    const ActionFamily lstar_circ = act_dual(lcirc); // L*o(f*_u) on A

    CheckReport rep;
    rep.check_id = "hom_matched_criterion";

    // R*.(alpha(x))(a* o b*) = R*.(L*o(a*)x) alpha*(b*) + (R*.(x)a*) o alpha*(b*)
    Condition inf("infinitesimal_condition", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Vec lhs =
                    act(rstar_dot, mat_col(alpha, i), mult_basis(dual.mult, j, k));
                const Vec t1 = act(rstar_dot, mat_col(lstar_circ[j], i),
                                   mat_col(alphastar, k));
                const Vec t2 = mult_apply(dual.mult, mat_col(rstar_dot[i], j),
                                          mat_col(alphastar, k));
                inf.expect_zero({i, j, k}, sub(lhs, add(t1, t2)));
            }
    finish(rep, std::move(inf));

    // R*.(R*o(a*)x) alpha*(b*) + (L*.(x)a*) o alpha*(b*)
    //   = L*.(L*o(b*)x) alpha*(a*) + alpha*(a*) o (R*.(x)b*)
    Condition anti("antisymmetric_condition", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Vec l1 = act(rstar_dot, mat_col(rstar_circ[j], i),
                                   mat_col(alphastar, k));
                const Vec l2 = mult_apply(dual.mult, mat_col(lstar_dot[i], j),
                                          mat_col(alphastar, k));
                const Vec r1 = act(lstar_dot, mat_col(lstar_circ[k], i),
                                   mat_col(alphastar, j));
                const Vec r2 = mult_apply(dual.mult, mat_col(alphastar, j),
                                          mat_col(rstar_dot[i], k));
                anti.expect_zero({i, j, k}, sub(add(l1, l2), add(r1, r2)));
            }
    finish(rep, std::move(anti));

    return rep;
}

HomMatchedPair frobenius_matched_pair(const HomAlgebra& a, const HomAlgebra& dual) {
    validate(a);
    validate(dual);
    require(a.dim == dual.dim, "dual algebra must have the same dimension");
    auto [lmul, rmul] = mult_operators(a);
    auto [lcirc, rcirc] = mult_operators(dual);
    return HomMatchedPair{a, dual, act_dual(rmul), act_dual(lmul),
                          act_dual(rcirc), act_dual(lcirc)};
}

FrobeniusDouble assemble_frobenius_double(const HomAlgebra& a, const HomAlgebra& dual) {
    const HomMatchedPair p = frobenius_matched_pair(a, dual);
    FrobeniusDouble out;
    out.total.dim = 2 * a.dim;
    out.total.mult = bicrossed_mult(a.mult, dual.mult, p.lA, p.rA, p.lB, p.rB);
    out.total.alpha = block_diag(a.alpha, dual.alpha);
    out.gram = standard_pairing_form(a.dim);
    out.dim_a = a.dim;
    return out;
}

FrobeniusDouble double_construct_frobenius(const HomBialgebraData& d, const CheckOptions& opt) {
    validate(d.algebra);
    require(d.coprod.dim == d.algebra.dim, "coproduct does not match the algebra dimension");
    const HomAlgebra dual = dual_algebra(d);

    CheckReport pre;
    pre.check_id = "frobenius_double_pre";
    push_condition(pre, bool_condition("involutive", check_involutive(d.algebra.alpha)));
    merge_into(pre, check_hom_associative(d.algebra, opt), "");
    merge_into(pre, check_multiplicative(d.algebra, opt), "");
    push_condition(pre, bool_condition("dual_involutive", check_involutive(dual.alpha)));
    merge_into(pre, check_hom_associative(dual, opt), "dual_");
    merge_into(pre, check_multiplicative(dual, opt), "dual_");
    if (!pre.ok)
        throw CheckFailure("both the algebra and its dual must be involutive, multiplicative, "
                           "and Hom-associative", pre);

    const CheckReport bial = check_hom_bialgebra(d, opt);
    if (!bial.ok)
        throw CheckFailure("the coproduct does not satisfy the bialgebra identities", bial);

    FrobeniusDouble out = assemble_frobenius_double(d.algebra, dual);

    CheckReport verify;
    verify.check_id = "frobenius_double";
    merge_into(verify, check_hom_associative(out.total, opt), "");
    merge_into(verify, check_form(out.form(), opt), "");

    // Untwisted invariance B(u v, w) = B(u, v w); with an involutive twist it
    // is equivalent to alpha_invariant above, and both are asserted.
    const int m = out.total.dim;
    Condition inv("invariant", opt);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) {
            const Vec left = mult_basis(out.total.mult, u, v);
            for (int w = 0; w < m; ++w) {
                const Vec right = mult_basis(out.total.mult, v, w);
                inv.expect_zero({u, v, w},
                                Vec{dot(left, mat_col(out.gram, w)) -
                                    dot(basis_vec(m, u), mat_apply(out.gram, right))});
            }
        }
    finish(verify, std::move(inv));

    if (!verify.ok)
        throw CheckFailure("assembled double failed verification", verify);
    return out;
}

} // namespace wb
