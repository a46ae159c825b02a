#include "workbench/bihom.hpp"

namespace wb {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw DimensionError(msg);
}

void validate(const HomAlgebra& a) {
    require(a.dim > 0, "algebra dimension must be positive");
    require(a.mult.dim == a.dim, "product tensor dimension differs from algebra dimension");
    require(a.alpha.rows == a.dim && a.alpha.cols == a.dim,
            "twist matrix shape differs from algebra dimension");
}

void validate(const BiHomAlgebra& a) {
    require(a.dim > 0, "algebra dimension must be positive");
    require(a.mult.dim == a.dim, "product tensor dimension differs from algebra dimension");
    require(a.alpha1.rows == a.dim && a.alpha1.cols == a.dim,
            "first twist shape differs from algebra dimension");
    require(a.alpha2.rows == a.dim && a.alpha2.cols == a.dim,
            "second twist shape differs from algebra dimension");
}

void validate_actions(const ActionFamily& fam, int n_alg, int dim_v) {
    require(static_cast<int>(fam.size()) == n_alg,
            "action family size differs from algebra dimension");
    for (const auto& m : fam)
        require(m.rows == dim_v && m.cols == dim_v,
                "action matrix shape differs from module dimension");
}

void validate(const BiHomBimodule& b) {
    validate(b.algebra);
    require(b.dim_v > 0, "module dimension must be positive");
    validate_actions(b.l, b.algebra.dim, b.dim_v);
    validate_actions(b.r, b.algebra.dim, b.dim_v);
    require(b.beta1.rows == b.dim_v && b.beta1.cols == b.dim_v,
            "first module twist shape differs from module dimension");
    require(b.beta2.rows == b.dim_v && b.beta2.cols == b.dim_v,
            "second module twist shape differs from module dimension");
}

// act matrices of twisted basis elements: out[i] = fam(alpha(e_i))
std::vector<Mat> twisted_acts(const ActionFamily& fam, const Mat& alpha) {
    std::vector<Mat> out(static_cast<std::size_t>(alpha.cols));
    for (int i = 0; i < alpha.cols; ++i)
        out[static_cast<std::size_t>(i)] = act_mat(fam, mat_col(alpha, i));
    return out;
}

HomAlgebra with_twist(const BiHomAlgebra& a, const Mat& alpha) {
    return HomAlgebra{a.dim, a.mult, alpha};
}

bool is_inverse_pair(const BiHomAlgebra& a) {
    const Mat id = Mat::identity(a.dim);
    return mat_mul(a.alpha1, a.alpha2) == id && mat_mul(a.alpha2, a.alpha1) == id;
}

bool is_strict_involutive(const BiHomAlgebra& a) {
    return check_involutive(a.alpha1) && check_involutive(a.alpha2);
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

// Shared refusal gate for the dual-side constructions: twists must be a
// mutually inverse multiplicative pair (inverse implies they commute).
void require_inverse_pair_multiplicative(const BiHomAlgebra& a, const char* check_id,
                                         const CheckOptions& opt) {
    CheckReport pre;
    pre.check_id = check_id;
    push_condition(pre, bool_condition("inverse_pair", is_inverse_pair(a)));
    merge_into(pre, check_multiplicative(with_twist(a, a.alpha1), opt), "alpha1_");
    merge_into(pre, check_multiplicative(with_twist(a, a.alpha2), opt), "alpha2_");
    if (!pre.ok) {
        if (!pre.conditions.front().ok)
            pre.notes.push_back("twists are not mutually inverse");
        throw CheckFailure("precondition failed: mutually inverse multiplicative twists "
                           "required", pre);
    }
}

void append_strictness(CheckReport& rep, bool strict, bool relaxed_ok) {
    rep.notes.push_back(std::string("relaxed verdict (mutually inverse twists only): ") +
                        (relaxed_ok ? "pass" : "fail"));
    if (!strict)
        rep.notes.push_back("twists are a non-involutive inverse pair; the strict "
                            "hypotheses require both squares equal to the identity");
}

} // namespace

BiHomAlgebra bihom_lift(const HomAlgebra& a) {
    validate(a);
    return BiHomAlgebra{a.dim, a.mult, a.alpha, a.alpha};
}

HomAlgebra hom_restrict(const BiHomAlgebra& a) {
    validate(a);
    if (!(a.alpha1 == a.alpha2)) {
        CheckReport rep{"hom_restrict_pre"};
        push_condition(rep, bool_condition("twists_equal", false));
        throw CheckFailure("one-twist restriction requires alpha1 == alpha2", rep);
    }
    return HomAlgebra{a.dim, a.mult, a.alpha1};
}

CheckReport check_bihom_associative(const BiHomAlgebra& a, const CheckOptions& opt) {
    validate(a);
    const int n = a.dim;

    CheckReport rep{"bihom_associative"};

    Condition comm("commute", opt);
    const Mat diff = mat_sub(mat_mul(a.alpha1, a.alpha2), mat_mul(a.alpha2, a.alpha1));
    for (int k = 0; k < n; ++k) comm.expect_zero({k}, mat_col(diff, k));
    finish(rep, std::move(comm));

    merge_into(rep, check_multiplicative(with_twist(a, a.alpha1), opt), "alpha1_");
    merge_into(rep, check_multiplicative(with_twist(a, a.alpha2), opt), "alpha2_");

    auto [L, R] = mult_operators(with_twist(a, a.alpha1));
    const std::vector<Mat> la = twisted_acts(L, a.alpha1); // x -> alpha1(e_i).x
    const std::vector<Mat> ra = twisted_acts(R, a.alpha2); // x -> x.alpha2(e_i)
    Condition assoc("bihom_assoc", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Vec lhs = mat_apply(la[static_cast<std::size_t>(i)], mult_basis(a.mult, j, k));
                const Vec rhs = mat_apply(ra[static_cast<std::size_t>(k)], mult_basis(a.mult, i, j));
                assoc.expect_zero({i, j, k}, sub(lhs, rhs));
            }
    finish(rep, std::move(assoc));

    return rep;
}

CheckReport check_bihom_bimodule(const BiHomBimodule& b, const CheckOptions& opt) {
    validate(b);
    const int n = b.algebra.dim;
    const int dv = b.dim_v;
    const std::vector<Mat> la1 = twisted_acts(b.l, b.algebra.alpha1); // l(alpha1(e_i))
    const std::vector<Mat> ra1 = twisted_acts(b.r, b.algebra.alpha1); // r(alpha1(e_i))
    const std::vector<Mat> la2 = twisted_acts(b.l, b.algebra.alpha2); // l(alpha2(e_i))
    const std::vector<Mat> ra2 = twisted_acts(b.r, b.algebra.alpha2); // r(alpha2(e_i))

    CheckReport rep{"bihom_bimodule"};

    Condition bc("beta_commute", opt);
    const Mat diff = mat_sub(mat_mul(b.beta1, b.beta2), mat_mul(b.beta2, b.beta1));
    for (int t = 0; t < dv; ++t) bc.expect_zero({t}, mat_col(diff, t));
    finish(rep, std::move(bc));

    Condition lpb("lpb", opt), rpb("rpb", opt), lar("lar", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec pij = mult_basis(b.algebra.mult, i, j);
            const Mat lprod = act_mat(b.l, pij); // l(e_i.e_j)
            const Mat rprod = act_mat(b.r, pij); // r(e_i.e_j)
            for (int t = 0; t < dv; ++t) {
                {
                    const Vec lhs = mat_apply(lprod, mat_col(b.beta2, t));
                    const Vec rhs = mat_apply(la1[static_cast<std::size_t>(i)],
                                              mat_col(b.l[static_cast<std::size_t>(j)], t));
                    lpb.expect_zero({i, j, t}, sub(lhs, rhs));
                }
                {
                    const Vec lhs = mat_apply(rprod, mat_col(b.beta1, t));
                    const Vec rhs = mat_apply(ra2[static_cast<std::size_t>(j)],
                                              mat_col(b.r[static_cast<std::size_t>(i)], t));
                    rpb.expect_zero({i, j, t}, sub(lhs, rhs));
                }
                {
                    const Vec lhs = mat_apply(la1[static_cast<std::size_t>(i)],
                                              mat_col(b.r[static_cast<std::size_t>(j)], t));
                    const Vec rhs = mat_apply(ra2[static_cast<std::size_t>(j)],
                                              mat_col(b.l[static_cast<std::size_t>(i)], t));
                    lar.expect_zero({i, j, t}, sub(lhs, rhs));
                }
            }
        }
    finish(rep, std::move(lpb));
    finish(rep, std::move(rpb));
    finish(rep, std::move(lar));

    Condition b1l("b1l", opt), b1r("b1r", opt), b2l("b2l", opt), b2r("b2r", opt);
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < dv; ++t) {
            const Vec li_t = mat_col(b.l[static_cast<std::size_t>(i)], t);
            const Vec ri_t = mat_col(b.r[static_cast<std::size_t>(i)], t);
            const Vec b1_t = mat_col(b.beta1, t);
            const Vec b2_t = mat_col(b.beta2, t);
            b1l.expect_zero({i, t}, sub(mat_apply(b.beta1, li_t),
                                        mat_apply(la1[static_cast<std::size_t>(i)], b1_t)));
            b1r.expect_zero({i, t}, sub(mat_apply(b.beta1, ri_t),
                                        mat_apply(ra1[static_cast<std::size_t>(i)], b1_t)));
            b2l.expect_zero({i, t}, sub(mat_apply(b.beta2, li_t),
                                        mat_apply(la2[static_cast<std::size_t>(i)], b2_t)));
            b2r.expect_zero({i, t}, sub(mat_apply(b.beta2, ri_t),
                                        mat_apply(ra2[static_cast<std::size_t>(i)], b2_t)));
        }
    finish(rep, std::move(b1l));
    finish(rep, std::move(b1r));
    finish(rep, std::move(b2l));
    finish(rep, std::move(b2r));

    return rep;
}

std::array<BiHomBimodule, 3> bihom_regular_bimodules(const BiHomAlgebra& a, int n,
                                                     const CheckOptions& opt) {
    validate(a);
    CheckReport pre{"bihom_regular_bimodules_pre"};
    merge_into(pre, check_bihom_associative(a, opt), "");
    if (!pre.ok)
        throw CheckFailure("regular bimodules require a multiplicative biHom-associative "
                           "algebra", pre);

    Mat power1, power2;
    if (n >= 0) {
        power1 = mat_pow(a.alpha1, n);
        power2 = mat_pow(a.alpha2, n);
    } else {
        auto inv1 = mat_inverse(a.alpha1);
        auto inv2 = mat_inverse(a.alpha2);
        if (!inv1 || !inv2) {
            pre.ok = false;
            pre.notes.push_back("negative twist power requires invertible twists");
            throw CheckFailure("negative twist power requires invertible twists", pre);
        }
        power1 = mat_pow(*inv1, -n);
        power2 = mat_pow(*inv2, -n);
    }

    auto [L, R] = mult_operators(with_twist(a, a.alpha1));
    const ActionFamily ln = act_precompose(L, power1);
    const ActionFamily rn = act_precompose(R, power2);
    const ActionFamily zero = zero_actions(a.dim, a.dim);
    return {BiHomBimodule{a, a.dim, ln, zero, a.alpha1, a.alpha2},
            BiHomBimodule{a, a.dim, zero, rn, a.alpha1, a.alpha2},
            BiHomBimodule{a, a.dim, ln, rn, a.alpha1, a.alpha2}};
}

BiHomBimodule bihom_dual_bimodule(const BiHomBimodule& b, const CheckOptions& opt) {
    validate(b);
    CheckReport pre{"bihom_dual_bimodule_pre"};
    push_condition(pre, bool_condition("inverse_pair", is_inverse_pair(b.algebra)));
    merge_into(pre, check_multiplicative(with_twist(b.algebra, b.algebra.alpha1), opt),
               "alpha1_");
    merge_into(pre, check_multiplicative(with_twist(b.algebra, b.algebra.alpha2), opt),
               "alpha2_");
    merge_into(pre, check_bihom_bimodule(b, opt), "");
    if (!pre.ok) {
        if (!pre.conditions.front().ok)
            pre.notes.push_back("twists are not mutually inverse");
        throw CheckFailure("dual bimodule requires mutually inverse multiplicative twists "
                           "and a verified bimodule", pre);
    }
    return BiHomBimodule{b.algebra, b.dim_v, act_dual(b.r), act_dual(b.l),
                         transpose(b.beta2), transpose(b.beta1)};
}

BiHomAlgebra bihom_semidirect_sum(const BiHomBimodule& b, const CheckOptions& opt) {
    const CheckReport rep = check_bihom_bimodule(b, opt);
    if (!rep.ok)
        throw CheckFailure("semidirect sum requires a verified biHom bimodule", rep);
    const MultTensor zero_mult(b.dim_v);
    const ActionFamily zero = zero_actions(b.dim_v, b.algebra.dim);
    BiHomAlgebra out;
    out.dim = b.algebra.dim + b.dim_v;
    out.mult = bicrossed_mult(b.algebra.mult, zero_mult, b.l, b.r, zero, zero);
    out.alpha1 = block_diag(b.algebra.alpha1, b.beta1);
    out.alpha2 = block_diag(b.algebra.alpha2, b.beta2);
    return out;
}

CheckReport check_bihom_matched_pair(const BiHomMatchedPair& p, const CheckOptions& opt) {
    validate(p.A);
    validate(p.B);
    validate_actions(p.lA, p.A.dim, p.B.dim);
    validate_actions(p.rA, p.A.dim, p.B.dim);
    validate_actions(p.lB, p.B.dim, p.A.dim);
    validate_actions(p.rB, p.B.dim, p.A.dim);

    CheckReport rep{"bihom_matched_pair"};
    merge_into(rep,
               check_bihom_bimodule(
                   BiHomBimodule{p.A, p.B.dim, p.lA, p.rA, p.B.alpha1, p.B.alpha2}, opt),
               "A_on_B.");
    merge_into(rep,
               check_bihom_bimodule(
                   BiHomBimodule{p.B, p.A.dim, p.lB, p.rB, p.A.alpha1, p.A.alpha2}, opt),
               "B_on_A.");

    const int nA = p.A.dim;
    const int nB = p.B.dim;
    const std::vector<Mat> laA = twisted_acts(p.lA, p.A.alpha1); // lA(alpha1(e_i))
    const std::vector<Mat> raA = twisted_acts(p.rA, p.A.alpha2); // rA(alpha2(e_i))
    const std::vector<Mat> lbB = twisted_acts(p.lB, p.B.alpha1); // lB(beta1(f_u))
    const std::vector<Mat> rbB = twisted_acts(p.rB, p.B.alpha2); // rB(beta2(f_u))

    Condition mp1("mp1", opt), mp2("mp2", opt), mp5("mp5", opt);
    for (int i = 0; i < nA; ++i)
        for (int u = 0; u < nB; ++u)
            for (int t = 0; t < nB; ++t) {
                const Vec but = mult_basis(p.B.mult, u, t); // a.b for a=f_u, b=f_t
                const Vec b1_u = mat_col(p.B.alpha1, u);    // beta1(a)
                const Vec b2_t = mat_col(p.B.alpha2, t);    // beta2(b)
                const Vec lA_i_u = mat_col(p.lA[static_cast<std::size_t>(i)], u); // lA(x)a
                const Vec lA_i_t = mat_col(p.lA[static_cast<std::size_t>(i)], t); // lA(x)b
                const Vec rA_i_u = mat_col(p.rA[static_cast<std::size_t>(i)], u); // rA(x)a
                const Vec rA_i_t = mat_col(p.rA[static_cast<std::size_t>(i)], t); // rA(x)b
                const Vec rB_u_i = mat_col(p.rB[static_cast<std::size_t>(u)], i); // rB(a)x
                const Vec rB_t_i = mat_col(p.rB[static_cast<std::size_t>(t)], i); // rB(b)x
                const Vec lB_u_i = mat_col(p.lB[static_cast<std::size_t>(u)], i); // lB(a)x
                const Vec lB_t_i = mat_col(p.lB[static_cast<std::size_t>(t)], i); // lB(b)x
                {
                    const Vec lhs = mat_apply(laA[static_cast<std::size_t>(i)], but);
                    const Vec rhs = add(act(p.lA, rB_u_i, b2_t),
                                        mult_apply(p.B.mult, lA_i_u, b2_t));
                    mp1.expect_zero({i, u, t}, sub(lhs, rhs));
                }
                {
                    const Vec lhs = mat_apply(raA[static_cast<std::size_t>(i)], but);
                    const Vec rhs = add(act(p.rA, lB_t_i, b1_u),
                                        mult_apply(p.B.mult, b1_u, rA_i_t));
                    mp2.expect_zero({i, u, t}, sub(lhs, rhs));
                }
                {
                    Vec acc = act(p.lA, lB_u_i, b2_t);
                    acc = add(acc, mult_apply(p.B.mult, rA_i_u, b2_t));
                    acc = sub(acc, act(p.rA, rB_t_i, b1_u));
                    acc = sub(acc, mult_apply(p.B.mult, b1_u, lA_i_t));
                    mp5.expect_zero({i, u, t}, acc);
                }
            }

    Condition mp3("mp3", opt), mp4("mp4", opt), mp6("mp6", opt);
    for (int u = 0; u < nB; ++u)
        for (int i = 0; i < nA; ++i)
            for (int j = 0; j < nA; ++j) {
                const Vec aij = mult_basis(p.A.mult, i, j); // x.y
                const Vec a1_i = mat_col(p.A.alpha1, i);    // alpha1(x)
                const Vec a2_j = mat_col(p.A.alpha2, j);    // alpha2(y)
                const Vec rA_i_u = mat_col(p.rA[static_cast<std::size_t>(i)], u); // rA(x)a
                const Vec lA_j_u = mat_col(p.lA[static_cast<std::size_t>(j)], u); // lA(y)a
                const Vec lA_i_u = mat_col(p.lA[static_cast<std::size_t>(i)], u); // lA(x)a
                const Vec rA_j_u = mat_col(p.rA[static_cast<std::size_t>(j)], u); // rA(y)a
                const Vec lB_u_i = mat_col(p.lB[static_cast<std::size_t>(u)], i); // lB(a)x
                const Vec lB_u_j = mat_col(p.lB[static_cast<std::size_t>(u)], j); // lB(a)y
                const Vec rB_u_i = mat_col(p.rB[static_cast<std::size_t>(u)], i); // rB(a)x
                const Vec rB_u_j = mat_col(p.rB[static_cast<std::size_t>(u)], j); // rB(a)y
                {
                    const Vec lhs = mat_apply(lbB[static_cast<std::size_t>(u)], aij);
                    const Vec rhs = add(act(p.lB, rA_i_u, a2_j),
                                        mult_apply(p.A.mult, lB_u_i, a2_j));
                    mp3.expect_zero({u, i, j}, sub(lhs, rhs));
                }
                {
                    const Vec lhs = mat_apply(rbB[static_cast<std::size_t>(u)], aij);
                    const Vec rhs = add(act(p.rB, lA_j_u, a1_i),
                                        mult_apply(p.A.mult, a1_i, rB_u_j));
                    mp4.expect_zero({u, i, j}, sub(lhs, rhs));
                }
                {
                    Vec acc = act(p.lB, lA_i_u, a2_j);
                    acc = add(acc, mult_apply(p.A.mult, rB_u_i, a2_j));
                    acc = sub(acc, act(p.rB, rA_j_u, a1_i));
                    acc = sub(acc, mult_apply(p.A.mult, a1_i, lB_u_j));
                    mp6.expect_zero({u, i, j}, acc);
                }
            }

    finish(rep, std::move(mp1));
    finish(rep, std::move(mp2));
    finish(rep, std::move(mp3));
    finish(rep, std::move(mp4));
    finish(rep, std::move(mp5));
    finish(rep, std::move(mp6));
    return rep;
}

BiHomAlgebra bihom_bicrossed_sum(const BiHomMatchedPair& p, const CheckOptions& opt) {
    const CheckReport rep = check_bihom_matched_pair(p, opt);
    if (!rep.ok)
        throw CheckFailure("bicrossed sum requires a matched pair", rep);
    BiHomAlgebra out;
    out.dim = p.A.dim + p.B.dim;
    out.mult = bicrossed_mult(p.A.mult, p.B.mult, p.lA, p.rA, p.lB, p.rB);
    out.alpha1 = block_diag(p.A.alpha1, p.B.alpha1);
    out.alpha2 = block_diag(p.A.alpha2, p.B.alpha2);
    return out;
}

CheckReport check_alphabeta_invariant(const BiHomAlgebra& a, const Mat& gram,
                                      const CheckOptions& opt) {
    validate(a);
    require(gram.rows == a.dim && gram.cols == a.dim, "gram matrix does not match the algebra");
    const int n = a.dim;
    std::vector<Vec> a1e(static_cast<std::size_t>(n)), a2e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        a1e[static_cast<std::size_t>(i)] = mat_col(a.alpha1, i);
        a2e[static_cast<std::size_t>(i)] = mat_col(a.alpha2, i);
    }

    CheckReport rep{"alphabeta_invariant"};
    Condition inv("alphabeta_invariant", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec left = mult_apply(a.mult, a2e[static_cast<std::size_t>(i)],
                                        a1e[static_cast<std::size_t>(j)]);
            for (int k = 0; k < n; ++k) {
                const Vec right = mult_apply(a.mult, a2e[static_cast<std::size_t>(j)],
                                             a1e[static_cast<std::size_t>(k)]);
                inv.expect_zero({i, j, k},
                                Vec{form_eval(gram, left, a1e[static_cast<std::size_t>(k)]) -
                                    form_eval(gram, a1e[static_cast<std::size_t>(i)], right)});
            }
        }
    finish(rep, std::move(inv));
    return rep;
}

BiHomAlgebra bihom_dual_algebra(const BiHomBialgebraData& d) {
    validate(d.algebra);
    require(d.coprod.dim == d.algebra.dim, "coproduct does not match the algebra dimension");
    const int n = d.algebra.dim;
    BiHomAlgebra dual;
    dual.dim = n;
    dual.mult = MultTensor(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                dual.mult.at(i, j, k) = d.coprod.at(k, i, j);
    dual.alpha1 = transpose(d.algebra.alpha1);
    dual.alpha2 = transpose(d.algebra.alpha2);
    return dual;
}

CoprodTensor bihom_coproduct_of(const BiHomAlgebra& dual) {
    validate(dual);
    const int n = dual.dim;
    CoprodTensor f(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                f.at(k, i, j) = dual.mult.at(i, j, k);
    return f;
}

CheckReport check_bihom_bialgebra(const BiHomBialgebraData& d, const CheckOptions& opt) {
    validate(d.algebra);
    require(d.coprod.dim == d.algebra.dim, "coproduct does not match the algebra dimension");
    require_inverse_pair_multiplicative(d.algebra, "bihom_bialgebra_pre", opt);
    const BiHomAlgebra dual = bihom_dual_algebra(d);
    {
        CheckReport pre{"bihom_bialgebra_pre"};
        merge_into(pre, check_bihom_associative(dual, opt), "dual_");
        if (!pre.ok)
            throw CheckFailure("the coproduct does not induce a biHom-associative dual "
                               "product", pre);
    }

    const int n = d.algebra.dim;
    const Mat& a1 = d.algebra.alpha1;
    const Mat& a2 = d.algebra.alpha2;
    auto [lmul, rmul] = mult_operators(with_twist(d.algebra, a1));
    std::vector<Vec> delta(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        delta[static_cast<std::size_t>(i)] = coprod_apply(d.coprod, basis_vec(n, i));

    CheckReport rep{"bihom_bialgebra"};
    const bool strict = is_strict_involutive(d.algebra);
    push_condition(rep, bool_condition("strict_involutive", strict));

    // Delta o alpha2(x.y) = (alpha2 (x) L(x)) Delta(y) + (R(y) (x) alpha2) Delta(x)
    Condition inf("infinitesimal_identity", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec lhs =
                coprod_apply(d.coprod, mat_apply(a2, mult_basis(d.algebra.mult, i, j)));
            const Vec rhs = add(kron_apply(a2, lmul[static_cast<std::size_t>(i)],
                                           delta[static_cast<std::size_t>(j)]),
                                kron_apply(rmul[static_cast<std::size_t>(j)], a2,
                                           delta[static_cast<std::size_t>(i)]));
            inf.expect_zero({i, j}, sub(lhs, rhs));
        }
    finish(rep, std::move(inf));

    // (L(y) (x) alpha2 - alpha1 (x) R(y)) Delta(x)
    //   + sigma[(L(x) (x) alpha2 - alpha1 (x) R(x)) Delta(y)] = 0
    Condition anti("antisymmetric_identity", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec t1 = sub(kron_apply(lmul[static_cast<std::size_t>(j)], a2,
                                          delta[static_cast<std::size_t>(i)]),
                               kron_apply(a1, rmul[static_cast<std::size_t>(j)],
                                          delta[static_cast<std::size_t>(i)]));
            const Vec t2 = sub(kron_apply(lmul[static_cast<std::size_t>(i)], a2,
                                          delta[static_cast<std::size_t>(j)]),
                               kron_apply(a1, rmul[static_cast<std::size_t>(i)],
                                          delta[static_cast<std::size_t>(j)]));
            anti.expect_zero({i, j}, add(t1, exchange_sigma(t2)));
        }
    finish(rep, std::move(anti));

    const bool relaxed_ok = rep.find("infinitesimal_identity")->ok &&
                            rep.find("antisymmetric_identity")->ok;
    append_strictness(rep, strict, relaxed_ok);
    return rep;
}

CheckReport check_bihom_matched_criterion(const BiHomBialgebraData& d, const CheckOptions& opt) {
    validate(d.algebra);
    require(d.coprod.dim == d.algebra.dim, "coproduct does not match the algebra dimension");
    require_inverse_pair_multiplicative(d.algebra, "bihom_matched_criterion_pre", opt);
    const BiHomAlgebra dual = bihom_dual_algebra(d);

    const int n = d.algebra.dim;
    const Mat& a2 = d.algebra.alpha2;
    const Mat& as1 = dual.alpha1; // alpha1*
    const Mat& as2 = dual.alpha2; // alpha2*
    auto [lmul, rmul] = mult_operators(with_twist(d.algebra, d.algebra.alpha1));
    auto [lcirc, rcirc] = mult_operators(HomAlgebra{n, dual.mult, dual.alpha1});
    const ActionFamily rstar_dot = act_dual(rmul);   // R*.(e_i) on A*
    const ActionFamily lstar_dot = act_dual(lmul);   // L*.(e_i) on A*
    const ActionFamily rstar_circ = act_dual(rcirc); // R*o(f*_u) on A
    const ActionFamily lstar_circ = act_dual(lcirc); // L*o(f*_u) on A

    CheckReport rep{"bihom_matched_criterion"};
    const bool strict = is_strict_involutive(d.algebra);
    push_condition(rep, bool_condition("strict_involutive", strict));

    // R*.(alpha2(x))(a* o b*) = R*.(L*o(a*)x) alpha2*(b*) + (R*.(x)a*) o alpha2*(b*)
    Condition inf("infinitesimal_condition", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Vec lhs = act(rstar_dot, mat_col(a2, i), mult_basis(dual.mult, j, k));
                const Vec t1 = act(rstar_dot,
                                   mat_col(lstar_circ[static_cast<std::size_t>(j)], i),
                                   mat_col(as2, k));
                const Vec t2 = mult_apply(dual.mult,
                                          mat_col(rstar_dot[static_cast<std::size_t>(i)], j),
                                          mat_col(as2, k));
                inf.expect_zero({i, j, k}, sub(lhs, add(t1, t2)));
            }
    finish(rep, std::move(inf));

    // R*.(R*o(a*)x) alpha2*(b*) + (L*.(x)a*) o alpha2*(b*)
    //   = L*.(L*o(b*)x) alpha1*(a*) + alpha1*(a*) o (R*.(x)b*)
    Condition anti("antisymmetric_condition", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Vec l1 = act(rstar_dot,
                                   mat_col(rstar_circ[static_cast<std::size_t>(j)], i),
                                   mat_col(as2, k));
                const Vec l2 = mult_apply(dual.mult,
                                          mat_col(lstar_dot[static_cast<std::size_t>(i)], j),
                                          mat_col(as2, k));
                const Vec r1 = act(lstar_dot,
                                   mat_col(lstar_circ[static_cast<std::size_t>(k)], i),
                                   mat_col(as1, j));
                const Vec r2 = mult_apply(dual.mult, mat_col(as1, j),
                                          mat_col(rstar_dot[static_cast<std::size_t>(i)], k));
                anti.expect_zero({i, j, k}, sub(add(l1, l2), add(r1, r2)));
            }
    finish(rep, std::move(anti));

    const bool relaxed_ok = rep.find("infinitesimal_condition")->ok &&
                            rep.find("antisymmetric_condition")->ok;
    append_strictness(rep, strict, relaxed_ok);
    return rep;
}

BiHomMatchedPair bihom_frobenius_matched_pair(const BiHomAlgebra& a, const BiHomAlgebra& dual) {
    validate(a);
    validate(dual);
    require(a.dim == dual.dim, "dual algebra must have the same dimension");
    auto [lmul, rmul] = mult_operators(with_twist(a, a.alpha1));
    auto [lcirc, rcirc] = mult_operators(HomAlgebra{dual.dim, dual.mult, dual.alpha1});
    BiHomMatchedPair p;
    p.A = a;
    p.B = BiHomAlgebra{dual.dim, dual.mult, dual.alpha2, dual.alpha1};
    p.lA = act_dual(rmul);
    p.rA = act_dual(lmul);
    p.lB = act_dual(rcirc);
    p.rB = act_dual(lcirc);
    return p;
}

BiHomFrobeniusDouble assemble_bihom_frobenius_double(const BiHomAlgebra& a,
                                                     const BiHomAlgebra& dual) {
    const BiHomMatchedPair p = bihom_frobenius_matched_pair(a, dual);
    BiHomFrobeniusDouble out;
    out.total.dim = 2 * a.dim;
    out.total.mult = bicrossed_mult(a.mult, dual.mult, p.lA, p.rA, p.lB, p.rB);
    out.total.alpha1 = block_diag(a.alpha1, dual.alpha1);
    out.total.alpha2 = block_diag(a.alpha2, dual.alpha2);
    out.gram = standard_pairing_form(a.dim);
    out.dim_a = a.dim;
    return out;
}

BiHomFrobeniusDouble double_construct_bihom_frobenius(const BiHomBialgebraData& d,
                                                      const CheckOptions& opt) {
    validate(d.algebra);
    require(d.coprod.dim == d.algebra.dim, "coproduct does not match the algebra dimension");
    const BiHomAlgebra dual = bihom_dual_algebra(d);

    CheckReport pre{"bihom_frobenius_double_pre"};
    push_condition(pre, bool_condition("inverse_pair", is_inverse_pair(d.algebra)));
    push_condition(pre,
                   bool_condition("strict_involutive", is_strict_involutive(d.algebra)));
    merge_into(pre, check_bihom_associative(d.algebra, opt), "");
    merge_into(pre, check_bihom_associative(dual, opt), "dual_");
    if (!pre.ok)
        throw CheckFailure("the double requires mutually inverse involutive twists and "
                           "biHom-associativity on both sides", pre);

    const CheckReport bial = check_bihom_bialgebra(d, opt);
    if (!bial.ok)
        throw CheckFailure("the coproduct does not satisfy the bialgebra identities", bial);

    BiHomFrobeniusDouble out = assemble_bihom_frobenius_double(d.algebra, dual);

    CheckReport verify{"bihom_frobenius_double"};
    merge_into(verify, check_bihom_associative(out.total, opt), "");

    const int m = out.total.dim;
    Condition sym("symmetric", opt);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            sym.expect_zero({i, j}, Vec{out.gram.at(i, j) - out.gram.at(j, i)});
    finish(verify, std::move(sym));

    push_condition(verify, bool_condition("nondegenerate", det_exact(out.gram) != 0));

    Condition c1("twist1_compatible", opt), c2("twist2_compatible", opt);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            c1.expect_zero({i, j},
                           Vec{form_eval(out.gram, mat_col(out.total.alpha1, i),
                                         basis_vec(m, j)) -
                               form_eval(out.gram, basis_vec(m, i),
                                         mat_col(out.total.alpha1, j))});
            c2.expect_zero({i, j},
                           Vec{form_eval(out.gram, mat_col(out.total.alpha2, i),
                                         basis_vec(m, j)) -
                               form_eval(out.gram, basis_vec(m, i),
                                         mat_col(out.total.alpha2, j))});
        }
    finish(verify, std::move(c1));
    finish(verify, std::move(c2));

    merge_into(verify, check_alphabeta_invariant(out.total, out.gram, opt), "");

    if (!verify.ok)
        throw CheckFailure("assembled double failed verification", verify);
    return out;
}

} // namespace wb
