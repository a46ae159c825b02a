#include "workbench/hom.hpp"

namespace wb {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw DimensionError(what);
}

void validate(const HomAlgebra& a) {
    require(a.dim > 0, "algebra dimension must be positive");
    require(a.mult.dim == a.dim, "product tensor dimension differs from algebra dimension");
    require(a.alpha.rows == a.dim && a.alpha.cols == a.dim,
            "twist matrix shape differs from algebra dimension");
}

void validate_actions(const ActionFamily& fam, int n_alg, int dim_v) {
    require(static_cast<int>(fam.size()) == n_alg,
            "action family size differs from algebra dimension");
    for (const auto& m : fam)
        require(m.rows == dim_v && m.cols == dim_v,
                "action matrix shape differs from module dimension");
}

void validate(const HomBimodule& b) {
    validate(b.algebra);
    require(b.dim_v > 0, "module dimension must be positive");
    validate_actions(b.l, b.algebra.dim, b.dim_v);
    validate_actions(b.r, b.algebra.dim, b.dim_v);
    require(b.beta.rows == b.dim_v && b.beta.cols == b.dim_v,
            "module twist shape differs from module dimension");
}

// act matrices of alpha-twisted basis elements: out[i] = fam(alpha(e_i))
std::vector<Mat> twisted_acts(const ActionFamily& fam, const Mat& alpha) {
    std::vector<Mat> out(static_cast<std::size_t>(alpha.cols));
    for (int i = 0; i < alpha.cols; ++i)
        out[static_cast<std::size_t>(i)] = act_mat(fam, mat_col(alpha, i));
    return out;
}

} // namespace

CheckReport check_hom_associative(const HomAlgebra& a, const CheckOptions& opt) {
    validate(a);
    const int n = a.dim;
    auto [L, R] = mult_operators(a);
    const std::vector<Mat> la = twisted_acts(L, a.alpha); // x -> alpha(e_i).x
    const std::vector<Mat> ra = twisted_acts(R, a.alpha); // x -> x.alpha(e_i)

    CheckReport rep{"hom_associative"};
    Condition cond("hom_assoc", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                const Vec lhs = mat_apply(la[static_cast<std::size_t>(i)], mult_basis(a.mult, j, k));
                const Vec rhs = mat_apply(ra[static_cast<std::size_t>(k)], mult_basis(a.mult, i, j));
                cond.expect_zero({i, j, k}, sub(lhs, rhs));
            }
    finish(rep, std::move(cond));
    return rep;
}

CheckReport check_multiplicative(const HomAlgebra& a, const CheckOptions& opt) {
    validate(a);
    const int n = a.dim;
    CheckReport rep{"multiplicative"};
    Condition cond("multiplicative", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec lhs = mat_apply(a.alpha, mult_basis(a.mult, i, j));
            const Vec rhs = mult_apply(a.mult, mat_col(a.alpha, i), mat_col(a.alpha, j));
            cond.expect_zero({i, j}, sub(lhs, rhs));
        }
    finish(rep, std::move(cond));
    return rep;
}

bool check_involutive(const Mat& m) {
    require(m.is_square(), "involution check needs a square matrix");
    return mat_mul(m, m) == Mat::identity(m.rows);
}

std::pair<ActionFamily, ActionFamily> mult_operators(const HomAlgebra& a) {
    validate(a);
    const int n = a.dim;
    ActionFamily L(static_cast<std::size_t>(n), Mat(n, n));
    ActionFamily R(static_cast<std::size_t>(n), Mat(n, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                L[static_cast<std::size_t>(i)].at(k, j) = a.mult.at(i, j, k);
                R[static_cast<std::size_t>(i)].at(k, j) = a.mult.at(j, i, k);
            }
    return {std::move(L), std::move(R)};
}

std::array<HomBimodule, 3> regular_bimodules(const HomAlgebra& a, int n, const CheckOptions& opt) {
    validate(a);
    CheckReport pre{"regular_bimodules_pre"};
    merge_into(pre, check_hom_associative(a, opt), "");
    merge_into(pre, check_multiplicative(a, opt), "");
    if (!pre.ok)
        throw CheckFailure("regular bimodules require a multiplicative Hom-associative algebra", pre);

    Mat power;
    if (n >= 0) {
        power = mat_pow(a.alpha, n);
    } else {
        auto inv = mat_inverse(a.alpha);
        if (!inv) {
            pre.ok = false;
            pre.notes.push_back("negative twist power requires invertible alpha");
            throw CheckFailure("negative twist power requires invertible alpha", pre);
        }
        power = mat_pow(*inv, -n);
    }

    auto [L, R] = mult_operators(a);
    const ActionFamily ln = act_precompose(L, power);
    const ActionFamily rn = act_precompose(R, power);
    const ActionFamily zero = zero_actions(a.dim, a.dim);
    return {HomBimodule{a, a.dim, ln, zero, a.alpha},
            HomBimodule{a, a.dim, zero, rn, a.alpha},
            HomBimodule{a, a.dim, ln, rn, a.alpha}};
}

CheckReport check_bimodule(const HomBimodule& b, const CheckOptions& opt) {
    validate(b);
    const int n = b.algebra.dim;
    const int dv = b.dim_v;
    const Mat& alpha = b.algebra.alpha;
    const std::vector<Mat> la = twisted_acts(b.l, alpha); // l(alpha(e_i))
    const std::vector<Mat> ra = twisted_acts(b.r, alpha); // r(alpha(e_i))

    CheckReport rep{"bimodule"};
    Condition lpb("lpb", opt), rpb("rpb", opt), lar("lar", opt);
    Condition bl("bl", opt), br("br", opt);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Vec pij = mult_basis(b.algebra.mult, i, j);
            const Mat lprod = act_mat(b.l, pij); // l(e_i.e_j)
            const Mat rprod = act_mat(b.r, pij); // r(e_i.e_j)
            for (int t = 0; t < dv; ++t) {
                const Vec bt = mat_col(b.beta, t);
                {
                    const Vec lhs = mat_apply(lprod, bt);
                    const Vec rhs = mat_apply(la[static_cast<std::size_t>(i)],
                                              mat_col(b.l[static_cast<std::size_t>(j)], t));
                    lpb.expect_zero({i, j, t}, sub(lhs, rhs));
                }
                {
                    const Vec lhs = mat_apply(rprod, bt);
                    const Vec rhs = mat_apply(ra[static_cast<std::size_t>(j)],
                                              mat_col(b.r[static_cast<std::size_t>(i)], t));
                    rpb.expect_zero({i, j, t}, sub(lhs, rhs));
                }
                {
                    const Vec lhs = mat_apply(la[static_cast<std::size_t>(i)],
                                              mat_col(b.r[static_cast<std::size_t>(j)], t));
                    const Vec rhs = mat_apply(ra[static_cast<std::size_t>(j)],
                                              mat_col(b.l[static_cast<std::size_t>(i)], t));
                    lar.expect_zero({i, j, t}, sub(lhs, rhs));
                }
            }
        }
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < dv; ++t) {
            const Vec bt = mat_col(b.beta, t);
            {
                const Vec lhs = mat_apply(b.beta, mat_col(b.l[static_cast<std::size_t>(i)], t));
                const Vec rhs = mat_apply(la[static_cast<std::size_t>(i)], bt);
                bl.expect_zero({i, t}, sub(lhs, rhs));
            }
            {
                const Vec lhs = mat_apply(b.beta, mat_col(b.r[static_cast<std::size_t>(i)], t));
                const Vec rhs = mat_apply(ra[static_cast<std::size_t>(i)], bt);
                br.expect_zero({i, t}, sub(lhs, rhs));
            }
        }
    finish(rep, std::move(lpb));
    finish(rep, std::move(rpb));
    finish(rep, std::move(lar));
    finish(rep, std::move(bl));
    finish(rep, std::move(br));
    return rep;
}

HomAlgebra semidirect_sum(const HomBimodule& b, const CheckOptions& opt) {
    const CheckReport rep = check_bimodule(b, opt);
    const bool core_ok = rep.find("lpb")->ok && rep.find("rpb")->ok && rep.find("lar")->ok;
    if (!core_ok)
        throw CheckFailure("semidirect sum requires bimodule conditions lpb, rpb, lar", rep);
    const MultTensor zero_mult(b.dim_v);
    const ActionFamily zero = zero_actions(b.dim_v, b.algebra.dim);
    HomAlgebra out;
    out.dim = b.algebra.dim + b.dim_v;
    out.mult = bicrossed_mult(b.algebra.mult, zero_mult, b.l, b.r, zero, zero);
    out.alpha = block_diag(b.algebra.alpha, b.beta);
    return out;
}

CheckReport check_matched_pair(const HomMatchedPair& p, const CheckOptions& opt) {
    validate(p.A);
    validate(p.B);
    validate_actions(p.lA, p.A.dim, p.B.dim);
    validate_actions(p.rA, p.A.dim, p.B.dim);
    validate_actions(p.lB, p.B.dim, p.A.dim);
    validate_actions(p.rB, p.B.dim, p.A.dim);

    CheckReport rep{"matched_pair"};
    merge_into(rep, check_bimodule(HomBimodule{p.A, p.B.dim, p.lA, p.rA, p.B.alpha}, opt),
               "A_on_B.");
    merge_into(rep, check_bimodule(HomBimodule{p.B, p.A.dim, p.lB, p.rB, p.A.alpha}, opt),
               "B_on_A.");

    const int nA = p.A.dim;
    const int nB = p.B.dim;
    const Mat& alpha = p.A.alpha;
    const Mat& beta = p.B.alpha;
    const std::vector<Mat> laA = twisted_acts(p.lA, alpha); // lA(alpha(e_i))
    const std::vector<Mat> raA = twisted_acts(p.rA, alpha);
    const std::vector<Mat> lbB = twisted_acts(p.lB, beta); // lB(beta(f_u))
    const std::vector<Mat> rbB = twisted_acts(p.rB, beta);

    Condition mp1("mp1", opt), mp2("mp2", opt), mp5("mp5", opt);
    for (int i = 0; i < nA; ++i)
        for (int u = 0; u < nB; ++u)
            for (int t = 0; t < nB; ++t) {
                const Vec but = mult_basis(p.B.mult, u, t); // a.b for a=f_u, b=f_t
                const Vec beta_u = mat_col(beta, u);
                const Vec beta_t = mat_col(beta, t);
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
                    const Vec rhs = add(act(p.lA, rB_u_i, beta_t),
                                        mult_apply(p.B.mult, lA_i_u, beta_t));
                    mp1.expect_zero({i, u, t}, sub(lhs, rhs));
                }
                {
                    const Vec lhs = mat_apply(raA[static_cast<std::size_t>(i)], but);
                    const Vec rhs = add(act(p.rA, lB_t_i, beta_u),
                                        mult_apply(p.B.mult, beta_u, rA_i_t));
                    mp2.expect_zero({i, u, t}, sub(lhs, rhs));
                }
                {
                    Vec acc = act(p.lA, lB_u_i, beta_t);
                    acc = add(acc, mult_apply(p.B.mult, rA_i_u, beta_t));
                    acc = sub(acc, act(p.rA, rB_t_i, beta_u));
                    acc = sub(acc, mult_apply(p.B.mult, beta_u, lA_i_t));
                    mp5.expect_zero({i, u, t}, acc);
                }
            }

    Condition mp3("mp3", opt), mp4("mp4", opt), mp6("mp6", opt);
    for (int u = 0; u < nB; ++u)
        for (int i = 0; i < nA; ++i)
            for (int j = 0; j < nA; ++j) {
                const Vec aij = mult_basis(p.A.mult, i, j); // x.y
                const Vec alpha_i = mat_col(alpha, i);
                const Vec alpha_j = mat_col(alpha, j);
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
                    const Vec rhs = add(act(p.lB, rA_i_u, alpha_j),
                                        mult_apply(p.A.mult, lB_u_i, alpha_j));
                    mp3.expect_zero({u, i, j}, sub(lhs, rhs));
                }
                {
                    const Vec lhs = mat_apply(rbB[static_cast<std::size_t>(u)], aij);
                    const Vec rhs = add(act(p.rB, lA_j_u, alpha_i),
                                        mult_apply(p.A.mult, alpha_i, rB_u_j));
                    mp4.expect_zero({u, i, j}, sub(lhs, rhs));
                }
                {
                    Vec acc = act(p.lB, lA_i_u, alpha_j);
                    acc = add(acc, mult_apply(p.A.mult, rB_u_i, alpha_j));
                    acc = sub(acc, act(p.rB, rA_j_u, alpha_i));
                    acc = sub(acc, mult_apply(p.A.mult, alpha_i, lB_u_j));
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

HomAlgebra bicrossed_sum(const HomMatchedPair& p, const CheckOptions& opt) {
    const CheckReport rep = check_matched_pair(p, opt);
    if (!rep.ok)
        throw CheckFailure("bicrossed sum requires a matched pair", rep);
    HomAlgebra out;
    out.dim = p.A.dim + p.B.dim;
    out.mult = bicrossed_mult(p.A.mult, p.B.mult, p.lA, p.rA, p.lB, p.rB);
    out.alpha = block_diag(p.A.alpha, p.B.alpha);
    return out;
}

HomAlgebra yau_twist(const HomAlgebra& a, const Mat& beta) {
    validate(a);
    require(beta.rows == a.dim && beta.cols == a.dim,
            "twisting morphism shape differs from algebra dimension");
    HomAlgebra out;
    out.dim = a.dim;
    out.mult = MultTensor(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            const Vec col = mat_apply(beta, mult_basis(a.mult, i, j));
            for (int k = 0; k < a.dim; ++k) out.mult.at(i, j, k) = col[static_cast<std::size_t>(k)];
        }
    out.alpha = mat_mul(beta, a.alpha);
    return out;
}

MultTensor bicrossed_mult(const MultTensor& mult_a, const MultTensor& mult_b,
                          const ActionFamily& lA, const ActionFamily& rA,
                          const ActionFamily& lB, const ActionFamily& rB) {
    const int nA = mult_a.dim;
    const int nB = mult_b.dim;
    validate_actions(lA, nA, nB);
    validate_actions(rA, nA, nB);
    validate_actions(lB, nB, nA);
    validate_actions(rB, nB, nA);

    MultTensor out(nA + nB);
    for (int i = 0; i < nA; ++i)
        for (int j = 0; j < nA; ++j)
            for (int k = 0; k < nA; ++k) out.at(i, j, k) = mult_a.at(i, j, k);
    for (int u = 0; u < nB; ++u)
        for (int t = 0; t < nB; ++t)
            for (int s = 0; s < nB; ++s) out.at(nA + u, nA + t, nA + s) = mult_b.at(u, t, s);
    // e_i (x+0) times f_t (0+b): rB(b)x + lA(x)b
    for (int i = 0; i < nA; ++i)
        for (int t = 0; t < nB; ++t) {
            for (int k = 0; k < nA; ++k)
                out.at(i, nA + t, k) = rB[static_cast<std::size_t>(t)].at(k, i);
            for (int s = 0; s < nB; ++s)
                out.at(i, nA + t, nA + s) = lA[static_cast<std::size_t>(i)].at(s, t);
        }
    // f_u (0+a) times e_j (y+0): lB(a)y + rA(y)a
    for (int u = 0; u < nB; ++u)
        for (int j = 0; j < nA; ++j) {
            for (int k = 0; k < nA; ++k)
                out.at(nA + u, j, k) = lB[static_cast<std::size_t>(u)].at(k, j);
            for (int s = 0; s < nB; ++s)
                out.at(nA + u, j, nA + s) = rA[static_cast<std::size_t>(j)].at(s, u);
        }
    return out;
}

} // namespace wb
