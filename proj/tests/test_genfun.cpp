#include "doctest.h"

#include "tv/genfun.hpp"
#include "tv/partition.hpp"
#include "tv/ring.hpp"

using namespace tv;

namespace {
const Cutoffs kCtx{12, 3};
const int kXdeg = 6;

USeries uterm(Int c, const Mono& m, int a) { return USeries::term(std::move(c), m, a); }

void check_zero(const USeries& s, const std::string& what) {
    auto mm = first_mismatch(s, USeries::zero(), kCtx);
    if (mm) FAIL((what + ": " + mm->to_string()));
}

void check_equal(const USeries& a, const USeries& b, const std::string& what) {
    auto mm = first_mismatch(a, b, kCtx);
    if (mm) FAIL((what + ": " + mm->to_string()));
}

const Mono kQ1 = Mono::var(Q1);
const Mono kQ12 = Mono::var(Q1) * Mono::var(Q2);
const Mono kQ13 = Mono::var(Q1) * Mono::var(Q3);
const Mono kQ123 = kQ12 * Mono::var(Q3);
}  // namespace

TEST_CASE("q-difference algebra") {
    QDiffOp S = qd_term(0, 1, USeries::one());
    QDiffOp Xop = qd_term(1, 0, USeries::one());
    // S x = q x S
    CHECK(qd_equal(qd_compose(S, Xop), qd_term(1, 1, uterm(1, Mono::one(), 2))));
    // normalization merges and drops zeros
    QDiffOp zero = qd_sub(qd_compose(S, Xop), qd_compose(S, Xop));
    CHECK(qd_normalize(zero).terms.empty());
    // S acting on x^2
    XSeries f(3, USeries::zero());
    f[2] = USeries::one();
    XSeries g = apply_qdiff(S, f, kCtx);
    REQUIRE(g.size() >= 3);
    check_equal(g[2], uterm(1, Mono::one(), 4), "S x^2");
    // x * shift composition applied two ways
    XSeries h1 = apply_qdiff(qd_compose(S, Xop), f, kCtx);
    XSeries h2 = apply_qdiff(S, apply_qdiff(Xop, f, kCtx), kCtx);
    for (size_t k = 0; k < h1.size() && k < h2.size(); ++k)
        check_equal(h1[k], h2[k], "compose consistency");
}

TEST_CASE("column and row generating functions match their infinite products") {
    for (bool tilde : {false, true}) {
        XSeries prod = tilde ? phi_tilde_series(kXdeg, kCtx) : phi_series(kXdeg, kCtx);
        XSeries ratio = y_ratio_series(tilde, kXdeg, kCtx);
        REQUIRE(prod.size() == ratio.size());
        for (size_t k = 0; k < prod.size(); ++k)
            check_equal(prod[k], ratio[k],
                        (tilde ? std::string("tilde") : std::string("plain")) +
                            " x^" + std::to_string(k));
    }
}

TEST_CASE("first coefficient in closed form") {
    // b_1 = (1 + Q1Q3 - Q1 - Q1Q2Q3) u / (1 - u^2)
    USeries num = add(sub(USeries::one(), uterm(1, kQ1, 0)),
                      sub(uterm(1, kQ13, 0), uterm(1, kQ123, 0)));
    USeries b1 = mul(mul_mono(num, Mono::one(), 1),
                     geom_inverse(1, Mono::one(), 2, kCtx), kCtx);
    check_equal(y_ratio_series(false, 1, kCtx)[1], b1, "b_1");
}

TEST_CASE("normalized amplitudes from the operator ratio") {
    for (bool tilde : {false, true}) {
        XSeries a = psi_series(tilde, kXdeg, kCtx);
        XSeries b = psi_from_phi(tilde, y_ratio_series(tilde, kXdeg, kCtx), kCtx);
        REQUIRE(a.size() == b.size());
        for (size_t k = 0; k < a.size(); ++k)
            check_equal(a[k], b[k],
                        (tilde ? std::string("tilde") : std::string("plain")) +
                            " x^" + std::to_string(k));
    }
}

TEST_CASE("three-term recursions of the coefficients") {
    XSeries b = y_ratio_series(false, 4, kCtx);
    XSeries a = psi_series(false, 4, kCtx);
    auto at = [](const XSeries& f, int k) {
        return (k < 0 || k >= (int)f.size()) ? USeries::zero() : f[k];
    };
    USeries c13 = add(USeries::one(), uterm(1, kQ13, 0));            // 1 + Q1Q3
    USeries c123 = add(uterm(1, kQ1, 0), uterm(1, kQ123, 0));        // Q1 + Q1Q2Q3
    for (int k = 1; k <= 4; ++k) {
        // q^k b_k - (Q1 + Q1Q2Q3) q^{1/2} q^{k-1} b_{k-1}
        //         + Q1^2 Q2 Q3 q q^{k-2} b_{k-2}
        //   = b_k - (1 + Q1Q3) q^{1/2} b_{k-1} + Q1Q3 q b_{k-2}
        USeries lhs = mul_mono(at(b, k), Mono::one(), 2 * k);
        lhs = sub(lhs, mul_mono(mul(c123, at(b, k - 1), kCtx), Mono::one(),
                                2 * k - 1));
        lhs = add(lhs, mul_mono(at(b, k - 2), kQ1 * kQ123, 2 * k - 2));
        USeries rhs = at(b, k);
        rhs = sub(rhs, mul_mono(mul(c13, at(b, k - 1), kCtx), Mono::one(), 1));
        rhs = add(rhs, mul_mono(at(b, k - 2), kQ13, 2));
        check_equal(lhs, rhs, "b-recursion k=" + std::to_string(k));

        // same with the column amplitudes a_k, dressed by
        // A_k = 1 - Q1Q2 q^{k-2}, B_k = 1 - Q1Q2 q^{k-1}
        USeries Ak = sub(USeries::one(), uterm(1, kQ12, 2 * (k - 2)));
        USeries Bk = sub(USeries::one(), uterm(1, kQ12, 2 * (k - 1)));
        USeries AB = mul(Ak, Bk, kCtx);
        USeries lhs2 = mul_mono(mul(AB, at(a, k), kCtx), Mono::one(), 2 * k);
        lhs2 = sub(lhs2, mul_mono(mul(Ak, mul(c123, at(a, k - 1), kCtx), kCtx),
                                  Mono::one(), 2 * k - 1));
        lhs2 = add(lhs2, mul_mono(at(a, k - 2), kQ1 * kQ123, 2 * k - 2));
        USeries rhs2 = mul(AB, at(a, k), kCtx);
        rhs2 = sub(rhs2, mul_mono(mul(Ak, mul(c13, at(a, k - 1), kCtx), kCtx),
                                  Mono::one(), 1));
        rhs2 = add(rhs2, mul_mono(at(a, k - 2), kQ13, 2));
        check_equal(lhs2, rhs2, "a-recursion k=" + std::to_string(k));
    }
}

TEST_CASE("the q-difference operators annihilate the generating functions") {
    QDiffOperators ops = build_operators();
    XSeries psi = psi_series(false, kXdeg, kCtx);
    XSeries psit = psi_series(true, kXdeg, kCtx);
    // The row (tilde) operators annihilate the shifted series f(qx), not
    // f(x): composing with the forward shift S on the right makes the
    // residual vanish, as the column/row functional equations require.
    QDiffOp S = qd_term(0, 1, USeries::one());
    QDiffOp HtS = qd_compose(ops.Ht, S);
    QDiffOp KtS = qd_compose(ops.Kt, S);
    for (const auto& [op, f, name] :
         std::vector<std::tuple<const QDiffOp*, const XSeries*, const char*>>{
             {&ops.H, &psi, "H psi"},
             {&ops.K, &psi, "K psi"},
             {&HtS, &psit, "Ht.S psi~"},
             {&KtS, &psit, "Kt.S psi~"}}) {
        XSeries out = apply_qdiff(*op, *f, kCtx);
        for (size_t k = 0; k < out.size() && k + 2 <= (size_t)kXdeg; ++k)
            check_zero(out[k], std::string(name) + " x^" + std::to_string(k));
    }
}

TEST_CASE("factorized forms") {
    QDiffOperators ops = build_operators();
    CHECK(qd_equal(ops.H, qd_compose(ops.factorH, ops.K)));
    CHECK(qd_equal(ops.Ht, qd_compose(ops.factorHt, ops.Kt)));
    QDiffOp zero;
    CHECK(qd_equal(remark_form_H(), qd_sub(zero, ops.H)));
    // the rewritten tilde form is the tilde equation shifted once:
    // remark_form_Ht = -S~ Ht S~^{-1}
    QDiffOp St = qd_term(0, -1, USeries::one());
    QDiffOp Sti = qd_term(0, 1, USeries::one());
    CHECK(qd_equal(remark_form_Ht(),
                   qd_sub(zero, qd_compose(St, qd_compose(ops.Ht, Sti)))));
}

TEST_CASE("classical limit and Newton polygon") {
    QDiffOperators ops = build_operators();
    XYPoly K_cl = classical_limit(ops.K);
    // (1 - Q1Q2 y)(1 - y) - (1 + Q1Q3) x + Q1(1 + Q2Q3) x y + Q1Q3 x^2
    XYPoly want;
    want[{0, 0}][Mono::one()] = 1;
    want[{0, 1}][Mono::one()] = -1;
    want[{0, 1}][kQ12] = -1;
    want[{0, 2}][kQ12] = 1;
    want[{1, 0}][Mono::one()] = -1;
    want[{1, 0}][kQ13] = -1;
    want[{1, 1}][kQ1] = 1;
    want[{1, 1}][kQ123] = 1;
    want[{2, 0}][kQ13] = 1;
    CHECK(K_cl == want);
    std::vector<std::pair<int, int>> tri{{0, 0}, {2, 0}, {0, 2}};
    CHECK(newton_polygon(K_cl) == tri);
    // the tilde curve is the same triangle reflected through y -> y^{-1}
    XYPoly Kt_cl = classical_limit(ops.Kt);
    CHECK(Kt_cl.count({0, -2}) == 1);
    CHECK(Kt_cl.at({1, 0}).at(kQ13) == 1);
    std::vector<std::pair<int, int>> trit{{0, -2}, {2, 0}, {0, 0}};
    CHECK(newton_polygon(Kt_cl) == trit);
}
