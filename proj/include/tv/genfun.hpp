#pragma once

#include "tv/ring.hpp"

#include <utility>
#include <vector>

namespace tv {

// Power series in the open string modulus x with USeries coefficients;
// entry k is the coefficient of x^k (coefficients carry no X content).
using XSeries = std::vector<USeries>;

// Splits a USeries using the X variable into an XSeries of x-free
// coefficients, keeping x-degrees 0..xdeg.
XSeries split_x(const USeries& s, int xdeg);

// Generating functions of the amplitudes with beta1 a single column (1^k)
// (tilde = false) or single row (k) (tilde = true), beta2 empty:
//   psi:      sum_k Z_{beta1,empty} x^k / Z_{empty,empty}   (coefficients a_k)
//   y_ratio:  sum_k Y_{beta1,empty} x^k / Y_{empty,empty}   (coefficients b_k)
XSeries psi_series(bool tilde, int xdeg, const Cutoffs& ctx);
XSeries y_ratio_series(bool tilde, int xdeg, const Cutoffs& ctx);

// The same generating functions from their quantum-dilogarithm products:
//   phi(x)       = prod_{i>=1} (1-Q1 q^{i-1/2}x)(1-Q1Q2Q3 q^{i-1/2}x)
//                              / ((1-q^{i-1/2}x)(1-Q1Q3 q^{i-1/2}x)),
//   phi_tilde(x) = prod_{i>=1} (1+q^{i-1/2}x)(1+Q1Q3 q^{i-1/2}x)
//                              / ((1+Q1 q^{i-1/2}x)(1+Q1Q2Q3 q^{i-1/2}x)).
XSeries phi_series(int xdeg, const Cutoffs& ctx);
XSeries phi_tilde_series(int xdeg, const Cutoffs& ctx);

// a_k = b_k prod_{i=1}^k (1 - Q1Q2 q^{i-1})^{-1}   (tilde: q^{1-i}).
XSeries psi_from_phi(bool tilde, const XSeries& b, const Cutoffs& ctx);

// q-difference operator: finite sum of coeff * x^xpow * q^{shift * x d/dx},
// acting on x^k as coeff * u^{2*shift*k} x^{k+xpow}.
struct QDiffTerm {
    int xpow;
    int shift;
    USeries coeff;  // exact Laurent polynomial in u and the Kaehler variables
};

struct QDiffOp {
    std::vector<QDiffTerm> terms;
};

QDiffOp qd_term(int xpow, int shift, const USeries& coeff);
QDiffOp qd_add(const QDiffOp& a, const QDiffOp& b);
QDiffOp qd_sub(const QDiffOp& a, const QDiffOp& b);
// (a o b) f = a (b f); the shift in a picks up u^{2 shift_a xpow_b} against
// the x-power in b.
QDiffOp qd_compose(const QDiffOp& a, const QDiffOp& b);
// canonical form: sorted by (xpow, shift), coefficients merged, zeros dropped
QDiffOp qd_normalize(const QDiffOp& op);
bool qd_equal(const QDiffOp& a, const QDiffOp& b);

XSeries apply_qdiff(const QDiffOp& op, const XSeries& f, const Cutoffs& ctx);

// The q-difference operators annihilating psi (H, K) and psi_tilde (Ht, Kt),
// together with the factorizations H = (1 - Q1Q2 q^{-2} S) K and
// Ht = (1 - Q1Q2 q^2 S^{-1}) Kt (S = q^{x d/dx}).
struct QDiffOperators {
    QDiffOp H, K, Ht, Kt;
    QDiffOp factorH;   // 1 - Q1Q2 q^{-2} S
    QDiffOp factorHt;  // 1 - Q1Q2 q^2 S^{-1}
};
QDiffOperators build_operators();

// The rewritten two-term factorized forms of the same equations:
//   remark_form_H  = (1 - Q1Q2 q^{-2}S - Q1 q^{1/2}x)
//                    (1 - Q1Q2 q^{-1}S - Q1Q2Q3 q^{1/2}x) S
//                    - (1 - Q1Q2 q^{-2}S - q^{1/2}x)
//                      (1 - Q1Q2 q^{-1}S - Q1Q3 q^{1/2}x),
// which equals -H identically; remark_form_Ht is the analogous pair with
// S~ = S^{-1} and q^{-1/2} coefficients with flipped signs, and equals the
// conjugate -S~ Ht S~^{-1} (the same equation for psi_tilde, shifted once).
QDiffOp remark_form_H();
QDiffOp remark_form_Ht();

// Classical limit u -> 1, q^{+-x d/dx} -> y^{+-1}: Laurent polynomial in
// (x, y) with CoeffPoly coefficients, keyed by (x-power, y-power).
using XYPoly = std::map<std::pair<int, int>, CoeffPoly>;
XYPoly classical_limit(const QDiffOp& op);

// Vertices of the Newton polygon (convex hull of the support), in
// counterclockwise order starting from the lexicographically smallest point.
std::vector<std::pair<int, int>> newton_polygon(const XYPoly& p);

}  // namespace tv
