#include "tv/ctv.hpp"

#include "tv/schur.hpp"

#include <algorithm>

namespace tv {

namespace {

const SpecVars& rho() {
    static const SpecVars v = SpecVars::principal();
    return v;
}

}  // namespace

USeries double_p1(const Partition& b1, const Partition& b2, const Partition& a3,
                  const Cutoffs& ctx) {
    StripData s;
    s.sigma = {-1, +1, -1};
    s.beta = {b1, a3, b2};
    s.Q = {Mono::var(Q1), Mono::var(Q2)};
    return strip_closed(s, ctx);
}

USeries ctv_bruteforce(const Partition& b1, const Partition& b2,
                       const Cutoffs& ctx) {
    USeries z = USeries::zero();
    for (const Partition& a3 : partitions_up_to(ctx.qmax)) {
        // edge weight (-Q3)^{|a3|} at framing 0, one-leg vertex s_{a3}(q^-rho)
        USeries t = mul(double_p1(b1, b2, a3, ctx), schur_principal(a3, ctx), ctx);
        t = mul_mono(t, Mono::var(Q3, a3.size()), 0);
        if (a3.size() % 2 != 0) t = neg(t);
        z = add(z, t);
    }
    z.clamp_certificates(ctx.umax, ctx.qmax, ctx.xmax);
    return z;
}

USeries ctv_Y(const Partition& b1, const Partition& b2, const Cutoffs& ctx) {
    StripData s;
    s.sigma = {+1, -1, +1, -1};
    s.beta.assign(4, Partition());
    s.Q = {Mono::var(Q1), Mono::var(Q3), Mono::var(Q2)};
    s.alpha0 = b1;
    s.alphaN = b2.conjugate();
    return strip_fermionic(s, ctx);
}

USeries ctv_closed(const Partition& b1, const Partition& b2, const Cutoffs& ctx) {
    USeries z = mul(double_product(Mono::var(Q1) * Mono::var(Q2), b1,
                                   b2.conjugate(), -1, ctx),
                    ctv_Y(b1, b2, ctx), ctx);
    return mul_mono(z, Mono::one(), (int)b2.kappa());
}

USeries ctv_intermediate(const Partition& b1, const Partition& b2,
                         const Cutoffs& ctx) {
    std::vector<Token> w = {
        gamma_tok(false, false, rho()), gamma_tok(false, true, rho()),
        DiagKTok{+1}, DiagQTok{-1, Mono::var(Q1)}, DiagKTok{-1},
        gamma_tok(true, false, rho()), gamma_tok(true, true, rho()),
        DiagQTok{-1, Mono::var(Q3)},
        gamma_tok(false, false, rho()), gamma_tok(false, true, rho()),
        DiagKTok{+1}, DiagQTok{-1, Mono::var(Q2)}, DiagKTok{-1},
        gamma_tok(true, false, rho()), gamma_tok(true, true, rho())};
    USeries y = evaluate_word(w, b1.conjugate(), b2.conjugate(), ctx);
    USeries z = mul(double_product(Mono::var(Q1) * Mono::var(Q2), b1,
                                   b2.conjugate(), -1, ctx),
                    y, ctx);
    return mul_mono(z, Mono::one(), (int)b2.kappa());
}

USeries ctv_med(const Partition& b1, const Partition& b2, const Cutoffs& ctx,
                const EvalOptions& opts) {
    std::vector<Token> w = {
        gamma_tok(true, true, SpecVars::shifted(b1)),
        DiagQTok{-1, Mono::var(Q1)}, DiagKTok{-1},
        gamma_tok(true, false, rho()), gamma_tok(true, true, rho()),
        DiagQTok{-1, Mono::var(Q3)},
        gamma_tok(false, false, rho()), gamma_tok(false, true, rho()),
        DiagKTok{+1}, DiagQTok{-1, Mono::var(Q2)},
        gamma_tok(false, false, SpecVars::shifted(b2.conjugate()))};
    USeries v = evaluate_word(w, Partition(), Partition(), ctx, opts);
    USeries z = mul(schur_principal(b1.conjugate(), ctx),
                    schur_principal(b2.conjugate(), ctx), ctx);
    z = mul(z, double_product(Mono::var(Q1) * Mono::var(Q2), b1, b2.conjugate(),
                              -1, ctx),
            ctx);
    return mul(z, v, ctx);
}

USeries flop_double_p1(const Partition& b1, const Partition& b2,
                       const Partition& a3, const Cutoffs& ctx) {
    StripData s;
    s.sigma = {+1, -1, -1};
    s.beta = {a3, b1, b2};
    s.Q = {Mono::var(P1), Mono::var(P2)};
    return strip_closed(s, ctx);
}

USeries flop_bruteforce(const Partition& b1, const Partition& b2,
                        const Cutoffs& ctx) {
    USeries z = USeries::zero();
    for (const Partition& a3 : partitions_up_to(ctx.qmax)) {
        // edge weight (-P3)^{|a3|}, framing-1 factor (-1)^{|a3|} q^{-kappa/2},
        // one-leg vertex s_{a3}(q^-rho); the two signs cancel.
        USeries t =
            mul(flop_double_p1(b1, b2, a3, ctx), schur_principal(a3, ctx), ctx);
        t = mul_mono(t, Mono::var(P3, a3.size()), -(int)a3.kappa());
        z = add(z, t);
    }
    z.clamp_certificates(ctx.umax, ctx.qmax, ctx.xmax);
    return z;
}

USeries flop_closed(const Partition& b1, const Partition& b2,
                    const Cutoffs& ctx) {
    StripData s;
    s.sigma = {-1, +1, +1, -1};
    s.beta.assign(4, Partition());
    s.Q = {Mono::var(P1), Mono::var(P3), Mono::var(P1) * Mono::var(P2)};
    s.alpha0 = b1;
    s.alphaN = b2.conjugate();
    // the strip prefactor supplies q^{kappa(b1)/2}
    USeries z = mul(double_product(Mono::var(P2), b1, b2.conjugate(), -1, ctx),
                    strip_fermionic(s, ctx), ctx);
    return mul_mono(z, Mono::one(), (int)b2.kappa());
}

std::vector<Token> flop_bis_word(const Partition& b1, const Partition& b2) {
    return {gamma_tok(true, false, rho()),
            gamma_tok(true, true, rho()),
            DiagQTok{+1, Mono::var(P3)},
            gamma_tok(true, false, rho()),
            gamma_tok(true, true, rho()),
            DiagKTok{-1},
            DiagQTok{-1, Mono::var(P1)},
            gamma_tok(true, false, SpecVars::shifted(b1.conjugate())),
            gamma_tok(true, true, SpecVars::shifted(b1)),
            DiagQTok{+1, Mono::var(P2)},
            gamma_tok(true, false, SpecVars::shifted(b2.conjugate())),
            gamma_tok(true, true, SpecVars::shifted(b2))};
}

USeries flop_bis(const Partition& b1, const Partition& b2, const Cutoffs& ctx,
                 const EvalOptions& opts) {
    USeries v =
        evaluate_word(flop_bis_word(b1, b2), Partition(), Partition(), ctx, opts);
    USeries z = mul(schur_principal(b1.conjugate(), ctx),
                    schur_principal(b2.conjugate(), ctx), ctx);
    return mul(z, v, ctx);
}

std::optional<Mismatch> flop_match(const Partition& b1, const Partition& b2,
                                   int pdeg, int umax) {
    // Certification of the right hand side is done by hand here, because the
    // Kaehler substitution Q1 = P1^{-1}, Q2 = P1 P2, Q3 = P1 P3 is not
    // degree-preserving.  Writing a target monomial as P1^a P2^b P3^c with
    // a,b,c >= 0 and a+b+c <= pdeg, a contributing term of the unflopped
    // amplitude Q1^al Q2^be Q3^ga combines with a P1^k term of the conversion
    // factor prod(1-P1 q^{i+j-1}) prod(1-P1^{-1} q^{i+j-1})^{-1} and the
    // prefactor (-P1)^{|b1|} q^{kappa(b1)/2} so that
    //   b = be, c = ga, a = |b1| + k - al + be + ga,
    // hence al + be + ga = |b1| + k + 2(b+c) - a <= |b1| + kpos + 2*pdeg,
    // where kpos is the largest P1-degree the conversion factor reaches inside
    // the u-window that can pair with a term of the unflopped amplitude.
    // Window requests are grown until the returned certificates cover the
    // comparison region (the prefactors with negative u-exponents shrink them).
    int need_ut = umax + std::max(0, -(int)b1.kappa());

    // The unflopped amplitude is assembled by gluing over the third leg: that
    // leg's partition carries exactly the Q3-degree, which is <= pdeg for
    // every monomial in the comparison window, so the sum is capped at pdeg
    // while the Q1-direction keeps the wide window qmaxZ.  Each summand is a
    // closed-form product (no operator-word sums at large Kaehler degree).
    auto glue_z = [&](int w, int qmaxZ) {
        Cutoffs zc{w, qmaxZ, 1 << 20};
        USeries z = USeries::zero();
        for (const Partition& a3 : partitions_up_to(pdeg)) {
            USeries t =
                mul(double_p1(b1, b2, a3, zc), schur_principal(a3, zc), zc);
            t = mul_mono(t, Mono::var(Q3, a3.size()), 0);
            if (a3.size() % 2 != 0) t = neg(t);
            z = add(z, t);
        }
        z.clamp_certificates(w, qmaxZ, 1 << 20);
        return z;
    };

    USeries z, conv;
    int w = need_ut, qmaxZ = 2 * pdeg + b1.size() + 1;
    for (int iter = 0;; ++iter) {
        if (iter > 32) throw UncertifiableTruncation("flop_match: no window fit");
        z = glue_z(w, qmaxZ);
        if (z.utrunc() < need_ut) {
            w += need_ut - z.utrunc();
            continue;
        }
        // conversion terms at u-exponent e pair with amplitude rows down to
        // z.ulow(): e <= need_ut - min(0, z.ulow())
        int zlow = z.is_zero() ? 0 : std::min(0, z.ulow());
        Cutoffs cc{need_ut - zlow, kExact / 4, 1 << 20};
        conv = mul(double_product(Mono::var(P1), Partition(), Partition(), +1, cc),
                   double_product(Mono::var(P1).inverse(), Partition(),
                                  Partition(), -1, cc),
                   cc);
        int kpos = 0;
        for (const auto& [d, p] : conv.terms())
            for (const auto& [m, c] : p) kpos = std::max(kpos, m.qdeg());
        int q2 = 2 * pdeg + kpos + b1.size();
        if (q2 > qmaxZ) {
            qmaxZ = q2;
            continue;
        }
        break;
    }

    USeries zsub = substitute(
        z, {{Q1, SubstRule{1, Mono::var(P1).inverse()}},
            {Q2, SubstRule{1, Mono::var(P1) * Mono::var(P2)}},
            {Q3, SubstRule{1, Mono::var(P1) * Mono::var(P3)}}});

    // defeat the generic certificate bookkeeping (see above) and window the
    // product by hand: only rows that land at u-exponent <= umax and P-degree
    // <= pdeg after the (-P1)^{|b1|} q^{kappa/2} prefactor are ever compared.
    // (finite certificates so that mul's window caps actually apply)
    conv.set_certificates(kExact / 8, kExact / 8, kExact / 8);
    zsub.set_certificates(kExact / 8, kExact / 8, kExact / 8);
    USeries rhs = mul(conv, zsub,
                      Cutoffs{std::max(0, umax - (int)b1.kappa()), pdeg, 1 << 20});
    rhs = mul_mono(rhs, Mono::var(P1, b1.size()), (int)b1.kappa());
    if (b1.size() % 2 != 0) rhs = neg(rhs);

    USeries lhs;
    for (int wl = umax, iter = 0;; ++iter) {
        if (iter > 32) throw UncertifiableTruncation("flop_match: no window fit");
        lhs = flop_closed(b1, b2, Cutoffs{wl, pdeg, 1 << 20});
        if (lhs.utrunc() >= umax) break;
        wl += umax - lhs.utrunc();
    }

    auto in_target = [&](int d, const Mono& m) {
        if (d > umax || m.qdeg() > pdeg || m.xdeg() != 0) return false;
        for (int v = 0; v < kNumVars; ++v)
            if (m.e[v] < 0 || (v < P1 && m.e[v] > 0)) return false;
        return true;
    };
    std::map<int, std::map<Mono, std::pair<Int, Int>>> merged;
    auto collect = [&](const USeries& s, bool left) {
        for (const auto& [d, p] : s.terms())
            for (const auto& [m, c] : p)
                if (in_target(d, m)) (left ? merged[d][m].first
                                           : merged[d][m].second) = c;
    };
    collect(lhs, true);
    collect(rhs, false);
    for (const auto& [d, p] : merged)
        for (const auto& [m, pr] : p)
            if (pr.first != pr.second) return Mismatch{d, m, pr.first, pr.second};
    return std::nullopt;
}

}  // namespace tv
