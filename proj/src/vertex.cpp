#include "tv/vertex.hpp"

#include <stdexcept>

namespace tv {

USeries vertex(const Partition& lam, const Partition& mu, const Partition& nu,
               const Cutoffs& ctx) {
    Partition tl = lam.conjugate(), tn = nu.conjugate();
    SpecVars v1 = SpecVars::shifted(nu), v2 = SpecVars::shifted(tn);
    USeries sum = USeries::zero();
    for (const auto& eta : subpartitions(intersect(tl, mu)))
        sum = add(sum, mul(skew_schur(tl, eta, v1, ctx),
                           skew_schur(mu, eta, v2, ctx), ctx));
    USeries r = mul(schur_principal(tn, ctx), sum, ctx);
    return mul_mono(r, Mono::one(), (int)mu.kappa());
}

int framing_number(Vec2 v, Vec2 w, Vec2 vp, Vec2 wp) {
    Vec2 e = -(v + w), ep = -(vp + wp);
    if (!(e + ep == Vec2{0, 0}))
        throw std::invalid_argument("framing_number: edge directions not opposite");
    long n1 = vp.wedge(v), n2 = wp.wedge(w);
    if (n1 != n2) throw std::invalid_argument("framing_number: inconsistent wedges");
    return (int)n1;
}

USeries edge_weight(const Mono& Qm, int n, const Partition& lam) {
    int sz = lam.size();
    Int sign = ((long)(n + 1) * sz) % 2 == 0 ? 1 : -1;
    return USeries::term(sign, Qm.pow(sz), (int)(-(long)n * lam.kappa()));
}

}  // namespace tv
