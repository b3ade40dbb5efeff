#include "tv/strip.hpp"

#include "tv/schur.hpp"

#include <stdexcept>

namespace tv {

Partition beta_eff(const StripData& s, int n) {
    return s.sigma[n - 1] > 0 ? s.beta[n - 1] : s.beta[n - 1].conjugate();
}

static void validate(const StripData& s) {
    size_t N = s.sigma.size();
    if (N == 0 || s.beta.size() != N || s.Q.size() + 1 != N)
        throw std::invalid_argument("strip: inconsistent data sizes");
    for (int v : s.sigma)
        if (v != 1 && v != -1) throw std::invalid_argument("strip: sigma must be +-1");
}

std::vector<Token> strip_word(const StripData& s) {
    validate(s);
    int N = (int)s.sigma.size();
    std::vector<Token> w;
    for (int n = 1; n <= N; ++n) {
        bool primed = s.sigma[n - 1] < 0;
        Partition b = beta_eff(s, n);
        w.push_back(gamma_tok(primed, false, SpecVars::shifted(b)));
        w.push_back(gamma_tok(primed, true, SpecVars::shifted(b.conjugate())));
        if (n < N)
            w.push_back(DiagQTok{s.sigma[n - 1] * s.sigma[n], s.Q[n - 1]});
    }
    return w;
}

USeries strip_fermionic(const StripData& s, const Cutoffs& ctx) {
    validate(s);
    int N = (int)s.sigma.size();
    USeries vev = evaluate_word(strip_word(s), s.alpha0.conjugate(), s.alphaN, ctx);
    long pre = 0;  // u-exponent of q^{(1-s1)k(a0)/4} q^{(1+sN)k(aN)/4}
    pre += (1 - s.sigma[0]) / 2 * s.alpha0.kappa();
    pre += (1 + s.sigma[N - 1]) / 2 * s.alphaN.kappa();
    USeries r = mul_mono(vev, Mono::one(), (int)pre);
    for (int n = 1; n <= N; ++n)
        r = mul(r, schur_principal(s.beta[n - 1].conjugate(), ctx), ctx);
    return r;
}

USeries strip_closed(const StripData& s, const Cutoffs& ctx) {
    validate(s);
    if (!s.alpha0.empty() || !s.alphaN.empty())
        throw std::invalid_argument("strip_closed: requires empty end partitions");
    int N = (int)s.sigma.size();
    USeries r = USeries::one();
    for (int n = 1; n <= N; ++n)
        r = mul(r, schur_principal(s.beta[n - 1].conjugate(), ctx), ctx);
    for (int m = 1; m < N; ++m) {
        for (int n = m + 1; n <= N; ++n) {
            Mono Qmn = Mono::one();
            for (int l = m; l < n; ++l) Qmn = Qmn * s.Q[l - 1];
            int es = -s.sigma[m - 1] * s.sigma[n - 1];
            r = mul(r,
                    double_product(Qmn, beta_eff(s, m).conjugate(), beta_eff(s, n),
                                   es, ctx),
                    ctx);
        }
    }
    return r;
}

}  // namespace tv
