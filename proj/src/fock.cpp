#include "tv/fock.hpp"

#include <algorithm>

namespace tv {

std::optional<std::pair<int, Partition>> move_mode(const Partition& lam, int from,
                                                   int to) {
    int N = lam.length() + std::abs(from) + std::abs(to) + 4;
    std::vector<int> modes(N);
    for (int i = 1; i <= N; ++i) modes[i - 1] = i - 1 - lam.part(i);

    auto it = std::find(modes.begin(), modes.end(), from);
    if (it == modes.end()) return std::nullopt;
    if (from == to) return std::make_pair(1, lam);
    if (std::find(modes.begin(), modes.end(), to) != modes.end())
        return std::nullopt;

    int sign = ((it - modes.begin()) % 2 == 0) ? 1 : -1;  // (-1)^{pos-1}, pos 1-based
    modes.erase(it);
    auto ins = std::lower_bound(modes.begin(), modes.end(), to);
    if ((ins - modes.begin()) % 2 != 0) sign = -sign;
    modes.insert(ins, to);

    std::vector<int> parts(N);
    for (int i = 1; i <= N; ++i) parts[i - 1] = i - 1 - modes[i - 1];
    return std::make_pair(sign, Partition(std::move(parts)));
}

long eigen_L0(const Partition& lam) { return lam.size(); }
long eigen_W0(const Partition& lam) { return lam.kappa() + lam.size(); }
long eigen_K(const Partition& lam) { return lam.kappa(); }

std::vector<std::pair<int, Partition>> apply_J(int m, const Partition& lam) {
    // J_m moves one particle from mode r to mode r + m, for every occupied r
    std::vector<std::pair<int, Partition>> out;
    int N = lam.length() + std::abs(m) + 2;
    for (int i = 1; i <= N; ++i) {
        int r = i - 1 - lam.part(i);
        if (auto mv = move_mode(lam, r, r + m)) out.push_back(*mv);
    }
    return out;
}

USeries eigen_V0(int k, const Partition& lam) {
    USeries r;
    for (int i = 1; i <= lam.length(); ++i) {
        r.add_term(2 * k * (lam.part(i) - i + 1), Mono::one(), 1);
        r.add_term(2 * k * (1 - i), Mono::one(), -1);
    }
    return r;
}

FockVec apply_V(int k, int m, const Partition& lam, const Cutoffs& ctx) {
    FockVec out;
    if (m == 0) {
        out[lam] = eigen_V0(k, lam);
        return out;
    }
    int N = lam.length() + std::abs(m) + 2;
    for (int i = 1; i <= N; ++i) {
        int r = i - 1 - lam.part(i);
        auto mv = move_mode(lam, r, r + m);
        if (!mv) continue;
        USeries w = USeries::term(mv->first, Mono::one(), -2 * k * r - k * m);
        auto& slot = out[mv->second];
        slot = add(slot, w);
    }
    (void)ctx;
    return out;
}

GammaTok gamma_tok(bool primed, bool plus, const SpecVars& vars) {
    return GammaTok{primed, plus, vars};
}

namespace {

bool pure_u(const SpecVars& v) {
    for (const auto& h : v.heads)
        if (!h.mono.is_one()) return false;
    return true;
}

USeries gamma_elem(const GammaTok& g, const Partition& state, const Partition& next,
                   const Cutoffs& sctx) {
    const Partition& hi = g.plus ? next : state;
    const Partition& lo = g.plus ? state : next;
    if (g.primed) return skew_schur(hi.conjugate(), lo.conjugate(), g.vars, sctx);
    return skew_schur(hi, lo, g.vars, sctx);
}

USeries diag_weight(const Token& tok, const Partition& nu, const USeries& amp,
                    const Cutoffs& ctx) {
    if (const auto* dq = std::get_if<DiagQTok>(&tok)) {
        Int c = (dq->sign < 0 && nu.size() % 2 != 0) ? -1 : 1;
        return mul(amp, USeries::term(c, dq->mono.pow(nu.size()), 0), ctx);
    }
    if (const auto* dk = std::get_if<DiagKTok>(&tok))
        return mul_mono(amp, Mono::one(), (int)(dk->half * nu.kappa()));
    const auto& ve = std::get<VExpTok>(tok);
    USeries eig = ve.block == 1
                      ? double_product(ve.mono, ve.beta, nu, +1, ctx)
                      : double_product(ve.mono, nu.conjugate(), ve.beta.conjugate(),
                                       +1, ctx);
    return mul(amp, eig, ctx);
}

}  // namespace

USeries evaluate_word(const std::vector<Token>& word, const Partition& bra,
                      const Partition& ket, const Cutoffs& ctx,
                      const EvalOptions& opts) {
    // split the word into vertex-operator groups and the diagonal gaps
    std::vector<GammaTok> gammas;
    std::vector<std::vector<Token>> gaps(1);
    for (const auto& tok : word) {
        if (const auto* g = std::get_if<GammaTok>(&tok)) {
            gammas.push_back(*g);
            gaps.emplace_back();
        } else {
            gaps.back().push_back(tok);
        }
    }
    int G = (int)gammas.size();

    auto gap_unit_q = [&](int g) {
        int u = 0;
        for (const auto& tok : gaps[g])
            if (const auto* dq = std::get_if<DiagQTok>(&tok)) u += dq->mono.qdeg();
        return u;
    };
    if (!opts.max_intermediate) {
        for (int g = 1; g < G; ++g) {
            int net = 0;
            for (const auto& tok : gaps[g])
                if (const auto* dk = std::get_if<DiagKTok>(&tok)) net += dk->half;
            if (net != 0)
                throw UncertifiableTruncation(
                    "evaluate_word: gap " + std::to_string(g) +
                    " carries a net q^{" + std::to_string(net) +
                    "K/2}; the Kaehler grading alone does not certify a "
                    "u-window (pass an intermediate-size cutoff to force "
                    "bounded evaluation)");
        }
    }

    FockVec front;
    front[bra] = USeries::one();
    auto apply_gap = [&](int g) {
        for (const auto& tok : gaps[g])
            for (auto& [nu, amp] : front) amp = diag_weight(tok, nu, amp, ctx);
    };

    apply_gap(0);
    int qcap_clamp = kExact;
    for (int gi = 0; gi < G; ++gi) {
        const GammaTok& g = gammas[gi];
        Cutoffs sctx = pure_u(g.vars) ? Cutoffs{ctx.umax, kExact, kExact} : ctx;
        bool last = (gi == G - 1);
        FockVec next;
        if (!g.plus) {
            for (const auto& [nu, amp] : front) {
                if (amp.is_zero()) continue;
                for (const auto& nup : subpartitions(nu)) {
                    if (last && !(nup == ket)) continue;
                    USeries e = gamma_elem(g, nu, nup, sctx);
                    if (e.is_zero()) continue;
                    auto& slot = next[nup];
                    slot = add(slot, mul(amp, e, ctx));
                }
            }
        } else if (last) {
            for (const auto& [nu, amp] : front) {
                if (amp.is_zero() || !ket.contains(nu)) continue;
                auto& slot = next[ket];
                slot = add(slot, mul(amp, gamma_elem(g, nu, ket, sctx), ctx));
            }
        } else {
            int unit = gap_unit_q(gi + 1);
            // per-box Kaehler degree supplied by the raising operator's own
            // variables (tail variables carry none)
            int gunit = 0;
            if (!g.vars.has_tail && !g.vars.heads.empty()) {
                gunit = kExact;
                for (const auto& h : g.vars.heads)
                    gunit = std::min(gunit, h.mono.qdeg());
                gunit = std::max(gunit, 0);
            }
            int maxnu = 0;
            for (const auto& [nu, amp] : front)
                maxnu = std::max(maxnu, nu.size());
            int cap;
            if (opts.max_intermediate) {
                cap = *opts.max_intermediate;
                if (unit > 0) cap = std::min(cap, ctx.qmax / unit);
                qcap_clamp = std::min(qcap_clamp, cap * std::max(unit, 1));
            } else if (unit > 0) {
                cap = ctx.qmax / unit;
            } else if (unit == 0 && gunit > 0) {
                cap = maxnu + ctx.qmax / gunit;
            } else {
                throw UncertifiableTruncation(
                    "evaluate_word: raising vertex operator " +
                    std::to_string(gi + 1) +
                    " is followed by a gap without positive Kaehler degree");
            }
            for (const auto& cand : partitions_up_to(cap)) {
                for (const auto& [nu, amp] : front) {
                    if (amp.is_zero() || !cand.contains(nu)) continue;
                    USeries e = gamma_elem(g, nu, cand, sctx);
                    if (e.is_zero()) continue;
                    auto& slot = next[cand];
                    slot = add(slot, mul(amp, e, ctx));
                }
            }
        }
        front = std::move(next);
        apply_gap(gi + 1);
    }

    auto it = front.find(ket);
    USeries r = it == front.end() ? USeries::zero() : it->second;
    r.clamp_certificates(ctx.umax, std::min(ctx.qmax, qcap_clamp), ctx.xmax);
    return r;
}

}  // namespace tv
