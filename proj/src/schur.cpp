#include "tv/schur.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace tv {

SpecVars SpecVars::principal() {
    SpecVars v;
    v.has_tail = true;
    v.tail_start = 0;
    return v;
}

SpecVars SpecVars::shifted(const Partition& nu) {
    SpecVars v;
    for (int i = 1; i <= nu.length(); ++i)
        v.heads.push_back({Int(1), Mono::one(), -2 * nu.part(i) + 2 * i - 1});
    v.has_tail = true;
    v.tail_start = nu.length();
    return v;
}

SpecVars SpecVars::single(Int c, const Mono& m, int a) {
    SpecVars v;
    v.heads.push_back({std::move(c), m, a});
    return v;
}

namespace {

std::string serialize(const SpecVars& v) {
    std::ostringstream out;
    for (const auto& h : v.heads) {
        out << h.coeff.str() << '#';
        for (int e : h.mono.e) out << e << ',';
        out << '#' << h.uexp << ';';
    }
    out << '|' << v.has_tail << '|' << v.tail_start;
    return out.str();
}

std::string ctx_key(const Cutoffs& ctx) {
    return std::to_string(ctx.umax) + ':' + std::to_string(ctx.qmax) + ':' +
           std::to_string(std::min(ctx.xmax, kExact));
}

// h_k or e_k of the principal tail u^{2i-1}, i > L (closed q-binomial forms)
USeries tail_sym(int k, int L, bool elementary, const Cutoffs& ctx) {
    if (k == 0) return USeries::one();
    long shift = (long)k * (2 * L + 1) + (elementary ? (long)k * (k - 1) : 0);
    if (shift > ctx.umax) {
        USeries z;
        z.set_certificates(ctx.umax, kExact, kExact);
        return z;
    }
    USeries r = USeries::one();
    for (int j = 1; j <= k; ++j)
        r = mul(r, geom_inverse(1, Mono::one(), 2 * j, ctx), ctx);
    return mul_mono(r, Mono::one(), (int)shift);
}

// complete homogeneous (or elementary) functions of the heads, degrees 0..k
std::vector<USeries> head_sym(int k, const SpecVars& v, bool elementary,
                              const Cutoffs& ctx) {
    std::vector<USeries> H(k + 1);
    H[0] = USeries::one();
    for (int a = 1; a <= k; ++a) H[a] = USeries::zero();
    for (const auto& hd : v.heads) {
        USeries x = USeries::term(hd.coeff, hd.mono, hd.uexp);
        if (elementary) {
            for (int a = k; a >= 1; --a) H[a] = add(H[a], mul(x, H[a - 1], ctx));
        } else {
            for (int a = 1; a <= k; ++a) H[a] = add(H[a], mul(x, H[a - 1], ctx));
        }
    }
    return H;
}

std::mutex g_memo_mutex;

USeries sym_at(int k, const SpecVars& v, bool elementary, const Cutoffs& ctx) {
    if (k < 0) return USeries::zero();
    if (k == 0) return USeries::one();
    if (elementary && !v.has_tail && k > (int)v.heads.size()) return USeries::zero();

    static std::map<std::string, USeries> memo;
    std::string key = (elementary ? "e:" : "h:") + std::to_string(k) + '@' +
                      serialize(v) + '@' + ctx_key(ctx);
    {
        std::lock_guard lk(g_memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    auto H = head_sym(k, v, elementary, ctx);
    USeries r = USeries::zero();
    if (v.has_tail) {
        for (int a = 0; a <= k; ++a) {
            // heads with negative u-exponents pull tail terms from above the
            // window back into it; compute the tail part in a window extended
            // by the head contribution's lowest u-exponent
            Cutoffs ext = ctx;
            if (!H[a].is_zero() && H[a].ulow() < 0)
                ext.umax = ctx.umax - H[a].ulow();
            r = add(r, mul(H[a], tail_sym(k - a, v.tail_start, elementary, ext), ctx));
        }
    } else {
        r = H[k];
    }

    std::lock_guard lk(g_memo_mutex);
    return memo.emplace(key, std::move(r)).first->second;
}

// entry index of the Jacobi-Trudi matrix and its determinant by permutation
// expansion with zero pruning (matrix sizes stay small: min(len, lam_1))
USeries jt_det(const std::vector<int>& lam, const std::vector<int>& mu, int n,
               const SpecVars& v, bool elementary, const Cutoffs& ctx) {
    auto part = [](const std::vector<int>& p, int i) {
        return (i >= 1 && i <= (int)p.size()) ? p[i - 1] : 0;
    };
    std::vector<std::vector<int>> idx(n, std::vector<int>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            idx[i - 1][j - 1] = part(lam, i) - part(mu, j) - i + j;

    struct Rec {
        int n;
        const std::vector<std::vector<int>>& idx;
        const SpecVars& v;
        bool elementary;
        const Cutoffs& ctx;
        USeries run(int i, unsigned used, int parity) {
            if (i == n) return parity > 0 ? USeries::one() : mul_int(USeries::one(), -1);
            USeries acc = USeries::zero();
            int skipped_before = 0;
            for (int j = 0; j < n; ++j) {
                if (used & (1u << j)) {
                    ++skipped_before;
                    continue;
                }
                int a = idx[i][j];
                if (a < 0) continue;
                int sgn = ((j - skipped_before) % 2 == 0) ? parity : -parity;
                USeries rest = run(i + 1, used | (1u << j), sgn);
                if (rest.is_zero() && rest.utrunc() >= kExact) continue;
                acc = add(acc, a == 0 ? rest : mul(sym_at(a, v, elementary, ctx), rest, ctx));
            }
            return acc;
        }
    } rec{n, idx, v, elementary, ctx};
    return rec.run(0, 0, 1);
}

}  // namespace

USeries h_at(int k, const SpecVars& v, const Cutoffs& ctx) {
    return sym_at(k, v, false, ctx);
}

USeries e_at(int k, const SpecVars& v, const Cutoffs& ctx) {
    return sym_at(k, v, true, ctx);
}

USeries skew_schur(const Partition& lam, const Partition& mu, const SpecVars& v,
                   const Cutoffs& ctx) {
    if (!lam.contains(mu)) return USeries::zero();
    if (lam == mu) return USeries::one();

    static std::map<std::string, USeries> memo;
    std::string key = lam.to_string() + '/' + mu.to_string() + '@' + serialize(v) +
                      '@' + ctx_key(ctx);
    {
        std::lock_guard lk(g_memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    USeries r;
    if (lam.length() <= lam.part(1)) {
        r = jt_det(lam.parts(), mu.parts(), lam.length(), v, false, ctx);
    } else {
        Partition tl = lam.conjugate(), tm = mu.conjugate();
        r = jt_det(tl.parts(), tm.parts(), tl.length(), v, true, ctx);
    }

    std::lock_guard lk(g_memo_mutex);
    return memo.emplace(key, std::move(r)).first->second;
}

USeries double_product(const Mono& M, const Partition& A, const Partition& B,
                       int expsign, const Cutoffs& ctx) {
    if (expsign == 0) throw std::invalid_argument("double_product: expsign 0");
    // Factors with negative u-exponent (large A_i/B_j) can pull factors from
    // above the window back into it: a term of Kaehler degree <= qmax carries
    // at most qmax factor powers, each of u-exponent >= e_min.  Work in a
    // window extended accordingly, then clamp.
    long e_min = 2L * (1 - A.part(1) - B.part(1));
    long ext = e_min < 0 ? -(long)ctx.qmax * e_min : 0;
    if (ext > (1 << 20))
        throw UncertifiableTruncation("double_product: window extension too large");
    Cutoffs ectx{ctx.umax + (int)ext, ctx.qmax, ctx.xmax};
    // every factor power carries M^k, so for qdeg(M) > 0 the Kaehler degree is
    // monotone in k and the accumulation can be windowed at ctx.qmax exactly
    Cutoffs work{ectx.umax, M.qdeg() > 0 ? ctx.qmax : kExact, ctx.xmax};
    USeries r = USeries::one();
    int la = A.length(), lb = B.length();
    int imax = std::max(la, ectx.umax / 2 + B.part(1) + 1);
    for (int i = 1; i <= imax; ++i) {
        int ai = A.part(i);
        int jmax = std::max(lb, ectx.umax / 2 + ai - i + 2);
        for (int j = 1; j <= jmax; ++j) {
            long e = 2L * (i + j - 1 - ai - B.part(j));
            if (e > ectx.umax) continue;  // factor is 1 on the extended window
            USeries f = expsign > 0
                            ? sub(USeries::one(), USeries::term(1, M, (int)e))
                            : geom_inverse(1, M, (int)e, ectx);
            for (int rep = 0; rep < std::abs(expsign); ++rep) {
                r = mul(r, f, ectx);
                r.drop_outside(work);
            }
        }
    }
    r.drop_outside(Cutoffs{ctx.umax, work.qmax, ctx.xmax});
    r.clamp_certificates(ctx.umax, work.qmax, kExact);
    return r;
}

}  // namespace tv
