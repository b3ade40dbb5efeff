#include "tv/genfun.hpp"

#include "tv/ctv.hpp"
#include "tv/partition.hpp"

#include <algorithm>
#include <tuple>

namespace tv {

namespace {

// window for exact operator-coefficient arithmetic (nothing truncated)
const Cutoffs kFree{kExact / 4, kExact / 4, kExact / 4};

Partition column(int k) { return Partition(std::vector<int>(k, 1)); }
Partition row(int k) {
    return k == 0 ? Partition() : Partition(std::vector<int>{k});
}

USeries upoly(std::initializer_list<std::tuple<Int, Mono, int>> ts) {
    USeries s = USeries::zero();
    for (const auto& [c, m, a] : ts) s.add_term(a, m, c);
    return s;
}

const Mono kQ1 = Mono::var(Q1);
const Mono kQ12 = Mono::var(Q1) * Mono::var(Q2);
const Mono kQ13 = Mono::var(Q1) * Mono::var(Q3);
const Mono kQ123 = kQ12 * Mono::var(Q3);

}  // namespace

XSeries split_x(const USeries& s, int xdeg) {
    XSeries out(xdeg + 1, USeries::zero());
    for (const auto& [d, p] : s.terms())
        for (const auto& [m, c] : p) {
            int k = m.xdeg();
            if (k < 0 || k > xdeg) continue;
            Mono mm = m;
            mm.e[X] = 0;
            out[k].add_term(d, mm, c);
        }
    for (auto& f : out) f.set_certificates(s.utrunc(), s.qtrunc(), kExact);
    return out;
}

XSeries psi_series(bool tilde, int xdeg, const Cutoffs& ctx) {
    USeries zinv = inverse(ctv_closed(Partition(), Partition(), ctx), ctx);
    XSeries out;
    for (int k = 0; k <= xdeg; ++k)
        out.push_back(mul(
            ctv_closed(tilde ? row(k) : column(k), Partition(), ctx), zinv, ctx));
    return out;
}

XSeries y_ratio_series(bool tilde, int xdeg, const Cutoffs& ctx) {
    USeries yinv = inverse(ctv_Y(Partition(), Partition(), ctx), ctx);
    XSeries out;
    for (int k = 0; k <= xdeg; ++k)
        out.push_back(
            mul(ctv_Y(tilde ? row(k) : column(k), Partition(), ctx), yinv, ctx));
    return out;
}

namespace {

// prod over i >= 1 of the four dilogarithm factors (1 - sgn*M*q^{i-1/2}x)^{e};
// factors beyond the u-window are congruent to 1 on it.
USeries dilog_products(Int sgn,
                       std::initializer_list<std::pair<Mono, int>> factors,
                       int xdeg, const Cutoffs& ctx) {
    Cutoffs cx{ctx.umax, ctx.qmax, xdeg};
    USeries z = USeries::one();
    for (const auto& [M, e] : factors) {
        Mono mx = M * Mono::var(X);
        for (int i = 1; 2 * i - 1 <= ctx.umax; ++i) {
            if (e > 0) {
                USeries f = USeries::one();
                f.add_term(2 * i - 1, mx, -sgn);
                z = mul(z, f, cx);
            } else {
                z = mul(z, geom_inverse(sgn, mx, 2 * i - 1, cx), cx);
            }
        }
    }
    z.clamp_certificates(ctx.umax, ctx.qmax, xdeg);
    return z;
}

}  // namespace

XSeries phi_series(int xdeg, const Cutoffs& ctx) {
    return split_x(dilog_products(1,
                                  {{kQ1, +1},
                                   {kQ123, +1},
                                   {Mono::one(), -1},
                                   {kQ13, -1}},
                                  xdeg, ctx),
                   xdeg);
}

XSeries phi_tilde_series(int xdeg, const Cutoffs& ctx) {
    return split_x(dilog_products(-1,
                                  {{Mono::one(), +1},
                                   {kQ13, +1},
                                   {kQ1, -1},
                                   {kQ123, -1}},
                                  xdeg, ctx),
                   xdeg);
}

XSeries psi_from_phi(bool tilde, const XSeries& b, const Cutoffs& ctx) {
    XSeries out = b;
    USeries fac = USeries::one();
    for (int k = 1; k < (int)b.size(); ++k) {
        // (1 - Q1Q2 q^{k-1})^{-1}, tilde: (1 - Q1Q2 q^{1-k})^{-1}
        fac = mul(fac, geom_inverse(1, kQ12, tilde ? 2 * (1 - k) : 2 * (k - 1), ctx),
                  ctx);
        out[k] = mul(out[k], fac, ctx);
    }
    return out;
}

QDiffOp qd_term(int xpow, int shift, const USeries& coeff) {
    return QDiffOp{{QDiffTerm{xpow, shift, coeff}}};
}

QDiffOp qd_add(const QDiffOp& a, const QDiffOp& b) {
    QDiffOp r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return qd_normalize(r);
}

QDiffOp qd_sub(const QDiffOp& a, const QDiffOp& b) {
    QDiffOp r = a;
    for (const auto& t : b.terms)
        r.terms.push_back(QDiffTerm{t.xpow, t.shift, neg(t.coeff)});
    return qd_normalize(r);
}

QDiffOp qd_compose(const QDiffOp& a, const QDiffOp& b) {
    QDiffOp r;
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms) {
            // S^{sa} x^{xb} = q^{sa*xb} x^{xb} S^{sa}
            USeries c = mul(ta.coeff,
                            mul_mono(tb.coeff, Mono::one(), 2 * ta.shift * tb.xpow),
                            kFree);
            r.terms.push_back(QDiffTerm{ta.xpow + tb.xpow, ta.shift + tb.shift, c});
        }
    return qd_normalize(r);
}

QDiffOp qd_normalize(const QDiffOp& op) {
    std::map<std::pair<int, int>, USeries> acc;
    for (const auto& t : op.terms) {
        auto key = std::make_pair(t.xpow, t.shift);
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, t.coeff);
        else
            it->second = add(it->second, t.coeff);
    }
    QDiffOp r;
    for (const auto& [k, c] : acc)
        if (!c.is_zero()) r.terms.push_back(QDiffTerm{k.first, k.second, c});
    return r;
}

bool qd_equal(const QDiffOp& a, const QDiffOp& b) {
    QDiffOp na = qd_normalize(a), nb = qd_normalize(b);
    if (na.terms.size() != nb.terms.size()) return false;
    for (size_t i = 0; i < na.terms.size(); ++i) {
        const auto& ta = na.terms[i];
        const auto& tb = nb.terms[i];
        if (ta.xpow != tb.xpow || ta.shift != tb.shift) return false;
        if (!sub(ta.coeff, tb.coeff).is_zero()) return false;
    }
    return true;
}

XSeries apply_qdiff(const QDiffOp& op, const XSeries& f, const Cutoffs& ctx) {
    XSeries out(f.size(), USeries::zero());
    for (const auto& t : op.terms)
        for (int k = 0; k < (int)f.size(); ++k) {
            int kk = k + t.xpow;
            if (kk >= (int)out.size()) continue;
            USeries g = mul_mono(f[k], Mono::one(), 2 * t.shift * k);
            out[kk] = add(out[kk], mul(t.coeff, g, ctx));
        }
    return out;
}

namespace {

QDiffOp qd_one() { return qd_term(0, 0, USeries::one()); }

// 1 - Q1Q2 q^{a/2} S^{dir}  (a in half-u units: coefficient u^a)
QDiffOp one_minus_q12_shift(int a, int dir) {
    return qd_sub(qd_one(), qd_term(0, dir, upoly({{1, kQ12, a}})));
}

}  // namespace

QDiffOperators build_operators() {
    QDiffOperators ops;
    QDiffOp S = qd_term(0, 1, USeries::one());
    QDiffOp St = qd_term(0, -1, USeries::one());

    QDiffOp A = one_minus_q12_shift(-4, +1);   // 1 - Q1Q2 q^{-2} S
    QDiffOp B = one_minus_q12_shift(-2, +1);   // 1 - Q1Q2 q^{-1} S
    QDiffOp At = one_minus_q12_shift(4, -1);   // 1 - Q1Q2 q^2 S~
    QDiffOp Bt = one_minus_q12_shift(2, -1);   // 1 - Q1Q2 q S~

    // x-coefficient building blocks, q^{1/2} = u
    USeries c_1_q13 = upoly({{1, Mono::one(), 1}, {1, kQ13, 1}});   // (1+Q1Q3)u
    USeries c_q1_q123 = upoly({{1, kQ1, 1}, {1, kQ123, 1}});        // Q1(1+Q2Q3)u
    USeries c_q13q = upoly({{1, kQ13, 2}});                         // Q1Q3 q
    USeries c_q1q123q = upoly({{1, kQ1 * kQ123, 2}});               // Q1^2Q2Q3 q

    ops.K = qd_add(qd_compose(B, qd_sub(qd_one(), S)),
                   qd_add(qd_sub(qd_term(2, 0, c_q13q), qd_term(1, 0, c_1_q13)),
                          qd_compose(qd_term(1, 0, c_q1_q123), S)));

    ops.H = qd_add(
        qd_sub(qd_add(qd_compose(A, B), qd_term(2, 0, c_q13q)),
               qd_add(qd_compose(qd_term(1, 0, c_1_q13), B),
                      qd_compose(qd_compose(A, B), S))),
        qd_sub(qd_compose(qd_compose(qd_term(1, 0, c_q1_q123), B), S),
               qd_compose(qd_term(2, 0, c_q1q123q), S)));

    ops.Kt = qd_add(qd_compose(Bt, qd_sub(qd_one(), St)),
                    qd_add(qd_add(qd_term(2, 0, c_q13q), qd_term(1, 0, c_1_q13)),
                           qd_sub(QDiffOp{}, qd_compose(qd_term(1, 0, c_q1_q123),
                                                        St))));

    ops.Ht = qd_sub(
        qd_add(qd_add(qd_compose(At, Bt), qd_term(2, 0, c_q13q)),
               qd_compose(qd_term(1, 0, c_1_q13), Bt)),
        qd_add(qd_add(qd_compose(qd_compose(At, Bt), St),
                      qd_compose(qd_compose(qd_term(1, 0, c_q1_q123), Bt), St)),
               qd_compose(qd_term(2, 0, c_q1q123q), St)));

    ops.factorH = A;
    ops.factorHt = At;
    return ops;
}

QDiffOp remark_form_H() {
    QDiffOp S = qd_term(0, 1, USeries::one());
    QDiffOp A = one_minus_q12_shift(-4, +1);
    QDiffOp B = one_minus_q12_shift(-2, +1);
    auto xterm = [](const Mono& m) { return qd_term(1, 0, upoly({{1, m, 1}})); };
    QDiffOp lhs = qd_compose(qd_sub(A, xterm(kQ1)), qd_sub(B, xterm(kQ123)));
    QDiffOp rhs =
        qd_compose(qd_sub(A, xterm(Mono::one())), qd_sub(B, xterm(kQ13)));
    return qd_sub(qd_compose(lhs, S), rhs);
}

QDiffOp remark_form_Ht() {
    QDiffOp St = qd_term(0, -1, USeries::one());
    QDiffOp At = one_minus_q12_shift(4, -1);
    QDiffOp Bt = one_minus_q12_shift(2, -1);
    auto xterm = [](const Mono& m) { return qd_term(1, 0, upoly({{1, m, -1}})); };
    QDiffOp lhs = qd_compose(qd_add(At, xterm(kQ1)), qd_add(Bt, xterm(kQ123)));
    QDiffOp rhs =
        qd_compose(qd_add(At, xterm(Mono::one())), qd_add(Bt, xterm(kQ13)));
    return qd_sub(qd_compose(lhs, St), rhs);
}

XYPoly classical_limit(const QDiffOp& op) {
    XYPoly out;
    for (const auto& t : qd_normalize(op).terms)
        for (const auto& [d, p] : t.coeff.terms())
            for (const auto& [m, c] : p) {
                auto& slot = out[{t.xpow, t.shift}][m];
                slot += c;
            }
    // prune zeros
    for (auto it = out.begin(); it != out.end();) {
        auto& p = it->second;
        for (auto jt = p.begin(); jt != p.end();)
            jt = (jt->second == 0) ? p.erase(jt) : std::next(jt);
        it = p.empty() ? out.erase(it) : std::next(it);
    }
    return out;
}

std::vector<std::pair<int, int>> newton_polygon(const XYPoly& p) {
    std::vector<std::pair<long, long>> pts;
    for (const auto& [k, c] : p)
        if (!c.empty()) pts.push_back({k.first, k.second});
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) {
        std::vector<std::pair<int, int>> out;
        for (auto& q : pts) out.push_back({(int)q.first, (int)q.second});
        return out;
    }
    auto cross = [](const std::pair<long, long>& o, const std::pair<long, long>& a,
                    const std::pair<long, long>& b) {
        return (a.first - o.first) * (b.second - o.second) -
               (a.second - o.second) * (b.first - o.first);
    };
    // Andrew's monotone chain; strict turns only, so collinear interior
    // points are not reported as vertices.
    std::vector<std::pair<long, long>> lo, hi;
    for (const auto& q : pts) {
        while (lo.size() >= 2 && cross(lo[lo.size() - 2], lo.back(), q) <= 0)
            lo.pop_back();
        lo.push_back(q);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (hi.size() >= 2 && cross(hi[hi.size() - 2], hi.back(), *it) <= 0)
            hi.pop_back();
        hi.push_back(*it);
    }
    lo.pop_back();
    hi.pop_back();
    lo.insert(lo.end(), hi.begin(), hi.end());
    std::vector<std::pair<int, int>> out;
    for (auto& q : lo) out.push_back({(int)q.first, (int)q.second});
    return out;
}

}  // namespace tv
