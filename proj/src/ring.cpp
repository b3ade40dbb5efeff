#include "tv/ring.hpp"

#include <algorithm>
#include <sstream>

namespace tv {

const char* const kVarNames[kNumVars] = {"Q1", "Q2", "Q3", "P1", "P2", "P3", "x"};

std::string Mono::to_string() const {
    std::string out;
    for (int i = 0; i < kNumVars; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += kVarNames[i];
        if (e[i] != 1) out += '^' + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

USeries USeries::term(Int c, const Mono& m, int uexp) {
    USeries s;
    if (c != 0) s.c_[uexp][m] = std::move(c);
    return s;
}

void USeries::clamp_certificates(int ut, int qt, int xt) {
    ut_ = std::min(ut_, ut);
    qt_ = std::min(qt_, qt);
    xt_ = std::min(xt_, xt);
}

int USeries::qlow() const {
    int lo = kExact;
    for (const auto& [d, p] : c_)
        for (const auto& [m, c] : p) lo = std::min(lo, m.qdeg());
    return lo;
}

int USeries::xlow() const {
    int lo = kExact;
    for (const auto& [d, p] : c_)
        for (const auto& [m, c] : p) lo = std::min(lo, m.xdeg());
    return lo;
}

Int USeries::coeff(int uexp, const Mono& m) const {
    auto it = c_.find(uexp);
    if (it == c_.end()) return 0;
    auto jt = it->second.find(m);
    return jt == it->second.end() ? Int(0) : jt->second;
}

void USeries::add_term(int uexp, const Mono& m, const Int& c) {
    if (c == 0) return;
    auto& slot = c_[uexp][m];
    slot += c;
    if (slot == 0) {
        c_[uexp].erase(m);
        if (c_[uexp].empty()) c_.erase(uexp);
    }
}

void USeries::drop_outside(const Cutoffs& ctx) {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->first > std::min(ut_, ctx.umax)) {
            it = c_.erase(it);
            continue;
        }
        auto& p = it->second;
        for (auto jt = p.begin(); jt != p.end();) {
            if (jt->first.qdeg() > std::min(qt_, ctx.qmax) ||
                jt->first.xdeg() > std::min(xt_, ctx.xmax))
                jt = p.erase(jt);
            else
                ++jt;
        }
        if (p.empty())
            it = c_.erase(it);
        else
            ++it;
    }
}

std::string USeries::to_string(int max_terms) const {
    std::ostringstream out;
    int n = 0;
    for (const auto& [d, p] : c_) {
        for (const auto& [m, c] : p) {
            if (n++ >= max_terms) {
                out << " + ...";
                goto done;
            }
            if (n > 1) out << " + ";
            out << "(" << c.str() << ")";
            if (!m.is_one()) out << "*" << m.to_string();
            if (d != 0) out << "*u^" << d;
        }
    }
    if (n == 0) out << "0";
done:
    out << "  [u<=" << (ut_ >= kExact ? std::string("inf") : std::to_string(ut_))
        << ", q<=" << (qt_ >= kExact ? std::string("inf") : std::to_string(qt_))
        << "]";
    return out.str();
}

USeries add(const USeries& a, const USeries& b) {
    USeries r = a;
    r.ut_ = std::min(a.ut_, b.ut_);
    r.qt_ = std::min(a.qt_, b.qt_);
    r.xt_ = std::min(a.xt_, b.xt_);
    for (const auto& [d, p] : b.c_)
        for (const auto& [m, c] : p) r.add_term(d, m, c);
    // terms of a beyond b's certified region are meaningless now
    for (auto it = r.c_.begin(); it != r.c_.end();) {
        if (it->first > r.ut_) {
            it = r.c_.erase(it);
            continue;
        }
        auto& p = it->second;
        for (auto jt = p.begin(); jt != p.end();)
            if (jt->first.qdeg() > r.qt_ || jt->first.xdeg() > r.xt_)
                jt = p.erase(jt);
            else
                ++jt;
        if (p.empty())
            it = r.c_.erase(it);
        else
            ++it;
    }
    return r;
}

USeries neg(const USeries& a) { return mul_int(a, -1); }

USeries sub(const USeries& a, const USeries& b) { return add(a, neg(b)); }

USeries mul_int(const USeries& a, const Int& c) {
    if (c == 0) {
        USeries z;
        return z;
    }
    USeries r = a;
    for (auto& [d, p] : r.c_)
        for (auto& [m, v] : p) v *= c;
    return r;
}

USeries mul_mono(const USeries& a, const Mono& m, int uexp) {
    USeries r;
    r.set_certificates(a.utrunc() >= kExact ? kExact : a.utrunc() + uexp,
                       a.qtrunc() >= kExact ? kExact : a.qtrunc() + m.qdeg(),
                       a.xtrunc() >= kExact ? kExact : a.xtrunc() + m.xdeg());
    for (const auto& [d, p] : a.terms())
        for (const auto& [mm, c] : p) r.add_term(d + uexp, mm * m, c);
    return r;
}

static int cert_combine(int trunc, int low, int cap) {
    // exactness of a*b in one grading: a is exact up to trunc_a and b's terms
    // start at low_b, so products are exact up to trunc_a + low_b.  Window cap
    // only weakens the claim (keeps intermediate series bounded).
    if (trunc >= kExact || low >= kExact) return kExact;
    return (int)std::min<long>((long)trunc + low, cap);
}

USeries mul(const USeries& a, const USeries& b, const Cutoffs& ctx) {
    // no early return on zero operands: a truncated zero (certified only on a
    // window) must still narrow the product's certificates below
    USeries r;
    int ut = std::min({cert_combine(a.ut_, b.ulow(), ctx.umax),
                       cert_combine(b.ut_, a.ulow(), ctx.umax)});
    int qt = std::min({cert_combine(a.qt_, b.qlow(), ctx.qmax),
                       cert_combine(b.qt_, a.qlow(), ctx.qmax)});
    int xt = std::min({cert_combine(a.xt_, b.xlow(), ctx.xmax),
                       cert_combine(b.xt_, a.xlow(), ctx.xmax)});
    r.set_certificates(ut, qt, xt);
    for (const auto& [da, pa] : a.c_) {
        for (const auto& [db, pb] : b.c_) {
            int d = da + db;
            if (d > ut) break;  // db ascending
            auto& dst = r.c_[d];
            for (const auto& [ma, ca] : pa) {
                for (const auto& [mb, cb] : pb) {
                    Mono m = ma * mb;
                    if (m.qdeg() > qt || m.xdeg() > xt) continue;
                    auto& slot = dst[m];
                    slot += ca * cb;
                }
            }
        }
    }
    // strip zeros / empty rows
    for (auto it = r.c_.begin(); it != r.c_.end();) {
        auto& p = it->second;
        for (auto jt = p.begin(); jt != p.end();)
            jt = (jt->second == 0) ? p.erase(jt) : std::next(jt);
        it = p.empty() ? r.c_.erase(it) : std::next(it);
    }
    return r;
}

USeries geom_inverse(const Int& c, const Mono& m, int a, const Cutoffs& ctx) {
    if (c != 1 && c != -1)
        throw std::invalid_argument("geom_inverse: coefficient must be +-1");
    int qd = m.qdeg(), xd = m.xdeg();
    if (a <= 0 && qd <= 0 && xd <= 0)
        throw UncertifiableTruncation(
            "geom_inverse: factor 1 - (" + c.str() + ")*" + m.to_string() + "*u^" +
            std::to_string(a) + " has no positive grading direction");
    USeries r = USeries::one();
    r.set_certificates(a > 0 ? ctx.umax : kExact, qd > 0 ? ctx.qmax : kExact,
                       xd > 0 ? ctx.xmax : kExact);
    Int ck = 1;
    for (int k = 1;; ++k) {
        if (a > 0 && (long)a * k > ctx.umax) break;
        if (qd > 0 && (long)qd * k > ctx.qmax) break;
        if (xd > 0 && (long)xd * k > ctx.xmax) break;
        ck *= c;
        r.add_term(a * k, m.pow(k), ck);
    }
    return r;
}

USeries inverse(const USeries& s, const Cutoffs& ctx) {
    if (s.coeff(0, Mono::one()) != 1)
        throw std::invalid_argument("inverse: constant term must be 1");
    USeries r = sub(s, USeries::one());  // r = s - 1
    // every term must raise at least one capped grading, so powers of r die out
    for (const auto& [d, p] : r.terms())
        for (const auto& [m, c] : p) {
            bool dies = d > 0 || m.qdeg() > 0 || (m.xdeg() > 0 && ctx.xmax < kExact / 2);
            if (!dies)
                throw UncertifiableTruncation("inverse: non-positive term u^" +
                                              std::to_string(d) + "*" + m.to_string());
        }
    long kmax = 2L + ctx.umax + ctx.qmax + (ctx.xmax >= kExact / 2 ? 0 : ctx.xmax);
    USeries out = USeries::one(), pw = USeries::one();
    for (long k = 1; k <= kmax; ++k) {
        pw = mul(pw, neg(r), ctx);
        if (pw.is_zero()) break;
        out = add(out, pw);
    }
    return out;
}

USeries substitute(const USeries& s, const std::map<Var, SubstRule>& rules,
                   std::optional<int> qtrunc_hint) {
    bool degree_preserving = true;
    for (const auto& [v, r] : rules) {
        int src = (v == X) ? 0 : 1;
        int dst = r.image.qdeg();
        if (v == X ? r.image.xdeg() != 1 : dst != src) degree_preserving = false;
    }
    USeries out;
    for (const auto& [d, p] : s.terms()) {
        for (const auto& [m, c] : p) {
            Mono img = Mono::one();
            Int coeff = c;
            for (int i = 0; i < kNumVars; ++i) {
                if (m.e[i] == 0) continue;
                auto it = rules.find((Var)i);
                if (it == rules.end()) {
                    img.e[i] += m.e[i];
                } else {
                    img = img * it->second.image.pow(m.e[i]);
                    if (it->second.sign < 0 && (m.e[i] % 2 != 0)) coeff = -coeff;
                }
            }
            out.add_term(d, img, coeff);
        }
    }
    int qt = qtrunc_hint ? *qtrunc_hint : (degree_preserving ? s.qtrunc() : 0);
    out.set_certificates(s.utrunc(), qt, s.xtrunc());
    return out;
}

std::string Mismatch::to_string() const {
    return "u^" + std::to_string(uexp) + " * " + mono.to_string() + ": lhs=" +
           lhs.str() + " rhs=" + rhs.str();
}

std::optional<Mismatch> first_mismatch(const USeries& a, const USeries& b,
                                       const Cutoffs& ctx) {
    int ut = std::min({a.utrunc(), b.utrunc(), ctx.umax});
    int qt = std::min({a.qtrunc(), b.qtrunc(), ctx.qmax});
    int xt = std::min({a.xtrunc(), b.xtrunc(), ctx.xmax});
    std::map<int, std::map<Mono, std::pair<Int, Int>>> merged;
    auto collect = [&](const USeries& s, bool left) {
        for (const auto& [d, p] : s.terms()) {
            if (d > ut) break;
            for (const auto& [m, c] : p) {
                if (m.qdeg() > qt || m.xdeg() > xt) continue;
                auto& pr = merged[d][m];
                (left ? pr.first : pr.second) = c;
            }
        }
    };
    collect(a, true);
    collect(b, false);
    for (const auto& [d, p] : merged)
        for (const auto& [m, pr] : p)
            if (pr.first != pr.second) return Mismatch{d, m, pr.first, pr.second};
    return std::nullopt;
}

bool series_equal(const USeries& a, const USeries& b, const Cutoffs& ctx) {
    return !first_mismatch(a, b, ctx).has_value();
}

}  // namespace tv
