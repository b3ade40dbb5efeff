#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace tv {

using Int = boost::multiprecision::cpp_int;

// Formal variables carried in coefficients.  Q1..Q3 are Kaehler parameters,
// P1..P3 their flopped-frame counterparts, X the open-string modulus.
enum Var { Q1 = 0, Q2, Q3, P1, P2, P3, X, kNumVars };

extern const char* const kVarNames[kNumVars];

// Laurent monomial in the coefficient variables.
struct Mono {
    std::array<int, kNumVars> e{};

    auto operator<=>(const Mono&) const = default;

    static Mono one() { return Mono{}; }
    static Mono var(Var v, int k = 1) {
        Mono m;
        m.e[v] = k;
        return m;
    }
    Mono operator*(const Mono& o) const {
        Mono m;
        for (int i = 0; i < kNumVars; ++i) m.e[i] = e[i] + o.e[i];
        return m;
    }
    Mono pow(int k) const {
        Mono m;
        for (int i = 0; i < kNumVars; ++i) m.e[i] = e[i] * k;
        return m;
    }
    Mono inverse() const { return pow(-1); }
    // signed total degree in the Kaehler variables Q1..P3 (X excluded)
    int qdeg() const {
        int d = 0;
        for (int i = 0; i < X; ++i) d += e[i];
        return d;
    }
    int xdeg() const { return e[X]; }
    bool is_one() const { return *this == Mono{}; }
    std::string to_string() const;
};

// Polynomial in the coefficient variables over Int; no zero entries stored.
using CoeffPoly = std::map<Mono, Int>;

// Computation window.  Terms with u-exponent > umax, Kaehler degree > qmax or
// x-degree > xmax are discarded by the arithmetic.
struct Cutoffs {
    int umax;
    int qmax;
    int xmax = 1 << 20;
};

constexpr int kExact = 1 << 28;  // certificate value meaning "no truncation"

// Truncated Laurent series in u = q^{1/2} with CoeffPoly coefficients.
//
// The stored terms are exact on the certified region
//   { u-exp <= utrunc } ∩ { Kaehler degree <= qtrunc } ∩ { x-degree <= xtrunc };
// outside it nothing is claimed.  All arithmetic propagates certificates.
class USeries {
public:
    USeries() = default;

    static USeries zero() { return USeries(); }
    static USeries one() { return term(1, Mono::one(), 0); }
    static USeries term(Int c, const Mono& m, int uexp);

    const std::map<int, CoeffPoly>& terms() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    int utrunc() const { return ut_; }
    int qtrunc() const { return qt_; }
    int xtrunc() const { return xt_; }
    void set_certificates(int ut, int qt, int xt) { ut_ = ut; qt_ = qt; xt_ = xt; }
    void clamp_certificates(int ut, int qt, int xt);

    // lowest stored u-exponent; kExact if zero series
    int ulow() const { return c_.empty() ? kExact : c_.begin()->first; }
    // smallest Kaehler degree / x-degree over stored terms; kExact if zero
    int qlow() const;
    int xlow() const;

    Int coeff(int uexp, const Mono& m) const;

    void add_term(int uexp, const Mono& m, const Int& c);  // no window check
    void drop_outside(const Cutoffs& ctx);                 // discard beyond window

    std::string to_string(int max_terms = 40) const;

private:
    std::map<int, CoeffPoly> c_;
    int ut_ = kExact, qt_ = kExact, xt_ = kExact;

    friend USeries add(const USeries&, const USeries&);
    friend USeries mul(const USeries&, const USeries&, const Cutoffs&);
    friend USeries mul_int(const USeries&, const Int&);
    friend USeries mul_mono(const USeries&, const Mono&, int);
};

USeries add(const USeries& a, const USeries& b);
USeries sub(const USeries& a, const USeries& b);
USeries neg(const USeries& a);
USeries mul(const USeries& a, const USeries& b, const Cutoffs& ctx);
USeries mul_int(const USeries& a, const Int& c);
USeries mul_mono(const USeries& a, const Mono& m, int uexp);  // exact shift

// (1 - c*m*u^a)^{-1} expanded geometrically.  Requires c = ±1 and a positive
// grading direction (a > 0, qdeg(m) > 0 or xdeg(m) > 0); throws otherwise.
USeries geom_inverse(const Int& c, const Mono& m, int a, const Cutoffs& ctx);

// Inverse of a series with constant term 1 whose remaining terms all have
// positive u-exponent, Kaehler degree or x-degree.  Throws otherwise.
USeries inverse(const USeries& s, const Cutoffs& ctx);

// Substitute each variable by sign * monomial (u-free images).  The caller is
// responsible for re-certifying the Kaehler-degree window when the map is not
// degree-preserving; pass qtrunc_hint in that case.
struct SubstRule {
    int sign = 1;  // ±1
    Mono image;
};
USeries substitute(const USeries& s, const std::map<Var, SubstRule>& rules,
                   std::optional<int> qtrunc_hint = std::nullopt);

struct Mismatch {
    int uexp;
    Mono mono;
    Int lhs, rhs;
    std::string to_string() const;
};

// Compares a and b on the intersection of their certified regions, clipped to
// ctx.  Returns the first mismatch in canonical (u, monomial) order, if any.
std::optional<Mismatch> first_mismatch(const USeries& a, const USeries& b,
                                       const Cutoffs& ctx);
bool series_equal(const USeries& a, const USeries& b, const Cutoffs& ctx);

struct UncertifiableTruncation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tv
