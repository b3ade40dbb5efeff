#pragma once

#include "tv/partition.hpp"
#include "tv/ring.hpp"

#include <vector>

namespace tv {

// A variable set for specializing (skew) Schur functions: finitely many
// explicit "head" variables, optionally followed by the principal tail
// u^{2i-1}, i > tail_start.  The shifted specialization q^{-nu-rho} is heads
// u^{-2 nu_i + 2i - 1} for i <= len(nu) followed by the tail with
// tail_start = len(nu); the plain principal specialization q^{-rho} is the
// tail alone.
struct SpecVars {
    struct Head {
        Int coeff;   // usually ±1
        Mono mono;   // Kaehler / x content
        int uexp;    // power of u
        auto operator<=>(const Head&) const = default;
    };
    std::vector<Head> heads;
    bool has_tail = false;
    int tail_start = 0;  // tail variables are u^{2i-1} for i > tail_start

    auto operator<=>(const SpecVars&) const = default;

    static SpecVars principal();                     // q^{-rho}
    static SpecVars shifted(const Partition& nu);    // q^{-nu-rho}
    // single explicit variable c * mono * u^a
    static SpecVars single(Int c, const Mono& m, int a);
};

// Complete homogeneous h_k and elementary e_k at the given variables.  The
// tail contributions use the closed forms
//   sum_k t^k h_k(tail) = sum_k t^k u^{k(2L+1)} / prod_{j<=k} (1 - u^{2j})
//   sum_k t^k e_k(tail) = sum_k t^k u^{k(2L+1) + k(k-1)} / prod_{j<=k} (1 - u^{2j})
// (L = tail_start), both consequences of the q-binomial theorem.  Memoized.
USeries h_at(int k, const SpecVars& v, const Cutoffs& ctx);
USeries e_at(int k, const SpecVars& v, const Cutoffs& ctx);

// Skew Schur function s_{lam/mu} at the variables, via the Jacobi-Trudi
// determinant (h- or e-form, whichever matrix is smaller).  Memoized.
USeries skew_schur(const Partition& lam, const Partition& mu, const SpecVars& v,
                   const Cutoffs& ctx);

inline USeries schur(const Partition& lam, const SpecVars& v, const Cutoffs& ctx) {
    return skew_schur(lam, Partition(), v, ctx);
}

// Principal specialization s_lam(q^{-rho}); ubiquitous shorthand.
inline USeries schur_principal(const Partition& lam, const Cutoffs& ctx) {
    return schur(lam, SpecVars::principal(), ctx);
}

// prod_{i,j>=1} (1 - M q^{-A_i-B_j+i+j-1})^{expsign}, truncated: factors whose
// u-exponent 2(i+j-1-A_i-B_j) exceeds the window are congruent to 1 there.
// expsign may be any nonzero integer (power of the product).
USeries double_product(const Mono& M, const Partition& A, const Partition& B,
                       int expsign, const Cutoffs& ctx);

}  // namespace tv
