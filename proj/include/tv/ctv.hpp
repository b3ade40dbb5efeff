#pragma once

#include "tv/fock.hpp"
#include "tv/partition.hpp"
#include "tv/ring.hpp"
#include "tv/strip.hpp"

#include <optional>

namespace tv {

// Open string amplitudes of the closed topological vertex: a web diagram of
// four vertices in which three P^1's meet, with Kaehler monomials Q1,Q2,Q3
// and two outer legs carrying the partitions beta1, beta2.

// Double-P^1 subdiagram amplitude (strip with legs beta1, alpha3, beta2).
USeries double_p1(const Partition& b1, const Partition& b2, const Partition& a3,
                  const Cutoffs& ctx);

// Sum over the gluing partition alpha3 (all |alpha3| <= ctx.qmax; the omitted
// terms carry Q3-degree beyond the window).
USeries ctv_bruteforce(const Partition& b1, const Partition& b2, const Cutoffs& ctx);

// Main operator-product part: <t b1| GG (-Q1)^{L0} G'G' (-Q3)^{L0} GG
// (-Q2)^{L0} G'G' |t b2> with all vertex operators at q^{-rho}.
USeries ctv_Y(const Partition& b1, const Partition& b2, const Cutoffs& ctx);

// Closed form: q^{kappa(b2)/2} prod(1 - Q1 Q2 q^{-b1i - t b2j + i + j - 1})^{-1}
// times ctv_Y.
USeries ctv_closed(const Partition& b1, const Partition& b2, const Cutoffs& ctx);

// Same amplitude with the q^{+-K/2} insertions kept explicitly next to the
// (-Q1)^{L0}, (-Q2)^{L0} weights (they cancel pointwise on each intermediate
// state); exercises the diagonal-conjugation cancellation.
USeries ctv_intermediate(const Partition& b1, const Partition& b2,
                         const Cutoffs& ctx);

// The intermediate expression before the operator-state correspondence:
// s_{t b1} s_{t b2} prod(1 - Q1Q2 ...)^{-1} <0| G'+(q^{-b1-rho}) (-Q1)^{L0}
// q^{-K/2} G'G' (-Q3)^{L0} GG q^{K/2} (-Q2)^{L0} G-(q^{-t b2-rho}) |0>.
// Its gaps carry unpaired q^{-+K/2}, so evaluation requires an explicit
// intermediate-size cutoff.
USeries ctv_med(const Partition& b1, const Partition& b2, const Cutoffs& ctx,
                const EvalOptions& opts);

// The same amplitudes for the flopped geometry (Kaehler monomials P1,P2,P3).
USeries flop_double_p1(const Partition& b1, const Partition& b2,
                       const Partition& a3, const Cutoffs& ctx);
USeries flop_bruteforce(const Partition& b1, const Partition& b2,
                        const Cutoffs& ctx);
USeries flop_closed(const Partition& b1, const Partition& b2, const Cutoffs& ctx);

// Alternative cut of the flopped diagram through its bent middle edge; the
// resulting word carries a bare q^{-K/2} and is uncertifiable without an
// intermediate-size cutoff.
std::vector<Token> flop_bis_word(const Partition& b1, const Partition& b2);
USeries flop_bis(const Partition& b1, const Partition& b2, const Cutoffs& ctx,
                 const EvalOptions& opts);

// Checks the flop matching rule: under Q1 = P1^{-1}, Q2 = P1 P2, Q3 = P1 P3,
//   flop_closed = q^{kappa(b1)/2} (-P1)^{|b1|}
//                 prod(1 - P1 q^{i+j-1}) prod(1 - P1^{-1} q^{i+j-1})^{-1}
//                 * ctv_closed.
// Compares all coefficients with P-degree <= pdeg and u-exponent <= umax;
// returns the first mismatch, if any.
std::optional<Mismatch> flop_match(const Partition& b1, const Partition& b2,
                                   int pdeg, int umax);

}  // namespace tv
