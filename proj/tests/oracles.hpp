#pragma once

// Independent reference implementations used only by the tests: a tableau
// enumerator for skew Schur values and a direct web-diagram gluing evaluator
// (sums of vertex weights times edge weights over internal partitions).

#include "tv/partition.hpp"
#include "tv/ring.hpp"
#include "tv/schur.hpp"
#include "tv/strip.hpp"

#include <vector>

namespace tv {
namespace oracle {

// One explicit variable c * mono * u^a.
struct FinVar {
    Int c;
    Mono m;
    int uexp;
};

// First n variables of the specialization (requires the tail, if present, to
// start right after the heads).
std::vector<FinVar> truncate_vars(const SpecVars& v, int n);

// s_{lam/mu} at the explicit variables by enumerating semistandard tableaux
// of shape lam/mu with entries 1..n.
USeries ssyt_skew_schur(const Partition& lam, const Partition& mu,
                        const std::vector<FinVar>& vars);

// On-strip amplitude by direct gluing: sum over the internal partitions of
// products of topological vertex weights and edge weights, with framing
// numbers computed from the web-diagram leg vectors.
USeries strip_by_gluing(const StripData& s, const Cutoffs& ctx);

// Closed-topological-vertex amplitude (three P^1's meeting in one point;
// Kaehler monomials Q1,Q2,Q3) by gluing the fourth vertex onto the
// double-P^1 strip, framing computed from the geometry.
USeries ctv_by_gluing(const Partition& b1, const Partition& b2,
                      const Cutoffs& ctx);

// Same for the flopped geometry (P1,P2,P3); the middle edge of the bent
// chain picks up framing 1.
USeries flop_by_gluing(const Partition& b1, const Partition& b2,
                       const Cutoffs& ctx);

}  // namespace oracle
}  // namespace tv
