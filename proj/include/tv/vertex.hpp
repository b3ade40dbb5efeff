#pragma once

#include "tv/partition.hpp"
#include "tv/ring.hpp"
#include "tv/schur.hpp"

namespace tv {

// Topological vertex with outgoing legs (lam, mu, nu), in u = q^{1/2}:
//   C_{lam,mu,nu} = u^{kappa(mu)} s_{t nu}(q^{-rho})
//                   * sum_eta s_{t lam/eta}(q^{-nu-rho}) s_{mu/eta}(q^{-t nu-rho})
USeries vertex(const Partition& lam, const Partition& mu, const Partition& nu,
               const Cutoffs& ctx);

// 2d lattice vector for web-diagram bookkeeping.
struct Vec2 {
    long x, y;
    long wedge(const Vec2& o) const { return x * o.y - y * o.x; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    bool operator==(const Vec2&) const = default;
};

// Framing number of an internal edge.  v/w are the other two leg directions
// at the first vertex (so the edge leaves it along -(v+w)); vp/wp likewise at
// the second vertex.  Checks the two edge directions are opposite.
int framing_number(Vec2 v, Vec2 w, Vec2 vp, Vec2 wp);

// Propagator of an internal edge with Kaehler monomial Qm, framing n and
// partition lam: (-1)^{(n+1)|lam|} Qm^{|lam|} u^{-n kappa(lam)}.
USeries edge_weight(const Mono& Qm, int n, const Partition& lam);

}  // namespace tv
