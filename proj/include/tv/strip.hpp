#pragma once

#include "tv/fock.hpp"
#include "tv/partition.hpp"
#include "tv/ring.hpp"

#include <vector>

namespace tv {

// Open string amplitude on a triangulated strip: N vertices with signs
// sigma_n = +1 (vertical leg up) / -1 (down), partitions beta_n on the
// vertical legs, alpha0 / alphaN on the left/right external legs, and Kaehler
// monomials Q_n on the N-1 internal lines.
struct StripData {
    std::vector<int> sigma;        // size N, entries +-1
    std::vector<Partition> beta;   // size N
    std::vector<Mono> Q;           // size N-1
    Partition alpha0, alphaN;
};

// beta^{(n)}: beta_n if sigma_n = +1, else its conjugate.
Partition beta_eff(const StripData& s, int n);

// Operator word of the fermionic expression (without the scalar prefactor):
// for each vertex Gamma^{sigma_n}_-(q^{-beta^{(n)}-rho})
// Gamma^{sigma_n}_+(q^{-t beta^{(n)}-rho}), joined by
// (sigma_n Q_n sigma_{n+1})^{L_0}.
std::vector<Token> strip_word(const StripData& s);

// Full fermionic amplitude
//   q^{(1-sigma_1)kappa(alpha0)/4} q^{(1+sigma_N)kappa(alphaN)/4}
//   * prod_n s_{t beta_n}(q^{-rho}) * <t alpha0| word |alphaN>.
USeries strip_fermionic(const StripData& s, const Cutoffs& ctx);

// Closed form for alpha0 = alphaN = empty:
//   prod_n s_{t beta_n}(q^{-rho})
//   * prod_{m<n} prod_{i,j} (1 - Q_{mn} q^{-t beta^{(m)}_i - beta^{(n)}_j
//                                          + i + j - 1})^{-sigma_m sigma_n},
// with Q_{mn} = Q_m ... Q_{n-1}.
USeries strip_closed(const StripData& s, const Cutoffs& ctx);

}  // namespace tv
