#pragma once

#include "tv/partition.hpp"
#include "tv/ring.hpp"
#include "tv/schur.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace tv {

// Charge-0 free-fermion Fock space over the coefficient ring.  Basis states
// are partitions; |lam> occupies the fermion modes {-lam_i + i - 1 : i >= 1}
// (psi_m creates mode m, psi*_n annihilates mode -n, vacuum modes are
// 0,1,2,...).

// A vector in the Fock space with series coefficients.
using FockVec = std::map<Partition, USeries>;

// Moves the particle in mode `from` to mode `to`; returns the resulting basis
// state and fermionic sign, or nothing if `from` is empty / `to` is occupied.
std::optional<std::pair<int, Partition>> move_mode(const Partition& lam, int from,
                                                   int to);

// Diagonal zero modes (exact eigenvalues).
long eigen_L0(const Partition& lam);   // |lam|
long eigen_W0(const Partition& lam);   // kappa(lam) + |lam|
long eigen_K(const Partition& lam);    // kappa(lam)

// J_m |lam>  (m != 0; finite sum of basis states with sign +-1)
std::vector<std::pair<int, Partition>> apply_J(int m, const Partition& lam);

// V^{(k)}_m |lam> = q^{-km/2} sum_n q^{kn} :psi_{m-n} psi*_n: |lam>.
// For m == 0 the result is diagonal; the off-diagonal case moves one particle
// up by m with weight u^{-2k r - k m} for the particle at mode r.
FockVec apply_V(int k, int m, const Partition& lam, const Cutoffs& ctx);

// Exact eigenvalue of V^{(k)}_0 on |lam> (finite Laurent polynomial in u).
USeries eigen_V0(int k, const Partition& lam);

// ----- operator words -------------------------------------------------------

// Vertex operator Gamma_{+-} (primed: Gamma'_{+-}) at given variables.
// Matrix elements: <lam|G-(x)|mu> = <mu|G+(x)|lam> = s_{lam/mu}(x); primed
// versions give s_{t lam/t mu}(x).
struct GammaTok {
    bool primed;
    bool plus;
    SpecVars vars;
};

// (c * mono)^{L_0}: diagonal weight (c * mono)^{|nu|} (c = +-1).
struct DiagQTok {
    int sign;
    Mono mono;
};

// q^{half*K/2}: diagonal weight u^{half * kappa(nu)}.
struct DiagKTok {
    int half;
};

// Diagonal exponential of quantum-torus generators, the two shapes arising
// from converting infinite double products to operators:
//   block 1: exp(-sum_{i,k} (M q^{-beta_i+i})^k/k (V^{(-k)}_0 + 1/(1-q^k)))
//            with eigenvalue prod_{i,j}(1 - M q^{-beta_i-nu_j+i+j-1}) on |nu>;
//   block 2: exp(+sum_{j,k} (M q^{-t beta_j+j-1})^k/k (V^{(k)}_0 - q^k/(1-q^k)))
//            with eigenvalue prod_{i,j}(1 - M q^{-t nu_i-t beta_j+i+j-1}).
// The eigenvalues are evaluated through the closed forms of the V-eigenvalue
// sums (Lemma-type identities), which recombine into the double products.
struct VExpTok {
    int block;  // 1 or 2
    Mono mono;
    Partition beta;
};

using Token = std::variant<GammaTok, DiagQTok, DiagKTok, VExpTok>;

GammaTok gamma_tok(bool primed, bool plus, const SpecVars& vars);

struct EvalOptions {
    // Cap on the size of intermediate partitions.  When unset, the evaluator
    // only accepts words whose truncation it can certify: every diagonal gap
    // between vertex-operator groups must carry strictly positive Kaehler
    // degree per box, and no gap may carry a net q^{+-K/2}.  With the cap set,
    // those checks are skipped and the result's Kaehler-degree certificate is
    // clamped to the cap.
    std::optional<int> max_intermediate;
};

// <bra| word |ket> by resolving the identity between vertex-operator groups.
USeries evaluate_word(const std::vector<Token>& word, const Partition& bra,
                      const Partition& ket, const Cutoffs& ctx,
                      const EvalOptions& opts = {});

}  // namespace tv
