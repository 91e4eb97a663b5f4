#ifndef SBL_ISO_HPP
#define SBL_ISO_HPP

#include <vector>

#include "sbl/blob.hpp"
#include "sbl/brauer.hpp"
#include "sbl/chains.hpp"
#include "sbl/report.hpp"

namespace sbl {

/// Build the chain x(s) in the +1-enlarged context from the ordered marked
/// pairs s of a blob diagram on (m,n).  s is given as disk positions in the
/// original context, ordered l_1 < r_1 < l_2 < r_2 < ... (exposed pairs of
/// a non-crossing partition are sequential, so sorting by left endpoint
/// suffices).  The last link is {l_{|s|}+1, 1'}: the unshifted variant would
/// collide with the +1-relabelled remainder and break bijectivity.
Chain chain_x(const std::vector<PosPair>& s, int m, int n);

/// Inverse relabeling: recover s (positions in the original (m,n) context)
/// from a chain anchored at Top 1 and Bottom 1 in (m+1, n+1).
std::vector<PosPair> chain_xbar(const Chain& x, int m_plus_1, int n_plus_1);

/// The set bijection bB(m,n) -> J^1_{<=0}(m+1,n+1): psi(p,s) = x(s) u (p\s)^+.
PairPartition psi(const BlobDiagram& b);

/// Inverse of psi via the unique chain decomposition at i=1.
BlobDiagram psi_inv(const PairPartition& p);

/// phi(p,s) = 2^{-|s|} sum over z subseteq s of psi(p,z), extended linearly.
DiagramSum phi(const BlobDiagram& b);
DiagramSum phi(const BlobSum& s);

/// p in J(s,t) widened to J(r,r) by tensoring cups on the bottom and caps
/// on the top; requires r >= s,t and r = s = t (mod 2).
PairPartition overline_embed(const PairPartition& p, int r);

/// Generator images: U_i -> U_{i+1} = psi(U_i), e -> (1/2)(1 + sigma_1).
DiagramSum theta_u(int i, int n);
DiagramSum theta_e(int n);

/// Check the tau' relations on the theta images in kJ(n+1,n+1) with
/// delta' = (delta+1)/2, plus the dimension count and that psi hits the
/// chain-basis set.
VerifyReport verify_theta(int n);

/// Exhaustive homomorphism check phi(a)*phi(b) = phi(a o b) over
/// bB(m,n) x bB(n,q) at delta' = (1+delta)/2, plus tensor compatibility
/// phi(p (x) p0, s) = phi(p,s) (x) p0.
VerifyReport verify_phi_functor(int m, int n, int q);

}  // namespace sbl

#endif
