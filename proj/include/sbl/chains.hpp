#ifndef SBL_CHAINS_HPP
#define SBL_CHAINS_HPP

#include <optional>
#include <vector>

#include "sbl/brauer.hpp"
#include "sbl/diagram.hpp"
#include "sbl/report.hpp"

namespace sbl {

/// A chain: pairs {l_k, r_k} with l_{k-1} < l_k < r_{k-1} < r_k in disk
/// order for consecutive links.  Positions are 1-based disk positions.
struct Chain {
  std::vector<PosPair> links;
};

/// True iff consecutive links interleave; a single pair is always a chain.
bool is_chain(const std::vector<PosPair>& links);

/// The ht_c values on the boundary intervals cut by the chain's endpoints,
/// read from the top left: 0,1,(2,1)^{j-1},0 for a length-j chain.
std::vector<int> boundary_height_seq(const Chain& c);

struct ChainDecomposition {
  int i = 0;
  std::vector<Chain> chains;        // chain j starts at Top j
  std::vector<PosPair> remainder;   // pairwise non-crossing, crosses no link
};

/// The unique decomposition witnessing p in J^i_{<= i-1}(m,n), or nullopt.
/// The search runs to exhaustion; a second distinct decomposition raises
/// internal_error (decompositions are unique).
std::optional<ChainDecomposition> li_chain_decompose(const PairPartition& p,
                                                     int i);

bool is_li_chain(const PairPartition& p, int i);

/// enumerate_J(m,n) filtered by is_li_chain, in enumeration order.
std::vector<PairPartition> enumerate_li_chain(int m, int n, int i);

/// Left action of the generators of B_{i+1,i+1,m} preserves the Li-chain
/// set: every g*p lands back in J^i_{<= i-1}(m,n).
VerifyReport verify_module_closure(int i, int m, int n);

/// Chain-basis check: the monoid closure of {sigma_1..sigma_i,
/// U_{i+1}..U_{m-1}} equals the Li-chain set in J(m,m).
VerifyReport verify_chain_basis_theorem(int i, int m);

}  // namespace sbl

#endif
