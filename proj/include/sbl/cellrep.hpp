#ifndef SBL_CELLREP_HPP
#define SBL_CELLREP_HPP

#include <string>
#include <vector>

#include "sbl/brauer.hpp"
#include "sbl/laurent.hpp"
#include "sbl/matrix.hpp"
#include "sbl/report.hpp"

namespace sbl {

enum class Sign { plus, minus, none };

std::string sign_suffix(Sign s);

/// Half diagrams of the standard module: elements of J(n,m) with every
/// bottom vertex propagating, obtained by stripping the diagram monoid
/// generated by {sigma_1, U_1..U_{n-1}} and normalizing by the swap of the
/// first two bottom slots.  Deterministic (lexicographic) order.
std::vector<PairPartition> half_diagram_basis(int n, int m);

struct CellModule {
  int n = 0;
  int m = 0;
  Sign sign = Sign::none;
  std::vector<PairPartition> basis;
};

CellModule cell_module(int n, int m, Sign sign);

/// Contravariant-form value: glue flip(h1) over h2, collect delta loops;
/// zero if any line fails to propagate; a bottom permutation other than
/// the identity or the (1 2) swap is an internal error.
Poly gram_entry(const PairPartition& h1, const PairPartition& h2, Sign sign);

struct GramMatrix {
  CellModule module;
  Matrix<Poly> entries;
};

GramMatrix gram_matrix(int n, int m, Sign sign);

Poly gram_det(const GramMatrix& g);

/// Determinant of the (n, n-2) module via the three-term recurrence
/// D_n = x D_{n-1} - D_{n-2} seeded at n = 3, 4.
Poly det_recurrence(int n, Sign sign);

/// Closed forms D_n^+ = (x-1)[(x+2)(x-1) d_{n-3} - 2x d_{n-4}] and
/// D_n^- = (x-1)(x+2)[(x-1) d_{n-3} - 2 d_{n-4}].
Poly det_closed_form(int n, Sign sign);

int rank_at(const GramMatrix& g, const Rational& x0);

/// One row of the determinant table: a module (or the Temperley-Lieb
/// tridiagonal reference case) and its factored determinant.
struct DetIdentity {
  std::string label;
  int n = 0;
  int m = 0;
  Sign sign = Sign::none;
  bool tl_reference = false;
  std::string factored;
};

const std::vector<DetIdentity>& det_identity_table();

/// k x k tridiagonal with x on the diagonal and 1 off it; its determinant
/// is the Chebyshev-type polynomial d_k.
Matrix<Poly> tl_tridiagonal(int k);

struct DetRow {
  DetIdentity identity;
  size_t dim = 0;
  Poly computed;
  Poly expanded;
  bool match = false;
};

std::vector<DetRow> run_det_table(int max_n);

/// The two-site action on (C^2)^n: identity away from sites i, i+1 and the
/// 4x4 block [[0,0,0,0],[0,q,1,0],[0,1,1/q,0],[0,0,0,0]] there.
Matrix<LaurentQ> spin_rep_U(int i, int n);
Matrix<LaurentQ> spin_hamiltonian(int n);

/// All Temperley-Lieb defining relations hold for the spin matrices
/// identically in q.
VerifyReport verify_spin_relations(int n);

}  // namespace sbl

#endif
