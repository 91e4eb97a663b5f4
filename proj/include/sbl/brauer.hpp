#ifndef SBL_BRAUER_HPP
#define SBL_BRAUER_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sbl/diagram.hpp"
#include "sbl/poly.hpp"
#include "sbl/report.hpp"

namespace sbl {

struct ComposeResult {
  PairPartition diagram;
  int loops = 0;
};

/// Category composition: p1 in J(m,n) over p2 in J(n,q).  Chains through the
/// shared middle row become pairs of the result; closed all-middle chains
/// are counted as loops, each worth a factor delta.
ComposeResult compose(const PairPartition& p1, const PairPartition& p2);

/// Finite formal sum of diagrams of a common context with Poly coefficients.
class DiagramSum {
 public:
  DiagramSum() = default;
  DiagramSum(int n_top, int n_bottom) : n_top_(n_top), n_bottom_(n_bottom) {}
  explicit DiagramSum(const PairPartition& p, Poly coeff = Poly(1))
      : n_top_(p.n_top()), n_bottom_(p.n_bottom()) {
    add(p, coeff);
  }

  int n_top() const { return n_top_; }
  int n_bottom() const { return n_bottom_; }
  const std::map<PairPartition, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const PairPartition& p, const Poly& coeff);

  friend DiagramSum operator+(const DiagramSum& a, const DiagramSum& b);
  friend DiagramSum operator-(const DiagramSum& a, const DiagramSum& b);
  friend DiagramSum operator*(const Poly& c, const DiagramSum& a);
  friend bool operator==(const DiagramSum& a, const DiagramSum& b) {
    return a.n_top_ == b.n_top_ && a.n_bottom_ == b.n_bottom_ &&
           a.terms_ == b.terms_;
  }
  friend bool operator!=(const DiagramSum& a, const DiagramSum& b) {
    return !(a == b);
  }

  /// Substitute delta' = value in every coefficient.
  DiagramSum subst_deltap(const Poly& value) const;

  std::string to_string() const;

 private:
  int n_top_ = 0;
  int n_bottom_ = 0;
  std::map<PairPartition, Poly> terms_;
};

/// Bilinear extension of compose; loops contribute delta powers.
DiagramSum compose_sum(const DiagramSum& a, const DiagramSum& b);

enum class GenKind { sigma, u };

struct GenName {
  GenKind kind;
  int index;
  std::string to_string() const {
    return (kind == GenKind::sigma ? "sigma_" : "U_") + std::to_string(index);
  }
};

PairPartition generator(GenName name, int n);

struct GeneratorSet {
  enum class Kind { brauer, tl, coxeter };
  Kind kind = Kind::brauer;
  int rank = 0;
  int l = 0;  // coxeter: sigma_1..sigma_{l-1}
  int m = 0;  // coxeter: U_m..U_{rank-1}

  static GeneratorSet brauer(int n) { return {Kind::brauer, n, 0, 0}; }
  static GeneratorSet tl(int n) { return {Kind::tl, n, 0, 0}; }
  static GeneratorSet coxeter(int l, int m, int n) {
    return {Kind::coxeter, n, l, m};
  }

  std::vector<GenName> names() const;
  std::vector<PairPartition> diagrams() const;
};

/// Verify the defining relations of the generator set as DiagramSum
/// identities over Poly(delta).
RelationReport check_relations(const GeneratorSet& gens);

/// Smallest diagram set containing 1_n and the generators, closed under
/// composition on both sides (scalar factors dropped, as is exact at
/// generic delta).  Deterministic; throws resource_limit_error past cap.
std::set<PairPartition> monoid_closure(const std::vector<PairPartition>& gens,
                                       int n, size_t cap = 1u << 21);

}  // namespace sbl

#endif
