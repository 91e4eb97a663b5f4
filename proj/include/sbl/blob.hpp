#ifndef SBL_BLOB_HPP
#define SBL_BLOB_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "sbl/diagram.hpp"
#include "sbl/poly.hpp"
#include "sbl/report.hpp"

namespace sbl {

/// Pairs of nesting depth 0 from the left-edge cut: no pair {c,d} with
/// c < a < b < d in disk order.  Requires a non-crossing partition.
std::vector<PosPair> left_exposed_pairs(const PairPartition& p);

/// A non-crossing pair partition with a set of marked left-exposed pairs.
struct BlobDiagram {
  PairPartition p;
  std::set<PosPair> blobs;  // subset of p's pairs, keyed by disk positions

  BlobDiagram() = default;
  BlobDiagram(PairPartition part, std::set<PosPair> marks);

  friend bool operator==(const BlobDiagram& a, const BlobDiagram& b) {
    return a.p == b.p && a.blobs == b.blobs;
  }
  friend bool operator!=(const BlobDiagram& a, const BlobDiagram& b) {
    return !(a == b);
  }
  friend bool operator<(const BlobDiagram& a, const BlobDiagram& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.blobs < b.blobs;
  }

  std::string to_literal() const;
};

struct BlobComposeResult {
  BlobDiagram diagram;
  int plain_loops = 0;  // closed chains with no blobbed pair (delta)
  int blob_loops = 0;   // closed chains with a blobbed pair (delta')
};

/// Two-parameter composition: a result pair is blobbed iff its chain
/// contains a blobbed pair of either factor; closed chains split into
/// plain (delta) and blobbed (delta') loops.  The result's marks are
/// left-exposed (checked; violation is an internal error).
BlobComposeResult compose_blob(const BlobDiagram& a, const BlobDiagram& b);

/// e = identity with a blob on the first strand; U_i unmarked.
BlobDiagram blob_e(int n);
BlobDiagram blob_u(int i, int n);

/// All (p, s) with p non-crossing in J(m,n) and s a subset of the
/// left-exposed pairs; deterministic order.
std::vector<BlobDiagram> enumerate_blob(int m, int n);

/// (p, s) -> (p (x) p0, s): widen on the right by an unmarked non-crossing
/// diagram, remapping the marks into the enlarged context.
BlobDiagram blob_tensor(const BlobDiagram& a, const PairPartition& p0);

class BlobSum {
 public:
  BlobSum() = default;
  BlobSum(int n_top, int n_bottom) : n_top_(n_top), n_bottom_(n_bottom) {}
  explicit BlobSum(const BlobDiagram& b, Poly coeff = Poly(1))
      : n_top_(b.p.n_top()), n_bottom_(b.p.n_bottom()) {
    add(b, coeff);
  }

  int n_top() const { return n_top_; }
  int n_bottom() const { return n_bottom_; }
  const std::map<BlobDiagram, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const BlobDiagram& b, const Poly& coeff);

  friend BlobSum operator+(const BlobSum& a, const BlobSum& b);
  friend BlobSum operator-(const BlobSum& a, const BlobSum& b);
  friend BlobSum operator*(const Poly& c, const BlobSum& a);
  friend bool operator==(const BlobSum& a, const BlobSum& b) {
    return a.n_top_ == b.n_top_ && a.n_bottom_ == b.n_bottom_ &&
           a.terms_ == b.terms_;
  }
  friend bool operator!=(const BlobSum& a, const BlobSum& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  int n_top_ = 0;
  int n_bottom_ = 0;
  std::map<BlobDiagram, Poly> terms_;
};

BlobSum compose_blob_sum(const BlobSum& a, const BlobSum& b);

/// The tau' relations at rank n as BlobSum identities over Poly(delta,
/// delta').
RelationReport check_blob_relations(int n);

/// Parse a blob literal like "bB(1,1): (1,1')*"; '*' marks a blobbed pair.
BlobDiagram parse_blob(const std::string& text);

}  // namespace sbl

#endif
