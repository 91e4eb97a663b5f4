#ifndef SBL_DIAGRAM_HPP
#define SBL_DIAGRAM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sbl/rational.hpp"

namespace sbl {

enum class Row : uint8_t { top, bottom };

struct Vertex {
  Row row;
  int index;  // 1-based

  friend bool operator==(const Vertex& a, const Vertex& b) {
    return a.row == b.row && a.index == b.index;
  }
};

/// Disk order position of a vertex: top vertices keep their index, bottom
/// vertex j' maps to n_top + n_bottom + 1 - j.  A bijection onto
/// 1..n_top+n_bottom.
int disk_position(Vertex v, int n_top, int n_bottom);

using PosPair = std::pair<int, int>;  // 1-based disk positions, first < second

/// A pairing of vertices on a two-row context (n_top above, n_bottom below).
/// Usually a perfect matching; the +1 relabeling used by the chain maps
/// leaves the first and last disk slots temporarily unmatched, so partial
/// pairings are representable and is_perfect() tells them apart.
class PairPartition {
 public:
  PairPartition() = default;
  PairPartition(int n_top, int n_bottom);

  static PairPartition identity(int n);
  /// The unique element of J(0,2).
  static PairPartition cup();
  /// The unique element of J(2,0).
  static PairPartition cap();
  /// Transposition diagram: identity except {i,(i+1)'},{i+1,i'}.
  static PairPartition sigma(int i, int n);
  /// Temperley-Lieb diagram: identity except {i,i+1},{i',(i+1)'}.
  static PairPartition u_gen(int i, int n);

  int n_top() const { return n_top_; }
  int n_bottom() const { return n_bottom_; }
  int n_points() const { return static_cast<int>(partner_.size()); }

  int disk_pos(Vertex v) const;
  Vertex vertex_at(int pos) const;  // 1-based disk position

  bool has_partner(int pos) const { return partner_[pos - 1] >= 0; }
  int partner(int pos) const { return partner_[pos - 1] + 1; }
  std::optional<int> partner_of(Vertex v) const;

  void set_pair(int pos_a, int pos_b);
  void set_pair(Vertex a, Vertex b);

  bool is_perfect() const;
  void require_perfect(const char* who) const;

  /// Pairs as disk positions (min,max), sorted by min; the canonical form.
  std::vector<PosPair> pairs() const;
  std::vector<std::pair<Vertex, Vertex>> vertex_pairs() const;

  friend bool operator==(const PairPartition& a, const PairPartition& b) {
    return a.n_top_ == b.n_top_ && a.partner_ == b.partner_;
  }
  friend bool operator!=(const PairPartition& a, const PairPartition& b) {
    return !(a == b);
  }
  friend bool operator<(const PairPartition& a, const PairPartition& b) {
    if (a.n_top_ != b.n_top_) return a.n_top_ < b.n_top_;
    if (a.partner_.size() != b.partner_.size())
      return a.partner_.size() < b.partner_.size();
    return a.partner_ < b.partner_;
  }

  std::string to_literal() const;

 private:
  int n_top_ = 0;
  int n_bottom_ = 0;
  std::vector<int16_t> partner_;  // 0-based positions, -1 = unmatched
};

/// True iff the two pairs interleave in disk order (pattern {{1,3},{2,4}}).
/// Throws if the pairs share a vertex.
bool pairs_cross(PosPair a, PosPair b);
bool pairs_cross(const std::pair<Vertex, Vertex>& a,
                 const std::pair<Vertex, Vertex>& b, int n_top, int n_bottom);

/// Number of crossing pairs-of-pairs; the minimum crossing count of any
/// picture of p.
int chi(const PairPartition& p);

bool is_noncrossing(const PairPartition& p);

/// Side-by-side concatenation: q's top indices shift by p.n_top, bottom
/// indices by p.n_bottom.
PairPartition tensor(const PairPartition& p, const PairPartition& q);

/// Exchange the roles of the two rows; an involution.
PairPartition flip(const PairPartition& p);

/// Relabel every index by +1/-1, growing/shrinking the ambient context by
/// one slot per row.  With delta=+1 the first slot of each row is left
/// unmatched; delta=-1 requires both first slots to be unmatched or unused.
PairPartition shift(const PairPartition& p, int delta);

enum class EnumFilter { all, noncrossing };

size_t enumeration_point_cap();  // default 16; SBL_MAX_POINTS overrides

std::vector<PairPartition> enumerate_J(int n, int m,
                                       EnumFilter filter = EnumFilter::all);

/// Parse a diagram literal like "J(2,2): (1,2')(2,1')".
PairPartition parse_diagram(const std::string& text);

std::string vertex_name(Vertex v);

}  // namespace sbl

#endif
