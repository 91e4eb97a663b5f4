#include "sbl/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace sbl {

int disk_position(Vertex v, int n_top, int n_bottom) {
  if (v.index < 1 || (v.row == Row::top && v.index > n_top) ||
      (v.row == Row::bottom && v.index > n_bottom))
    throw domain_error("vertex out of range for context (" +
                       std::to_string(n_top) + "," + std::to_string(n_bottom) +
                       "): " + vertex_name(v));
  return v.row == Row::top ? v.index : n_top + n_bottom + 1 - v.index;
}

std::string vertex_name(Vertex v) {
  return std::to_string(v.index) + (v.row == Row::bottom ? "'" : "");
}

PairPartition::PairPartition(int n_top, int n_bottom)
    : n_top_(n_top), n_bottom_(n_bottom) {
  if (n_top < 0 || n_bottom < 0)
    throw domain_error("negative context size");
  partner_.assign(static_cast<size_t>(n_top) + n_bottom, int16_t{-1});
}

PairPartition PairPartition::identity(int n) {
  PairPartition p(n, n);
  for (int i = 1; i <= n; ++i) p.set_pair({Row::top, i}, {Row::bottom, i});
  return p;
}

PairPartition PairPartition::cup() {
  PairPartition p(0, 2);
  p.set_pair({Row::bottom, 1}, {Row::bottom, 2});
  return p;
}

PairPartition PairPartition::cap() {
  PairPartition p(2, 0);
  p.set_pair({Row::top, 1}, {Row::top, 2});
  return p;
}

PairPartition PairPartition::sigma(int i, int n) {
  if (i < 1 || i >= n) throw domain_error("sigma index out of range");
  PairPartition p(n, n);
  for (int k = 1; k <= n; ++k) {
    if (k == i) {
      p.set_pair({Row::top, i}, {Row::bottom, i + 1});
      p.set_pair({Row::top, i + 1}, {Row::bottom, i});
      ++k;
    } else {
      p.set_pair({Row::top, k}, {Row::bottom, k});
    }
  }
  return p;
}

PairPartition PairPartition::u_gen(int i, int n) {
  if (i < 1 || i >= n) throw domain_error("U index out of range");
  PairPartition p(n, n);
  for (int k = 1; k <= n; ++k) {
    if (k == i) {
      p.set_pair({Row::top, i}, {Row::top, i + 1});
      p.set_pair({Row::bottom, i}, {Row::bottom, i + 1});
      ++k;
    } else {
      p.set_pair({Row::top, k}, {Row::bottom, k});
    }
  }
  return p;
}

int PairPartition::disk_pos(Vertex v) const {
  return disk_position(v, n_top_, n_bottom_);
}

Vertex PairPartition::vertex_at(int pos) const {
  if (pos < 1 || pos > n_points())
    throw domain_error("disk position out of range");
  if (pos <= n_top_) return {Row::top, pos};
  return {Row::bottom, n_top_ + n_bottom_ + 1 - pos};
}

std::optional<int> PairPartition::partner_of(Vertex v) const {
  int pos = disk_pos(v);
  if (!has_partner(pos)) return std::nullopt;
  return partner(pos);
}

void PairPartition::set_pair(int pos_a, int pos_b) {
  if (pos_a == pos_b) throw domain_error("pair with repeated vertex");
  if (pos_a < 1 || pos_b < 1 || pos_a > n_points() || pos_b > n_points())
    throw domain_error("disk position out of range");
  if (has_partner(pos_a) || has_partner(pos_b))
    throw domain_error("vertex already paired; not a matching");
  partner_[pos_a - 1] = static_cast<int16_t>(pos_b - 1);
  partner_[pos_b - 1] = static_cast<int16_t>(pos_a - 1);
}

void PairPartition::set_pair(Vertex a, Vertex b) {
  set_pair(disk_pos(a), disk_pos(b));
}

bool PairPartition::is_perfect() const {
  for (int16_t x : partner_)
    if (x < 0) return false;
  return true;
}

void PairPartition::require_perfect(const char* who) const {
  if (!is_perfect())
    throw domain_error(std::string(who) + ": partition is not a perfect matching");
}

std::vector<PosPair> PairPartition::pairs() const {
  std::vector<PosPair> out;
  out.reserve(partner_.size() / 2);
  for (int pos = 1; pos <= n_points(); ++pos) {
    if (!has_partner(pos)) continue;
    int q = partner(pos);
    if (q > pos) out.emplace_back(pos, q);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> PairPartition::vertex_pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (auto [a, b] : pairs()) out.emplace_back(vertex_at(a), vertex_at(b));
  return out;
}

std::string PairPartition::to_literal() const {
  std::ostringstream os;
  os << "J(" << n_top_ << "," << n_bottom_ << "):";
  for (auto [a, b] : pairs())
    os << " (" << vertex_name(vertex_at(a)) << "," << vertex_name(vertex_at(b))
       << ")";
  return os.str();
}

bool pairs_cross(PosPair a, PosPair b) {
  if (a.first > a.second) std::swap(a.first, a.second);
  if (b.first > b.second) std::swap(b.first, b.second);
  if (a.first == b.first || a.first == b.second || a.second == b.first ||
      a.second == b.second)
    throw domain_error("pairs_cross: pairs share a vertex");
  bool b1_in = a.first < b.first && b.first < a.second;
  bool b2_in = a.first < b.second && b.second < a.second;
  return b1_in != b2_in;
}

bool pairs_cross(const std::pair<Vertex, Vertex>& a,
                 const std::pair<Vertex, Vertex>& b, int n_top, int n_bottom) {
  return pairs_cross(PosPair{disk_position(a.first, n_top, n_bottom),
                             disk_position(a.second, n_top, n_bottom)},
                     PosPair{disk_position(b.first, n_top, n_bottom),
                             disk_position(b.second, n_top, n_bottom)});
}

int chi(const PairPartition& p) {
  auto ps = p.pairs();
  int count = 0;
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = i + 1; j < ps.size(); ++j)
      if (pairs_cross(ps[i], ps[j])) ++count;
  return count;
}

bool is_noncrossing(const PairPartition& p) { return chi(p) == 0; }

PairPartition tensor(const PairPartition& p, const PairPartition& q) {
  PairPartition r(p.n_top() + q.n_top(), p.n_bottom() + q.n_bottom());
  for (auto [a, b] : p.vertex_pairs()) r.set_pair(a, b);
  for (auto [a, b] : q.vertex_pairs()) {
    auto lift = [&](Vertex v) -> Vertex {
      return {v.row, v.index + (v.row == Row::top ? p.n_top() : p.n_bottom())};
    };
    r.set_pair(lift(a), lift(b));
  }
  return r;
}

PairPartition flip(const PairPartition& p) {
  PairPartition r(p.n_bottom(), p.n_top());
  auto swap_row = [](Vertex v) -> Vertex {
    return {v.row == Row::top ? Row::bottom : Row::top, v.index};
  };
  for (auto [a, b] : p.vertex_pairs()) r.set_pair(swap_row(a), swap_row(b));
  return r;
}

PairPartition shift(const PairPartition& p, int delta) {
  if (delta != 1 && delta != -1) throw domain_error("shift: delta must be +-1");
  if (delta == -1) {
    if (p.n_top() < 1 || p.n_bottom() < 1)
      throw domain_error("shift: cannot shrink an empty row");
    if (p.has_partner(p.disk_pos({Row::top, 1})) ||
        p.has_partner(p.disk_pos({Row::bottom, 1})))
      throw domain_error("shift: index-1 vertex in use");
  }
  PairPartition r(p.n_top() + delta, p.n_bottom() + delta);
  for (auto [a, b] : p.vertex_pairs())
    r.set_pair({a.row, a.index + delta}, {b.row, b.index + delta});
  return r;
}

size_t enumeration_point_cap() {
  if (const char* env = std::getenv("SBL_MAX_POINTS")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<size_t>(v);
  }
  return 16;
}

std::vector<PairPartition> enumerate_J(int n, int m, EnumFilter filter) {
  if (n < 0 || m < 0) throw domain_error("enumerate_J: negative size");
  if ((n + m) % 2 != 0)
    throw domain_error("enumerate_J: n+m odd, J(n,m) is empty");
  if (static_cast<size_t>(n + m) > enumeration_point_cap())
    throw resource_limit_error("enumerate_J: context exceeds point cap " +
                               std::to_string(enumeration_point_cap()));
  int total = n + m;
  std::vector<PairPartition> out;
  std::vector<int> match(total + 1, 0);
  // Pair the smallest free position with every larger free position, in
  // order; yields the lexicographic order on canonical forms.
  auto rec = [&](auto&& self, int paired) -> void {
    if (paired == total) {
      PairPartition p(n, m);
      for (int a = 1; a <= total; ++a)
        if (match[a] > a) p.set_pair(a, match[a]);
      if (filter == EnumFilter::noncrossing && !is_noncrossing(p)) return;
      out.push_back(std::move(p));
      return;
    }
    int a = 1;
    while (match[a] != 0) ++a;
    for (int b = a + 1; b <= total; ++b) {
      if (match[b] != 0) continue;
      match[a] = b;
      match[b] = a;
      self(self, paired + 2);
      match[a] = 0;
      match[b] = 0;
    }
  };
  if (total == 0) {
    out.push_back(PairPartition(0, 0));
    return out;
  }
  rec(rec, 0);
  return out;
}

namespace {

struct LiteralParser {
  const std::string& s;
  size_t pos = 0;

  explicit LiteralParser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw domain_error(std::string("diagram literal: expected '") + c + "'");
    ++pos;
  }
  bool try_eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  int parse_int() {
    skip_ws();
    std::string num;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      num += s[pos++];
    if (num.empty()) throw domain_error("diagram literal: expected integer");
    return std::stoi(num);
  }
  Vertex parse_vertex() {
    int idx = parse_int();
    if (pos < s.size() && s[pos] == '\'') {
      ++pos;
      return {Row::bottom, idx};
    }
    return {Row::top, idx};
  }
};

}  // namespace

PairPartition parse_diagram(const std::string& text) {
  LiteralParser lp(text);
  lp.skip_ws();
  if (lp.pos >= text.size() || text[lp.pos] != 'J')
    throw domain_error("diagram literal must start with J(n,m):");
  ++lp.pos;
  lp.expect('(');
  int n = lp.parse_int();
  lp.expect(',');
  int m = lp.parse_int();
  lp.expect(')');
  lp.expect(':');
  PairPartition p(n, m);
  while (lp.try_eat('(')) {
    Vertex a = lp.parse_vertex();
    lp.expect(',');
    Vertex b = lp.parse_vertex();
    lp.expect(')');
    p.set_pair(a, b);  // rejects repeats and non-matchings
  }
  lp.skip_ws();
  if (lp.pos != text.size())
    throw domain_error("diagram literal: trailing input");
  p.require_perfect("parse_diagram");
  return p;
}

}  // namespace sbl
