#include "sbl/blob.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sbl {

std::vector<PosPair> left_exposed_pairs(const PairPartition& p) {
  p.require_perfect("left_exposed_pairs");
  if (!is_noncrossing(p))
    throw domain_error("left_exposed_pairs: partition is crossing");
  auto ps = p.pairs();
  std::vector<PosPair> out;
  for (const auto& pr : ps) {
    bool nested = false;
    for (const auto& other : ps)
      if (other.first < pr.first && pr.second < other.second) {
        nested = true;
        break;
      }
    if (!nested) out.push_back(pr);
  }
  return out;
}

BlobDiagram::BlobDiagram(PairPartition part, std::set<PosPair> marks)
    : p(std::move(part)), blobs(std::move(marks)) {
  auto exposed = left_exposed_pairs(p);
  for (const auto& b : blobs)
    if (std::find(exposed.begin(), exposed.end(), b) == exposed.end())
      throw domain_error("BlobDiagram: mark on a non-left-exposed pair");
}

std::string BlobDiagram::to_literal() const {
  std::ostringstream os;
  os << "bB(" << p.n_top() << "," << p.n_bottom() << "):";
  for (auto pr : p.pairs()) {
    os << " (" << vertex_name(p.vertex_at(pr.first)) << ","
       << vertex_name(p.vertex_at(pr.second)) << ")";
    if (blobs.count(pr)) os << "*";
  }
  return os.str();
}

BlobComposeResult compose_blob(const BlobDiagram& a, const BlobDiagram& b) {
  if (a.p.n_bottom() != b.p.n_top())
    throw domain_error("compose_blob: context mismatch");
  const int m = a.p.n_top(), n = a.p.n_bottom(), q = b.p.n_bottom();
  PairPartition diagram(m, q);
  std::set<PosPair> marks;
  int plain_loops = 0, blob_loops = 0;
  std::vector<char> mid_seen(static_cast<size_t>(n) + 1, 0);

  struct Node {
    int layer;  // 0 result top, 1 middle, 2 result bottom
    int index;
  };
  auto step = [&](Node at, bool via_a, bool& blob_hit) -> Node {
    const BlobDiagram& f = via_a ? a : b;
    Vertex v;
    if (via_a)
      v = at.layer == 0 ? Vertex{Row::top, at.index}
                        : Vertex{Row::bottom, at.index};
    else
      v = at.layer == 1 ? Vertex{Row::top, at.index}
                        : Vertex{Row::bottom, at.index};
    int pv = f.p.disk_pos(v);
    int pw = f.p.partner(pv);
    if (f.blobs.count({std::min(pv, pw), std::max(pv, pw)})) blob_hit = true;
    Vertex w = f.p.vertex_at(pw);
    if (via_a) return w.row == Row::top ? Node{0, w.index} : Node{1, w.index};
    return w.row == Row::top ? Node{1, w.index} : Node{2, w.index};
  };
  auto result_vertex = [&](Node at) -> Vertex {
    return at.layer == 0 ? Vertex{Row::top, at.index}
                         : Vertex{Row::bottom, at.index};
  };

  auto trace_from = [&](Node start, bool via_a) {
    Node at = start;
    bool use_a = via_a;
    bool blob_hit = false;
    while (true) {
      Node nxt = step(at, use_a, blob_hit);
      if (nxt.layer == 1) {
        mid_seen[nxt.index] = 1;
        at = nxt;
        use_a = !use_a;
      } else {
        Vertex va = result_vertex(start), vb = result_vertex(nxt);
        diagram.set_pair(va, vb);
        if (blob_hit) {
          int pa = diagram.disk_pos(va), pb = diagram.disk_pos(vb);
          marks.insert({std::min(pa, pb), std::max(pa, pb)});
        }
        return;
      }
    }
  };

  for (int i = 1; i <= m; ++i)
    if (!diagram.has_partner(diagram.disk_pos({Row::top, i})))
      trace_from(Node{0, i}, true);
  for (int k = 1; k <= q; ++k)
    if (!diagram.has_partner(diagram.disk_pos({Row::bottom, k})))
      trace_from(Node{2, k}, false);
  for (int j = 1; j <= n; ++j) {
    if (mid_seen[j]) continue;
    bool blob_hit = false;
    int at = j;
    bool use_a = true;
    do {
      mid_seen[at] = 1;
      Node nxt = step(Node{1, at}, use_a, blob_hit);
      at = nxt.index;
      use_a = !use_a;
    } while (!(at == j && use_a));
    (blob_hit ? blob_loops : plain_loops) += 1;
  }

  if (!is_noncrossing(diagram))
    throw internal_error("compose_blob: crossing composite of non-crossing factors");
  auto exposed = left_exposed_pairs(diagram);
  for (const auto& mk : marks)
    if (std::find(exposed.begin(), exposed.end(), mk) == exposed.end())
      throw internal_error("compose_blob: mark landed on a non-exposed pair");
  return {BlobDiagram(std::move(diagram), std::move(marks)), plain_loops,
          blob_loops};
}

BlobDiagram blob_e(int n) {
  if (n < 1) throw domain_error("blob_e: n must be >= 1");
  PairPartition id = PairPartition::identity(n);
  PosPair first_strand{1, 2 * n};  // {1,1'} in disk positions
  return BlobDiagram(id, {first_strand});
}

BlobDiagram blob_u(int i, int n) {
  return BlobDiagram(PairPartition::u_gen(i, n), {});
}

std::vector<BlobDiagram> enumerate_blob(int m, int n) {
  std::vector<BlobDiagram> out;
  for (const auto& p : enumerate_J(m, n, EnumFilter::noncrossing)) {
    auto exposed = left_exposed_pairs(p);
    size_t subsets = size_t{1} << exposed.size();
    for (size_t mask = 0; mask < subsets; ++mask) {
      std::set<PosPair> s;
      for (size_t bit = 0; bit < exposed.size(); ++bit)
        if (mask & (size_t{1} << bit)) s.insert(exposed[bit]);
      out.emplace_back(p, std::move(s));
    }
  }
  return out;
}

BlobDiagram blob_tensor(const BlobDiagram& a, const PairPartition& p0) {
  PairPartition wide = tensor(a.p, p0);
  std::set<PosPair> marks;
  for (auto [lo, hi] : a.blobs) {
    int na = wide.disk_pos(a.p.vertex_at(lo));
    int nb = wide.disk_pos(a.p.vertex_at(hi));
    marks.insert({std::min(na, nb), std::max(na, nb)});
  }
  return BlobDiagram(std::move(wide), std::move(marks));
}

void BlobSum::add(const BlobDiagram& b, const Poly& coeff) {
  if (b.p.n_top() != n_top_ || b.p.n_bottom() != n_bottom_)
    throw domain_error("BlobSum: context mismatch");
  if (coeff.is_zero()) return;
  auto it = terms_.find(b);
  if (it == terms_.end()) {
    terms_.emplace(b, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BlobSum operator+(const BlobSum& a, const BlobSum& b) {
  if (a.n_top_ != b.n_top_ || a.n_bottom_ != b.n_bottom_)
    throw domain_error("BlobSum +: context mismatch");
  BlobSum r = a;
  for (const auto& [d, c] : b.terms_) r.add(d, c);
  return r;
}

BlobSum operator-(const BlobSum& a, const BlobSum& b) {
  if (a.n_top_ != b.n_top_ || a.n_bottom_ != b.n_bottom_)
    throw domain_error("BlobSum -: context mismatch");
  BlobSum r = a;
  for (const auto& [d, c] : b.terms_) r.add(d, -c);
  return r;
}

BlobSum operator*(const Poly& c, const BlobSum& a) {
  BlobSum r(a.n_top_, a.n_bottom_);
  for (const auto& [d, dc] : a.terms_) r.add(d, c * dc);
  return r;
}

std::string BlobSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ") " << d.to_literal();
  }
  return os.str();
}

BlobSum compose_blob_sum(const BlobSum& a, const BlobSum& b) {
  if (a.n_bottom() != b.n_top())
    throw domain_error("compose_blob_sum: context mismatch");
  BlobSum r(a.n_top(), b.n_bottom());
  for (const auto& [da, ca] : a.terms()) {
    for (const auto& [db, cb] : b.terms()) {
      BlobComposeResult cr = compose_blob(da, db);
      r.add(cr.diagram, ca * cb * Poly::delta_pow(cr.plain_loops) *
                            Poly::deltap_pow(cr.blob_loops));
    }
  }
  return r;
}

RelationReport check_blob_relations(int n) {
  if (n < 2) throw domain_error("check_blob_relations: n must be >= 2");
  RelationReport rep;
  auto U = [&](int i) { return BlobSum(blob_u(i, n)); };
  BlobSum e(blob_e(n));
  auto prod = [](std::vector<BlobSum> fs) {
    BlobSum acc = fs.front();
    for (size_t k = 1; k < fs.size(); ++k) acc = compose_blob_sum(acc, fs[k]);
    return acc;
  };
  auto check = [&](const std::string& name, const BlobSum& lhs,
                   const BlobSum& rhs) {
    rep.checks.push_back({name, lhs == rhs});
  };
  for (int i = 1; i < n; ++i) {
    check("U_" + std::to_string(i) + "^2 = x U_" + std::to_string(i),
          prod({U(i), U(i)}), Poly::delta() * U(i));
    if (i + 1 < n) {
      check("U_" + std::to_string(i) + " U_" + std::to_string(i + 1) + " U_" +
                std::to_string(i) + " = U_" + std::to_string(i),
            prod({U(i), U(i + 1), U(i)}), U(i));
      check("U_" + std::to_string(i + 1) + " U_" + std::to_string(i) + " U_" +
                std::to_string(i + 1) + " = U_" + std::to_string(i + 1),
            prod({U(i + 1), U(i), U(i + 1)}), U(i + 1));
    }
    for (int j = i + 2; j < n; ++j)
      check("U_" + std::to_string(i) + " U_" + std::to_string(j) + " commute",
            prod({U(i), U(j)}), prod({U(j), U(i)}));
  }
  check("e e = e", prod({e, e}), e);
  check("U_1 e U_1 = y U_1", prod({U(1), e, U(1)}), Poly::deltap() * U(1));
  for (int i = 2; i < n; ++i)
    check("U_" + std::to_string(i) + " e = e U_" + std::to_string(i),
          prod({U(i), e}), prod({e, U(i)}));
  return rep;
}

BlobDiagram parse_blob(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || text.find("bB(") == std::string::npos)
    throw domain_error("blob literal must start with bB(m,n):");
  auto open = text.find('(');
  auto comma = text.find(',', open);
  auto close = text.find(')', comma);
  int m = std::stoi(text.substr(open + 1, comma - open - 1));
  int n = std::stoi(text.substr(comma + 1, close - comma - 1));
  // Reuse the diagram parser for the pair list, stripping the '*' marks.
  std::string body = text.substr(colon + 1);
  std::string plain;
  std::vector<bool> starred;
  for (size_t k = 0; k < body.size(); ++k) {
    if (body[k] == '*') {
      if (starred.empty()) throw domain_error("blob literal: stray '*'");
      starred.back() = true;
    } else {
      if (body[k] == ')') starred.push_back(false);
      plain += body[k];
    }
  }
  PairPartition p = parse_diagram("J(" + std::to_string(m) + "," +
                                  std::to_string(n) + "):" + plain);
  // Walk the plain body again pair by pair to map the stars.
  std::set<PosPair> marks;
  size_t pair_idx = 0;
  size_t pos = 0;
  auto skip_ws = [&](const std::string& s) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  };
  while (pair_idx < starred.size()) {
    skip_ws(plain);
    if (pos >= plain.size() || plain[pos] != '(')
      throw domain_error("blob literal: malformed pair list");
    ++pos;
    auto read_vertex = [&]() -> Vertex {
      skip_ws(plain);
      std::string num;
      while (pos < plain.size() &&
             std::isdigit(static_cast<unsigned char>(plain[pos])))
        num += plain[pos++];
      if (num.empty()) throw domain_error("blob literal: expected integer");
      if (pos < plain.size() && plain[pos] == '\'') {
        ++pos;
        return {Row::bottom, std::stoi(num)};
      }
      return {Row::top, std::stoi(num)};
    };
    Vertex a = read_vertex();
    skip_ws(plain);
    if (plain[pos] != ',') throw domain_error("blob literal: expected ','");
    ++pos;
    Vertex b = read_vertex();
    skip_ws(plain);
    if (plain[pos] != ')') throw domain_error("blob literal: expected ')'");
    ++pos;
    if (starred[pair_idx]) {
      int pa = p.disk_pos(a), pb = p.disk_pos(b);
      marks.insert({std::min(pa, pb), std::max(pa, pb)});
    }
    ++pair_idx;
  }
  return BlobDiagram(p, marks);
}

}  // namespace sbl
