#include "sbl/brauer.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace sbl {

ComposeResult compose(const PairPartition& p1, const PairPartition& p2) {
  p1.require_perfect("compose");
  p2.require_perfect("compose");
  if (p1.n_bottom() != p2.n_top())
    throw domain_error("compose: context mismatch J(" +
                       std::to_string(p1.n_top()) + "," +
                       std::to_string(p1.n_bottom()) + ") * J(" +
                       std::to_string(p2.n_top()) + "," +
                       std::to_string(p2.n_bottom()) + ")");
  const int m = p1.n_top(), n = p1.n_bottom(), q = p2.n_bottom();
  ComposeResult res{PairPartition(m, q), 0};

  // Walk states: boundary vertices of the result, and middle vertices.
  // mid_seen[j] marks middle vertex j (1-based) as consumed.
  std::vector<char> mid_seen(static_cast<size_t>(n) + 1, 0);

  struct Node {
    int layer;  // 0 = result top, 1 = middle, 2 = result bottom
    int index;  // 1-based row index
  };

  auto p1_next = [&](Node at) -> Node {
    // at is a vertex of p1: layer 0 -> Top(index), layer 1 -> Bottom(index)
    Vertex v = at.layer == 0 ? Vertex{Row::top, at.index}
                             : Vertex{Row::bottom, at.index};
    Vertex w = p1.vertex_at(*p1.partner_of(v));
    return w.row == Row::top ? Node{0, w.index} : Node{1, w.index};
  };
  auto p2_next = [&](Node at) -> Node {
    Vertex v = at.layer == 1 ? Vertex{Row::top, at.index}
                             : Vertex{Row::bottom, at.index};
    Vertex w = p2.vertex_at(*p2.partner_of(v));
    return w.row == Row::top ? Node{1, w.index} : Node{2, w.index};
  };
  auto result_vertex = [&](Node at) -> Vertex {
    return at.layer == 0 ? Vertex{Row::top, at.index}
                         : Vertex{Row::bottom, at.index};
  };

  auto trace_from = [&](Node start, bool via_p1) {
    Node at = start;
    bool use_p1 = via_p1;
    while (true) {
      Node nxt = use_p1 ? p1_next(at) : p2_next(at);
      if (nxt.layer == 1) {
        mid_seen[nxt.index] = 1;
        at = nxt;
        use_p1 = !use_p1;
      } else {
        res.diagram.set_pair(result_vertex(start), result_vertex(nxt));
        return;
      }
    }
  };

  for (int i = 1; i <= m; ++i) {
    Node start{0, i};
    if (res.diagram.has_partner(res.diagram.disk_pos({Row::top, i}))) continue;
    trace_from(start, true);
  }
  for (int k = 1; k <= q; ++k) {
    if (res.diagram.has_partner(res.diagram.disk_pos({Row::bottom, k})))
      continue;
    trace_from(Node{2, k}, false);
  }
  // Remaining middle vertices sit on closed all-middle chains; each
  // alternates p1 and p2 pairs and closes back at its start.
  for (int j = 1; j <= n; ++j) {
    if (mid_seen[j]) continue;
    ++res.loops;
    int at = j;
    bool use_p1 = true;
    do {
      mid_seen[at] = 1;
      Node nxt = use_p1 ? p1_next(Node{1, at}) : p2_next(Node{1, at});
      at = nxt.index;
      use_p1 = !use_p1;
    } while (!(at == j && use_p1));
  }
  return res;
}

void DiagramSum::add(const PairPartition& p, const Poly& coeff) {
  if (p.n_top() != n_top_ || p.n_bottom() != n_bottom_)
    throw domain_error("DiagramSum: context mismatch");
  if (coeff.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiagramSum operator+(const DiagramSum& a, const DiagramSum& b) {
  if (a.n_top_ != b.n_top_ || a.n_bottom_ != b.n_bottom_)
    throw domain_error("DiagramSum +: context mismatch");
  DiagramSum r = a;
  for (const auto& [p, c] : b.terms_) r.add(p, c);
  return r;
}

DiagramSum operator-(const DiagramSum& a, const DiagramSum& b) {
  if (a.n_top_ != b.n_top_ || a.n_bottom_ != b.n_bottom_)
    throw domain_error("DiagramSum -: context mismatch");
  DiagramSum r = a;
  for (const auto& [p, c] : b.terms_) r.add(p, -c);
  return r;
}

DiagramSum operator*(const Poly& c, const DiagramSum& a) {
  DiagramSum r(a.n_top_, a.n_bottom_);
  for (const auto& [p, pc] : a.terms_) r.add(p, c * pc);
  return r;
}

DiagramSum DiagramSum::subst_deltap(const Poly& value) const {
  DiagramSum r(n_top_, n_bottom_);
  for (const auto& [p, c] : terms_) r.add(p, c.subst_deltap(value));
  return r;
}

std::string DiagramSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ") " << p.to_literal();
  }
  return os.str();
}

DiagramSum compose_sum(const DiagramSum& a, const DiagramSum& b) {
  if (a.n_bottom() != b.n_top())
    throw domain_error("compose_sum: context mismatch");
  DiagramSum r(a.n_top(), b.n_bottom());
  for (const auto& [p, cp] : a.terms()) {
    for (const auto& [q, cq] : b.terms()) {
      ComposeResult pr = compose(p, q);
      r.add(pr.diagram, cp * cq * Poly::delta_pow(pr.loops));
    }
  }
  return r;
}

PairPartition generator(GenName name, int n) {
  switch (name.kind) {
    case GenKind::sigma:
      return PairPartition::sigma(name.index, n);
    case GenKind::u:
      return PairPartition::u_gen(name.index, n);
  }
  throw domain_error("unknown generator");
}

std::vector<GenName> GeneratorSet::names() const {
  std::vector<GenName> out;
  switch (kind) {
    case Kind::brauer:
      for (int i = 1; i < rank; ++i) out.push_back({GenKind::sigma, i});
      for (int i = 1; i < rank; ++i) out.push_back({GenKind::u, i});
      break;
    case Kind::tl:
      for (int i = 1; i < rank; ++i) out.push_back({GenKind::u, i});
      break;
    case Kind::coxeter:
      for (int i = 1; i <= l - 1; ++i) out.push_back({GenKind::sigma, i});
      for (int i = m; i <= rank - 1; ++i) out.push_back({GenKind::u, i});
      break;
  }
  return out;
}

std::vector<PairPartition> GeneratorSet::diagrams() const {
  std::vector<PairPartition> out;
  for (GenName g : names()) out.push_back(generator(g, rank));
  return out;
}

namespace {

DiagramSum word(const std::vector<PairPartition>& factors) {
  DiagramSum acc(factors.front());
  for (size_t i = 1; i < factors.size(); ++i)
    acc = compose_sum(acc, DiagramSum(factors[i]));
  return acc;
}

void check_eq(RelationReport& rep, const std::string& name,
              const DiagramSum& lhs, const DiagramSum& rhs) {
  rep.checks.push_back({name, lhs == rhs});
}

}  // namespace

RelationReport check_relations(const GeneratorSet& gens) {
  if (gens.rank < 2) throw domain_error("check_relations: rank must be >= 2");
  RelationReport rep;
  const int n = gens.rank;
  DiagramSum one(PairPartition::identity(n));
  auto names = gens.names();
  std::vector<int> sigmas, us;
  for (GenName g : names)
    (g.kind == GenKind::sigma ? sigmas : us).push_back(g.index);
  auto S = [&](int i) { return PairPartition::sigma(i, n); };
  auto U = [&](int i) { return PairPartition::u_gen(i, n); };
  auto has = [](const std::vector<int>& v, int i) {
    return std::find(v.begin(), v.end(), i) != v.end();
  };

  for (int i : us) {
    check_eq(rep, "U_" + std::to_string(i) + "^2 = x U_" + std::to_string(i),
             word({U(i), U(i)}), Poly::delta() * DiagramSum(U(i)));
    for (int j : us) {
      if (j == i + 1 || j == i - 1) {
        check_eq(rep,
                 "U_" + std::to_string(i) + " U_" + std::to_string(j) + " U_" +
                     std::to_string(i) + " = U_" + std::to_string(i),
                 word({U(i), U(j), U(i)}), DiagramSum(U(i)));
      } else if (j > i + 1) {
        check_eq(rep,
                 "U_" + std::to_string(i) + " U_" + std::to_string(j) +
                     " = U_" + std::to_string(j) + " U_" + std::to_string(i),
                 word({U(i), U(j)}), word({U(j), U(i)}));
      }
    }
  }
  for (int i : sigmas) {
    check_eq(rep, "sigma_" + std::to_string(i) + "^2 = 1",
             word({S(i), S(i)}), one);
    if (has(sigmas, i + 1)) {
      check_eq(rep,
               "braid(" + std::to_string(i) + "," + std::to_string(i + 1) + ")",
               word({S(i), S(i + 1), S(i)}), word({S(i + 1), S(i), S(i + 1)}));
    }
    for (int j : sigmas)
      if (j > i + 1)
        check_eq(rep,
                 "sigma_" + std::to_string(i) + " sigma_" + std::to_string(j) +
                     " commute",
                 word({S(i), S(j)}), word({S(j), S(i)}));
    for (int j : us) {
      if (j == i) {
        check_eq(rep,
                 "sigma_" + std::to_string(i) + " U_" + std::to_string(i) +
                     " = U_" + std::to_string(i),
                 word({S(i), U(i)}), DiagramSum(U(i)));
        check_eq(rep,
                 "U_" + std::to_string(i) + " sigma_" + std::to_string(i) +
                     " = U_" + std::to_string(i),
                 word({U(i), S(i)}), DiagramSum(U(i)));
      } else if (j == i + 1 || j == i - 1) {
        check_eq(rep,
                 "U_" + std::to_string(j) + " sigma_" + std::to_string(i) +
                     " U_" + std::to_string(j) + " = U_" + std::to_string(j),
                 word({U(j), S(i), U(j)}), DiagramSum(U(j)));
      } else {
        check_eq(rep,
                 "sigma_" + std::to_string(i) + " U_" + std::to_string(j) +
                     " commute",
                 word({S(i), U(j)}), word({U(j), S(i)}));
      }
    }
  }
  return rep;
}

std::set<PairPartition> monoid_closure(const std::vector<PairPartition>& gens,
                                       int n, size_t cap) {
  std::set<PairPartition> seen;
  std::deque<PairPartition> frontier;
  auto push = [&](const PairPartition& p) {
    if (seen.insert(p).second) {
      if (seen.size() > cap)
        throw resource_limit_error("monoid_closure: cap exceeded");
      frontier.push_back(p);
    }
  };
  push(PairPartition::identity(n));
  for (const auto& g : gens) {
    if (g.n_top() != n || g.n_bottom() != n)
      throw domain_error("monoid_closure: generator not in J(n,n)");
    push(g);
  }
  while (!frontier.empty()) {
    PairPartition p = frontier.front();
    frontier.pop_front();
    for (const auto& g : gens) {
      push(compose(p, g).diagram);
      push(compose(g, p).diagram);
    }
  }
  return seen;
}

}  // namespace sbl
