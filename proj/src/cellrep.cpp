#include "sbl/cellrep.hpp"

#include <algorithm>
#include <map>

namespace sbl {

Poly bareiss_det(Matrix<Poly> m) {
  if (m.rows() != m.cols()) throw domain_error("bareiss_det: square only");
  const size_t n = m.rows();
  if (n == 0) return Poly(1);
  int sign = 1;
  Poly prev(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m(piv, k).is_zero()) ++piv;
      if (piv == n) return Poly(0);
      for (size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)).exact_div(prev);
    prev = m(k, k);
  }
  Poly det = m(n - 1, n - 1);
  return sign < 0 ? -det : det;
}

int rational_rank(Matrix<Rational> m) {
  size_t rank = 0;
  for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    size_t piv = rank;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(rank, j), m(piv, j));
    for (size_t i = rank + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) / m(rank, col);
      for (size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::string sign_suffix(Sign s) {
  switch (s) {
    case Sign::plus: return "+";
    case Sign::minus: return "-";
    case Sign::none: return "";
  }
  return "";
}

namespace {

const std::set<PairPartition>& height0_monoid(int n) {
  static std::map<int, std::set<PairPartition>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<PairPartition> gens;
  gens.push_back(PairPartition::sigma(1, n));
  for (int i = 1; i < n; ++i) gens.push_back(PairPartition::u_gen(i, n));
  return cache.emplace(n, monoid_closure(gens, n)).first->second;
}

int propagating_count(const PairPartition& d) {
  int count = 0;
  for (auto [a, b] : d.pairs())
    if (a <= d.n_top() && b > d.n_top()) ++count;
  return count;
}

// Keep top arcs and propagating pairs, reattach the propagating bottoms to
// Bottom 1..m preserving their index order.
PairPartition strip(const PairPartition& d, int m) {
  const int n = d.n_top();
  PairPartition h(n, m);
  std::vector<std::pair<int, int>> prop;  // (bottom index, top index)
  for (auto [a, b] : d.vertex_pairs()) {
    if (a.row == Row::top && b.row == Row::top) {
      h.set_pair(a, b);
    } else if (a.row != b.row) {
      Vertex top = a.row == Row::top ? a : b;
      Vertex bot = a.row == Row::bottom ? a : b;
      prop.emplace_back(bot.index, top.index);
    }
  }
  std::sort(prop.begin(), prop.end());
  for (size_t k = 0; k < prop.size(); ++k)
    h.set_pair({Row::top, prop[k].second},
               {Row::bottom, static_cast<int>(k) + 1});
  return h;
}

PairPartition swap_first_bottoms(const PairPartition& h) {
  PairPartition out(h.n_top(), h.n_bottom());
  for (auto [a, b] : h.vertex_pairs()) {
    auto remap = [](Vertex v) -> Vertex {
      if (v.row == Row::bottom && v.index == 1) return {Row::bottom, 2};
      if (v.row == Row::bottom && v.index == 2) return {Row::bottom, 1};
      return v;
    };
    out.set_pair(remap(a), remap(b));
  }
  return out;
}

// Bottom permutation of a half diagram, reading the propagating tops in
// increasing order.
std::vector<int> bottom_permutation(const PairPartition& h) {
  std::vector<std::pair<int, int>> prop;  // (top index, bottom index)
  for (auto [a, b] : h.vertex_pairs())
    if (a.row != b.row) {
      Vertex top = a.row == Row::top ? a : b;
      Vertex bot = a.row == Row::bottom ? a : b;
      prop.emplace_back(top.index, bot.index);
    }
  std::sort(prop.begin(), prop.end());
  std::vector<int> perm;
  for (auto [t, b] : prop) perm.push_back(b);
  return perm;
}

bool perm_is_identity(const std::vector<int>& perm) {
  for (size_t k = 0; k < perm.size(); ++k)
    if (perm[k] != static_cast<int>(k) + 1) return false;
  return true;
}

bool perm_is_first_swap(const std::vector<int>& perm) {
  if (perm.size() < 2) return false;
  if (perm[0] != 2 || perm[1] != 1) return false;
  for (size_t k = 2; k < perm.size(); ++k)
    if (perm[k] != static_cast<int>(k) + 1) return false;
  return true;
}

PairPartition normalize_half(const PairPartition& h) {
  auto perm = bottom_permutation(h);
  if (!perm_is_identity(perm) && !perm_is_first_swap(perm))
    throw internal_error("half diagram with permutation outside {id, (1 2)}");
  if (h.n_bottom() < 2) return h;
  PairPartition alt = swap_first_bottoms(h);
  return alt < h ? alt : h;
}

}  // namespace

std::vector<PairPartition> half_diagram_basis(int n, int m) {
  if (m < 0 || m > n || (n - m) % 2 != 0)
    throw domain_error("half_diagram_basis: need 0 <= m <= n, n-m even");
  std::set<PairPartition> seen;
  for (const auto& d : height0_monoid(n)) {
    if (propagating_count(d) != m) continue;
    seen.insert(normalize_half(strip(d, m)));
  }
  return std::vector<PairPartition>(seen.begin(), seen.end());
}

CellModule cell_module(int n, int m, Sign sign) {
  if ((m <= 1) != (sign == Sign::none))
    throw domain_error("cell_module: sign label applies exactly when m > 1");
  return CellModule{n, m, sign, half_diagram_basis(n, m)};
}

Poly gram_entry(const PairPartition& h1, const PairPartition& h2, Sign sign) {
  if (h1.n_top() != h2.n_top() || h1.n_bottom() != h2.n_bottom())
    throw domain_error("gram_entry: mismatched modules");
  ComposeResult r = compose(flip(h1), h2);
  for (auto [a, b] : r.diagram.vertex_pairs())
    if (a.row == b.row) return Poly(0);
  auto perm = bottom_permutation(r.diagram);
  Poly value = Poly::delta_pow(r.loops);
  if (perm_is_identity(perm)) return value;
  if (!perm_is_first_swap(perm))
    throw internal_error("gram_entry: permutation outside {id, (1 2)}");
  if (sign == Sign::none)
    throw internal_error("gram_entry: swap in a sign-free module");
  return sign == Sign::minus ? -value : value;
}

GramMatrix gram_matrix(int n, int m, Sign sign) {
  CellModule mod = cell_module(n, m, sign);
  const size_t dim = mod.basis.size();
  Matrix<Poly> entries(dim, dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = i; j < dim; ++j) {
      Poly v = gram_entry(mod.basis[i], mod.basis[j], sign);
      entries(i, j) = v;
      entries(j, i) = v;
    }
  return GramMatrix{std::move(mod), std::move(entries)};
}

Poly gram_det(const GramMatrix& g) { return bareiss_det(g.entries); }

Poly det_recurrence(int n, Sign sign) {
  if (n < 3) throw domain_error("det_recurrence: n must be >= 3");
  if (n >= 4 && sign == Sign::none)
    throw domain_error("det_recurrence: sign required for n >= 4");
  const Poly x = Poly::delta();
  Poly d3 = Poly::parse("(x-1)^2(x+2)");
  if (n == 3) return d3;
  Poly d4 = sign == Sign::plus ? Poly::parse("x(x-1)(x^2+x-4)")
                               : Poly::parse("(x-1)(x+1)(x-2)(x+2)");
  if (n == 4) return d4;
  Poly prev = d3, cur = d4;
  for (int k = 5; k <= n; ++k) {
    Poly next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

Poly det_closed_form(int n, Sign sign) {
  if (n < 3) throw domain_error("det_closed_form: n must be >= 3");
  if (n >= 4 && sign == Sign::none)
    throw domain_error("det_closed_form: sign required for n >= 4");
  const Poly x = Poly::delta();
  Poly dn3 = chebyshev_d(n - 3);
  Poly dn4 = n == 3 ? Poly(0) : chebyshev_d(n - 4);  // d_{-1} = 0
  if (sign == Sign::minus)
    return (x - Poly(1)) * (x + Poly(2)) *
           ((x - Poly(1)) * dn3 - Poly(2) * dn4);
  return (x - Poly(1)) *
         ((x + Poly(2)) * (x - Poly(1)) * dn3 - Poly(2) * x * dn4);
}

int rank_at(const GramMatrix& g, const Rational& x0) {
  const size_t dim = g.entries.rows();
  Matrix<Rational> m(dim, dim);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = 0; j < dim; ++j)
      m(i, j) = g.entries(i, j).eval(x0, Rational(0));
  return rational_rank(m);
}

Matrix<Poly> tl_tridiagonal(int k) {
  Matrix<Poly> m(k, k, Poly(0));
  for (int i = 0; i < k; ++i) {
    m(i, i) = Poly::delta();
    if (i + 1 < k) {
      m(i, i + 1) = Poly(1);
      m(i + 1, i) = Poly(1);
    }
  }
  return m;
}

const std::vector<DetIdentity>& det_identity_table() {
  static const std::vector<DetIdentity> table = {
      {"TL tridiag 5x5", 6, 4, Sign::none, true, "x^5-4x^3+3x"},
      {"D^3_1", 3, 1, Sign::none, false, "(x-1)^2(x+2)"},
      {"D^4_0", 4, 0, Sign::none, false, "(x-1)^2x^3(x+2)"},
      {"D^{4+}_2", 4, 2, Sign::plus, false, "(x-1)x(x^2+x-4)"},
      {"D^{4-}_2", 4, 2, Sign::minus, false, "(x-1)(x+1)(x-2)(x+2)"},
      {"D^5_1", 5, 1, Sign::none, false,
       "(x-1)^12(x+1)(x-2)(x+2)^6(x^2+x-4)"},
      {"D^{5+}_3", 5, 3, Sign::plus, false, "(x-1)(x^4+x^3-5x^2-x+2)"},
      {"D^{5-}_3", 5, 3, Sign::minus, false, "(x-1)(x+2)(x^3-x^2-3x+1)"},
      {"D^6_0", 6, 0, Sign::none, false,
       "(x-1)^12x^11(x+1)(x-2)(x+2)^6(x^2+x-4)"},
      {"D^{6+}_2", 6, 2, Sign::plus, false,
       "(x-1)^8x^5(x+1)(x-2)(x+2)(x^2+x-4)^6(x^4+x^3-5x^2-x+2)"},
      {"D^{6-}_2", 6, 2, Sign::minus, false,
       "(x-1)^8(x+1)^6(x-2)^6(x+2)^7(x^2+x-4)(x^3-x^2-3x+1)"},
      {"D^{6+}_4", 6, 4, Sign::plus, false, "(x-1)^2x(x^3+2x^2-4x-6)"},
      {"D^{6-}_4", 6, 4, Sign::minus, false, "(x-1)^2(x+2)(x^3-4x-2)"},
  };
  return table;
}

std::vector<DetRow> run_det_table(int max_n) {
  std::vector<DetRow> rows;
  for (const auto& id : det_identity_table()) {
    if (id.n > max_n) continue;
    DetRow row;
    row.identity = id;
    row.expanded = Poly::parse(id.factored);
    if (id.tl_reference) {
      auto m = tl_tridiagonal(5);
      row.dim = m.rows();
      row.computed = bareiss_det(m);
    } else {
      GramMatrix g = gram_matrix(id.n, id.m, id.sign);
      row.dim = g.entries.rows();
      row.computed = gram_det(g);
    }
    row.match = row.computed == row.expanded;
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<LaurentQ> spin_rep_U(int i, int n) {
  if (n < 2 || n > 12) throw domain_error("spin_rep_U: n out of range");
  if (i < 1 || i >= n) throw domain_error("spin_rep_U: index out of range");
  const size_t dim = size_t{1} << n;
  Matrix<LaurentQ> m(dim, dim, LaurentQ(0));
  const int hi = n - i, lo = n - i - 1;  // bit positions of sites i, i+1
  for (size_t r = 0; r < dim; ++r) {
    int bh = (r >> hi) & 1, bl = (r >> lo) & 1;
    if (bh == bl) continue;  // 00 and 11 rows vanish
    size_t flipped = r ^ ((size_t{1} << hi) | (size_t{1} << lo));
    m(r, r) = bh == 0 ? LaurentQ::q_pow(1) : LaurentQ::q_pow(-1);
    m(r, flipped) = LaurentQ(1);
  }
  return m;
}

Matrix<LaurentQ> spin_hamiltonian(int n) {
  Matrix<LaurentQ> h = spin_rep_U(1, n);
  for (int i = 2; i < n; ++i) h = h + spin_rep_U(i, n);
  return h;
}

VerifyReport verify_spin_relations(int n) {
  VerifyReport rep;
  rep.name = "spin representation TL relations at n = " + std::to_string(n);
  LaurentQ delta = qbracket(2);
  std::vector<Matrix<LaurentQ>> u;
  for (int i = 1; i < n; ++i) u.push_back(spin_rep_U(i, n));
  auto scale = [&](const LaurentQ& c, const Matrix<LaurentQ>& m) {
    Matrix<LaurentQ> r(m.rows(), m.cols());
    for (size_t a = 0; a < m.rows(); ++a)
      for (size_t b = 0; b < m.cols(); ++b) r(a, b) = c * m(a, b);
    return r;
  };
  for (int i = 0; i < n - 1; ++i) {
    ++rep.checked;
    if (u[i] * u[i] != scale(delta, u[i]))
      rep.fail("U_i^2 != [2] U_i at i=" + std::to_string(i + 1));
    if (i + 1 < n - 1) {
      ++rep.checked;
      if (u[i] * u[i + 1] * u[i] != u[i])
        rep.fail("U_i U_{i+1} U_i != U_i at i=" + std::to_string(i + 1));
      ++rep.checked;
      if (u[i + 1] * u[i] * u[i + 1] != u[i + 1])
        rep.fail("U_{i+1} U_i U_{i+1} != U_{i+1} at i=" + std::to_string(i + 1));
    }
    for (int j = i + 2; j < n - 1; ++j) {
      ++rep.checked;
      if (u[i] * u[j] != u[j] * u[i])
        rep.fail("U_i U_j commutation failed at (" + std::to_string(i + 1) +
                 "," + std::to_string(j + 1) + ")");
    }
  }
  return rep;
}

}  // namespace sbl
