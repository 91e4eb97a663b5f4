#include "sbl/iso.hpp"

#include <algorithm>

namespace sbl {

Chain chain_x(const std::vector<PosPair>& s, int m, int n) {
  const int new_points = m + n + 2;
  Chain x;
  if (s.empty()) {
    x.links.push_back({1, new_points});  // {Top 1, Bottom 1}
    return x;
  }
  std::vector<PosPair> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  for (size_t k = 0; k + 1 < sorted.size(); ++k)
    if (!(sorted[k].second < sorted[k + 1].first))
      throw domain_error("chain_x: marked pairs must be sequential in disk order");
  x.links.push_back({1, sorted.front().second + 1});
  for (size_t k = 0; k + 1 < sorted.size(); ++k)
    x.links.push_back({sorted[k].first + 1, sorted[k + 1].second + 1});
  x.links.push_back({sorted.back().first + 1, new_points});
  if (!is_chain(x.links)) throw internal_error("chain_x: not a chain");
  return x;
}

std::vector<PosPair> chain_xbar(const Chain& x, int m_plus_1, int n_plus_1) {
  const int new_points = m_plus_1 + n_plus_1;
  if (!is_chain(x.links)) throw domain_error("chain_xbar: not a chain");
  if (x.links.front().first != 1 || x.links.back().second != new_points)
    throw domain_error("chain_xbar: chain must run from Top 1 to Bottom 1");
  std::vector<PosPair> s;
  // links: {1, r_1+1}, {l_1+1, r_2+1}, ..., {l_j+1, 1'}; glue the k-th
  // left endpoint after the anchor with the k-th right endpoint.
  for (size_t k = 0; k + 1 < x.links.size(); ++k)
    s.push_back({x.links[k + 1].first - 1, x.links[k].second - 1});
  return s;
}

PairPartition psi(const BlobDiagram& b) {
  const int m = b.p.n_top(), n = b.p.n_bottom();
  PairPartition out(m + 1, n + 1);
  std::vector<PosPair> s(b.blobs.begin(), b.blobs.end());
  Chain x = chain_x(s, m, n);
  for (auto [l, r] : x.links) out.set_pair(l, r);
  for (auto pr : b.p.pairs())
    if (!b.blobs.count(pr)) out.set_pair(pr.first + 1, pr.second + 1);
  out.require_perfect("psi");
  return out;
}

BlobDiagram psi_inv(const PairPartition& p) {
  auto dec = li_chain_decompose(p, 1);
  if (!dec) throw domain_error("psi_inv: partition is not L1-chain");
  const Chain& x = dec->chains.front();
  std::vector<PosPair> s = chain_xbar(x, p.n_top(), p.n_bottom());
  PairPartition q(p.n_top() - 1, p.n_bottom() - 1);
  for (auto pr : dec->remainder) q.set_pair(pr.first - 1, pr.second - 1);
  for (auto pr : s) q.set_pair(pr.first, pr.second);
  q.require_perfect("psi_inv");
  return BlobDiagram(q, std::set<PosPair>(s.begin(), s.end()));
}

DiagramSum phi(const BlobDiagram& b) {
  std::vector<PosPair> s(b.blobs.begin(), b.blobs.end());
  DiagramSum out(b.p.n_top() + 1, b.p.n_bottom() + 1);
  size_t subsets = size_t{1} << s.size();
  Poly weight(Rational(Int(1), Int(1) << s.size()));
  for (size_t mask = 0; mask < subsets; ++mask) {
    std::set<PosPair> z;
    for (size_t bit = 0; bit < s.size(); ++bit)
      if (mask & (size_t{1} << bit)) z.insert(s[bit]);
    out.add(psi(BlobDiagram(b.p, std::move(z))), weight);
  }
  return out;
}

DiagramSum phi(const BlobSum& s) {
  DiagramSum out(s.n_top() + 1, s.n_bottom() + 1);
  for (const auto& [d, c] : s.terms()) {
    DiagramSum img = phi(d);
    for (const auto& [p, pc] : img.terms()) out.add(p, c * pc);
  }
  return out;
}

PairPartition overline_embed(const PairPartition& p, int r) {
  const int s = p.n_top(), t = p.n_bottom();
  if (r < s || r < t) throw domain_error("overline_embed: r too small");
  if ((r - s) % 2 != 0 || (r - t) % 2 != 0)
    throw domain_error("overline_embed: parity mismatch");
  PairPartition out = p;
  for (int k = 0; k < (r - t) / 2; ++k) out = tensor(out, PairPartition::cup());
  for (int k = 0; k < (r - s) / 2; ++k) out = tensor(out, PairPartition::cap());
  return out;
}

DiagramSum theta_u(int i, int n) {
  return DiagramSum(PairPartition::u_gen(i + 1, n + 1));
}

DiagramSum theta_e(int n) {
  DiagramSum img(PairPartition::identity(n + 1), Poly(Rational(Int(1), Int(2))));
  img.add(PairPartition::sigma(1, n + 1), Poly(Rational(Int(1), Int(2))));
  return img;
}

namespace {

const Poly& deltap_as_half_delta_plus_one() {
  static const Poly v =
      Poly(Rational(Int(1), Int(2))) * (Poly::delta() + Poly(1));
  return v;
}

DiagramSum word(const std::vector<DiagramSum>& fs) {
  DiagramSum acc = fs.front();
  for (size_t k = 1; k < fs.size(); ++k) acc = compose_sum(acc, fs[k]);
  return acc;
}

}  // namespace

VerifyReport verify_theta(int n) {
  if (n < 2) throw domain_error("verify_theta: n must be >= 2");
  VerifyReport rep;
  rep.name = "theta isomorphism at rank " + std::to_string(n);
  const Poly dp = deltap_as_half_delta_plus_one();
  auto U = [&](int i) { return theta_u(i, n); };
  DiagramSum e = theta_e(n);
  auto check = [&](const std::string& what, const DiagramSum& lhs,
                   const DiagramSum& rhs) {
    ++rep.checked;
    if (lhs != rhs) rep.fail(what);
  };
  // Images of the tau' relations; delta' is replaced by (delta+1)/2.
  for (int i = 1; i < n; ++i) {
    check("U_i^2 = x U_i at i=" + std::to_string(i), word({U(i), U(i)}),
          Poly::delta() * U(i));
    if (i + 1 < n) {
      check("U_i U_{i+1} U_i = U_i at i=" + std::to_string(i),
            word({U(i), U(i + 1), U(i)}), U(i));
      check("U_{i+1} U_i U_{i+1} = U_{i+1} at i=" + std::to_string(i),
            word({U(i + 1), U(i), U(i + 1)}), U(i + 1));
    }
    for (int j = i + 2; j < n; ++j)
      check("U_i U_j commute (" + std::to_string(i) + "," + std::to_string(j) +
                ")",
            word({U(i), U(j)}), word({U(j), U(i)}));
  }
  check("e e = e", word({e, e}), e);
  check("U_1 e U_1 = y U_1 with y = (x+1)/2", word({U(1), e, U(1)}),
        dp * U(1));
  for (int i = 2; i < n; ++i)
    check("U_i e = e U_i at i=" + std::to_string(i), word({U(i), e}),
          word({e, U(i)}));

  // Injectivity via the dimension count, surjectivity via the chain basis:
  // psi maps the blob basis bijectively onto the monoid closure of
  // {sigma_1, U_2..U_n} in J(n+1,n+1).
  auto blob_basis = enumerate_blob(n, n);
  std::vector<PairPartition> gens;
  gens.push_back(PairPartition::sigma(1, n + 1));
  for (int i = 2; i <= n; ++i) gens.push_back(PairPartition::u_gen(i, n + 1));
  auto closure = monoid_closure(gens, n + 1);
  rep.sizes["blob_basis"] = blob_basis.size();
  rep.sizes["closure"] = closure.size();
  ++rep.checked;
  if (blob_basis.size() != closure.size())
    rep.fail("dimension mismatch: |bB| != |closure|");
  std::set<PairPartition> image;
  for (const auto& b : blob_basis) image.insert(psi(b));
  ++rep.checked;
  if (image != closure) rep.fail("psi image differs from the chain basis set");
  return rep;
}

VerifyReport verify_phi_functor(int m, int n, int q) {
  VerifyReport rep;
  rep.name = "phi functor on bB(" + std::to_string(m) + "," +
             std::to_string(n) + ") x bB(" + std::to_string(n) + "," +
             std::to_string(q) + ")";
  const Poly dp = deltap_as_half_delta_plus_one();
  auto left = enumerate_blob(m, n);
  auto right = enumerate_blob(n, q);
  rep.sizes["left"] = left.size();
  rep.sizes["right"] = right.size();
  for (const auto& a : left) {
    DiagramSum fa = phi(a);
    for (const auto& b : right) {
      ++rep.checked;
      BlobComposeResult ab = compose_blob(a, b);
      DiagramSum lhs = compose_sum(fa, phi(b));
      DiagramSum rhs =
          (Poly::delta_pow(ab.plain_loops) * dp.pow(ab.blob_loops)) *
          phi(ab.diagram);
      if (lhs != rhs)
        rep.fail("phi(a)*phi(b) != phi(a o b) for a=" + a.to_literal() +
                 " b=" + b.to_literal());
    }
  }
  // Tensor compatibility: phi(p (x) p0, s) = phi(p,s) (x) p0 over small p0.
  std::vector<PairPartition> paddings = {PairPartition::cup(),
                                         PairPartition::cap(),
                                         PairPartition::identity(1)};
  for (const auto& a : left) {
    for (const auto& p0 : paddings) {
      ++rep.checked;
      BlobDiagram padded = blob_tensor(a, p0);
      DiagramSum lhs = phi(padded);
      DiagramSum rhs(lhs.n_top(), lhs.n_bottom());
      DiagramSum img = phi(a);
      for (const auto& [d, c] : img.terms()) rhs.add(tensor(d, p0), c);
      if (lhs != rhs)
        rep.fail("phi(a (x) p0) != phi(a) (x) p0 for a=" + a.to_literal());
    }
  }
  return rep;
}

}  // namespace sbl
