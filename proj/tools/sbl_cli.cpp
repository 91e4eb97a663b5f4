// Command-line workbench: enumeration, composition, verification suites,
// Gram/determinant tables, and the spin-chain matrices.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or input error, 3 resource limit exceeded.

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include "sbl/cellrep.hpp"
#include "sbl/iso.hpp"
#include "sbl/json_io.hpp"

using namespace sbl;

namespace {

struct Options {
  std::string format = "table";
  int m = 0, n = 0, q = 0, i = 1;
  int max_n = 6;
  std::string set = "J";
  std::string lambda;
  std::string kind = "tl";
  bool count_only = false;
  std::string delta_str, deltap_str;
  std::string rank_at_str;
  bool want_det = false;
  double eval_q = 0.0;
  bool has_eval_q = false;
  std::vector<std::string> literals;
  int l = 2;
  int cox_m = 2;
};

std::pair<int, Sign> parse_lambda(const std::string& s) {
  if (s.empty()) throw domain_error("--lambda required, e.g. 4+ or 1");
  std::string digits = s;
  Sign sign = Sign::none;
  if (digits.back() == '+') {
    sign = Sign::plus;
    digits.pop_back();
  } else if (digits.back() == '-') {
    sign = Sign::minus;
    digits.pop_back();
  }
  int m = std::stoi(digits);
  if (m > 1 && sign == Sign::none)
    throw domain_error("--lambda: sign (+ or -) required for m > 1");
  return {m, sign};
}

int report_exit(const VerifyReport& rep, const Options& opt) {
  if (opt.format == "json") {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    std::cout << rep.name << ": " << (rep.pass() ? "pass" : "FAIL")
              << " (checked " << rep.checked << ")\n";
    for (const auto& [k, v] : rep.sizes)
      std::cout << "  " << k << " = " << v << "\n";
    for (const auto& f : rep.failures) std::cout << "  failure: " << f << "\n";
  }
  return rep.pass() ? 0 : 1;
}

int relation_exit(const RelationReport& rep, const Options& opt) {
  if (opt.format == "json") {
    std::cout << to_json(rep).dump(2) << "\n";
  } else {
    for (const auto& c : rep.checks)
      std::cout << (c.pass ? "  pass  " : "  FAIL  ") << c.name << "\n";
    std::cout << (rep.all_pass() ? "all pass" : "FAILURES") << " ("
              << rep.checked() << " relations)\n";
  }
  return rep.all_pass() ? 0 : 1;
}

int cmd_enumerate(const Options& opt) {
  if (opt.set == "blob") {
    auto out = enumerate_blob(opt.m, opt.n);
    if (opt.count_only) {
      std::cout << out.size() << "\n";
      return 0;
    }
    if (opt.format == "json") {
      json arr = json::array();
      for (const auto& b : out) arr.push_back(b.to_literal());
      std::cout << arr.dump(2) << "\n";
    } else {
      for (const auto& b : out) std::cout << b.to_literal() << "\n";
    }
    return 0;
  }
  std::vector<PairPartition> out;
  if (opt.set == "J") {
    out = enumerate_J(opt.m, opt.n);
  } else if (opt.set == "noncrossing") {
    out = enumerate_J(opt.m, opt.n, EnumFilter::noncrossing);
  } else if (opt.set == "lichain") {
    out = enumerate_li_chain(opt.m, opt.n, opt.i);
  } else {
    throw domain_error("unknown --set " + opt.set);
  }
  if (opt.count_only) {
    std::cout << out.size() << "\n";
    return 0;
  }
  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& p : out) arr.push_back(p.to_literal());
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& p : out) std::cout << p.to_literal() << "\n";
  }
  return 0;
}

int cmd_compose(const Options& opt) {
  if (opt.literals.size() != 2)
    throw domain_error("compose needs exactly two diagram literals");
  bool blob = opt.literals[0].find("bB") != std::string::npos;
  json out;
  Poly scalar;
  std::string diagram;
  if (blob) {
    BlobComposeResult r =
        compose_blob(parse_blob(opt.literals[0]), parse_blob(opt.literals[1]));
    scalar = Poly::delta_pow(r.plain_loops) * Poly::deltap_pow(r.blob_loops);
    diagram = r.diagram.to_literal();
    out["plain_loops"] = r.plain_loops;
    out["blob_loops"] = r.blob_loops;
  } else {
    ComposeResult r = compose(parse_diagram(opt.literals[0]),
                              parse_diagram(opt.literals[1]));
    scalar = Poly::delta_pow(r.loops);
    diagram = r.diagram.to_literal();
    out["loops"] = r.loops;
  }
  out["diagram"] = diagram;
  out["scalar"] = scalar.to_string();
  if (!opt.delta_str.empty()) {
    Rational d = parse_rational(opt.delta_str);
    Rational dp = opt.deltap_str.empty() ? Rational(0)
                                         : parse_rational(opt.deltap_str);
    out["scalar_value"] = scalar.eval(d, dp).str();
  }
  if (opt.format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "(" << out["scalar"].get<std::string>() << ") " << diagram
              << "\n";
    if (out.contains("scalar_value"))
      std::cout << "scalar at (delta,delta') = "
                << out["scalar_value"].get<std::string>() << "\n";
  }
  return 0;
}

int cmd_gram(const Options& opt) {
  auto [m, sign] = parse_lambda(opt.lambda);
  GramMatrix g = gram_matrix(opt.n, m, sign);
  if (opt.format == "json") {
    json out = to_json(g);
    if (opt.want_det) out["det"] = gram_det(g).to_string();
    if (!opt.rank_at_str.empty())
      out["rank"] = rank_at(g, parse_rational(opt.rank_at_str));
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (opt.format == "csv") {
    for (size_t i = 0; i < g.entries.rows(); ++i) {
      for (size_t j = 0; j < g.entries.cols(); ++j)
        std::cout << (j ? "," : "") << g.entries(i, j).to_string();
      std::cout << "\n";
    }
  } else {
    std::cout << "module (" << g.module.n << "," << g.module.m
              << sign_suffix(g.module.sign) << "), dim "
              << g.module.basis.size() << "\n";
    for (size_t i = 0; i < g.entries.rows(); ++i) {
      for (size_t j = 0; j < g.entries.cols(); ++j)
        std::cout << (j ? "  " : "") << g.entries(i, j).to_string();
      std::cout << "\n";
    }
  }
  if (opt.want_det) std::cout << "det = " << gram_det(g).to_string() << "\n";
  if (!opt.rank_at_str.empty())
    std::cout << "rank at " << opt.rank_at_str << " = "
              << rank_at(g, parse_rational(opt.rank_at_str)) << "\n";
  return 0;
}

int cmd_dets(const Options& opt) {
  auto rows = run_det_table(opt.max_n);
  bool all = true;
  for (const auto& r : rows) all &= r.match;
  if (opt.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"label", r.identity.label},
                     {"n", r.identity.n},
                     {"m", r.identity.m},
                     {"sign", r.identity.tl_reference
                                  ? "TL"
                                  : sign_suffix(r.identity.sign)},
                     {"dim", r.dim},
                     {"det", r.computed.to_string()},
                     {"match", r.match}});
    }
    std::cout << arr.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << "label,n,m,sign,dim,det,match\n";
    for (const auto& r : rows)
      std::cout << r.identity.label << "," << r.identity.n << ","
                << r.identity.m << ","
                << (r.identity.tl_reference ? "TL"
                                            : sign_suffix(r.identity.sign))
                << "," << r.dim << ",\"" << r.computed.to_string() << "\","
                << (r.match ? "true" : "false") << "\n";
  } else {
    for (const auto& r : rows)
      std::cout << (r.match ? "  ok   " : "  FAIL ") << r.identity.label
                << "  dim " << r.dim << "  det = " << r.computed.to_string()
                << "\n";
    std::cout << rows.size() << " identities, "
              << (all ? "all match" : "MISMATCHES") << "\n";
  }
  return all ? 0 : 1;
}

// Jacobi eigenvalues of a symmetric matrix; display only.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
  const size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (size_t p = 0; p < n; ++p)
      for (size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-15) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

int cmd_spin(const Options& opt) {
  if (opt.has_eval_q) {
    auto h = spin_hamiltonian(opt.n);
    std::vector<std::vector<double>> num(h.rows(),
                                         std::vector<double>(h.cols(), 0.0));
    for (size_t r = 0; r < h.rows(); ++r)
      for (size_t c = 0; c < h.cols(); ++c)
        num[r][c] = h(r, c).eval_double(opt.eval_q);
    auto ev = symmetric_eigenvalues(std::move(num));
    std::cout << "spectrum of H at q = " << opt.eval_q << ":\n";
    for (double v : ev) std::cout << "  " << v << "\n";
    return 0;
  }
  auto rep = verify_spin_relations(opt.n);
  Matrix<LaurentQ> m =
      opt.i > 0 ? spin_rep_U(opt.i, opt.n) : spin_hamiltonian(opt.n);
  if (opt.format == "json") {
    json rows = json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
      rows.push_back(std::move(row));
    }
    json out;
    out["matrix"] = std::move(rows);
    out["relations"] = to_json(rep);
    std::cout << out.dump(2) << "\n";
  } else {
    for (size_t r = 0; r < m.rows(); ++r) {
      for (size_t c = 0; c < m.cols(); ++c)
        std::cout << (c ? " | " : "") << m(r, c).to_string();
      std::cout << "\n";
    }
    std::cout << "TL relations: " << (rep.pass() ? "pass" : "FAIL") << "\n";
  }
  return rep.pass() ? 0 : 1;
}

int cmd_verify_all() {
  int bad = 0;
  auto note = [&](const std::string& name, bool pass) {
    std::cout << (pass ? "  pass  " : "  FAIL  ") << name << "\n";
    if (!pass) ++bad;
  };
  note("TL relations n=4", check_relations(GeneratorSet::tl(4)).all_pass());
  note("Brauer relations n=4",
       check_relations(GeneratorSet::brauer(4)).all_pass());
  note("blob relations n=3", check_blob_relations(3).all_pass());
  for (int n = 2; n <= 3; ++n)
    note("theta n=" + std::to_string(n), verify_theta(n).pass());
  note("phi functor (1,1,1)", verify_phi_functor(1, 1, 1).pass());
  note("phi functor (2,2,2)", verify_phi_functor(2, 2, 2).pass());
  note("phi functor (1,3,1)", verify_phi_functor(1, 3, 1).pass());
  for (int m = 2; m <= 4; ++m)
    note("chain basis i=1, m=" + std::to_string(m),
         verify_chain_basis_theorem(1, m).pass());
  note("chain basis i=2, m=4", verify_chain_basis_theorem(2, 4).pass());
  note("module closure (1,3,3)", verify_module_closure(1, 3, 3).pass());
  note("module closure (2,4,4)", verify_module_closure(2, 4, 4).pass());
  note("spin relations n=4", verify_spin_relations(4).pass());
  note("determinant table", [] {
    for (const auto& r : run_det_table(5))
      if (!r.match) return false;
    return true;
  }());
  std::cout << (bad == 0 ? "all pass" : "FAILURES") << "\n";
  return bad == 0 ? 0 : 1;
}

int cmd_iso_map(const Options& opt, bool use_phi) {
  if (opt.literals.size() != 1)
    throw domain_error("expected one blob literal");
  BlobDiagram b = parse_blob(opt.literals[0]);
  if (use_phi) {
    DiagramSum img = phi(b);
    if (opt.format == "json")
      std::cout << to_json(img).dump(2) << "\n";
    else
      std::cout << img.to_string() << "\n";
  } else {
    PairPartition img = psi(b);
    if (opt.format == "json")
      std::cout << json({{"diagram", img.to_literal()}}).dump(2) << "\n";
    else
      std::cout << img.to_literal() << "\n";
  }
  return 0;
}

int cmd_iso_psi_inv(const Options& opt) {
  if (opt.literals.size() != 1)
    throw domain_error("expected one diagram literal");
  BlobDiagram b = psi_inv(parse_diagram(opt.literals[0]));
  if (opt.format == "json")
    std::cout << json({{"diagram", b.to_literal()}}).dump(2) << "\n";
  else
    std::cout << b.to_literal() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for Brauer-type diagram categories"};
  app.require_subcommand(1);
  Options opt;

  auto* enumerate = app.add_subcommand("enumerate", "List diagram sets");
  enumerate->add_option("--set", opt.set, "J | noncrossing | lichain | blob");
  enumerate->add_option("--m", opt.m)->required();
  enumerate->add_option("--n", opt.n)->required();
  enumerate->add_option("--i", opt.i, "chain count for --set lichain");
  enumerate->add_flag("--count", opt.count_only, "print only the size");
  enumerate->add_option("--format", opt.format, "table | json");

  auto* compose_cmd = app.add_subcommand("compose", "Compose two literals");
  compose_cmd
      ->add_option("literals", opt.literals, "two diagram/blob literals")
      ->expected(2);
  compose_cmd->add_option("--delta", opt.delta_str, "evaluate scalar");
  compose_cmd->add_option("--deltap", opt.deltap_str, "evaluate scalar");
  compose_cmd->add_option("--format", opt.format);

  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->require_subcommand(1);
  auto* v_rel = verify->add_subcommand("relations", "generator relations");
  v_rel->add_option("--kind", opt.kind, "tl | brauer | blob | coxeter");
  v_rel->add_option("--n", opt.n)->required();
  v_rel->add_option("--l", opt.l, "coxeter: sigma_1..sigma_{l-1}");
  v_rel->add_option("--m", opt.cox_m, "coxeter: U_m..U_{n-1}");
  v_rel->add_option("--format", opt.format);
  auto* v_theta = verify->add_subcommand("theta", "theta isomorphism");
  v_theta->add_option("--n", opt.n)->required();
  v_theta->add_option("--format", opt.format);
  auto* v_phi = verify->add_subcommand("phi", "phi functor identity");
  v_phi->add_option("--m", opt.m)->required();
  v_phi->add_option("--n", opt.n)->required();
  v_phi->add_option("--q", opt.q)->required();
  v_phi->add_option("--format", opt.format);
  auto* v_mt3 = verify->add_subcommand("mt3", "chain-basis theorem");
  v_mt3->add_option("--i", opt.i)->required();
  v_mt3->add_option("--m", opt.m)->required();
  v_mt3->add_option("--format", opt.format);
  auto* v_mod = verify->add_subcommand("module-closure", "left-action closure");
  v_mod->add_option("--i", opt.i)->required();
  v_mod->add_option("--m", opt.m)->required();
  v_mod->add_option("--n", opt.n)->required();
  v_mod->add_option("--format", opt.format);
  auto* v_all = verify->add_subcommand("all", "run the default suite");
  bool small = false;
  v_all->add_flag("--small", small, "default caps (always on)");

  auto* gram = app.add_subcommand("gram", "Standard-module Gram matrix");
  gram->add_option("--n", opt.n)->required();
  gram->add_option("--lambda", opt.lambda, "m with sign, e.g. 4+ or 1")
      ->required();
  gram->add_option("--format", opt.format, "table | json | csv");
  gram->add_option("--out", opt.format, "alias of --format");
  gram->add_flag("--det", opt.want_det, "print the determinant");
  gram->add_option("--rank-at", opt.rank_at_str, "rank at a rational point");

  auto* dets = app.add_subcommand("dets", "Determinant identity table");
  dets->add_option("--max-n", opt.max_n);
  dets->add_option("--format", opt.format, "table | json | csv");

  auto* spin = app.add_subcommand("spin", "Spin-chain matrices");
  spin->add_option("--n", opt.n)->required();
  opt.i = 0;
  spin->add_option("--i", opt.i, "print U_i instead of H");
  auto* evq = spin->add_option("--eval-q", opt.eval_q,
                               "print the float spectrum of H at q");
  spin->add_option("--format", opt.format);

  auto* iso_cmd = app.add_subcommand("iso", "Blob/short-Brauer maps");
  iso_cmd->require_subcommand(1);
  auto* i_psi = iso_cmd->add_subcommand("psi", "apply the set bijection");
  i_psi->add_option("literal", opt.literals)->expected(1);
  i_psi->add_option("--format", opt.format);
  auto* i_psi_inv = iso_cmd->add_subcommand("psi-inv", "apply the inverse");
  i_psi_inv->add_option("literal", opt.literals)->expected(1);
  i_psi_inv->add_option("--format", opt.format);
  auto* i_phi = iso_cmd->add_subcommand("phi", "apply the averaged map");
  i_phi->add_option("literal", opt.literals)->expected(1);
  i_phi->add_option("--format", opt.format);
  auto* i_theta = iso_cmd->add_subcommand("verify-theta", "alias");
  i_theta->add_option("--n", opt.n)->required();
  i_theta->add_option("--format", opt.format);
  auto* i_vphi = iso_cmd->add_subcommand("verify-phi", "alias");
  i_vphi->add_option("--m", opt.m)->required();
  i_vphi->add_option("--n", opt.n)->required();
  i_vphi->add_option("--q", opt.q)->required();
  i_vphi->add_option("--format", opt.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(opt);
    if (compose_cmd->parsed()) return cmd_compose(opt);
    if (gram->parsed()) return cmd_gram(opt);
    if (dets->parsed()) return cmd_dets(opt);
    if (spin->parsed()) {
      opt.has_eval_q = evq->count() > 0;
      return cmd_spin(opt);
    }
    if (verify->parsed()) {
      if (v_rel->parsed()) {
        if (opt.kind == "blob")
          return relation_exit(check_blob_relations(opt.n), opt);
        GeneratorSet gens =
            opt.kind == "brauer"    ? GeneratorSet::brauer(opt.n)
            : opt.kind == "coxeter" ? GeneratorSet::coxeter(opt.l, opt.cox_m,
                                                            opt.n)
                                    : GeneratorSet::tl(opt.n);
        return relation_exit(check_relations(gens), opt);
      }
      if (v_theta->parsed()) return report_exit(verify_theta(opt.n), opt);
      if (v_phi->parsed())
        return report_exit(verify_phi_functor(opt.m, opt.n, opt.q), opt);
      if (v_mt3->parsed())
        return report_exit(verify_chain_basis_theorem(opt.i, opt.m), opt);
      if (v_mod->parsed())
        return report_exit(verify_module_closure(opt.i, opt.m, opt.n), opt);
      if (v_all->parsed()) return cmd_verify_all();
    }
    if (iso_cmd->parsed()) {
      if (i_psi->parsed()) return cmd_iso_map(opt, false);
      if (i_psi_inv->parsed()) return cmd_iso_psi_inv(opt);
      if (i_phi->parsed()) return cmd_iso_map(opt, true);
      if (i_theta->parsed()) return report_exit(verify_theta(opt.n), opt);
      if (i_vphi->parsed())
        return report_exit(verify_phi_functor(opt.m, opt.n, opt.q), opt);
    }
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const domain_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
