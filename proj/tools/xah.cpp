// xah: command-line front end. Every report is one JSON document on stdout.
//
// exit 0 success, 1 a verification failed (witness in the report),
// 2 usage or input error, 3 outside the certified window.

#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "oracle.hpp"
#include "xah/duality.hpp"
#include "xah/instances.hpp"

using json = nlohmann::json;
using namespace xah;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerificationFailed : std::runtime_error {
  VerificationFailed(std::string what, json report) : std::runtime_error(std::move(what)), report(std::move(report)) {}
  json report;
};

// bar complexes beyond this many generators in the top degree are refused
constexpr std::size_t kMaxBarGenerators = 8000;

json scalars(const Vector& v) {
  json a = json::array();
  for (const Scalar& x : v) a.push_back(to_string(x));
  return a;
}

json matrix(const Matrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(scalars(m.row(i)));
  return a;
}

json report_of(const CheckReport& r) {
  json items = json::array();
  for (const auto& i : r.items) {
    json x{{"name", i.name}, {"pass", i.pass}};
    if (!i.pass) x["witness"] = i.witness;
    items.push_back(x);
  }
  return items;
}

const Instance& hopf_instance(const std::string& id) {
  const Instance& in = instance(id);
  if (in.kind == Instance::Kind::NonHopf) galois_map(in.bialgebroid);  // throws NotInvertible
  return in;
}

// Owns whichever resolution a command asked for.
struct Resolved {
  std::unique_ptr<BarResolution> bar;
  std::optional<CEResolution> ce;
  std::string kind;

  const FreeResolution& resolution() const { return bar ? bar->resolution() : ce->resolution; }
  json window() const {
    if (ce) return "finite length";
    return resolution().window();
  }
};

Resolved resolve(const Instance& in, std::string kind, std::size_t max_degree) {
  Resolved r;
  if (kind.empty()) kind = in.finite() ? "bar" : "ce";
  r.kind = kind;
  if (kind == "ce") {
    if (in.kind != Instance::Kind::Lie) throw UsageError("--resolution ce needs a Lie instance");
    r.ce = ce_resolution(in.pbw);
  } else if (kind == "bar") {
    if (!in.finite()) throw UsageError("--resolution bar over U(g) is only available through `ext`, for abelian g");
    BarResolution probe(in.ring, 0);
    std::size_t gens = 1;
    for (std::size_t n = 0; n <= max_degree + 1; ++n) {
      if (n > 0) gens *= probe.rank_over_base();
      if (gens > kMaxBarGenerators)
        throw WindowExceeded("bar resolution of " + in.id + " in degree " + std::to_string(n) + " has " +
                             std::to_string(gens) + " generators; the window ends below degree " +
                             std::to_string(max_degree));
    }
    r.bar = std::make_unique<BarResolution>(in.ring, max_degree + 1);
  } else {
    throw UsageError("unknown resolution " + kind);
  }
  return r;
}

json header(const std::vector<std::string>& argv, const std::string& id, json params) {
  return json{{"command", argv}, {"instance", id}, {"parameters", std::move(params)}};
}

// ------------------------------------------------------------- commands

json cmd_instances() {
  json list = json::array();
  for (const auto& id : instance_ids()) {
    const Instance& in = instance(id);
    list.push_back({{"id", id},
                    {"description", in.description},
                    {"kind", in.kind == Instance::Kind::Lie      ? "lie"
                             : in.kind == Instance::Kind::Finite ? "finite"
                                                                 : "non-hopf"},
                    {"modules", in.modules}});
  }
  return json{{"instances", list}};
}

json cmd_show(const std::string& id) { return instance_json(instance(id)); }

json cmd_verify_hopf(const std::string& id, std::size_t degree) {
  const Instance& in = instance(id);
  json out;
  bool pass = true;
  if (in.kind == Instance::Kind::Lie) {
    CheckReport r = check_pbw_hopf(*in.pbw, degree);
    out["hopf_identities"] = report_of(r);
    out["pbw_degree"] = degree;
    pass = r.all_pass();
  } else {
    CheckReport t = check_takeuchi(*in.bialgebroid);
    out["takeuchi"] = report_of(t);
    pass = t.all_pass();
    try {
      HopfStructure h = galois_map(in.bialgebroid);
      CheckReport s = check_schauenburg(h);
      out["schauenburg"] = report_of(s);
      pass = pass && s.all_pass();
    } catch (const NotInvertible& e) {
      out["galois"] = {{"invertible", false}, {"witness", e.what()}};
      pass = false;
    }
  }
  out["pass"] = pass;
  if (!pass) throw VerificationFailed("Hopf checks failed for " + id, out);
  return out;
}

json cmd_ext(const std::string& id, const std::string& module, std::size_t max_degree, const std::string& kind,
             bool tor) {
  const Instance& in = hopf_instance(id);
  if (in.kind == Instance::Kind::Lie && kind == "bar") {
    if (tor || module != "trivial") throw UsageError("bar over U(g) computes ext with trivial coefficients only");
    if (!in.lie->is_abelian()) throw WindowExceeded("bar over U(g) has no certified window for nonabelian g");
    if (max_degree > 4) throw WindowExceeded("weight-graded bar is certified through degree 4");
    auto dims = weight_graded_bar_ext(*in.pbw, max_degree, max_degree);
    return json{{"dims", dims}, {"resolution", "weight-graded bar"}, {"window", max_degree}};
  }
  Resolved r = resolve(in, kind, max_degree);
  const FreeResolution& p = r.resolution();
  std::vector<std::size_t> dims;
  if (tor) {
    TorGroups t(instance_right_module(in, module), p, max_degree);
    dims = t.dims();
  } else {
    ExtGroups e(p, instance_module(in, module), max_degree);
    dims = e.dims();
  }
  return json{{"dims", dims}, {"resolution", r.kind}, {"window", r.window()}};
}

CupPairing pairing_for(const Instance& in, const Resolved& r, std::size_t max_degree) {
  if (r.ce) return CupPairing(r.ce->resolution, ce_diagonal(*r.ce));
  return CupPairing::lifted(r.resolution(), max_degree);
}

json cmd_cup(const std::string& id, std::size_t max_degree, const std::string& kind) {
  const Instance& in = hopf_instance(id);
  Resolved r = resolve(in, kind, max_degree);
  CupPairing pairing = pairing_for(in, r, max_degree);
  ProductEngine e(pairing, max_degree);
  json rows = json::array();
  for (std::size_t m = 0; m <= max_degree; ++m)
    for (std::size_t n = 0; m + n <= max_degree; ++n) {
      auto cup = e.cup_table(m, n);
      auto yon = e.yoneda_table(m, n);
      for (std::size_t i = 0; i < cup.size(); ++i)
        for (std::size_t j = 0; j < cup[i].size(); ++j)
          rows.push_back({{"m", m}, {"n", n}, {"i", i}, {"j", j}, {"cup", scalars(cup[i][j])},
                          {"yoneda", scalars(yon[i][j])}});
    }
  ProductReport check = check_cup_yoneda(e, max_degree);
  ProductReport algebra = check_cup_algebra(e, max_degree);
  json out{{"ext_dims", e.ext().dims()},
           {"products", rows},
           {"resolution", r.kind},
           {"window", r.window()},
           {"cup_equals_yoneda", check.pass()},
           {"algebra_axioms", algebra.pass()}};
  if (!check.pass() || !algebra.pass()) {
    std::vector<std::string> w = check.failures;
    w.insert(w.end(), algebra.failures.begin(), algebra.failures.end());
    out["witness"] = w;
    throw VerificationFailed("product identities failed for " + id, out);
  }
  return out;
}

json cmd_cap(const std::string& id, const std::string& module, std::size_t max_degree, const std::string& kind) {
  const Instance& in = hopf_instance(id);
  Resolved r = resolve(in, kind, max_degree);
  CupPairing pairing = pairing_for(in, r, max_degree);
  ProductEngine e(pairing, max_degree);
  TorGroups tor(instance_right_module(in, module), r.resolution(), max_degree);
  json rows = json::array();
  for (std::size_t m = 0; m <= max_degree; ++m)
    for (std::size_t k = m; k <= max_degree; ++k)
      for (std::size_t i = 0; i < e.ext().dim(m); ++i)
        for (std::size_t j = 0; j < tor.dim(k); ++j) {
          Vector phi = unit_vector(e.ext().dim(m), i), z = unit_vector(tor.dim(k), j);
          rows.push_back({{"m", m}, {"k", k}, {"i", i}, {"j", j}, {"cap", scalars(e.cap(m, phi, tor, k, z))},
                          {"bullet", scalars(e.bullet(m, phi, tor, k, z))}});
        }
  ProductReport check = check_bullet_cap(e, tor);
  json out{{"ext_dims", e.ext().dims()}, {"tor_dims", tor.dims()},   {"products", rows},
           {"resolution", r.kind},        {"window", r.window()},      {"bullet_equals_cap", check.pass()}};
  if (!check.pass()) {
    out["witness"] = check.failures;
    throw VerificationFailed("bullet and cap differ for " + id, out);
  }
  return out;
}

json cmd_duality(const std::string& id, const std::string& module, std::size_t bound) {
  const Instance& in = hopf_instance(id);
  Resolved r = resolve(in, "", in.finite() ? 2 : 0);
  const FreeResolution& p = r.resolution();
  DualityData dd;
  try {
    dd = detect_duality(p, bound);
  } catch (const NotDuality& e) {
    throw UsageError(std::string("not a duality module: ") + e.what());
  }
  CupPairing pairing = pairing_for(in, r, std::max<std::size_t>(dd.d, 1));
  Representation m = instance_module(in, module);
  json table = json::array();
  bool pass = true;
  for (const DualityRow& row : duality_table(dd, pairing, m)) {
    table.push_back({{"m", row.m},
                     {"ext_dim", row.ext_dim},
                     {"tor_dim", row.tor_dim},
                     {"bijective", row.bijective},
                     {"matrix", matrix(row.cap)}});
    pass = pass && row.bijective;
  }
  json action = json::object();
  for (std::size_t g : in.ring->generators()) action[in.ring->label(g)] = matrix(dd.astar.act_basis(g));
  json out{{"d", dd.d},
           {"ext_A_U", dd.ext_dims},
           {"Astar_dim", dd.astar.dim()},
           {"Astar_action", action},
           {"omega", scalars(dd.omega_class)},
           {"table", table},
           {"resolution", r.kind}};
  if (dd.underived) {
    LinearIso delta = delta_underived(instance_right_module(in, module), *dd.underived);
    LinearIso bullet = bullet_omega_underived(m, *dd.underived);
    out["dual_bases_valid"] = check_dual_bases(*dd.underived);
    out["delta_bijective"] = delta.bijective;
    out["bullet_omega_bijective"] = bullet.bijective;
    pass = pass && delta.bijective && bullet.bijective && out["dual_bases_valid"].get<bool>();
  } else {
    DeltaCheck delta = check_delta(dd, p, instance_right_module(in, module));
    out["filtration_bound"] = dd.bound;
    out["delta_commutes"] = delta.commutes;
    pass = pass && delta.pass();
  }
  out["double_dual"] = check_double_dual(dd, base_module(in.ring), bound);
  pass = pass && out["double_dual"].get<bool>();
  out["pass"] = pass;
  if (!pass) throw VerificationFailed("duality checks failed for " + id, out);
  return out;
}

json cmd_oracle_hochschild(const std::string& name, std::size_t max_degree) {
  oracle::Algebra a;
  try {
    a = oracle::named_algebra(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (max_degree > 4) throw WindowExceeded("the brute-force Hochschild oracle stops at degree 4");
  json cup = json::array();
  for (std::size_t p = 1; p <= max_degree; ++p)
    for (std::size_t q = 1; p + q <= max_degree; ++q)
      cup.push_back({{"p", p}, {"q", q}, {"rank", oracle::hochschild_cup_rank(a, p, q)}});
  return json{{"cohomology", oracle::hochschild_cohomology(a, max_degree)},
              {"homology", oracle::hochschild_homology(a, max_degree)},
              {"cup_ranks", cup}};
}

json cmd_oracle_ce(const std::string& name, const std::string& module) {
  oracle::Lie g;
  std::vector<oracle::Mat> rho;
  try {
    g = oracle::named_lie(name);
    rho = oracle::lie_module(g, module);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  oracle::DualityProfile p = oracle::lie_duality(g, rho);
  json chi = json::array();
  for (const auto& x : oracle::modular_character(g)) chi.push_back(x.get_str());
  return json{{"cohomology", p.ext}, {"twisted_homology", p.tor}, {"modular_character", chi}};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  CLI::App app{"xah: exact Ext, Tor, products and duality for x_A-Hopf algebras"};
  app.require_subcommand(1);

  std::string id, module = "trivial", kind, name;
  std::size_t max_degree = 3, bound = 4, degree = 3;

  auto* instances = app.add_subcommand("instances", "catalog");
  instances->require_subcommand(1);
  auto* list = instances->add_subcommand("list", "list catalog ids");
  auto* show = instances->add_subcommand("show", "export one instance");
  show->add_option("instance", id)->required();

  auto* verify = app.add_subcommand("verify-hopf", "Takeuchi and Schauenburg sweeps");
  verify->add_option("instance", id)->required();
  verify->add_option("--pbw-degree", degree, "U(g): monomial degree of the sweep");

  auto add_common = [&](CLI::App* c, bool with_module) {
    c->add_option("instance", id)->required();
    if (with_module) c->add_option("--module", module, "catalog module name");
    c->add_option("--max-degree", max_degree);
    c->add_option("--resolution", kind)->check(CLI::IsMember({"bar", "ce"}));
  };
  auto* ext = app.add_subcommand("ext", "dim Ext^n(A, M)");
  add_common(ext, true);
  auto* tor = app.add_subcommand("tor", "dim Tor_n(M, A)");
  add_common(tor, true);
  auto* cup = app.add_subcommand("cup", "cup and Yoneda tables on Ext(A, A)");
  add_common(cup, false);
  auto* cap = app.add_subcommand("cap", "cap and bullet tables on Tor(M, A)");
  add_common(cap, true);
  auto* dual = app.add_subcommand("duality", "duality module, fundamental class, cap with omega");
  dual->add_option("instance", id)->required();
  dual->add_option("--module", module);
  dual->add_option("--filtration-bound", bound);

  auto* oracle_cmd = app.add_subcommand("oracle", "independent brute-force references");
  oracle_cmd->require_subcommand(1);
  auto* hh = oracle_cmd->add_subcommand("hochschild", "Hochschild complexes of qeps, qxq, ut2");
  hh->add_option("algebra", name)->required();
  hh->add_option("--max-degree", max_degree);
  auto* ce = oracle_cmd->add_subcommand("ce", "classical CE complexes of abelian1, abelian2, nonabelian2, sl2");
  ce->add_option("lie", name)->required();
  ce->add_option("--module", module);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  json out;
  int code = 0;
  try {
    if (*list) {
      out = header(args, "", json::object());
      out["result"] = cmd_instances();
    } else if (*show) {
      out = header(args, id, json::object());
      out["result"] = cmd_show(id);
    } else if (*verify) {
      out = header(args, id, {{"pbw_degree", degree}});
      out["result"] = cmd_verify_hopf(id, degree);
    } else if (*ext || *tor) {
      out = header(args, id, {{"module", module}, {"max_degree", max_degree}, {"resolution", kind}});
      out["result"] = cmd_ext(id, module, max_degree, kind, bool(*tor));
    } else if (*cup) {
      out = header(args, id, {{"max_degree", max_degree}, {"resolution", kind}});
      out["result"] = cmd_cup(id, max_degree, kind);
    } else if (*cap) {
      out = header(args, id, {{"module", module}, {"max_degree", max_degree}, {"resolution", kind}});
      out["result"] = cmd_cap(id, module, max_degree, kind);
    } else if (*dual) {
      out = header(args, id, {{"module", module}, {"filtration_bound", bound}});
      out["result"] = cmd_duality(id, module, bound);
    } else if (*hh) {
      out = header(args, name, {{"max_degree", max_degree}});
      out["result"] = cmd_oracle_hochschild(name, max_degree);
    } else if (*ce) {
      out = header(args, name, {{"module", module}});
      out["result"] = cmd_oracle_ce(name, module);
    }
  } catch (const VerificationFailed& e) {
    out["result"] = e.report;
    out["error"] = e.what();
    code = 1;
  } catch (const NotInvertible& e) {
    out["error"] = std::string("not a x_A-Hopf algebra: ") + e.what();
    code = 1;
  } catch (const WindowExceeded& e) {
    out["error"] = e.what();
    code = 3;
  } catch (const UsageError& e) {
    out["error"] = e.what();
    code = 2;
  } catch (const UnknownInstance& e) {
    out["error"] = e.what();
    code = 2;
  } catch (const std::exception& e) {
    out["error"] = e.what();
    code = 2;
  }
  out["exit_code"] = code;
  std::cout << out.dump(2) << "\n";
  return code;
}
