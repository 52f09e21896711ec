// One PASS/FAIL line per acceptance criterion. The optional argument is the
// path of the xah CLI, used for the determinism criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "xah/duality.hpp"
#include "xah/instances.hpp"

using namespace xah;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

const std::vector<std::string> kLie3{"lie-abelian1", "lie-abelian2", "lie-nonabelian2"};

Outcome bialgebroid_axioms() {
  Outcome o;
  for (const auto& id : instance_ids()) {
    const Instance& in = instance(id);
    if (in.kind == Instance::Kind::Finite) {
      o.require(check_takeuchi(*in.bialgebroid).all_pass(), id + " Takeuchi");
      o.require(check_schauenburg(*in.hopf).all_pass(), id + " Schauenburg");
    } else if (in.kind == Instance::Kind::Lie) {
      o.require(check_pbw_hopf(*in.pbw, 3).all_pass(), id + " Hopf identities");
    } else {
      bool refused = false;
      try {
        galois_map(in.bialgebroid);
      } catch (const NotInvertible&) {
        refused = true;
      }
      o.require(refused, id + " Galois map unexpectedly invertible");
    }
  }
  if (o.pass) o.detail = std::to_string(instance_ids().size()) + " instances, negative control refused";
  return o;
}

Outcome bar_contractible() {
  Outcome o;
  for (std::string id : {"qs3", "ae-qeps"}) {
    BarResolution bar(instance(id).ring, 5);
    auto r = bar.check_contractible(4);
    o.require(r.pass() && r.checked > 0, id + (r.failures.empty() ? "" : ": " + r.failures.front()));
  }
  if (o.pass) o.detail = "kS3, Ae(Q[e]) through degree 4";
  return o;
}

Outcome hochschild_oracle() {
  Outcome o;
  const Instance& in = instance("ae-qeps");
  BarResolution bar(in.ring, 4);
  ExtGroups ext(bar.resolution(), instance_module(in, "trivial"), 3);
  TorGroups tor(instance_right_module(in, "trivial"), bar.resolution(), 3);
  oracle::Algebra a = oracle::named_algebra("qeps");
  auto hh_up = oracle::hochschild_cohomology(a, 3), hh_down = oracle::hochschild_homology(a, 3);
  o.require(ext.dims() == hh_up, "Ext " + join(ext.dims()) + " vs oracle " + join(hh_up));
  o.require(tor.dims() == hh_down, "Tor " + join(tor.dims()) + " vs oracle " + join(hh_down));
  if (o.pass) o.detail = "Ext " + join(ext.dims()) + ", Tor " + join(tor.dims()) + " = oracle";
  return o;
}

std::string first_failure(const ProductReport& r) { return r.failures.empty() ? "" : r.failures.front(); }

Outcome cup_yoneda() {
  Outcome o;
  std::size_t checked = 0;
  {
    const Instance& in = instance("ae-qeps");
    BarResolution bar(in.ring, 4);
    CupPairing pairing = CupPairing::lifted(bar.resolution(), 3);
    ProductEngine e(pairing, 3);
    ProductReport r = check_cup_yoneda(e, 3);
    o.require(r.pass(), "ae-qeps " + first_failure(r));
    checked += r.checked;
  }
  {
    const Instance& in = instance("lie-abelian2");
    CEResolution ce = ce_resolution(in.pbw);
    CupPairing pairing(ce.resolution, ce_diagonal(ce));
    ProductEngine e(pairing, 3);
    ProductReport r = check_cup_yoneda(e, 3);
    o.require(r.pass(), "lie-abelian2 " + first_failure(r));
    checked += r.checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " basis pairs with m+n <= 3";
  return o;
}

Outcome bullet_cap() {
  Outcome o;
  std::size_t checked = 0;
  for (std::string id : {"lie-abelian1", "lie-abelian2", "lie-nonabelian2", "lie-sl2"}) {
    const Instance& in = instance(id);
    CEResolution ce = ce_resolution(in.pbw);
    CupPairing pairing(ce.resolution, ce_diagonal(ce));
    ProductEngine e(pairing, in.lie->dim());
    for (const auto& m : in.modules) {
      TorGroups tor(instance_right_module(in, m), ce.resolution, in.lie->dim());
      ProductReport r = check_bullet_cap(e, tor);
      o.require(r.pass(), id + "/" + m + " " + first_failure(r));
      checked += r.checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " class pairs over 4 CE instances";
  return o;
}

Outcome underived_duality() {
  Outcome o;
  const Instance& in = instance("qs3");
  Representation a = base_module(in.ring);
  DualBases db = dual_bases(a);
  o.require(check_dual_bases(db), "dual bases");
  for (std::string m : {"trivial", "sign", "standard"}) {
    o.require(delta_underived(instance_right_module(in, m), db).bijective, "delta on " + m);
    o.require(bullet_omega_underived(instance_module(in, m), db).bijective, "bullet omega on " + m);
  }
  DualBases other = dual_bases(a, {Vector{3}, Vector{Scalar(-1, 2)}});
  o.require(other.omega == db.omega, "omega changed with the generating set");
  if (o.pass) o.detail = "omega0 = " + to_string(db.omega[0]) + " for both generating sets";
  return o;
}

Outcome derived_duality() {
  Outcome o;
  for (const auto& id : kLie3) {
    const Instance& in = instance(id);
    CEResolution ce = ce_resolution(in.pbw);
    DualityData dd;
    try {
      dd = detect_duality(ce.resolution);
    } catch (const NotDuality& e) {
      o.require(false, id + ": " + e.what());
      continue;
    }
    o.require(dd.d == in.lie->dim(), id + " d");
    o.require(check_double_dual(dd, base_module(in.ring)), id + " (A*)* not A");
    for (const auto& m : in.modules)
      o.require(check_delta(dd, ce.resolution, instance_right_module(in, m)).pass(), id + "/" + m + " delta");
  }
  if (o.pass) o.detail = "Ext(k,U) concentrated in d = dim g, dual complex exact off 0";
  return o;
}

Outcome poincare_duality() {
  Outcome o;
  const std::vector<std::string> names{"abelian1", "abelian2", "nonabelian2"};
  std::string profile;
  for (std::size_t k = 0; k < kLie3.size(); ++k) {
    const Instance& in = instance(kLie3[k]);
    CEResolution ce = ce_resolution(in.pbw);
    DualityData dd = detect_duality(ce.resolution);
    CupPairing pairing(ce.resolution, ce_diagonal(ce));
    oracle::Lie g = oracle::named_lie(names[k]);
    for (const auto& m : in.modules) {
      std::vector<std::size_t> ext, tor;
      for (const DualityRow& row : duality_table(dd, pairing, instance_module(in, m))) {
        ext.push_back(row.ext_dim);
        tor.push_back(row.tor_dim);
        o.require(row.bijective, kLie3[k] + "/" + m + " m=" + std::to_string(row.m) + " not bijective");
      }
      oracle::DualityProfile want = oracle::lie_duality(g, oracle::lie_module(g, m));
      o.require(ext == want.ext && tor == want.tor,
                kLie3[k] + "/" + m + " " + join(ext) + "<->" + join(tor) + " vs oracle " + join(want.ext) + "<->" +
                    join(want.tor));
      if (names[k] == "nonabelian2" && m == "trivial") profile = join(ext) + "<->" + join(tor);
    }
  }
  if (o.pass) o.detail = "nonabelian2 trivial " + profile + ", all caps invertible";
  return o;
}

Outcome resolution_independence() {
  Outcome o;
  for (std::string id : {"lie-abelian1", "lie-abelian2"}) {
    const Instance& in = instance(id);
    CEResolution ce = ce_resolution(in.pbw);
    ExtGroups ext(ce.resolution, instance_module(in, "trivial"), 3);
    std::vector<std::size_t> bar = weight_graded_bar_ext(*in.pbw, 3, 3);
    o.require(bar == ext.dims(), id + " bar " + join(bar) + " vs CE " + join(ext.dims()));
  }
  if (o.pass) o.detail = "degrees 0..3";
  return o;
}

bool run(const std::string& command, std::string& out) {
  std::array<char, 4096> buf;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return false;
  out.clear();
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  return pclose(pipe) == 0;
}

Outcome determinism(const std::string& cli) {
  Outcome o;
  if (cli.empty()) {
    o.require(false, "no CLI path given");
    return o;
  }
  const std::vector<std::string> commands{
      "instances list",
      "verify-hopf sweedler",
      "verify-hopf lie-nonabelian2",
      "ext qs3 --module trivial --max-degree 3",
      "tor ae-qeps --max-degree 3",
      "ext lie-abelian2 --resolution bar --max-degree 3",
      "cup ae-qeps --max-degree 3",
      "cap lie-abelian2 --module adjoint --max-degree 2",
      "duality qs3 --module standard",
      "duality lie-nonabelian2 --module trivial",
      "oracle hochschild qeps --max-degree 3",
      "oracle ce nonabelian2 --module trivial",
  };
  for (const auto& c : commands) {
    std::string first, second;
    const std::string full = "\"" + cli + "\" " + c;
    o.require(run(full, first), c + " failed");
    o.require(run(full, second), c + " failed on rerun");
    o.require(!first.empty() && first == second, c + " differs between runs");
  }
  if (o.pass) o.detail = std::to_string(commands.size()) + " commands byte-identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"bialgebroid axioms", [] { return bialgebroid_axioms(); }},
      {"bar contractibility", [] { return bar_contractible(); }},
      {"Hochschild oracle equivalence", [] { return hochschild_oracle(); }},
      {"cup equals Yoneda", [] { return cup_yoneda(); }},
      {"bullet equals cap", [] { return bullet_cap(); }},
      {"underived duality", [] { return underived_duality(); }},
      {"derived duality", [] { return derived_duality(); }},
      {"Poincare duality", [] { return poincare_duality(); }},
      {"resolution independence", [] { return resolution_independence(); }},
      {"CLI determinism", [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail << " ["
         << secs << "s]";
    std::cout << line.str() << std::endl;
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
