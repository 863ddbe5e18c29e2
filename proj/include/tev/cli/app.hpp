#pragma once

// The `tev` command-line tool. run() is the whole program minus main(), so
// tests can drive it with argument vectors and captured streams.
//
// Exit codes: 0 success (disagreement between methods is data, not an
// error), 2 invalid input, 3 internal invariant breach.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tev/cli/acceptance.hpp"
#include "tev/cli/guard.hpp"
#include "tev/cli/sweep.hpp"
#include "tev/closed_forms.hpp"
#include "tev/enumerativity.hpp"
#include "tev/jacobian.hpp"
#include "tev/quantum_proj.hpp"
#include "tev/schubert.hpp"

namespace tev::cli {

using ojson = nlohmann::ordered_json;

struct MethodValue {
  std::string method;
  ExactInt value;
};

/// Outcome of a single query: per-method values plus named flags.
struct TevResult {
  std::vector<std::pair<std::string, long long>> params;
  std::vector<MethodValue> results;
  std::vector<std::pair<std::string, bool>> flags;

  bool agreement() const {
    return std::all_of(results.begin(), results.end(),
                       [&](const MethodValue& m) { return m.value == results.front().value; });
  }

  ojson to_json() const {
    ojson j;
    j["params"] = ojson::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["results"] = ojson::array();
    for (const auto& m : results) j["results"].push_back(ojson{{"method", m.method}, {"value", to_decimal(m.value)}});
    j["agreement"] = agreement();
    j["flags"] = ojson::object();
    for (const auto& [k, v] : flags) j["flags"][k] = v;
    return j;
  }

  void print(std::ostream& os) const {
    for (std::size_t i = 0; i < params.size(); ++i) {
      os << (i ? " " : "") << params[i].first << "=" << params[i].second;
    }
    os << '\n';
    for (const auto& m : results) os << "  " << std::left << std::setw(10) << m.method << to_decimal(m.value) << '\n';
    os << "agreement: " << bool_str(agreement()) << '\n';
    for (const auto& [k, v] : flags) os << k << ": " << bool_str(v) << '\n';
  }
};

inline void emit(std::ostream& out, const TevResult& res, bool json) {
  if (json) {
    out << res.to_json().dump() << '\n';
  } else {
    res.print(out);
  }
}

struct Options {
  int g = 0, d = 1, e = 3, r = 1, n = 0;
  std::string ell;
  std::string method;
  bool json = false;
  std::string out_path;
  std::string format = "csv";
  int jobs = 1;
  std::string g_range, d_range, e_range, r_range;
};

inline std::vector<int> parse_ell(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidInput("cannot parse --ell entry '" + item + "'");
    }
  }
  if (out.empty()) throw InvalidInput("--ell must list at least one dimension");
  return out;
}

inline bool wants(const std::string& method, const char* name) { return method == "both" || method == name; }

inline int cmd_p1(const Options& o, std::ostream& out) {
  TevResult res;
  res.params = {{"g", o.g}, {"d", o.d}, {"n", 2LL * o.d - o.g + 1}};
  if (wants(o.method, "cps")) res.results.push_back({"cps", tev_p1_cps(o.g, o.d)});
  if (wants(o.method, "schubert")) res.results.push_back({"schubert", tev_p1_schubert(o.g, o.d)});
  emit(out, res, o.json);
  return kExitOk;
}

inline int cmd_hyp(const Options& o, std::ostream& out) {
  const HypersurfaceClosed closed = vtev_hypersurface_closed(o.g, o.d, o.e, o.r);
  TevResult res;
  res.params = {{"g", o.g}, {"d", o.d}, {"e", o.e}, {"r", o.r}, {"n", closed.n}};
  if (wants(o.method, "closed")) res.results.push_back({"closed", closed.value});
  if (wants(o.method, "engine")) {
    res.results.push_back({"engine", tev_hypersurface_engine(HypParams::make(o.g, o.d, o.e, o.r))});
  }
  res.flags = {{"virtual_range", closed.virtual_range},
               {"bound_ok", closed.bound_ok},
               {"certified", certify_enumerative(o.g, o.d, o.e, o.r).certified}};
  emit(out, res, o.json);
  return kExitOk;
}

inline int cmd_insert(const Options& o, std::ostream& out) {
  const InsertionProfile prof{parse_ell(o.ell)};
  TevResult res;
  res.params = {{"g", o.g}, {"d", o.d}, {"e", o.e}, {"r", o.r}, {"n", prof.size()}};
  if (wants(o.method, "closed")) {
    res.results.push_back({"closed", deg_T_insertions_closed(o.g, o.d, o.e, o.r, prof)});
  }
  if (wants(o.method, "engine")) {
    res.results.push_back({"engine", deg_T(HypParams::for_profile(o.g, o.d, o.e, o.r, prof), prof)});
  }
  emit(out, res, o.json);
  return kExitOk;
}

inline int cmd_alpha(const Options& o, std::ostream& out) {
  const AlphaList a = alpha_coefficients(o.e, o.r);
  if (o.json) {
    ojson j;
    j["params"] = ojson{{"e", o.e}, {"r", o.r}};
    j["alpha"] = ojson::array();
    for (const auto& v : a.values) j["alpha"].push_back(to_decimal(v));
    out << j.dump() << '\n';
  } else {
    out << "e=" << o.e << " r=" << o.r << '\n';
    for (int l = 1; l <= a.size(); ++l) out << "  alpha_" << l << " = " << to_decimal(a.at(l)) << '\n';
  }
  return kExitOk;
}

inline int cmd_qh(const Options& o, std::ostream& out) {
  if (o.r < 1) throw InvalidInput("qh: r must be positive");
  if (o.d < 1) throw InvalidInput("qh: d must be positive");
  std::optional<int> matching;
  if ((static_cast<long long>(o.r + 1) * o.d) % o.r == 0) matching = (o.r + 1) * o.d / o.r - o.g + 1;
  int n = o.n;
  if (n == 0) {
    if (!matching) throw InvalidInput("qh: (r+1)d/r is not an integer; pass --n explicitly");
    n = *matching;
  }
  TevResult res;
  res.params = {{"g", o.g}, {"d", o.d}, {"r", o.r}, {"n", n}};
  res.results.push_back({"qh", vtev_projective_qh(o.g, o.d, o.r, n)});
  if (matching && *matching == n) res.results.push_back({"closed", vtev_projective_closed(o.g, o.r)});
  emit(out, res, o.json);
  return kExitOk;
}

inline int cmd_certify(const Options& o, std::ostream& out) {
  const CertificationReport rep = certify_enumerative(o.g, o.d, o.e, o.r);
  ojson j;
  j["params"] = ojson{{"g", o.g}, {"d", o.d}, {"e", o.e}, {"r", o.r}, {"n", rep.n}};
  j["certified"] = rep.certified;
  j["label"] = to_string(rep.label);
  j["marking_gate"] = rep.marking_gate;
  j["degree_gate"] = rep.degree_gate;
  j["audit_pass"] = rep.audit_pass;
  j["strata_audited"] = rep.strata_audited;
  if (!rep.closed_bound) {
    j["closed_bound"] = nullptr;
  } else if (rep.closed_bound->all_d) {
    j["closed_bound"] = "all";
  } else {
    j["closed_bound"] = to_decimal(rep.closed_bound->threshold);
  }
  if (rep.witness) {
    const AuditReport& w = *rep.witness;
    j["witness"] = ojson{{"b0", w.stratum.b0},
                         {"b1", w.stratum.b1},
                         {"b2", w.stratum.b2},
                         {"case", w.audit_case == AuditCase::A ? "A" : "B"},
                         {"delta", w.delta},
                         {"target_dim", w.target_dim},
                         {"vdim_stratum", w.vdim_stratum},
                         {"excess_allowance", w.excess_allowance}};
  } else {
    j["witness"] = nullptr;
  }

  if (o.json) {
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "g=" << o.g << " d=" << o.d << " e=" << o.e << " r=" << o.r << " n=" << rep.n << '\n';
  out << "certified: " << bool_str(rep.certified) << " (" << to_string(rep.label) << ")\n";
  out << "n >= max(2g,1): " << bool_str(rep.marking_gate) << '\n';
  out << "d >= 2g: " << bool_str(rep.degree_gate) << '\n';
  out << "strata audited: " << rep.strata_audited << '\n';
  out << "closed bound: "
      << (j["closed_bound"].is_null() ? std::string("n/a (r <= (e+1)(e-2))")
                                      : "d > " + j["closed_bound"].get<std::string>())
      << '\n';
  if (rep.witness) {
    const AuditReport& w = *rep.witness;
    out << "witness: (b0,b1,b2)=(" << w.stratum.b0 << "," << w.stratum.b1 << "," << w.stratum.b2 << ") case "
        << (w.audit_case == AuditCase::A ? "A" : "B") << " vdim=" << w.vdim_stratum
        << " allowance=" << w.excess_allowance << " target=" << w.target_dim << '\n';
  }
  return kExitOk;
}

inline int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.format != "csv" && o.format != "jsonl") throw InvalidInput("--format must be csv or jsonl");
  if (o.jobs < 1) throw InvalidInput("--jobs must be positive");
  const auto tuples = grid(parse_int_range(o.g_range), parse_int_range(o.d_range), parse_int_range(o.e_range),
                           parse_int_range(o.r_range));
  const auto records = run_sweep(tuples, static_cast<unsigned>(o.jobs));

  std::ostringstream buf;
  if (o.format == "csv") {
    write_csv(buf, records);
  } else {
    write_jsonl(buf, records);
  }
  if (o.out_path.empty()) {
    out << buf.str();
    return kExitOk;
  }
  std::ofstream file(o.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw InvalidInput("cannot open output file '" + o.out_path + "'");
  file << buf.str();
  file.close();
  if (!file) throw InvalidInput("failed writing output file '" + o.out_path + "'");
  return kExitOk;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  const auto results = acceptance::run_all();
  bool all = true;
  ojson j = ojson::array();
  for (const auto& c : results) {
    all = all && c.pass;
    if (o.json) {
      j.push_back(ojson{{"criterion", c.id},
                        {"title", c.title},
                        {"pass", c.pass},
                        {"notes", c.notes},
                        {"failures", c.failures}});
      continue;
    }
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << "  " << c.title << "  (" << std::fixed << std::setprecision(2)
        << c.seconds << " s)\n";
    for (const auto& f : c.failures) out << "         ! " << f << '\n';
    if (c.id != 3) {
      for (const auto& s : c.notes) out << "         - " << s << '\n';
    }
  }
  if (o.json) {
    out << j.dump() << '\n';
  } else {
    out << "\nP^1 discrepancies for d < g (cps formula vs Schubert integral):\n";
    for (const auto& row : acceptance::p1_discrepancy_table()) out << "  " << acceptance::format_discrepancy(row) << '\n';
  }
  return all ? kExitOk : kExitInvariantBreach;
}

/// Parses args (without the program name) and runs the selected subcommand.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact Tevelev degrees of projective space and low-degree hypersurfaces", "tev"};
  app.require_subcommand(1);

  auto add_g = [&](CLI::App* s) { s->add_option("--g", o.g, "genus")->required(); };
  auto add_d = [&](CLI::App* s) { s->add_option("--d", o.d, "degree of the map")->required(); };
  auto add_e = [&](CLI::App* s) { s->add_option("--e", o.e, "degree of the hypersurface")->required(); };
  auto add_r = [&](CLI::App* s) { s->add_option("--r", o.r, "dimension of the target")->required(); };
  auto add_gder = [&](CLI::App* s) {
    add_g(s);
    add_d(s);
    add_e(s);
    add_r(s);
  };
  auto add_json = [&](CLI::App* s) { s->add_flag("--json", o.json, "machine-readable output"); };

  auto* p1 = app.add_subcommand("p1", "Tevelev degree of P^1 (CPS formula / Schubert calculus)");
  add_g(p1);
  add_d(p1);
  p1->add_option("--method", o.method, "cps | schubert | both")
      ->check(CLI::IsMember({"cps", "schubert", "both"}))
      ->default_val("both");
  add_json(p1);

  auto* hyp = app.add_subcommand("hyp", "Tevelev degree of a hypersurface (closed form / Jacobian engine)");
  add_gder(hyp);
  hyp->add_option("--method", o.method, "closed | engine | both")
      ->check(CLI::IsMember({"closed", "engine", "both"}))
      ->default_val("both");
  add_json(hyp);

  auto* ins = app.add_subcommand("insert", "deg(T) with linear-space insertions P^{ell_i}");
  add_gder(ins);
  ins->add_option("--ell", o.ell, "comma-separated ell_1,...,ell_n")->required();
  ins->add_option("--method", o.method, "closed | engine | both")
      ->check(CLI::IsMember({"closed", "engine", "both"}))
      ->default_val("both");
  add_json(ins);

  auto* alpha = app.add_subcommand("alpha", "per-point insertion coefficients alpha_1..alpha_{e+r+1}");
  add_e(alpha);
  add_r(alpha);
  add_json(alpha);

  auto* qh = app.add_subcommand("qh", "virtual Tevelev degree of P^r from its quantum cohomology");
  add_g(qh);
  add_d(qh);
  add_r(qh);
  qh->add_option("--n", o.n, "number of markings (default: the dimension-matching value)");
  add_json(qh);

  auto* cert = app.add_subcommand("certify", "enumerativity certificate via the stratum dimension audit");
  add_gder(cert);
  add_json(cert);

  auto* sweep = app.add_subcommand("sweep", "grid sweep with CSV or JSON Lines output");
  sweep->add_option("--g", o.g_range, "genus range, e.g. 0..3")->required();
  sweep->add_option("--d", o.d_range, "degree range, e.g. 1..30")->required();
  sweep->add_option("--e", o.e_range, "hypersurface degree range")->required();
  sweep->add_option("--r", o.r_range, "dimension range")->required();
  sweep->add_option("--format", o.format, "csv | jsonl")->default_val("csv");
  sweep->add_option("--out", o.out_path, "output file (default: stdout)");
  sweep->add_option("--jobs", o.jobs, "worker threads")->default_val(1);

  auto* verify = app.add_subcommand("verify", "run the acceptance checks and print a pass/fail table");
  add_json(verify);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitInvalidInput;
  }

  return guarded(err, [&] {
    if (*p1) return cmd_p1(o, out);
    if (*hyp) return cmd_hyp(o, out);
    if (*ins) return cmd_insert(o, out);
    if (*alpha) return cmd_alpha(o, out);
    if (*qh) return cmd_qh(o, out);
    if (*cert) return cmd_certify(o, out);
    if (*sweep) return cmd_sweep(o, out);
    return cmd_verify(o, out);
  });
}

}  // namespace tev::cli
