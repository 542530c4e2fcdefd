#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "osprings/fillings.hpp"
#include "osprings/frobenius.hpp"
#include "osprings/json_io.hpp"
#include "osprings/oracle.hpp"
#include "osprings/osp.hpp"
#include "osprings/parallel.hpp"
#include "osprings/verify.hpp"

namespace osprings::cli {

namespace {

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 0;
  std::string lambda;
  int s = 1;
  std::string method = "inv";
  std::string basis = "schur";
  std::string format = "table";
  std::string suite = "all";
  int max_n = 4;
  int max_s = 4;
  int max_degree = 4;
  int threads = 0;
  int oracle_max_n = kOracleDefaultMaxN;
  bool check = false;
  bool count = false;
  bool standard = false;
};

Partition parse_lambda(const std::string& text) {
  Partition la;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw BadInput("empty part in --lambda");
    size_t used = 0;
    int v;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw BadInput("not an integer in --lambda: " + part);
    }
    if (used != part.size()) throw BadInput("not an integer in --lambda: " + part);
    la.push_back(v);
  }
  if (!is_partition(la)) throw BadInput("--lambda must be positive and weakly decreasing");
  return la;
}

Partition checked_shape(const RunConfig& cfg, bool need_s) {
  Partition la = parse_lambda(cfg.lambda);
  if (cfg.n < 0) throw BadInput("--n must be nonnegative");
  if (size_of(la) > cfg.n) throw BadInput("|lambda| exceeds n");
  if (need_s && static_cast<int>(la.size()) > cfg.s) throw BadInput("s is smaller than the length of lambda");
  return la;
}

Statistic statistic_of(const std::string& m) { return m == "dinv" ? Statistic::Dinv : Statistic::Inv; }

void need_oracle(const RunConfig& cfg) {
  if (cfg.n > cfg.oracle_max_n)
    throw BadInput("n = " + std::to_string(cfg.n) + " is above the oracle cap " + std::to_string(cfg.oracle_max_n));
}

json header(const RunConfig& cfg, const Partition& la) { return {{"n", cfg.n}, {"lambda", la}, {"s", cfg.s}}; }

void print_qpoly(std::ostream& out, const RunConfig& cfg, const json& head, const std::string& key, const QPoly& f) {
  if (cfg.format == "json") {
    json j = head;
    j[key] = to_json(f);
    out << j.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << "degree,coeff\n";
    for (size_t d = 0; d < f.coeffs().size(); ++d) out << d << "," << f.coeffs()[d].get_str() << "\n";
  } else {
    out << f.str() << "\n";
  }
}

std::string set_str(const std::vector<int>& v) { return "{" + partition_str(v) + "}"; }

void print_series(std::ostream& out, const RunConfig& cfg, const GradedModuleSeries& g) {
  bool fund = cfg.basis == "fundamental";
  if (cfg.format == "json") {
    out << to_json(g, fund).dump() << "\n";
  } else if (cfg.format == "csv") {
    out << "index,degree,coeff\n";
    auto row = [&](const std::string& idx, const QPoly& c) {
      for (size_t d = 0; d < c.coeffs().size(); ++d)
        if (c.coeffs()[d] != 0) out << "\"" << idx << "\"," << d << "," << c.coeffs()[d].get_str() << "\n";
    };
    if (fund)
      for (auto& [D, c] : g.fund.terms) row(set_str(D), c);
    else
      for (auto& [la, c] : g.schur.terms) row(partition_str(la), c);
  } else {
    out << (fund ? g.fund.str() : g.schur.str()) << "\n";
  }
}

int cmd_hilb(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Partition la = checked_shape(cfg, true);
  QPoly h;
  if (cfg.method == "oracle") {
    need_oracle(cfg);
    h = hilbert_function(cfg.n, la, cfg.s);
  } else {
    h = hilb(cfg.n, la, cfg.s, statistic_of(cfg.method));
  }
  if (cfg.check) {
    QPoly hi = hilb(cfg.n, la, cfg.s, Statistic::Inv);
    QPoly hd = hilb(cfg.n, la, cfg.s, Statistic::Dinv);
    bool ok = h == hi && h == hd;
    if (ok && cfg.n <= cfg.oracle_max_n) ok = hilbert_function(cfg.n, la, cfg.s) == h;
    if (!ok) {
      err << "cross-check mismatch: inv " << hi.str() << ", dinv " << hd.str() << "\n";
      return kCrossCheck;
    }
  }
  json head = header(cfg, la);
  head["method"] = cfg.method;
  print_qpoly(out, cfg, head, "hilbert", h);
  return kOk;
}

int cmd_frob(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Partition la = checked_shape(cfg, true);
  GradedModuleSeries g;
  if (cfg.method == "oracle") {
    need_oracle(cfg);
    if (cfg.basis == "fundamental") throw BadInput("the oracle only produces the schur basis");
    g.n = cfg.n;
    g.schur = graded_frobenius_oracle(cfg.n, la, cfg.s);
    g.hilbert = hilbert_function(cfg.n, la, cfg.s);
  } else {
    g = frob(cfg.n, la, cfg.s, statistic_of(cfg.method));
  }
  if (cfg.check) {
    auto a = frob(cfg.n, la, cfg.s, Statistic::Inv).schur;
    auto b = frob(cfg.n, la, cfg.s, Statistic::Dinv).schur;
    bool ok = a == b && a == g.schur;
    if (ok && cfg.n <= cfg.oracle_max_n) ok = graded_frobenius_oracle(cfg.n, la, cfg.s) == a;
    if (!ok) {
      err << "cross-check mismatch for the graded Frobenius series\n";
      return kCrossCheck;
    }
  }
  print_series(out, cfg, g);
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  auto names = suite_names();
  if (cfg.suite != "all" && std::find(names.begin(), names.end(), cfg.suite) == names.end())
    throw BadInput("unknown suite: " + cfg.suite);
  if (cfg.max_n < 1 || cfg.max_s < 1) throw BadInput("--max-n and --max-s must be positive");
  auto records = run_suite(cfg.suite, cfg.max_n, cfg.max_s, thread_budget());
  int failed = 0;
  json arr = json::array();
  if (cfg.format == "csv") out << "suite,n,lambda,s,extra,pass,detail\n";
  for (auto& r : records) {
    if (!r.pass) ++failed;
    if (cfg.format == "json") {
      arr.push_back({{"suite", r.suite}, {"n", r.n}, {"lambda", r.la}, {"s", r.s}, {"extra", r.extra},
                     {"pass", r.pass}, {"detail", r.detail}});
    } else if (cfg.format == "csv") {
      out << r.suite << "," << r.n << ",\"" << partition_str(r.la) << "\"," << r.s << ",\"" << r.extra << "\","
          << (r.pass ? "pass" : "fail") << ",\"" << r.detail << "\"\n";
    } else {
      out << (r.pass ? "PASS " : "FAIL ") << r.suite << " n=" << r.n << " lambda=(" << partition_str(r.la)
          << ") s=" << r.s;
      if (!r.extra.empty()) out << " " << r.extra;
      if (!r.detail.empty()) out << "  " << r.detail;
      out << "\n";
    }
  }
  if (cfg.format == "json") {
    out << json{{"suite", cfg.suite}, {"checks", records.size()}, {"failed", failed}, {"records", arr}}.dump() << "\n";
  } else if (cfg.format == "table") {
    out << records.size() - failed << "/" << records.size() << " checks passed\n";
  }
  return failed ? kVerifyFailed : kOk;
}

int cmd_basis(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Partition la = checked_shape(cfg, true);
  auto A = enumerate_staircase_set(cfg.n, la, cfg.s);
  if (cfg.count) {
    if (cfg.format == "json")
      out << json{{"count", A.size()}}.dump() << "\n";
    else
      out << A.size() << "\n";
    return kOk;
  }
  if (cfg.format == "json") {
    json j = header(cfg, la);
    j["basis"] = A;
    out << j.dump() << "\n";
  } else {
    for (auto& a : A) out << partition_str(a) << "\n";
  }
  return kOk;
}

int cmd_osp(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Partition la = checked_shape(cfg, true);
  if (cfg.count) {
    out << count_osp(cfg.n, la, cfg.s).get_str() << "\n";
    return kOk;
  }
  auto all = enumerate_osp(cfg.n, la, cfg.s);
  if (cfg.format == "json") {
    json arr = json::array();
    for (auto& p : all) arr.push_back(osp_to_json(p));
    out << arr.dump() << "\n";
    return kOk;
  }
  for (auto& p : all) {
    std::string line;
    for (size_t b = 0; b < p.size(); ++b) line += (b ? " | " : "") + partition_str(p[b]);
    out << line << "\n";
  }
  return kOk;
}

std::string filling_str(const ExtendedFilling& f) {
  std::string out;
  for (int c = 0; c < f.columns(); ++c)
    out += (c ? " " : "") + std::string("[") + partition_str(f.diagram[c]) + "/" + partition_str(f.basement[c]) + "]";
  return out;
}

int cmd_fillings(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Partition la = checked_shape(cfg, true);
  Composition shape = la;
  shape.resize(cfg.s, 0);
  auto all = cfg.standard ? enumerate_seci(cfg.n, shape, cfg.s) : enumerate_eci_bounded(cfg.n, shape, cfg.s, cfg.n);
  if (cfg.count) {
    out << all.size() << "\n";
    return kOk;
  }
  if (cfg.format == "json") {
    json arr = json::array();
    for (auto& f : all) {
      json j = to_json(f);
      j["inv"] = inv(f);
      j["dinv"] = dinv(f, cfg.s);
      arr.push_back(j);
    }
    out << arr.dump() << "\n";
    return kOk;
  }
  if (cfg.format == "csv") out << "filling,inv,dinv\n";
  for (auto& f : all) {
    if (cfg.format == "csv")
      out << "\"" << filling_str(f) << "\"," << inv(f) << "," << dinv(f, cfg.s) << "\n";
    else
      out << filling_str(f) << "  inv=" << inv(f) << " dinv=" << dinv(f, cfg.s) << "\n";
  }
  return kOk;
}

int cmd_rank_hilb(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Partition la = checked_shape(cfg, false);
  if (cfg.max_degree < 0) throw BadInput("--max-degree must be nonnegative");
  json head{{"n", cfg.n}, {"lambda", la}, {"max_degree", cfg.max_degree}};
  print_qpoly(out, cfg, head, "hilbert", rank_hilb(cfg.n, la, cfg.max_degree));
  return kOk;
}

int cmd_rank_frob(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  Partition la = checked_shape(cfg, false);
  if (cfg.max_degree < 0) throw BadInput("--max-degree must be nonnegative");
  print_series(out, cfg, rank_frob(cfg.n, la, cfg.max_degree));
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"graded rings of ordered set partitions"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;

  auto shape_opts = [&](CLI::App* sub, bool with_s) {
    sub->add_option("--n", cfg.n, "number of variables")->required();
    sub->add_option("--lambda", cfg.lambda, "partition as a comma list, \"\" for empty")->required();
    if (with_s) sub->add_option("--s", cfg.s, "number of blocks")->required();
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "table"}));
  };
  app.add_option("--threads", cfg.threads, "thread budget (also OSPRINGS_THREADS)");
  app.add_option("--oracle-max-n", cfg.oracle_max_n, "largest n the oracle will attempt");

  auto* hilb_cmd = app.add_subcommand("hilb", "graded Hilbert series");
  shape_opts(hilb_cmd, true);
  hilb_cmd->add_option("--method", cfg.method)->check(CLI::IsMember({"inv", "dinv", "oracle"}));
  hilb_cmd->add_flag("--check", cfg.check, "compare against the other methods");

  auto* frob_cmd = app.add_subcommand("frob", "graded Frobenius series");
  shape_opts(frob_cmd, true);
  frob_cmd->add_option("--method", cfg.method)->check(CLI::IsMember({"inv", "dinv", "oracle"}));
  frob_cmd->add_option("--basis", cfg.basis)->check(CLI::IsMember({"schur", "fundamental"}));
  frob_cmd->add_flag("--check", cfg.check);

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite over a parameter grid");
  verify_cmd->add_option("--suite", cfg.suite);
  verify_cmd->add_option("--max-n", cfg.max_n);
  verify_cmd->add_option("--max-s", cfg.max_s);
  verify_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "table"}));

  auto* basis_cmd = app.add_subcommand("basis", "staircase monomial basis");
  shape_opts(basis_cmd, true);
  basis_cmd->add_flag("--count", cfg.count);

  auto* osp_cmd = app.add_subcommand("osp", "ordered set partitions");
  shape_opts(osp_cmd, true);
  osp_cmd->add_flag("--count", cfg.count);

  auto* fill_cmd = app.add_subcommand("fillings", "extended column-increasing fillings");
  shape_opts(fill_cmd, true);
  fill_cmd->add_flag("--standard", cfg.standard);
  fill_cmd->add_flag("--count", cfg.count);

  auto* rh_cmd = app.add_subcommand("rank-hilb", "truncated Hilbert series of the rank variety ring");
  shape_opts(rh_cmd, false);
  rh_cmd->add_option("--max-degree", cfg.max_degree);

  auto* rf_cmd = app.add_subcommand("rank-frob", "truncated Frobenius series of the rank variety ring");
  shape_opts(rf_cmd, false);
  rf_cmd->add_option("--max-degree", cfg.max_degree);
  rf_cmd->add_option("--basis", cfg.basis)->check(CLI::IsMember({"schur", "fundamental"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kBadInput;
  }
  if (cfg.threads > 0) set_thread_budget(cfg.threads);

  try {
    if (hilb_cmd->parsed()) return cmd_hilb(cfg, out, err);
    if (frob_cmd->parsed()) return cmd_frob(cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(cfg, out, err);
    if (basis_cmd->parsed()) return cmd_basis(cfg, out, err);
    if (osp_cmd->parsed()) return cmd_osp(cfg, out, err);
    if (fill_cmd->parsed()) return cmd_fillings(cfg, out, err);
    if (rh_cmd->parsed()) return cmd_rank_hilb(cfg, out, err);
    if (rf_cmd->parsed()) return cmd_rank_frob(cfg, out, err);
  } catch (const BadInput& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace osprings::cli
