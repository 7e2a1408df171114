// Command-line interface: splitting verdicts, witness searches, relation
// listings, identity suites, and numerical Weyl cross-checks.
//
// Exit codes: 0 on success (including a decided "splits: no"), 1 when a
// requested check fails, 2 for usage or domain errors.

#include <chrono>
#include <cmath>
#include <complex>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cliffsplit/lemma_checks.hpp"
#include "cliffsplit/modmat.hpp"
#include "cliffsplit/semidirect.hpp"
#include "cliffsplit/sl2.hpp"
#include "cliffsplit/splitting.hpp"
#include "cliffsplit/version.hpp"
#include "cliffsplit/weyl.hpp"

namespace {

using cliffsplit::i64;
using ordered_json = nlohmann::ordered_json;

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_json(const std::string& path, const ordered_json& doc) {
  if (path == "-") {
    std::cout << doc.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw std::invalid_argument("cannot open JSON output file: " + path);
  }
  out << doc.dump(2) << "\n";
}

ordered_json witness_json(const cliffsplit::GenParams& p) {
  ordered_json w;
  w["a"] = p.a;
  w["b"] = p.b;
  w["c"] = p.c;
  w["a1"] = p.a1;
  w["b1"] = p.b1;
  w["c1"] = p.c1;
  w["u"] = p.u;
  w["v"] = p.v;
  w["u1"] = p.u1;
  w["v1"] = p.v1;
  return w;
}

ordered_json dim_json(const cliffsplit::SplitVerdict& v, bool timestamps,
                      double millis) {
  ordered_json d;
  d["n"] = v.dim;
  d["splits"] = v.splits;
  d["witness"] =
      v.witness ? witness_json(*v.witness) : ordered_json(nullptr);
  if (v.witness_count) d["witness_count"] = *v.witness_count;
  d["mode"] = cliffsplit::to_string(v.mode);
  d["candidates_checked"] = v.candidates_checked;
  d["note"] = v.note;
  if (timestamps) d["millis"] = millis;
  return d;
}

ordered_json document_json(const std::vector<ordered_json>& dims,
                           bool timestamps) {
  ordered_json doc;
  doc["version"] = std::string(cliffsplit::kVersion);
  if (timestamps) doc["generated_at"] = utc_timestamp();
  doc["dims"] = ordered_json::array();
  for (const ordered_json& d : dims) doc["dims"].push_back(d);
  return doc;
}

// Tiny check runner shared by the lemmas/weyl subcommands: prints one line
// per named check and tracks the overall outcome.
struct CheckPrinter {
  int failures = 0;

  void report(const std::string& name, bool ok, const std::string& detail) {
    if (ok) {
      std::cout << "ok " << name << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << name << ": " << detail << "\n";
    }
  }
};

int run_verdict(i64 dim, const std::string& json_path, bool no_timestamp) {
  auto start = std::chrono::steady_clock::now();
  cliffsplit::SplitVerdict v = cliffsplit::verdict(dim);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  std::cout << "dimension " << v.dim << ": splits: "
            << (v.splits ? "yes" : "no") << "\n";
  std::cout << "mode: " << cliffsplit::to_string(v.mode) << "\n";
  if (v.witness) {
    std::cout << "witness: " << cliffsplit::to_string(*v.witness) << "\n";
  }
  std::cout << "note: " << v.note << "\n";
  if (!json_path.empty()) {
    write_json(json_path,
               document_json({dim_json(v, !no_timestamp, ms)}, !no_timestamp));
  }
  return 0;
}

int run_search(i64 dim, bool exhaustive, bool count, int jobs, i64 bound,
               const std::string& json_path, bool no_timestamp) {
  cliffsplit::SearchOptions options;
  options.exhaustive = exhaustive;
  options.jobs = jobs;
  options.bound = bound;
  auto start = std::chrono::steady_clock::now();
  cliffsplit::SplitVerdict v = cliffsplit::search_witness(dim, options);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  std::cout << "dimension " << v.dim << ": splits: "
            << (v.splits ? "yes" : "no") << "\n";
  std::cout << "mode: " << cliffsplit::to_string(v.mode) << "\n";
  if (v.witness) {
    std::cout << "witness found: " << cliffsplit::to_string(*v.witness)
              << "\n";
  } else {
    std::cout << "no witness among " << v.candidates_checked
              << " candidates\n";
  }
  if (count && v.witness_count) {
    std::cout << "witness count: " << *v.witness_count << "\n";
  }
  std::cout << "candidates checked: " << v.candidates_checked << "\n";
  std::cout << "note: " << v.note << "\n";
  if (!json_path.empty()) {
    write_json(json_path,
               document_json({dim_json(v, !no_timestamp, ms)}, !no_timestamp));
  }
  return 0;
}

int run_relations(i64 dim) {
  auto rels = cliffsplit::enumerate_relations(dim);
  int order = 0, commute = 0, square = 0, braid = 0;
  for (const cliffsplit::RelationInstance& rel : rels) {
    switch (rel.family) {
      case cliffsplit::RelationFamily::OrderT:
      case cliffsplit::RelationFamily::OrderR:
        ++order;
        break;
      case cliffsplit::RelationFamily::Commute:
        ++commute;
        break;
      case cliffsplit::RelationFamily::Square:
        ++square;
        break;
      case cliffsplit::RelationFamily::Braid:
        ++braid;
        break;
    }
  }
  std::cout << "dimension " << dim << ": " << order << " order + " << commute
            << " commute + " << square << " square + " << braid
            << " braid instances\n";
  for (const cliffsplit::RelationInstance& rel : rels) {
    std::cout << "  " << cliffsplit::to_string(rel) << "\n";
  }
  if (cliffsplit::verify_presentation(dim)) {
    std::cout << "presentation verified in SL(2, Z_" << dim << ")\n";
    return 0;
  }
  std::cout << "presentation verification FAILED in SL(2, Z_" << dim << ")\n";
  return 1;
}

int run_lemmas(i64 dim, i64 max_exp, std::uint64_t seed) {
  if (max_exp <= 0) max_exp = 2 * dim + 4;
  auto results = cliffsplit::run_identity_checks(dim, max_exp, seed);
  CheckPrinter printer;
  for (const cliffsplit::CheckResult& r : results) {
    std::ostringstream name;
    name << r.name << " (" << r.cases << " cases)";
    printer.report(name.str(), r.passed, r.detail);
  }
  if (printer.failures == 0) {
    std::cout << "all lemma identities pass\n";
    return 0;
  }
  std::cout << printer.failures << " lemma identity check(s) failed\n";
  return 1;
}

int run_weyl(i64 dim, double tol) {
  using cliffsplit::CMat;
  using cliffsplit::Complex;
  auto dist = [](const CMat& a, const CMat& b) {
    return (a - b).cwiseAbs().maxCoeff();
  };
  CheckPrinter printer;
  auto [x, z] = cliffsplit::pauli_matrices(dim);
  const CMat id = CMat::Identity(dim, dim);
  const Complex w1 = cliffsplit::omega(dim);

  printer.report("commutation X Z = omega Z X",
                 dist(x * z, w1 * z * x) <= tol, "max-norm deviation");

  CMat xp = id, zp = id;
  for (i64 i = 0; i < dim; ++i) {
    xp = xp * x;
    zp = zp * z;
  }
  printer.report("orders X^N = Z^N = I",
                 dist(xp, id) <= tol && dist(zp, id) <= tol,
                 "max-norm deviation");

  {
    bool ok = true;
    std::string detail;
    for (i64 k = 0; k < dim && ok; ++k) {
      for (i64 ell = 0; ell < dim && ok; ++ell) {
        CMat w = cliffsplit::weyl(dim, k, ell);
        CMat wp = id;
        for (i64 i = 0; i < dim; ++i) wp = wp * w;
        if (dist(wp, id) > tol) {
          ok = false;
          detail = "W(" + std::to_string(k) + "," + std::to_string(ell) +
                   ")^N != I";
        }
      }
    }
    printer.report("Weyl operators W(k,l)^N = I", ok, detail);
  }

  if (dim % 2 == 0) {
    bool ok = true;
    std::string detail;
    for (i64 k = 0; k < dim && ok; ++k) {
      for (i64 ell = 0; ell < dim && ok; ++ell) {
        CMat w = cliffsplit::weyl(dim, k, ell);
        double sign_l = (ell % 2 == 0) ? 1.0 : -1.0;
        double sign_k = (k % 2 == 0) ? 1.0 : -1.0;
        if (dist(cliffsplit::weyl(dim, k + dim, ell), sign_l * w) > tol ||
            dist(cliffsplit::weyl(dim, k, ell + dim), sign_k * w) > tol) {
          ok = false;
          detail = "at (" + std::to_string(k) + "," + std::to_string(ell) + ")";
        }
      }
    }
    printer.report("even-dimension sign relations", ok, detail);
  }

  if (dim <= 8) {
    bool power_ok = true, ratio_ok = true;
    std::string detail;
    for (i64 k = 0; k < dim; ++k) {
      for (i64 ell = 0; ell < dim; ++ell) {
        for (i64 p = 0; p < dim; ++p) {
          for (i64 q = 0; q < dim; ++q) {
            Complex fwd = cliffsplit::weyl_compose_phase(dim, {k, ell}, {p, q});
            Complex bwd = cliffsplit::weyl_compose_phase(dim, {p, q}, {k, ell});
            Complex tau_power = 1.0;
            double best = 1e300;
            for (i64 e = 0; e < 2 * dim; ++e) {
              best = std::min(best, std::abs(fwd - tau_power));
              tau_power *= cliffsplit::tau(dim);
            }
            if (best > 1e-9) power_ok = false;
            Complex expected = std::pow(
                w1, static_cast<double>(k * q - ell * p));
            if (std::abs(fwd / bwd - expected) > 1e-9) ratio_ok = false;
            if ((!power_ok || !ratio_ok) && detail.empty()) {
              detail = "at u=(" + std::to_string(k) + "," +
                       std::to_string(ell) + ") w=(" + std::to_string(p) +
                       "," + std::to_string(q) + ")";
            }
          }
        }
      }
    }
    printer.report("composition phases are powers of tau", power_ok, detail);
    printer.report("swap ratio lambda(u,w)/lambda(w,u) = omega^(kq-lp)",
                   ratio_ok, detail);
  }

  {
    bool ok = true;
    std::string detail;
    const i64 limit = (dim <= 8) ? dim : 2;
    for (i64 k = 0; k < limit && ok; ++k) {
      for (i64 ell = 0; ell < limit && ok; ++ell) {
        auto act = cliffsplit::projective_action(cliffsplit::weyl(dim, k, ell),
                                                 tol);
        if (!act || !(*act == cliffsplit::Mat2::identity(dim))) {
          ok = false;
          detail = "W(" + std::to_string(k) + "," + std::to_string(ell) + ")";
        }
      }
    }
    printer.report("projective action of every Weyl operator is the identity",
                   ok, detail);
  }

  {
    auto act = cliffsplit::projective_action(cliffsplit::fourier_matrix(dim),
                                             tol);
    bool ok = act.has_value() &&
              *act == cliffsplit::Mat2(dim, 0, 1, dim - 1, 0);
    printer.report("projective action of the Fourier matrix is [[0,1],[" +
                       std::to_string(dim - 1) + ",0]] over Z_" +
                       std::to_string(dim),
                   ok, act ? cliffsplit::to_string(*act) : "no action");
  }
  {
    auto act = cliffsplit::projective_action(
        cliffsplit::diagonal_phase_gate(dim), tol);
    bool ok = act.has_value() &&
              *act == cliffsplit::Mat2(dim, 1, 0, dim - 1, 1);
    printer.report("projective action of the diagonal phase gate is [[1,0],[" +
                       std::to_string(dim - 1) + ",1]] over Z_" +
                       std::to_string(dim),
                   ok, act ? cliffsplit::to_string(*act) : "no action");
  }

  if (printer.failures == 0) {
    std::cout << "all weyl checks pass\n";
    return 0;
  }
  std::cout << printer.failures << " weyl check(s) failed\n";
  return 1;
}

int run_report(const std::string& dims_spec, const std::string& json_path,
               bool no_timestamp) {
  i64 lo = 0, hi = 0;
  const auto sep = dims_spec.find("..");
  try {
    if (sep == std::string::npos) {
      lo = hi = std::stoll(dims_spec);
    } else {
      lo = std::stoll(dims_spec.substr(0, sep));
      hi = std::stoll(dims_spec.substr(sep + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse dimension range '" + dims_spec +
                                "'; expected N or A..B");
  }
  if (lo < 2 || hi < lo) {
    throw std::invalid_argument("dimension range must satisfy 2 <= A <= B");
  }

  std::vector<ordered_json> dims;
  std::vector<std::string> pattern;
  for (i64 n = lo; n <= hi; ++n) {
    if (n % 2 != 0) continue;  // only even dimensions are decided here
    auto start = std::chrono::steady_clock::now();
    cliffsplit::SplitVerdict v = cliffsplit::verdict(n);
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    std::cout << "n=" << n << ": splits: " << (v.splits ? "yes" : "no")
              << "\n";
    pattern.push_back(v.splits ? "yes" : "no");
    dims.push_back(dim_json(v, !no_timestamp, ms));
  }
  if (dims.empty()) {
    throw std::invalid_argument("no even dimensions in range '" + dims_spec +
                                "'");
  }
  std::cout << "pattern: ";
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    std::cout << (i ? "," : "") << pattern[i];
  }
  std::cout << "\n";
  if (!json_path.empty()) {
    write_json(json_path, document_json(dims, !no_timestamp));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "decides, for an even dimension N, whether the projective Clifford "
      "group splits as a natural semidirect product"};
  app.set_version_flag("--version",
                       std::string(cliffsplit::kToolName) + " " +
                           std::string(cliffsplit::kVersion));
  app.require_subcommand(1);
  int exit_code = 0;

  // verdict ------------------------------------------------------------
  i64 verdict_dim = 0;
  std::string verdict_json;
  bool verdict_no_ts = false;
  CLI::App* verdict_cmd =
      app.add_subcommand("verdict", "closed-form splitting verdict");
  verdict_cmd->add_option("--dim", verdict_dim, "even dimension N")
      ->required();
  verdict_cmd->add_option("--json", verdict_json,
                          "write a JSON report to this path ('-' = stdout)");
  verdict_cmd->add_flag("--no-timestamp", verdict_no_ts,
                        "omit generated_at and millis from the JSON output");
  verdict_cmd->callback([&]() {
    exit_code = run_verdict(verdict_dim, verdict_json, verdict_no_ts);
  });

  // search -------------------------------------------------------------
  i64 search_dim = 0, search_bound = 0;
  int search_jobs = 0;
  bool search_exhaustive = false, search_count = false, search_no_ts = false;
  std::string search_json;
  CLI::App* search_cmd = app.add_subcommand(
      "search", "search the 64*N^4 generator-lift tuples for a witness");
  search_cmd->add_option("--dim", search_dim, "even dimension N")->required();
  search_cmd->add_flag("--exhaustive", search_exhaustive,
                       "evaluate every tuple literally instead of using the "
                       "closed-form criteria");
  search_cmd->add_flag("--count", search_count,
                       "print the exact number of passing tuples");
  search_cmd->add_option("--jobs", search_jobs,
                         "worker threads for the exhaustive scan (default: "
                         "env CLIFFORD_SPLIT_JOBS or 1)");
  search_cmd->add_option("--bound", search_bound,
                         "override the dimension bound (default 64, or 12 "
                         "for --exhaustive)");
  search_cmd->add_option("--json", search_json,
                         "write a JSON report to this path ('-' = stdout)");
  search_cmd->add_flag("--no-timestamp", search_no_ts,
                       "omit generated_at and millis from the JSON output");
  search_cmd->callback([&]() {
    exit_code = run_search(search_dim, search_exhaustive, search_count,
                           search_jobs, search_bound, search_json,
                           search_no_ts);
  });

  // relations ----------------------------------------------------------
  i64 relations_dim = 0;
  CLI::App* relations_cmd = app.add_subcommand(
      "relations", "list and verify the SL(2, Z_N) presentation relations");
  relations_cmd->add_option("--dim", relations_dim, "dimension N >= 2")
      ->required();
  relations_cmd->callback(
      [&]() { exit_code = run_relations(relations_dim); });

  // lemmas -------------------------------------------------------------
  i64 lemmas_dim = 0, lemmas_max_exp = 0;
  std::uint64_t lemmas_seed = 20260819;
  CLI::App* lemmas_cmd = app.add_subcommand(
      "lemmas", "run the closed-form identity suite against brute force");
  lemmas_cmd->add_option("--dim", lemmas_dim, "even dimension N")->required();
  lemmas_cmd->add_option("--max-exp", lemmas_max_exp,
                         "largest exponent exercised (default 2N+4)");
  lemmas_cmd->add_option("--seed", lemmas_seed,
                         "seed for the randomized vector samples");
  lemmas_cmd->callback([&]() {
    exit_code = run_lemmas(lemmas_dim, lemmas_max_exp, lemmas_seed);
  });

  // weyl ---------------------------------------------------------------
  i64 weyl_dim = 0;
  double weyl_tol = cliffsplit::kWeylTolerance;
  CLI::App* weyl_cmd = app.add_subcommand(
      "weyl", "numerical Weyl-operator cross-checks (N <= 16)");
  weyl_cmd->add_option("--dim", weyl_dim, "dimension N in [2, 16]")
      ->required();
  weyl_cmd->add_option("--tol", weyl_tol, "max-norm tolerance");
  weyl_cmd->callback([&]() { exit_code = run_weyl(weyl_dim, weyl_tol); });

  // report -------------------------------------------------------------
  std::string report_dims = "2..12";
  std::string report_json;
  bool report_no_ts = false;
  CLI::App* report_cmd = app.add_subcommand(
      "report", "closed-form verdicts for every even dimension in a range");
  report_cmd->add_option("--dims", report_dims,
                         "dimension range A..B (default 2..12)");
  report_cmd->add_option("--json", report_json,
                         "write a JSON report to this path ('-' = stdout)");
  report_cmd->add_flag("--no-timestamp", report_no_ts,
                       "omit generated_at and millis from the JSON output");
  report_cmd->callback([&]() {
    exit_code = run_report(report_dims, report_json, report_no_ts);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
