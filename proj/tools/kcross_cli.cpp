// kcross command line: regime tables, constructions, pair verification,
// exact search, lex/shadow utilities. All computation goes through the C API
// in kcross.h; this file only parses arguments and formats output.
//
// Exit codes: 0 ok, 1 verification failed, 2 usage, 3 precondition,
// 4 inexact result (search budget), 5 internal invariant violation.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "kcross.h"

using nlohmann::json;

namespace {

int exit_code(kx_status st) {
  switch (st) {
    case KX_OK: return 0;
    case KX_EUSAGE: return 2;
    case KX_EPRECOND: return 3;
    case KX_EINEXACT: return 4;
    case KX_EINVARIANT: return 5;
    case KX_ELIMIT: return 3;
    case KX_EPARSE: return 2;
  }
  return 5;
}

[[noreturn]] void die(kx_status st) {
  std::cerr << "error: " << kx_last_error() << "\n";
  std::exit(exit_code(st));
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  kx_string_free(s);
  return out;
}

json call_json(kx_status (*fn)(int64_t, int, char**), int64_t n, int k) {
  char* raw = nullptr;
  kx_status st = fn(n, k, &raw);
  if (st != KX_OK) die(st);
  return json::parse(take_string(raw));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    std::exit(2);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    std::exit(2);
  }
  out << text;
}

std::string set_to_string(const json& arr) {
  std::string s = "{";
  for (size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(arr[i].get<int>());
  }
  return s + "}";
}

void print_classify_human(const json& r) {
  std::cout << "(n,k) = (" << r["n"] << "," << r["k"] << ")  regime: " << r["regime"].get<std::string>()
            << (r["boundary"].get<bool>() ? " (boundary point: outside the strict window)" : "")
            << "\n";
  std::cout << "  C(n-k-1,k-1) = " << r["witnesses"]["C(n-k-1,k-1)"].get<std::string>() << "\n";
  std::cout << "  C(n-k,k-1)   = " << r["witnesses"]["C(n-k,k-1)"].get<std::string>() << "\n";
  std::cout << "  C(n-1,k-1)   = " << r["witnesses"]["C(n-1,k-1)"].get<std::string>() << "\n";
  std::cout << "  approx thresholds: conjecture-from n >= " << r["approx_thresholds"]["conjecture"]
            << ", fails-below n <= " << r["approx_thresholds"]["failure"] << "\n";
}

int cmd_classify(int64_t n, int k, bool as_json) {
  json r = call_json(&kx_classify_json, n, k);
  if (as_json)
    std::cout << r.dump(2) << "\n";
  else
    print_classify_human(r);
  return 0;
}

int cmd_bounds(int64_t n, int k, bool as_json) {
  json r = call_json(&kx_bounds_json, n, k);
  if (as_json) {
    std::cout << r.dump(2) << "\n";
    return 0;
  }
  std::cout << "bounds at (n,k) = (" << r["n"] << "," << r["k"] << ")\n";
  for (const char* f : {"ekr", "hm", "conjecture_value", "prop41_upper", "fstar_value", "prop55_value"})
    std::cout << "  " << f << " = " << r[f].get<std::string>() << "\n";
  return 0;
}

int cmd_table(int kmin, int kmax, int64_t nmax, bool as_json) {
  if (kmin < 3 || kmax < kmin || kmax > 12) {
    std::cerr << "error: table requires 3 <= k-min <= k-max <= 12\n";
    return 2;
  }
  json rows = json::array();
  for (int k = kmin; k <= kmax; ++k) {
    int64_t cap = nmax > 0 ? nmax : std::max<int64_t>(4LL * k * k * k, 1000);
    char* raw = nullptr;
    kx_status st = kx_theorem14_json(k, cap, &raw);
    if (st != KX_OK) die(st);
    rows.push_back(json::parse(take_string(raw)));
  }
  if (as_json) {
    std::cout << rows.dump(2) << "\n";
    return 0;
  }
  std::printf("%3s %14s %14s %14s %22s %22s %10s\n", "k", "CB up to n", "grey zone", "CH from n",
              "approx conj thr", "approx fail thr", "violations");
  for (const auto& r : rows) {
    std::string grey = r["grey_zone"].is_null()
                           ? std::string("-")
                           : std::to_string(r["grey_zone"][0].get<int64_t>()) + ".." +
                                 std::to_string(r["grey_zone"][1].get<int64_t>());
    size_t viol = r["violations"]["conjecture"].size() + r["violations"]["failure"].size();
    std::printf("%3d %14lld %14s %14lld %22.3f %22.3f %10zu\n", r["k"].get<int>(),
                static_cast<long long>(r["max_construction_beats_n"].get<int64_t>()), grey.c_str(),
                static_cast<long long>(r["min_conjecture_holds_n"].get<int64_t>()),
                r["thresholds"]["conjecture"].get<double>(), r["thresholds"]["failure"].get<double>(),
                viol);
  }
  return 0;
}

int cmd_construct(const std::string& name, int n, int k, const std::string& out_path, bool as_json) {
  kx_pair* pair = nullptr;
  kx_status st = kx_construct(name.c_str(), n, k, &pair);
  if (st != KX_OK) die(st);
  // Self-verify beyond the generator's own checks before writing.
  char* verdict_raw = nullptr;
  st = kx_pair_verify_json(pair, "disjoint,cross", 0, 0, &verdict_raw);
  if (st == KX_ELIMIT) {
    st = kx_pair_verify_json(pair, "disjoint", 0, 0, &verdict_raw);
  }
  if (st != KX_OK) die(st);
  json verdict = json::parse(take_string(verdict_raw));
  if (!verdict["all_pass"].get<bool>()) {
    std::cerr << "error: construction failed verification\n";
    return 5;
  }
  char* doc_raw = nullptr;
  st = kx_pair_to_json(pair, &doc_raw);
  if (st != KX_OK) die(st);
  std::string doc = take_string(doc_raw);
  if (!out_path.empty()) write_file(out_path, doc);
  uint64_t sa = kx_pair_size(pair, 0), sb = kx_pair_size(pair, 1);
  kx_pair_free(pair);
  if (as_json) {
    json meta{{"name", name}, {"n", n}, {"k", k}, {"sizes", {sa, sb}}, {"file", out_path}};
    std::cout << meta.dump(2) << "\n";
  } else {
    std::cout << name << "(" << n << "," << k << "): |A| = " << sa << ", |B| = " << sb
              << ", min = " << std::min(sa, sb);
    if (!out_path.empty()) std::cout << "  -> " << out_path;
    std::cout << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& path, const std::string& checks, uint64_t ea, uint64_t eb,
               bool as_json) {
  std::string text = read_file(path);
  kx_pair* pair = nullptr;
  kx_status st = kx_pair_from_json(text.c_str(), &pair);
  if (st != KX_OK) die(st);
  char* raw = nullptr;
  st = kx_pair_verify_json(pair, checks.c_str(), ea, eb, &raw);
  kx_pair_free(pair);
  if (st != KX_OK) die(st);
  json rep = json::parse(take_string(raw));
  if (as_json) {
    std::cout << rep.dump(2) << "\n";
  } else {
    for (const auto& c : rep["checks"]) {
      std::cout << (c["pass"].get<bool>() ? "pass" : "FAIL") << "  " << c["name"].get<std::string>();
      if (c.contains("witness")) std::cout << "  [" << c["witness"].get<std::string>() << "]";
      std::cout << "\n";
    }
  }
  return rep["all_pass"].get<bool>() ? 0 : 1;
}

int run_search(int n, int k, const kx_search_options& opts, const std::string& cert_path,
               bool as_json, bool exhaustive) {
  kx_outcome* outcome = nullptr;
  kx_status st = exhaustive
                     ? kx_exhaustive(n, k, opts.star_free, opts.allow_overlap, &outcome)
                     : kx_search(n, k, &opts, &outcome);
  if (st != KX_OK && st != KX_EINEXACT) die(st);
  char* raw = nullptr;
  kx_status jst = kx_outcome_json(outcome, &raw);
  if (jst != KX_OK) die(jst);
  json rep = json::parse(take_string(raw));
  if (!cert_path.empty() && !rep["certificate"].is_null())
    write_file(cert_path, rep["certificate"].dump(2) + "\n");
  if (as_json) {
    std::cout << rep.dump(2) << "\n";
  } else {
    std::cout << (exhaustive ? "exhaustive" : "search") << " (n,k) = (" << n << "," << k << ")"
              << (opts.star_free ? " star-free" : "") << (opts.allow_overlap ? " allow-overlap" : "")
              << ": ";
    if (rep["exact"].get<bool>())
      std::cout << "value = " << rep["lo"] << " (exact)";
    else
      std::cout << "interval = [" << rep["lo"] << ", " << rep["hi"] << "] (budget exhausted)";
    std::cout << "  nodes=" << rep["stats"]["nodes"] << "\n";
    if (!cert_path.empty()) std::cout << "certificate -> " << cert_path << "\n";
  }
  kx_outcome_free(outcome);
  return st == KX_EINEXACT ? 4 : 0;
}

int cmd_lex(int n, int t, uint64_t m, const std::string& out_path, bool as_json) {
  kx_family* fam = nullptr;
  kx_status st = kx_lex_segment(n, t, m, &fam);
  if (st != KX_OK) die(st);
  kx_family* empty = nullptr;
  if ((st = kx_family_create(n, t, &empty)) != KX_OK) die(st);
  kx_pair* pair = nullptr;
  if ((st = kx_pair_create(fam, empty, &pair)) != KX_OK) die(st);
  char* raw = nullptr;
  if ((st = kx_pair_to_json(pair, &raw)) != KX_OK) die(st);
  json doc = json::parse(take_string(raw));
  if (!out_path.empty()) write_file(out_path, doc.dump(2) + "\n");
  if (as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "L(" << n << "," << t << "," << m << "): " << kx_family_size(fam) << " sets";
    if (m > 0) {
      std::vector<int> last(static_cast<size_t>(t));
      if ((st = kx_lex_unrank(n, t, m - 1, last.data())) != KX_OK) die(st);
      std::cout << ", last " << set_to_string(json(last));
      std::vector<int> next(static_cast<size_t>(t));
      if (kx_lex_unrank(n, t, m, next.data()) == KX_OK)
        std::cout << ", next " << set_to_string(json(next));
    }
    std::cout << "\n";
    if (!out_path.empty()) std::cout << "-> " << out_path << "\n";
  }
  kx_pair_free(pair);
  kx_family_free(fam);
  kx_family_free(empty);
  return 0;
}

int cmd_shadow(const std::string& path, int level, const std::string& side,
               const std::string& out_path, bool as_json) {
  std::string text = read_file(path);
  kx_pair* pair = nullptr;
  kx_status st = kx_pair_from_json(text.c_str(), &pair);
  if (st != KX_OK) die(st);
  kx_family* fam = nullptr;
  if ((st = kx_pair_side(pair, side == "B" ? 1 : 0, &fam)) != KX_OK) die(st);
  kx_pair_free(pair);
  kx_family* shad = nullptr;
  if ((st = kx_family_shadow(fam, level, &shad)) != KX_OK) die(st);
  kx_family* empty = nullptr;
  if ((st = kx_family_create(kx_family_n(shad), kx_family_k(shad), &empty)) != KX_OK) die(st);
  kx_pair* shadow_pair = nullptr;
  if ((st = kx_pair_create(shad, empty, &shadow_pair)) != KX_OK) die(st);
  char* raw = nullptr;
  if ((st = kx_pair_to_json(shadow_pair, &raw)) != KX_OK) die(st);
  json doc = json::parse(take_string(raw));
  if (!out_path.empty()) write_file(out_path, doc.dump(2) + "\n");
  if (as_json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << "shadow level " << level << " of side " << side << ": " << kx_family_size(shad)
              << " sets\n";
  kx_pair_free(shadow_pair);
  kx_family_free(shad);
  kx_family_free(fam);
  kx_family_free(empty);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"kcross: exact tools for disjoint cross-intersecting k-uniform families"};
  app.require_subcommand(1);

  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of human-readable text");

  int64_t n64 = 0;
  int n = 0, k = 0, t = 0, level = 0, u = 0;
  uint64_t m = 0;
  int kmin = 3, kmax = 6;
  int64_t nmax = 0, cap = 0, r = 0;
  std::string name, file, out_path, checks = "disjoint,cross", side = "A", which;
  uint64_t expect_a = 0, expect_b = 0;
  bool star_free = false, allow_overlap = false, no_symmetry = false;
  uint64_t node_limit = 0;
  double timeout_s = 0;
  int workers = 0;

  auto* c_classify = app.add_subcommand("classify", "regime of (n,k)");
  c_classify->add_option("--n", n64)->required();
  c_classify->add_option("--k", k)->required();

  auto* c_table = app.add_subcommand("table", "exact regime boundaries per k");
  c_table->add_option("--k-min", kmin);
  c_table->add_option("--k-max", kmax);
  c_table->add_option("--n-max", nmax, "scan cap (default max(4k^3,1000) per k)");

  auto* c_bounds = app.add_subcommand("bounds", "the six bound quantities at (n,k)");
  c_bounds->add_option("--n", n64)->required();
  c_bounds->add_option("--k", k)->required();

  auto* c_thm43 = app.add_subcommand("thm43", "diversity-theorem size threshold");
  c_thm43->add_option("--n", n64)->required();
  c_thm43->add_option("--k", k)->required();
  c_thm43->add_option("--u", u)->required();

  auto* c_construct = app.add_subcommand("construct", "generate an extremal pair");
  c_construct->add_option("--name", name, "half-star | section3 | prop22 | prop55")->required();
  c_construct->add_option("--n", n)->required();
  c_construct->add_option("--k", k)->required();
  c_construct->add_option("--out", out_path, "write the pair document here");

  auto* c_verify = app.add_subcommand("verify", "check a pair document");
  c_verify->add_option("--file", file)->required();
  c_verify->add_option("--check", checks, "comma list: disjoint,cross,star_free,pyber,sizes");
  c_verify->add_option("--expect-a", expect_a, "expected |A| for the sizes check");
  c_verify->add_option("--expect-b", expect_b, "expected |B| for the sizes check");

  auto* c_search = app.add_subcommand("search", "exact max-min via branch and bound");
  c_search->add_option("--n", n)->required();
  c_search->add_option("--k", k)->required();
  c_search->add_flag("--star-free", star_free);
  c_search->add_flag("--allow-overlap", allow_overlap);
  c_search->add_option("--timeout", timeout_s, "seconds");
  c_search->add_option("--nodes", node_limit, "node budget (0 = default)");
  c_search->add_option("--workers", workers, "default from KCROSS_WORKERS, else 1");
  c_search->add_flag("--no-symmetry", no_symmetry);
  c_search->add_option("--out", out_path, "certificate path (default kcross-cert-n<N>-k<K>.json)");

  auto* c_exh = app.add_subcommand("exhaustive", "brute-force oracle over all labelings");
  c_exh->add_option("--n", n)->required();
  c_exh->add_option("--k", k)->required();
  c_exh->add_flag("--star-free", star_free);
  c_exh->add_flag("--allow-overlap", allow_overlap);
  c_exh->add_option("--out", out_path, "certificate path");

  auto* c_lex = app.add_subcommand("lex", "initial segment L(n,t,m)");
  c_lex->add_option("--n", n)->required();
  c_lex->add_option("--t", t)->required();
  c_lex->add_option("--m", m)->required();
  c_lex->add_option("--out", out_path);

  auto* c_shadow = app.add_subcommand("shadow", "l-shadow of a family from a pair document");
  c_shadow->add_option("--file", file)->required();
  c_shadow->add_option("--level", level)->required();
  c_shadow->add_option("--side", side, "A or B (default A)");
  c_shadow->add_option("--out", out_path);

  auto* c_binom = app.add_subcommand("binom", "exact binomial coefficient");
  c_binom->add_option("--n", n64)->required();
  c_binom->add_option("--r", r)->required();

  auto* c_cross = app.add_subcommand("crossover", "minimal n where an inequality flips");
  c_cross->add_option("--which", which, "eq_5_2|eq_5_3|eq_5_7|eq_5_12|eq_5_13|eq_5_14")->required();
  c_cross->add_option("--k", k)->required();
  c_cross->add_option("--cap", cap, "scan cap (default max(4k^3,1000))");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (c_classify->parsed()) return cmd_classify(n64, k, as_json);
  if (c_bounds->parsed()) return cmd_bounds(n64, k, as_json);
  if (c_table->parsed()) return cmd_table(kmin, kmax, nmax, as_json);
  if (c_thm43->parsed()) {
    char* raw = nullptr;
    kx_status st = kx_thm43_threshold(n64, k, u, &raw);
    if (st != KX_OK) die(st);
    std::cout << take_string(raw) << "\n";
    return 0;
  }
  if (c_construct->parsed()) return cmd_construct(name, n, k, out_path, as_json);
  if (c_verify->parsed()) return cmd_verify(file, checks, expect_a, expect_b, as_json);
  if (c_search->parsed() || c_exh->parsed()) {
    kx_search_options opts;
    kx_search_options_init(&opts);
    opts.star_free = star_free ? 1 : 0;
    opts.allow_overlap = allow_overlap ? 1 : 0;
    opts.node_limit = node_limit;
    opts.time_limit_ms = static_cast<uint64_t>(timeout_s * 1000.0);
    opts.symmetry_fix = no_symmetry ? 0 : 1;
    if (workers > 0) {
      opts.workers = workers;
    } else if (const char* env = std::getenv("KCROSS_WORKERS")) {
      opts.workers = std::max(1, std::atoi(env));
    }
    if (out_path.empty() && c_search->parsed())
      out_path = "kcross-cert-n" + std::to_string(n) + "-k" + std::to_string(k) + ".json";
    return run_search(n, k, opts, out_path, as_json, c_exh->parsed());
  }
  if (c_lex->parsed()) return cmd_lex(n, t, m, out_path, as_json);
  if (c_shadow->parsed()) return cmd_shadow(file, level, side, out_path, as_json);
  if (c_binom->parsed()) {
    char* raw = nullptr;
    kx_status st = kx_binomial(n64, r, &raw);
    if (st != KX_OK) die(st);
    std::cout << take_string(raw) << "\n";
    return 0;
  }
  if (c_cross->parsed()) {
    char* raw = nullptr;
    kx_status st = kx_ineq_crossover_json(which.c_str(), k, cap, &raw);
    if (st != KX_OK) die(st);
    json rep = json::parse(take_string(raw));
    if (as_json)
      std::cout << rep.dump(2) << "\n";
    else if (rep["found"].get<bool>())
      std::cout << rep["which"].get<std::string>() << " at k=" << k << ": "
                << rep["sense"].get<std::string>() << " n = " << rep["n"] << "\n";
    else
      std::cout << rep["which"].get<std::string>() << " at k=" << k
                << ": not reached up to the scan cap " << rep["cap"] << "\n";
    return 0;
  }
  return 2;
}
