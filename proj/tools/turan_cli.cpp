// turan: command-line front end.
//
//   verify    freeness / CBC check of a hypergraph file
//   construct sample-and-repair construction, writes the hypergraph
//   decode    serve a batch request through distinct servers
//   bounds    closed-form bounds and exponents at one point
//   exact     exact Turan numbers, or a difference table (CSV)
//   certify   proof-procedure certificates, with a --check replay
//   sweep     CSV over a parameter grid
//
// Exit codes: 0 ok, 1 property fails, 2 usage or parse error,
// 3 infeasible (too large, not applicable, degenerate parameters).

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "turan/serialize.hpp"
#include "turan/turan.hpp"

namespace {

using namespace turan;

constexpr int kOk = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kInfeasible = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge:
    case ErrorKind::NotApplicable:
    case ErrorKind::DegenerateParams:
    case ErrorKind::NoFeasibleC:
    case ErrorKind::InfeasibleExact:
    case ErrorKind::EmptyGraph:
    case ErrorKind::DisconnectedRoot:
      return kInfeasible;
    case ErrorKind::NoSdr:
    case ErrorKind::NotFree:
    case ErrorKind::InvariantViolation:
      return kFails;
    default:
      return kUsage;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Appends the keys of `body` after the header keys.
void merge(Json& j, const Json& body) {
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  int k = 0;
  int q = 0;
  bool f_exact = false;
  bool cbc = false;
};

int run_verify(const VerifyArgs& a) {
  const Hypergraph h = read_hypergraph(read_file(a.input));
  Json j = json_header("verify");
  FreenessVerdict v;
  if (a.cbc) {
    j["family"] = "CBC";
    v = is_cbc(h, static_cast<std::size_t>(std::max(a.k, 0)));
  } else if (a.f_exact) {
    j["family"] = "F";
    v = is_f_free(h, ParamTriple{h.r(), a.k, a.q});
  } else {
    j["family"] = "H";
    v = is_free(h, ParamTriple{h.r(), a.k, a.q});
  }
  j["n"] = h.n();
  j["r"] = h.r();
  j["m"] = h.m();
  j["k"] = a.k;
  if (!a.cbc) j["q"] = a.q;
  j["verdict"] = to_json(v);
  emit(j);
  return v.free ? kOk : kFails;
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::size_t n = 0;
  int r = 2;
  int k = 0;
  int q = 0;
  double c = 1.0;
  std::uint64_t seed = 0;
  std::string policy = "witness-degree";
  std::string out;
  std::size_t tune_seeds = 0;
};

int run_construct(const ConstructArgs& a) {
  const auto policy = parse_policy(a.policy);
  if (!policy) throw UsageError("unknown policy " + a.policy);
  const ParamTriple params{a.r, a.k, a.q};
  double c = a.c;
  if (a.tune_seeds > 0) {
    std::vector<std::uint64_t> seeds(a.tune_seeds);
    std::iota(seeds.begin(), seeds.end(), std::uint64_t{0});
    c = auto_tune_c(a.n, params, seeds, *policy);
  }
  const auto rep = random_construct(a.n, params, c, a.seed, *policy);
  write_file(a.out, write_hypergraph(rep.result));
  Json j = json_header("construct");
  merge(j, to_json(rep, a.out));
  j["auto_tuned"] = a.tune_seeds > 0;
  emit(j);
  return kOk;
}

// ---------------------------------------------------------------------------

struct DecodeArgs {
  std::string input;
  int k = 0;
  std::vector<std::size_t> items;
};

int run_decode(const DecodeArgs& a) {
  const Hypergraph h = read_hypergraph(read_file(a.input));
  if (a.items.empty()) throw UsageError("empty request");
  if (a.items.size() > static_cast<std::size_t>(std::max(a.k, 0))) throw UsageError("request larger than k");
  Json j = json_header("decode");
  j["k"] = a.k;
  j["items"] = a.items;
  try {
    const auto plan = sdr_retrieve(h, a.items);
    Json assign = Json::array();
    for (auto [item, server] : plan.assignment) assign.push_back({{"item", item}, {"server", server}});
    j["decodable"] = true;
    j["assignment"] = assign;
    emit(j);
    return kOk;
  } catch (const NoSdrError& e) {
    j["decodable"] = false;
    j["violator"] = e.violator();
    emit(j);
    return kFails;
  }
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
  std::size_t n = 0;
  int r = 2;
  int k = 0;
  int q = 0;
};

int run_bounds(const BoundsArgs& a) {
  const auto rep = bound_report(a.n, ParamTriple{a.r, a.k, a.q});
  Json j = json_header("bounds");
  merge(j, to_json(rep));
  const int v = rep.params.k - rep.params.q - 1;
  j["v"] = v;
  if (rep.params.r == 2) {
    j["f_upper_r2"] = to_json(evaluate([&] { return f_upper_r2(a.n, v, rep.params.k); }));
  } else {
    const auto g = evaluate([&] { return f_upper_general(a.n, rep.params.r, v, rep.params.k); });
    if (g.value) {
      j["f_upper_general"] = {{"leading", g.value->leading}, {"lower_order", g.value->lower_order},
                              {"total", g.value->total()}};
    } else {
      j["f_upper_general"] = {{"not_applicable", g.not_applicable}};
    }
  }
  emit(j);
  return kOk;
}

// ---------------------------------------------------------------------------

// "a..b", "a,b,c" or "a".
std::vector<long> parse_range(const std::string& text) {
  std::vector<long> out;
  auto to_long = [&](const std::string& s) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(s, &pos);
    } catch (const std::exception&) {
      throw UsageError("bad number '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("bad number '" + s + "'");
    return v;
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const long lo = to_long(text.substr(0, dots));
    const long hi = to_long(text.substr(dots + 2));
    for (long v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ','))
    if (!part.empty()) out.push_back(to_long(part));
  return out;
}

struct ExactArgs {
  std::size_t n = 0;
  int r = 2;
  int k = 0;
  int q = 0;
  std::string family = "H";
  std::string mode = "branch_and_bound";
  std::string difference;
};

int run_exact(const ExactArgs& a) {
  const auto mode = parse_mode(a.mode);
  if (!mode) throw UsageError("unknown mode " + a.mode);
  const ParamTriple params{a.r, a.k, a.q};
  if (!a.difference.empty()) {
    std::vector<std::size_t> ns;
    for (long v : parse_range(a.difference)) {
      if (v < 0) throw UsageError("negative n");
      ns.push_back(static_cast<std::size_t>(v));
    }
    const auto table = difference_table(params, ns, *mode);
    std::cout << "n,exact_f,exact_ex,difference,diff_upper_general\n";
    for (const auto& row : table.rows) {
      std::cout << row.n << ',' << row.exact_f << ',' << row.exact_ex << ',' << row.difference << ','
                << (row.diff_upper ? std::to_string(*row.diff_upper) : "") << '\n';
    }
    if (table.d_floor) std::cerr << "empirical d floor: " << *table.d_floor << "\n";
    return kOk;
  }
  ExactResult res;
  if (a.family == "H") {
    res = exact_ex(a.n, params, *mode);
  } else if (a.family == "F") {
    res = exact_f(a.n, params, *mode);
  } else if (a.family == "M") {
    res = exact_ex_multi(a.n, params, *mode);
  } else {
    throw UsageError("family must be H, F or M");
  }
  Json j = json_header("exact");
  merge(j, to_json(res));
  emit(j);
  return kOk;
}

// ---------------------------------------------------------------------------

struct CertifyArgs {
  std::string kind;
  std::string input;
  int k = 0;
  int q = 0;
  Vertex root = 0;
  std::string check;
};

// Certificate document: everything needed to recompute it.
Json build_certificate(const std::string& kind, const Hypergraph& h, int k, int q, Vertex root, bool& holds) {
  Json j = json_header("certify");
  j["kind"] = kind;
  j["k"] = k;
  j["q"] = q;
  if (kind == "bfs") j["root"] = root;
  j["input"] = write_hypergraph(h);
  if (kind == "peel") {
    const auto c = peel_min_degree(h);
    holds = c.remaining.empty() || Rational(static_cast<std::int64_t>(c.final_min_degree)) > c.threshold;
    j["certificate"] = to_json(c);
  } else if (kind == "bfs") {
    const auto c = bfs_certificate(h, root, k, q);
    holds = c.all_hold();
    j["certificate"] = to_json(c);
  } else if (kind == "link") {
    const auto c = best_link(h, ParamTriple{h.r(), k, q});
    holds = c.inequality_holds && c.transfer_holds;
    j["certificate"] = to_json(c);
  } else if (kind == "decompose") {
    const auto c = decompose_maximal_forbidden(h, k, q);
    holds = c.edge_partition_check && c.parts_disjoint && c.ratio_check &&
            (c.verdict == DecompositionVerdict::MaximalAtK || c.remainder_free);
    j["certificate"] = to_json(c);
  } else if (kind == "lemma51") {
    const auto c = verify_lemma51(h, k, q);
    holds = c.holds;
    j["certificate"] = to_json(c);
  } else {
    throw UsageError("kind must be peel, bfs, link, decompose or lemma51");
  }
  j["holds"] = holds;
  return j;
}

int run_certify(const CertifyArgs& a) {
  bool holds = false;
  if (!a.check.empty()) {
    const std::string stored = read_file(a.check);
    Json doc;
    try {
      doc = Json::parse(stored);
    } catch (const Json::exception& e) {
      throw UsageError(std::string("certificate is not JSON: ") + e.what());
    }
    if (doc.value("schema", "") != kSchema) throw UsageError("unknown certificate schema");
    const Json fresh = build_certificate(doc.at("kind").get<std::string>(),
                                         read_hypergraph(doc.at("input").get<std::string>()), doc.at("k").get<int>(),
                                         doc.at("q").get<int>(), doc.value("root", Vertex{0}), holds);
    const bool same = fresh.dump(2) + "\n" == stored;
    Json j = json_header("certify-check");
    j["kind"] = doc.at("kind");
    j["matches"] = same;
    j["holds"] = holds;
    emit(j);
    return same ? kOk : kFails;
  }
  const Hypergraph h = read_hypergraph(read_file(a.input));
  emit(build_certificate(a.kind, h, a.k, a.q, a.root, holds));
  return holds ? kOk : kFails;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
  std::string grid;
  std::string csv;
};

struct Grid {
  std::vector<long> n, r, k, q, seeds;
  std::vector<double> c{1.0};
  std::uint64_t exact_max = 28;
};

Grid parse_grid(const std::string& text) {
  Grid g;
  bool have_n = false, have_r = false, have_k = false, have_q = false, have_seeds = false;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("grid item '" + item + "' lacks '='");
    const std::string key = item.substr(0, eq);
    const std::string val = item.substr(eq + 1);
    if (key == "n") {
      g.n = parse_range(val);
      have_n = true;
    } else if (key == "r") {
      g.r = parse_range(val);
      have_r = true;
    } else if (key == "k") {
      g.k = parse_range(val);
      have_k = true;
    } else if (key == "q") {
      g.q = parse_range(val);
      have_q = true;
    } else if (key == "seeds") {
      g.seeds = parse_range(val);
      have_seeds = true;
    } else if (key == "c") {
      g.c.clear();
      std::stringstream cs(val);
      std::string part;
      while (std::getline(cs, part, ',')) {
        try {
          g.c.push_back(std::stod(part));
        } catch (const std::exception&) {
          throw UsageError("bad c value '" + part + "'");
        }
      }
    } else if (key == "exact_max") {
      const auto v = parse_range(val);
      if (v.size() != 1 || v[0] < 0) throw UsageError("exact_max takes one nonnegative value");
      g.exact_max = static_cast<std::uint64_t>(v[0]);
    } else {
      throw UsageError("unknown grid key '" + key + "'");
    }
  }
  // A missing axis leaves the grid empty.
  if (!have_n) g.n.clear();
  if (!have_r) g.r = {2};
  if (!have_k) g.k.clear();
  if (!have_q) g.q = {0};
  if (!have_seeds) g.seeds = {0};
  return g;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

int run_sweep(const SweepArgs& a) {
  const Grid g = parse_grid(a.grid);
  std::ostringstream out;
  out << "n,r,k,q,c,seeds,lower_exponent,upper_exponent,competing_exponent,construct_max,construct_mean,"
         "exact_ex,exact_f,difference,diff_upper,upper_bound,sandwich\n";
  bool all_ok = true;
  std::size_t skipped = 0;
  for (long r : g.r)
    for (long k : g.k)
      for (long q : g.q)
        for (long nl : g.n)
          for (double c : g.c) {
            ParamTriple p;
            try {
              p = validate_params(static_cast<int>(r), static_cast<int>(k), static_cast<int>(q));
            } catch (const ParamError&) {
              ++skipped;
              continue;
            }
            if (nl < r) {
              ++skipped;
              continue;
            }
            const auto n = static_cast<std::size_t>(nl);
            std::size_t best = 0;
            double total = 0;
            for (long s : g.seeds) {
              const auto rep = random_construct(n, p, c, static_cast<std::uint64_t>(s));
              best = std::max(best, rep.result.m());
              total += static_cast<double>(rep.result.m());
            }
            const double mean = g.seeds.empty() ? 0.0 : total / static_cast<double>(g.seeds.size());
            const auto upper_exp = evaluate([&] { return hypergraph_upper_exponent(p); });
            const auto competing = evaluate([&] { return competing_exponent_bb(p.r); });
            Evaluated<double> upper = p.r == 2 ? evaluate([&] { return graph_upper(n, p.k, p.q); })
                                               : evaluate([&] { return hypergraph_upper(n, p); });
            std::string ex_s, f_s, diff_s, sandwich;
            const auto diff_upper = evaluate([&] { return diff_upper_general(n, p.r, p.k, p.q); });
            if (binomial(static_cast<std::int64_t>(n), p.r) <= g.exact_max) {
              const auto ex = exact_ex(n, p).value;
              ex_s = std::to_string(ex);
              if (p.k >= 2) {
                const auto f = exact_f(n, p).value;
                f_s = std::to_string(f);
                diff_s = std::to_string(f - ex);
              }
              const bool ok = best <= ex && (!upper.value || static_cast<double>(ex) < *upper.value);
              sandwich = ok ? "ok" : "fail";
              all_ok = all_ok && ok;
            }
            out << n << ',' << p.r << ',' << p.k << ',' << p.q << ',' << fmt(c) << ',' << g.seeds.size() << ','
                << fmt(to_double(lower_exponent(p))) << ',' << (upper_exp.value ? fmt(to_double(*upper_exp.value)) : "")
                << ',' << (competing.value ? fmt(to_double(*competing.value)) : "") << ',' << best << ','
                << fmt(mean) << ',' << ex_s << ',' << f_s << ',' << diff_s << ','
                << (diff_upper.value ? std::to_string(*diff_upper.value) : "") << ','
                << (upper.value ? fmt(*upper.value) : "") << ',' << sandwich << '\n';
          }
  if (skipped) std::cerr << "skipped " << skipped << " invalid grid points\n";
  if (a.csv.empty()) {
    std::cout << out.str();
  } else {
    write_file(a.csv, out.str());
  }
  return all_ok ? kOk : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turan numbers of sparse hypergraph families and combinatorial batch codes"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check H(k,q)-, F(k,q)-freeness or the CBC property");
  verify->add_option("--input", va.input, "Hypergraph file")->required();
  verify->add_option("--k", va.k, "Selection size bound")->required();
  verify->add_option("--q", va.q, "Slack (use --q=-1 for negatives)");
  verify->add_flag("--f-exact", va.f_exact, "Only forbid selections of exactly k edges");
  verify->add_flag("--cbc", va.cbc, "Batch code check (q = 0)");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Random construction with deletion repair");
  construct->add_option("--n", ca.n, "Vertices")->required();
  construct->add_option("--r", ca.r, "Uniformity")->required();
  construct->add_option("--k", ca.k, "Selection size bound")->required();
  construct->add_option("--q", ca.q, "Slack");
  construct->add_option("--c", ca.c, "Probability constant");
  construct->add_option("--seed", ca.seed, "RNG seed");
  construct->add_option("--policy", ca.policy, "witness-degree | random-in-witness | first-index");
  construct->add_option("--out", ca.out, "Output hypergraph file")->required();
  construct->add_option("--auto-c", ca.tune_seeds, "Tune c over seeds 0..N-1 first");

  DecodeArgs da;
  auto* decode = app.add_subcommand("decode", "Assign requested items to distinct servers");
  decode->add_option("--input", da.input, "Hypergraph file (edges are items)")->required();
  decode->add_option("--k", da.k, "Batch size")->required();
  decode->add_option("--items", da.items, "Comma-separated edge indices")->required()->delimiter(',');

  BoundsArgs ba;
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds and exponents");
  bounds->add_option("--n", ba.n, "Vertices")->required();
  bounds->add_option("--r", ba.r, "Uniformity")->required();
  bounds->add_option("--k", ba.k, "Selection size bound")->required();
  bounds->add_option("--q", ba.q, "Slack");

  ExactArgs ea;
  auto* exact = app.add_subcommand("exact", "Exact extremal numbers on small n");
  exact->add_option("--n", ea.n, "Vertices");
  exact->add_option("--r", ea.r, "Uniformity")->required();
  exact->add_option("--k", ea.k, "Selection size bound")->required();
  exact->add_option("--q", ea.q, "Slack");
  exact->add_option("--family", ea.family, "H, F or M (multihypergraphs)");
  exact->add_option("--mode", ea.mode, "bruteforce | branch_and_bound");
  exact->add_option("--difference", ea.difference, "n range (e.g. 6..8): print the F-minus-H table as CSV");

  CertifyArgs cfa;
  auto* certify = app.add_subcommand("certify", "Emit or re-check a proof-procedure certificate");
  certify->add_option("--kind", cfa.kind, "peel | bfs | link | decompose | lemma51");
  certify->add_option("--input", cfa.input, "Hypergraph file");
  certify->add_option("--k", cfa.k, "Selection size bound");
  certify->add_option("--q", cfa.q, "Slack");
  certify->add_option("--root", cfa.root, "BFS root");
  certify->add_option("--check", cfa.check, "Recompute a stored certificate and compare bytes");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "CSV table over a parameter grid");
  sweep->add_option("--grid", sa.grid, "e.g. \"n=6..8;r=2;k=6;q=0;seeds=0..4\"")->required();
  sweep->add_option("--csv", sa.csv, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify) return run_verify(va);
    if (*construct) return run_construct(ca);
    if (*decode) return run_decode(da);
    if (*bounds) return run_bounds(ba);
    if (*exact) return run_exact(ea);
    if (*certify) {
      if (cfa.check.empty() && (cfa.kind.empty() || cfa.input.empty())) {
        throw UsageError("certify needs --kind and --input, or --check");
      }
      return run_certify(cfa);
    }
    if (*sweep) return run_sweep(sa);
  } catch (const turan::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
