// blockpoly: characteristic/permanent polynomials, determinants and
// permanents of square matrices through the block structure of their
// digraphs, with brute-force verification built in.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "blockpoly/block_graph_det.hpp"
#include "blockpoly/io.hpp"
#include "blockpoly/oracles.hpp"
#include "blockpoly/poly_engine.hpp"
#include "blockpoly/schur.hpp"

using nlohmann::json;
using namespace blockpoly;

namespace {

struct CommonOpts {
  std::string input;
  std::string format = "auto";
  std::string mode = "auto";
  std::string engine = "theorem";
  bool emit_json = false;
  std::string output;
  int threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_engine = true) {
  cmd->add_option("--input,-i,input", o.input, "input matrix file")->required();
  cmd->add_option("--format", o.format, "input format: mm|csv|auto")
      ->check(CLI::IsMember({"mm", "csv", "auto"}));
  cmd->add_option("--mode", o.mode, "coefficient mode: int|complex|auto")
      ->check(CLI::IsMember({"int", "complex", "auto"}));
  if (with_engine)
    cmd->add_option("--engine", o.engine, "engine: theorem|recursive|oracle")
        ->check(CLI::IsMember({"theorem", "recursive", "oracle"}));
  cmd->add_flag("--json", o.emit_json, "emit a JSON report");
  cmd->add_option("--output,-o", o.output, "write the report to a file instead of stdout");
  cmd->add_option("--threads,-j", o.threads, "parallelism degree (BLOCKPOLY_THREADS overrides)");
}

MatrixFormat to_format(const std::string& f) {
  if (f == "mm") return MatrixFormat::MatrixMarket;
  if (f == "csv") return MatrixFormat::Csv;
  return MatrixFormat::Auto;
}

ParsedMatrix load(const CommonOpts& o) { return read_matrix_file(o.input, to_format(o.format)); }

bool use_int_mode(const CommonOpts& o, const ParsedMatrix& m) {
  if (o.mode == "int") {
    (void)m.integer_matrix();  // throws ConfigError when entries are not integers
    return true;
  }
  if (o.mode == "complex") return false;
  return m.all_integer;
}

void emit(const CommonOpts& o, const json& report, const std::string& plain) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output);
    if (!file) throw ConfigError("cannot open output file '" + o.output + "'");
    out = &file;
  }
  if (o.emit_json)
    *out << report.dump(2) << "\n";
  else
    *out << plain;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

template <class R>
json terms_to_json(const std::vector<TheoremTerm<R>>& terms) {
  json arr = json::array();
  for (const auto& t : terms) {
    json summands = json::array();
    for (const auto& s : t.summands) {
      json parts = json::array();
      for (const auto& p : s.parts) parts.push_back(p);
      summands.push_back({{"parts", parts}, {"value", json_io::polynomial_to_json(s.value)}});
    }
    arr.push_back({{"removed", t.removed},
                   {"multiplier", json_io::polynomial_to_json(t.multiplier)},
                   {"summand_total", json_io::polynomial_to_json(t.summand_total)},
                   {"summands", summands}});
  }
  return arr;
}

template <class R>
json base_report(const std::string& command, const CommonOpts& o, const WeightedDigraph<R>& g) {
  return json{{"command", command},
              {"input", o.input},
              {"mode", coeff_traits<R>::mode_name},
              {"n", g.order()}};
}

// ---- charpoly / permpoly ----------------------------------------------------

template <class R>
int run_poly(const std::string& command, const CommonOpts& o, const Matrix<R>& a, PolyKind kind) {
  auto g = digraph_of_matrix(a);
  const auto t0 = std::chrono::steady_clock::now();
  Polynomial<R> poly;
  std::vector<TheoremTerm<R>> terms;
  if (o.engine == "theorem") {
    poly = PolyEngine<R>(g, kind).theorem_terms(terms);
  } else if (o.engine == "recursive") {
    poly = kind == PolyKind::Char ? charpoly_recursive(g) : permpoly_recursive(g);
  } else {
    poly = kind == PolyKind::Char ? oracle::leibniz_charpoly(a, resolve_threads(o.threads))
                                  : oracle::leibniz_permpoly(a, resolve_threads(o.threads));
  }
  const double elapsed = ms_since(t0);

  json report = base_report(command, o, g);
  report["engine"] = o.engine;
  report["elapsed_ms"] = elapsed;
  report["polynomial"] = json_io::polynomial_to_json(poly);
  report["blocks"] = json_io::decomposition_to_json(decompose(g));
  report["bpartition_count"] = bpartition_count(decompose(g));
  if (!terms.empty()) report["terms"] = terms_to_json(terms);
  emit(o, report, command + "(" + o.input + ") = " + poly.to_string() + "\n");
  return 0;
}

// ---- det / per ---------------------------------------------------------------

template <class R>
int run_value(const std::string& command, const CommonOpts& o, const Matrix<R>& a, PolyKind kind,
              const std::string& engine, bool explain) {
  auto g = digraph_of_matrix(a);
  const auto t0 = std::chrono::steady_clock::now();
  R value = coeff_traits<R>::zero();
  json extra;
  if (engine == "theorem") {
    value = kind == PolyKind::Char ? charpoly_theorem(g).eval_at_zero()
                                   : permpoly_theorem(g).eval_at_zero();
  } else if (engine == "recursive") {
    value = ValueEngine<R>(g, kind).run();
  } else if (engine == "oracle") {
    value = kind == PolyKind::Char ? oracle::leibniz_det(a) : oracle::leibniz_per(a);
  } else if (engine == "blockgraph") {
    if (kind != PolyKind::Char) throw ConfigError("--engine blockgraph applies to det only");
    if constexpr (coeff_traits<R>::exact) {
      BigInt bg = det_block_graph(g);
      value = bg;
      if (explain) {
        json tuples = json::array();
        for (const auto& t : feasible_ktuples(g)) tuples.push_back(t);
        extra["ktuples"] = tuples;
      }
    } else {
      throw ConfigError("--engine blockgraph requires exact integer mode");
    }
  } else {
    throw ConfigError("unknown det/per engine '" + engine + "'");
  }
  const double elapsed = ms_since(t0);
  json report = base_report(command, o, g);
  report["engine"] = engine;
  report["elapsed_ms"] = elapsed;
  report["value"] = json_io::coeff_to_json(value);
  if (!extra.is_null()) report.update(extra);
  emit(o, report, command + "(" + o.input + ") = " + coeff_traits<R>::to_string(value) + "\n");
  return 0;
}

// ---- blocks ------------------------------------------------------------------

template <class R>
int run_blocks(const CommonOpts& o, const Matrix<R>& a, const std::string& dot_path,
               bool block_colors) {
  auto g = digraph_of_matrix(a);
  BlockDecomposition d = decompose(g);
  json report = base_report("blocks", o, g);
  report.update(json_io::decomposition_to_json(d));
  json pend = json::array();
  for (int b : pendant_blocks(d)) pend.push_back(b);
  report["pendant_blocks"] = pend;
  if (!dot_path.empty()) {
    std::ofstream dot(dot_path);
    if (!dot) throw ConfigError("cannot open DOT output '" + dot_path + "'");
    dot << to_dot(g, &d, block_colors);
    report["dot"] = dot_path;
  }
  std::ostringstream plain;
  plain << "blocks:";
  for (const auto& b : d.blocks) {
    plain << " {";
    for (std::size_t i = 0; i < b.size(); ++i) plain << (i ? "," : "") << "v" << b[i];
    plain << "}";
  }
  plain << "\ncut-vertices:";
  for (VertexId v : d.cut_vertices) plain << " v" << v << "(index " << d.cut_index.at(v) << ")";
  plain << "\n";
  emit(o, report, plain.str());
  return 0;
}

// ---- bpartitions ---------------------------------------------------------------

template <class R>
int run_bpartitions(const CommonOpts& o, const Matrix<R>& a, bool count_only) {
  auto g = digraph_of_matrix(a);
  BlockDecomposition d = decompose(g);
  if (count_only) {
    json report = base_report("bpartitions", o, g);
    report["bpartition_count"] = bpartition_count(d);
    emit(o, report, std::to_string(bpartition_count(d)) + "\n");
    return 0;
  }
  PolyEngine<R> phi_engine(g, PolyKind::Char);
  json list = json::array();
  std::ostringstream plain;
  for_each_bpartition(d, {}, [&](const BPartition& p) {
    Polynomial<R> phi = summand(p, phi_engine);
    json parts = json::array();
    plain << "{ ";
    for (const auto& part : p.parts) {
      parts.push_back(part);
      plain << "[";
      for (std::size_t i = 0; i < part.size(); ++i) plain << (i ? "," : "") << part[i];
      plain << "] ";
    }
    json assignment = json::object();
    for (const auto& [v, b] : p.assignment) assignment[std::to_string(v)] = b;
    list.push_back({{"parts", parts},
                    {"assignment", assignment},
                    {"phi_summand", json_io::polynomial_to_json(phi)},
                    {"det_summand", json_io::coeff_to_json(phi.eval_at_zero())}});
    plain << "}  phi-summand: " << phi.to_string() << "\n";
  });
  json report = base_report("bpartitions", o, g);
  report["bpartition_count"] = bpartition_count(d);
  report["bpartitions"] = list;
  emit(o, report, plain.str());
  return 0;
}

// ---- singular-check -------------------------------------------------------------

template <class R>
int run_singular(const CommonOpts& o, const Matrix<R>& a) {
  auto g = digraph_of_matrix(a);
  auto conditions = singularity_conditions(g);
  R det = determinant(g);
  json report = base_report("singular-check", o, g);
  report["conditions"] = conditions;
  report["det"] = json_io::coeff_to_json(det);
  report["singular"] = coeff_traits<R>::is_zero(det);
  std::ostringstream plain;
  plain << "satisfied conditions:";
  if (conditions.empty()) plain << " none";
  for (int c : conditions) plain << " " << c;
  plain << "\ndet = " << coeff_traits<R>::to_string(det) << "\n";
  emit(o, report, plain.str());
  return 0;
}

// ---- schur-det ------------------------------------------------------------------

template <class R>
int run_schur(const CommonOpts& o, const Matrix<R>& a, const std::string& pivot, bool with_trace) {
  auto g = digraph_of_matrix(a);
  SchurOptions opt;
  opt.threads = resolve_threads(o.threads);
  if (pivot == "exhaustive") opt.rule = PivotRule::Exhaustive;
  if (pivot == "max-degree") opt.rule = PivotRule::MaxDegree;
  std::vector<EliminationStep<R>> trace;
  const auto t0 = std::chrono::steady_clock::now();
  R value = det_schur(g, opt, with_trace ? &trace : nullptr);
  const double elapsed = ms_since(t0);
  json report = base_report("schur-det", o, g);
  report["engine"] = "schur";
  report["pivot"] = pivot;
  report["elapsed_ms"] = elapsed;
  report["value"] = json_io::coeff_to_json(value);
  if (with_trace) {
    json steps = json::array();
    for (const auto& s : trace) {
      json reduced = json::array();
      for (std::size_t i = 0; i < s.reduced.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < s.reduced.cols(); ++j)
          row.push_back(json_io::coeff_to_json(s.reduced.at(i, j)));
        reduced.push_back(row);
      }
      steps.push_back({{"pivot", s.pivot}, {"case", schur_case_name(s.kind)}, {"reduced", reduced}});
    }
    report["trace"] = steps;
  }
  emit(o, report, "schur-det(" + o.input + ") = " + coeff_traits<R>::to_string(value) + "\n");
  return 0;
}

// ---- verify ---------------------------------------------------------------------

json report_to_json(const oracle::OracleReport& r) {
  return json{{"subject", r.subject},   {"quantity", r.quantity},
              {"engine", r.engine},     {"engine_value", r.engine_value},
              {"oracle_value", r.oracle_value}, {"verdict", r.equal ? "equal" : "mismatch"},
              {"max_deviation", r.max_deviation}};
}

template <class R>
int run_verify(const CommonOpts& o, const Matrix<R>& a) {
  constexpr double kTol = 1e-9;
  auto g = digraph_of_matrix(a);
  std::vector<oracle::OracleReport> reports;
  const bool oracle_ok = g.order() <= oracle::kLeibnizPolyOrderCap;
  const bool value_oracle_ok = g.order() <= oracle::kLeibnizValueOrderCap;

  if (oracle_ok) {
    auto phi_oracle = oracle::leibniz_charpoly(a, resolve_threads(o.threads));
    reports.push_back(oracle::compare_polynomials(o.input, "charpoly", "theorem",
                                                  charpoly_theorem(g), phi_oracle, kTol));
    reports.push_back(oracle::compare_polynomials(o.input, "charpoly", "recursive",
                                                  charpoly_recursive(g), phi_oracle, kTol));
    auto psi_oracle = oracle::leibniz_permpoly(a, resolve_threads(o.threads));
    reports.push_back(oracle::compare_polynomials(o.input, "permpoly", "theorem",
                                                  permpoly_theorem(g), psi_oracle, kTol));
    reports.push_back(oracle::compare_polynomials(o.input, "permpoly", "recursive",
                                                  permpoly_recursive(g), psi_oracle, kTol));
  }
  if (value_oracle_ok) {
    R det_oracle = oracle::leibniz_det(a);
    reports.push_back(
        oracle::compare_values(o.input, "det", "theorem", determinant(g), det_oracle, kTol));
    reports.push_back(oracle::compare_values(o.input, "det", "schur",
                                             det_schur(g, SchurOptions{}),
                                             det_oracle, coeff_traits<R>::exact ? kTol : 1e-6));
    R per_oracle = oracle::leibniz_per(a);
    reports.push_back(
        oracle::compare_values(o.input, "per", "theorem", permanent(g), per_oracle, kTol));
    if constexpr (coeff_traits<R>::exact) {
      if (g.is_simple() && is_block_graph(g))
        reports.push_back(oracle::compare_values(o.input, "det", "blockgraph",
                                                 BigInt(det_block_graph(g)), det_oracle, kTol));
    }
  }
  if constexpr (!coeff_traits<R>::exact) {
    if (g.order() <= 30 && oracle_ok) {
      reports.push_back(oracle::compare_polynomials(
          o.input, "charpoly", "faddeev-leverrier", oracle::faddeev_leverrier(a),
          oracle::leibniz_charpoly(a, resolve_threads(o.threads)), kTol));
    }
  }

  bool all_equal = true;
  json arr = json::array();
  std::ostringstream plain;
  for (const auto& r : reports) {
    all_equal = all_equal && r.equal;
    arr.push_back(report_to_json(r));
    plain << (r.equal ? "  ok   " : "  FAIL ") << r.quantity << " [" << r.engine << "]\n";
  }
  json report = base_report("verify", o, g);
  report["reports"] = arr;
  report["all_equal"] = all_equal;
  emit(o, report, (all_equal ? "verify: all equal\n" : "verify: MISMATCH\n") + plain.str());
  return all_equal ? 0 : 2;
}

// ---- bench ----------------------------------------------------------------------

// Random tree-of-cliques digraph: `blocks` complete blocks glued at uniformly
// chosen existing vertices (block size fixed, or uniform in 2..5 when 0).
Matrix<BigInt> make_block_graph_instance(int blocks, int block_size, std::mt19937& rng) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> vertices{0};
  int next = 1;
  for (int b = 0; b < blocks; ++b) {
    std::uniform_int_distribution<int> size_dist(2, 5);
    const int size = block_size > 0 ? block_size : size_dist(rng);
    std::uniform_int_distribution<std::size_t> pick(0, vertices.size() - 1);
    const int glue = b == 0 ? 0 : vertices[pick(rng)];
    std::vector<int> members{glue};
    for (int i = 1; i < size; ++i) {
      members.push_back(next);
      vertices.push_back(next);
      ++next;
    }
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) edges.emplace_back(members[i], members[j]);
  }
  Matrix<BigInt> a(static_cast<std::size_t>(next), static_cast<std::size_t>(next));
  for (auto [u, v] : edges) {
    a.at(u, v) = BigInt(1);
    a.at(v, u) = BigInt(1);
  }
  return a;
}

uint64_t digest_polynomial(const Polynomial<BigInt>& p) {
  uint64_t h = 1469598103934665603ull;
  for (const auto& c : p.coeffs())
    for (char ch : c.to_string()) {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ull;
    }
  return h;
}

int run_bench(const std::string& output, int blocks, int block_size, int instances, unsigned seed,
              int threads) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) throw ConfigError("cannot open output file '" + output + "'");
    out = &file;
  }
  *out << "instance,seed,n,blocks,cut_vertices,bpartitions,digest,agree,oracle_ran,oracle_agree,"
          "theorem_ms,recursive_ms,oracle_ms\n";
  for (int k = 0; k < instances; ++k) {
    std::mt19937 rng(seed + static_cast<unsigned>(k));
    Matrix<BigInt> a = make_block_graph_instance(blocks, block_size, rng);
    auto g = digraph_of_matrix(a);
    BlockDecomposition d = decompose(g);

    auto t0 = std::chrono::steady_clock::now();
    auto phi_t = charpoly_theorem(g);
    const double ms_theorem = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    auto phi_r = charpoly_recursive(g);
    const double ms_recursive = ms_since(t0);

    const bool oracle_ran = g.order() <= static_cast<std::size_t>(oracle::kLeibnizPolyOrderCap);
    bool oracle_agree = true;
    double ms_oracle = 0.0;
    if (oracle_ran) {
      t0 = std::chrono::steady_clock::now();
      auto phi_o = oracle::leibniz_charpoly(a, threads);
      ms_oracle = ms_since(t0);
      oracle_agree = phi_o == phi_t;
    }
    *out << k << "," << seed + static_cast<unsigned>(k) << "," << g.order() << ","
         << d.blocks.size() << "," << d.cut_vertices.size() << "," << bpartition_count(d) << ","
         << digest_polynomial(phi_t) << "," << (phi_t == phi_r ? 1 : 0) << ","
         << (oracle_ran ? 1 : 0) << "," << (oracle_agree ? 1 : 0) << "," << ms_theorem << ","
         << ms_recursive << "," << ms_oracle << "\n";
  }
  return 0;
}

// ---- dispatch ----------------------------------------------------------------------

template <class F>
int with_mode(const CommonOpts& o, F&& fn) {
  ParsedMatrix parsed = load(o);
  if (use_int_mode(o, parsed)) return fn(parsed.integer_matrix());
  return fn(parsed.complex_matrix());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block-structured characteristic/permanent polynomial toolkit"};
  app.require_subcommand(1);

  CommonOpts charpoly_opts, permpoly_opts, det_opts, per_opts, blocks_opts, bpart_opts,
      singular_opts, schur_opts, verify_opts;

  auto* cmd_charpoly = app.add_subcommand("charpoly", "characteristic polynomial det(A - xI)");
  add_common(cmd_charpoly, charpoly_opts);
  auto* cmd_permpoly = app.add_subcommand("permpoly", "permanent polynomial per(A - xI)");
  add_common(cmd_permpoly, permpoly_opts);

  auto* cmd_det = app.add_subcommand("det", "determinant");
  add_common(cmd_det, det_opts, false);
  std::string det_engine = "theorem";
  bool det_explain = false;
  cmd_det->add_option("--engine", det_engine, "theorem|recursive|oracle|blockgraph")
      ->check(CLI::IsMember({"theorem", "recursive", "oracle", "blockgraph"}));
  cmd_det->add_flag("--explain", det_explain, "list feasible k-tuples (blockgraph engine)");

  auto* cmd_per = app.add_subcommand("per", "permanent");
  add_common(cmd_per, per_opts, false);
  std::string per_engine = "theorem";
  cmd_per->add_option("--engine", per_engine, "theorem|recursive|oracle")
      ->check(CLI::IsMember({"theorem", "recursive", "oracle"}));

  auto* cmd_blocks = app.add_subcommand("blocks", "block decomposition");
  add_common(cmd_blocks, blocks_opts, false);
  std::string dot_path;
  bool block_colors = false;
  cmd_blocks->add_option("--dot", dot_path, "write a DOT rendering to this path");
  cmd_blocks->add_flag("--block-colors", block_colors, "color DOT edges per block");

  auto* cmd_bpart = app.add_subcommand("bpartitions", "enumerate B-partitions");
  add_common(cmd_bpart, bpart_opts, false);
  bool count_only = false;
  cmd_bpart->add_flag("--count-only", count_only, "print only the partition count");

  auto* cmd_singular = app.add_subcommand("singular-check", "singularity conditions (simple graphs)");
  add_common(cmd_singular, singular_opts, false);

  auto* cmd_schur = app.add_subcommand("schur-det", "determinant by single-vertex elimination");
  add_common(cmd_schur, schur_opts, false);
  std::string pivot = "exhaustive";
  bool with_trace = false;
  cmd_schur->add_option("--pivot", pivot, "exhaustive|max-degree")
      ->check(CLI::IsMember({"exhaustive", "max-degree"}));
  cmd_schur->add_flag("--trace", with_trace, "include the elimination step chain");

  auto* cmd_verify = app.add_subcommand("verify", "run all engines against all applicable oracles");
  add_common(cmd_verify, verify_opts, false);

  auto* cmd_bench = app.add_subcommand("bench", "time the engines on generated block digraphs");
  int bench_blocks = 4, bench_block_size = 3, bench_instances = 5, bench_threads = 1;
  unsigned bench_seed = 1;
  std::string bench_output;
  cmd_bench->add_option("--blocks", bench_blocks, "number of blocks per instance");
  cmd_bench->add_option("--block-size", bench_block_size, "block size (0 = random 2..5)");
  cmd_bench->add_option("--instances", bench_instances, "number of instances");
  cmd_bench->add_option("--seed", bench_seed, "generator seed");
  cmd_bench->add_option("--threads,-j", bench_threads, "parallelism degree");
  cmd_bench->add_option("--output,-o", bench_output, "CSV output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_charpoly->parsed())
      return with_mode(charpoly_opts, [&](const auto& a) {
        return run_poly("charpoly", charpoly_opts, a, PolyKind::Char);
      });
    if (cmd_permpoly->parsed())
      return with_mode(permpoly_opts, [&](const auto& a) {
        return run_poly("permpoly", permpoly_opts, a, PolyKind::Perm);
      });
    if (cmd_det->parsed())
      return with_mode(det_opts, [&](const auto& a) {
        return run_value("det", det_opts, a, PolyKind::Char, det_engine, det_explain);
      });
    if (cmd_per->parsed())
      return with_mode(per_opts, [&](const auto& a) {
        return run_value("per", per_opts, a, PolyKind::Perm, per_engine, false);
      });
    if (cmd_blocks->parsed())
      return with_mode(blocks_opts, [&](const auto& a) {
        return run_blocks(blocks_opts, a, dot_path, block_colors);
      });
    if (cmd_bpart->parsed())
      return with_mode(bpart_opts, [&](const auto& a) {
        return run_bpartitions(bpart_opts, a, count_only);
      });
    if (cmd_singular->parsed())
      return with_mode(singular_opts, [&](const auto& a) { return run_singular(singular_opts, a); });
    if (cmd_schur->parsed())
      return with_mode(schur_opts, [&](const auto& a) {
        return run_schur(schur_opts, a, pivot, with_trace);
      });
    if (cmd_verify->parsed())
      return with_mode(verify_opts, [&](const auto& a) { return run_verify(verify_opts, a); });
    if (cmd_bench->parsed())
      return run_bench(bench_output, bench_blocks, bench_block_size, bench_instances, bench_seed,
                       resolve_threads(bench_threads));
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
