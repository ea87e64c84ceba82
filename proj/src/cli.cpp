#include "hornstab/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "hornstab/envelope.hpp"
#include "hornstab/exterior.hpp"
#include "hornstab/formats.hpp"
#include "hornstab/fuzz.hpp"
#include "hornstab/horn_engine.hpp"
#include "hornstab/instance_gen.hpp"
#include "hornstab/interior.hpp"
#include "hornstab/oracle.hpp"

namespace hornstab::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

struct QueryArgs {
  std::string mode = "interior";
  std::size_t alpha = 0;
  std::string theory_path;
  std::string charset_path;
  std::string clause = "";
  std::string method = "auto";
  bool witness = false;
  bool trace = false;
  bool serial = false;
};

void add_query_options(CLI::App* cmd, QueryArgs& q) {
  cmd->add_option("--mode", q.mode, "interior, exterior or envelope")
      ->check(CLI::IsMember({"interior", "exterior", "envelope"}));
  cmd->add_option("--alpha", q.alpha, "Hamming radius")->required();
  auto* theory = cmd->add_option("--theory", q.theory_path, "Horn CNF file (.hcnf)");
  auto* charset = cmd->add_option("--charset", q.charset_path, "characteristic set file (.models)");
  theory->excludes(charset);
  cmd->add_option("--clause", q.clause, "query clause as signed literals, e.g. \"-1 -2 3\"")
      ->allow_extra_args(false);
  cmd->add_flag("--witness", q.witness, "print a countermodel for NO answers");
  cmd->add_flag("--trace", q.trace, "print the derivation trace");
  cmd->add_flag("--serial", q.serial, "use the serial reference loops");
}

Execution exec_of(bool serial) { return serial ? Execution::kSerial : Execution::kParallel; }

ExteriorMethod method_of(const std::string& m) {
  if (m == "neg") return ExteriorMethod::kNegSide;
  if (m == "pos") return ExteriorMethod::kPosSide;
  return ExteriorMethod::kAuto;
}

int report(const Decision& d, const QueryArgs& q, std::ostream& out) {
  out << to_string(d.answer) << "\n";
  if (q.witness && !d.yes() && d.witness) out << "witness " << d.witness->to_string() << "\n";
  if (q.trace) {
    for (const auto& line : d.trace) out << "trace " << line << "\n";
  }
  return d.yes() ? kExitYes : kExitNo;
}

void require_kb(const QueryArgs& q) {
  if (q.theory_path.empty() == q.charset_path.empty()) {
    throw ValidationError("exactly one of --theory and --charset is required");
  }
}

void warn(const Diagnostics& diag, std::ostream& err) {
  for (const auto& w : diag.warnings) err << "warning: " << w << "\n";
}

int cmd_deduce(const QueryArgs& q, std::ostream& out, std::ostream& err) {
  require_kb(q);
  const Clause c = parse_clause(q.clause);
  const Execution exec = exec_of(q.serial);
  Diagnostics diag;
  Decision d;
  if (!q.theory_path.empty()) {
    const HornTheory t = parse_horn_cnf(read_text_file(q.theory_path), &diag);
    warn(diag, err);
    if (q.mode == "interior") {
      d = deduce_interior_formula(t, c, q.alpha);
    } else if (q.mode == "exterior") {
      d = deduce_exterior_formula(t, c, q.alpha, {exec});
    } else {
      d = deduce_envelope_formula(t, c, q.alpha, {exec});
    }
  } else {
    const ModelSet m = parse_model_set(read_text_file(q.charset_path), &diag);
    warn(diag, err);
    if (q.mode == "interior") {
      d = deduce_interior_charset(m, c, q.alpha, {exec});
    } else if (q.mode == "exterior") {
      d = deduce_exterior_charset(m, c, q.alpha, {exec, kDefaultSubsetCap, method_of(q.method)});
    } else {
      d = deduce_envelope_charset(m, c, q.alpha);
    }
  }
  return report(d, q, out);
}

ModelSet operator_models(const ModelSet& mod, const std::string& mode, std::size_t alpha,
                         Execution exec) {
  if (mode == "interior") return interior_models(mod, alpha, exec);
  const ModelSet ext = exterior_models(mod, alpha, exec);
  return mode == "exterior" ? ext : envelope_models(ext);
}

int cmd_oracle_query(const QueryArgs& q, std::ostream& out, std::ostream& err) {
  require_kb(q);
  const Clause c = parse_clause(q.clause);
  const Execution exec = exec_of(q.serial);
  Diagnostics diag;
  ModelSet mod;
  if (!q.theory_path.empty()) {
    mod = all_models(parse_horn_cnf(read_text_file(q.theory_path), &diag), exec);
  } else {
    const ModelSet gens = parse_model_set(read_text_file(q.charset_path), &diag);
    if (gens.vars() > kOracleMaxVars) throw DimensionError("oracle limited to 24 variables");
    mod = intersection_closure(gens);
  }
  warn(diag, err);
  check_clause_fits(c, mod.vars());
  const ModelSet phi = operator_models(mod, q.mode, q.alpha, exec);
  Decision d = oracle_deduce(phi, c) ? Decision::Yes() : Decision::No();
  if (!d.yes()) {
    for (const auto& v : phi) {
      if (!eval_clause(c, v)) {
        d.witness = v;
        break;
      }
    }
  }
  d.trace.push_back(std::to_string(phi.size()) + " models in the operator's model set");
  return report(d, q, out);
}

struct FuzzArgs {
  std::size_t count = 0;
  std::uint64_t seed = 1;
  std::size_t max_vars = 10;
};

int cmd_oracle_fuzz(const FuzzArgs& f, bool serial, std::ostream& out, std::ostream& err) {
  FuzzConfig cfg;
  cfg.max_vars = f.max_vars;
  cfg.inconsistent_every = 10;
  const FuzzReport r = run_fuzz(f.count, f.seed, cfg, exec_of(serial));
  for (const auto& m : r.mismatches) err << m << "\n";
  out << r.instances << " instances, " << r.checks << " checks, " << r.mismatches.size()
      << " mismatches\n";
  return r.mismatches.empty() ? kExitYes : kExitNo;
}

bool looks_like_theory(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string first, second;
    words >> first >> second;
    if (first == "p") return second == "hcnf";
  }
  throw ParseError("input has no 'p' header line");
}

int cmd_convert(const std::string& input, const std::string& to, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
  const std::string text = read_text_file(input);
  Diagnostics diag;
  ModelSet mod;
  if (looks_like_theory(text)) {
    mod = all_models(parse_horn_cnf(text, &diag));
  } else {
    mod = intersection_closure(parse_model_set(text, &diag));
  }
  warn(diag, err);
  const std::string result = serialize_model_set(to == "charset" ? characteristic_set(mod) : mod);
  if (out_path.empty()) {
    out << result;
  } else {
    write_text_file(out_path, result);
  }
  return kExitYes;
}

struct GenArgs {
  std::string reduction;
  std::string graph = "k3";
  std::size_t k = 2;
  bool random = false;
  std::size_t n = 8, m = 12, max_len = 3, count = 1;
  bool neg_only = false;
  std::uint64_t seed = 1;
  std::string out_dir = ".";
};

std::string clause_text(const Clause& c) {
  std::string s;
  for (int lit : c.to_signed()) s += (s.empty() ? "" : " ") + std::to_string(lit);
  return s;
}

int cmd_gen(const GenArgs& g, std::ostream& out) {
  fs::create_directories(g.out_dir);
  json manifest;
  if (g.random) {
    manifest["generator"] = "random";
    manifest["seed"] = g.seed;
    manifest["params"] = {{"n", g.n}, {"m", g.m}, {"max_len", g.max_len}, {"neg_only", g.neg_only}};
    manifest["instances"] = json::array();
    std::mt19937_64 rng(g.seed);
    for (std::size_t i = 0; i < g.count; ++i) {
      const std::uint64_t s = rng();
      const HornTheory t = random_horn(g.n, g.m, g.max_len, g.neg_only, s);
      const Clause c = random_clause(g.n, g.max_len, ClauseShape::kAny, s + 1);
      const std::size_t alpha = static_cast<std::size_t>(s % (g.n + 1));
      const std::string file = "random_" + std::to_string(i) + ".hcnf";
      write_text_file((fs::path(g.out_dir) / file).string(), serialize_horn_cnf(t));
      json entry = {{"file", file}, {"seed", s}, {"clause", clause_text(c)}, {"alpha", alpha}};
      if (g.n <= 16) {
        const ModelSet mod = all_models(t);
        for (const char* mode : {"interior", "exterior", "envelope"}) {
          const bool yes = oracle_deduce(operator_models(mod, mode, alpha, Execution::kParallel), c);
          entry["expected"][mode] = yes ? "YES" : "NO";
        }
      }
      manifest["instances"].push_back(entry);
    }
  } else {
    const Graph graph = Graph::named(g.graph);
    manifest["generator"] = g.reduction;
    manifest["graph"] = graph.to_string();
    manifest["k"] = g.k;
    std::string file, mode, flag;
    Clause c;
    std::size_t alpha = 0;
    bool expected_yes = false;
    if (g.reduction == "independent-set") {
      const auto inst = independent_set_instance(graph, g.k);
      file = "independent_set.hcnf";
      write_text_file((fs::path(g.out_dir) / file).string(), serialize_horn_cnf(inst.theory));
      mode = "exterior", flag = "--theory", c = inst.clause, alpha = inst.alpha;
      manifest["max_independent_set"] = max_independent_set(graph);
      expected_yes = max_independent_set(graph) < g.k;
    } else if (g.reduction == "interior-consistency") {
      const auto inst = interior_consistency_instance(graph, g.k);
      file = "interior_consistency.models";
      write_text_file((fs::path(g.out_dir) / file).string(), serialize_model_set(inst.charset));
      mode = "interior", flag = "--charset", c = inst.clause, alpha = inst.alpha;
      manifest["max_independent_set"] = max_independent_set(graph);
      // YES to the empty clause means the interior is inconsistent.
      expected_yes = max_independent_set(graph) >= g.k;
    } else if (g.reduction == "vertex-cover") {
      const auto inst = vertex_cover_instance(graph, g.k);
      file = "vertex_cover.models";
      write_text_file((fs::path(g.out_dir) / file).string(), serialize_model_set(inst.charset));
      mode = "exterior", flag = "--charset", c = inst.clause, alpha = inst.alpha;
      manifest["min_vertex_cover"] = min_vertex_cover(graph);
      expected_yes = min_vertex_cover(graph) > g.k;
    } else {
      throw ValidationError("unknown reduction '" + g.reduction + "'");
    }
    manifest["file"] = file;
    manifest["mode"] = mode;
    manifest["clause"] = clause_text(c);
    manifest["alpha"] = alpha;
    manifest["expected"] = expected_yes ? "YES" : "NO";
    manifest["command"] = "deduce --mode " + mode + " --alpha " + std::to_string(alpha) + " " +
                          flag + " " + file + " --clause \"" + clause_text(c) + "\"";
  }
  write_text_file((fs::path(g.out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
  out << "wrote " << (fs::path(g.out_dir) / "manifest.json").string() << "\n";
  return kExitYes;
}

struct BenchArgs {
  std::string mode = "interior";
  std::string repr = "theory";
  std::size_t count = 20, n = 12, m = 40, max_len = 4, alpha = 1;
  std::uint64_t seed = 1;
  bool serial = false;
  std::string out_path;
};

int cmd_bench(const BenchArgs& b, std::ostream& out) {
  std::ostringstream csv;
  csv << "instance_id,mode,repr,alpha,n_neg,size,wall_us,answer\n";
  const Execution exec = exec_of(b.serial);
  std::mt19937_64 rng(b.seed);
  for (std::size_t i = 0; i < b.count; ++i) {
    const std::uint64_t s = rng();
    const HornTheory t = random_horn(b.n, b.m, b.max_len, false, s);
    const Clause c = random_clause(b.n, b.max_len, ClauseShape::kAny, s + 1);
    std::optional<ModelSet> charset;
    std::size_t size = t.length();
    if (b.repr == "charset") {
      charset = characteristic_set(all_models(t));
      size = b.n * charset->size();
    }
    const auto start = std::chrono::steady_clock::now();
    Decision d;
    if (b.mode == "interior") {
      d = charset ? deduce_interior_charset(*charset, c, b.alpha, {exec})
                  : deduce_interior_formula(t, c, b.alpha);
    } else if (b.mode == "exterior") {
      d = charset ? deduce_exterior_charset(*charset, c, b.alpha, {exec})
                  : deduce_exterior_formula(t, c, b.alpha, {exec});
    } else {
      d = charset ? deduce_envelope_charset(*charset, c, b.alpha)
                  : deduce_envelope_formula(t, c, b.alpha, {exec});
    }
    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    csv << i << "," << b.mode << "," << b.repr << "," << b.alpha << "," << c.neg().size() << ","
        << size << "," << us << "," << to_string(d.answer) << "\n";
  }
  if (b.out_path.empty()) {
    out << csv.str();
  } else {
    write_text_file(b.out_path, csv.str());
  }
  return kExitYes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deduction from Horn theories under Hamming-ball perturbation", "hornstab"};
  app.require_subcommand(1);

  QueryArgs dq;
  auto* deduce = app.add_subcommand("deduce", "answer a query with the linear-time procedures");
  add_query_options(deduce, dq);
  deduce->add_option("--method", dq.method, "exterior from a charset: neg, pos or auto")
      ->check(CLI::IsMember({"neg", "pos", "auto"}));

  QueryArgs oq;
  FuzzArgs fz;
  auto* oracle = app.add_subcommand("oracle", "answer by exhaustive enumeration, or fuzz");
  oracle->add_option("--mode", oq.mode)->check(CLI::IsMember({"interior", "exterior", "envelope"}));
  oracle->add_option("--alpha", oq.alpha);
  auto* ot = oracle->add_option("--theory", oq.theory_path);
  auto* oc = oracle->add_option("--charset", oq.charset_path);
  ot->excludes(oc);
  oracle->add_option("--clause", oq.clause);
  oracle->add_flag("--witness", oq.witness);
  oracle->add_flag("--serial", oq.serial);
  oracle->add_option("--fuzz", fz.count, "compare every procedure with the oracle on N instances");
  oracle->add_option("--seed", fz.seed, "first fuzz seed");
  oracle->add_option("--max-vars", fz.max_vars, "largest n in the fuzz batch")
      ->check(CLI::Range(1, 16));

  std::string conv_in, conv_to = "charset", conv_out;
  auto* convert = app.add_subcommand("convert", "enumerate models or extract the characteristic set");
  convert->add_option("input", conv_in, ".hcnf or .models file")->required();
  convert->add_option("--to", conv_to)->check(CLI::IsMember({"charset", "models"}));
  convert->add_option("--out", conv_out, "output file (default stdout)");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "write reduction or random instances plus manifest.json");
  gen->add_option("--reduction", ga.reduction)
      ->check(CLI::IsMember({"independent-set", "interior-consistency", "vertex-cover"}));
  gen->add_option("--graph", ga.graph, "k3, p3, edge, kN, pN, emptyN or nv:1-2,2-3");
  gen->add_option("--k", ga.k);
  gen->add_flag("--random", ga.random, "random Horn theories instead of a reduction");
  gen->add_option("--n", ga.n);
  gen->add_option("--m", ga.m);
  gen->add_option("--max-len", ga.max_len);
  gen->add_option("--count", ga.count);
  gen->add_flag("--neg-only", ga.neg_only);
  gen->add_option("--seed", ga.seed);
  gen->add_option("--out", ga.out_dir, "output directory");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "time deduce on random instances, CSV output");
  bench->add_option("--mode", ba.mode)->check(CLI::IsMember({"interior", "exterior", "envelope"}));
  bench->add_option("--repr", ba.repr)->check(CLI::IsMember({"theory", "charset"}));
  bench->add_option("--count", ba.count);
  bench->add_option("--n", ba.n);
  bench->add_option("--m", ba.m);
  bench->add_option("--max-len", ba.max_len);
  bench->add_option("--alpha", ba.alpha);
  bench->add_option("--seed", ba.seed);
  bench->add_flag("--serial", ba.serial);
  bench->add_option("--out", ba.out_path, "CSV file (default stdout)");

  std::vector<std::string> argv_store{"hornstab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitError;
  }

  try {
    if (deduce->parsed()) return cmd_deduce(dq, out, err);
    if (oracle->parsed()) {
      if (fz.count > 0) return cmd_oracle_fuzz(fz, oq.serial, out, err);
      return cmd_oracle_query(oq, out, err);
    }
    if (convert->parsed()) return cmd_convert(conv_in, conv_to, conv_out, out, err);
    if (gen->parsed()) {
      if (!ga.random && ga.reduction.empty()) {
        throw ValidationError("gen needs --reduction or --random");
      }
      return cmd_gen(ga, out);
    }
    if (bench->parsed()) return cmd_bench(ba, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace hornstab::cli
