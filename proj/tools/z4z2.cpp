#include <z4z2/z4z2.hpp>

#include <CLI11.hpp>

#include <atomic>
#include <condition_variable>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace {

using namespace z4z2;

enum Exit { kOk = 0, kVerifyFailed = 1, kInputError = 2, kBudget = 3 };

struct InputGraph {
  std::string id;
  CubicGraph graph;
};

std::vector<int> split_ints(const std::string& s, char sep) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(std::stoi(tok));
  return out;
}

// family[:a[:b]] as accepted by `gen` and by graph arguments that are not files.
std::optional<CubicGraph> from_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string tok; std::getline(ss, tok, ':');) parts.push_back(tok);
  if (parts.empty()) return std::nullopt;
  const std::string& fam = parts[0];
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw Error(Errc::BadParameter, fam + " needs parameter " + std::to_string(i));
    return parts[i];
  };
  if (fam == "petersen") return petersen();
  if (fam == "blanusa1") return blanusa(1);
  if (fam == "blanusa2") return blanusa(2);
  if (fam == "blanusa") return blanusa(std::stoi(arg(1)));
  if (fam == "flower") return flower(std::stoi(arg(1)));
  if (fam == "k4") return complete_k4();
  if (fam == "k33") return complete_k33();
  if (fam == "prism") return prism();
  if (fam == "q3") return cube_q3();
  if (fam == "random") return random_cubic(std::stoi(arg(1)), std::stoull(parts.size() > 2 ? parts[2] : "0"));
  if (fam == "perm") {
    PermutationSpec p{std::stoi(arg(1)), split_ints(arg(2), ',')};
    return permutation_graph(p).graph;
  }
  return std::nullopt;
}

std::vector<InputGraph> load(const std::string& source) {
  std::vector<InputGraph> out;
  auto ingest = [&](std::istream& in, const std::string& name) {
    for (const Graph6Line& l : read_graph6_lines(in))
      out.push_back({name + ":" + std::to_string(l.line_number), parse_graph6(l.text)});
  };
  if (source == "-") {
    ingest(std::cin, "stdin");
  } else if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    ingest(in, source);
  } else if (auto g = from_spec(source)) {
    out.push_back({source, std::move(*g)});
  } else {
    throw Error(Errc::BadParameter, "not a file, '-' or a generator spec: " + source);
  }
  return out;
}

void require_bridgeless(const CubicGraph& g, const std::string& id) {
  if (!is_bridgeless(g)) throw Error(Errc::BadParameter, id + " has a bridge");
}

struct Budgets {
  std::size_t pm_limit = 0;  // 0: order-based default
  std::size_t search_nodes = kDefaultSearchNodes;
  std::size_t oracle_nodes = kDefaultOracleNodes;

  PipelineConfig config() const {
    PipelineConfig c;
    if (pm_limit) c.pm_limit = pm_limit;
    c.search_nodes = search_nodes;
    c.oracle_nodes = oracle_nodes;
    return c;
  }
};

void write_text(const std::filesystem::path& p, const std::string& text) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p);
  if (!out) throw Error(Errc::BadParameter, "cannot write " + p.string());
  out << text;
}

std::string file_stem(const std::string& id, std::size_t index) {
  std::string s = std::to_string(index) + "-" + id;
  for (char& c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-') c = '_';
  return s;
}

int cmd_color(const std::string& source, const Budgets& b, const std::string& dot_dir, const std::string& out_path) {
  auto graphs = load(source);
  std::ofstream file;
  if (!out_path.empty()) file.open(out_path);
  std::ostream& os = out_path.empty() ? std::cout : file;
  int code = kOk;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& [id, g] = graphs[i];
    require_bridgeless(g, id);
    PipelineReport rep = run_pipeline(g, b.config());
    if (rep.certificate) {
      os << rep.certificate->dump() << "\n";
      if (!dot_dir.empty()) write_text(std::filesystem::path(dot_dir) / (file_stem(id, i) + ".dot"), to_dot(g, *rep.coloring));
    } else {
      os << rep.to_json(id).dump() << "\n";
      code = std::max(code, rep.verdict == "unknown" ? int(kBudget) : int(kVerifyFailed));
    }
  }
  return code;
}

int cmd_verify(const std::string& path) {
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw Error(Errc::BadParameter, "cannot read " + path);
  }
  std::istream& in = path == "-" ? std::cin : file;
  int code = kOk;
  std::string line;
  std::stringstream all;
  all << in.rdbuf();
  // a file holds either one (possibly pretty-printed) certificate or one per line
  std::vector<json> certs;
  try {
    certs.push_back(json::parse(all.str()));
  } catch (const json::parse_error&) {
    std::istringstream lines(all.str());
    while (std::getline(lines, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        certs.push_back(json::parse(line));
      } catch (const json::parse_error& e) {
        throw Error(Errc::MalformedCertificate, e.what());
      }
    }
  }
  for (const json& j : certs) {
    CertificateCheck c = check_certificate(j);
    json r{{"graph6", j.value("graph6", "")},
           {"valid", c.valid()},
           {"verdicts", verdicts_json(c.recomputed)},
           {"verdicts_match", c.verdicts_match},
           {"structures_match", c.structures_match},
           {"problems", c.problems}};
    std::cout << r.dump() << "\n";
    if (!c.valid()) code = kVerifyFailed;
  }
  return code;
}

int cmd_oracle(const std::string& source, const Budgets& b, bool paranoid) {
  int code = kOk;
  for (const auto& [id, g] : load(source)) {
    json r{{"id", id}, {"graph6", to_graph6(g)}};
    try {
      auto v = brute_force_z4z2(g, {b.oracle_nodes, paranoid});
      r["colorable"] = v.colorable;
      r["nodes"] = v.stats.nodes;
      r["millis"] = v.stats.millis;
      if (v.witness) {
        json col = json::array();
        for (GroupElement x : v.witness->colors()) col.push_back({int(x.x), int(x.y)});
        r["coloring"] = col;
      }
      auto three = is_3_edge_colorable(g, b.oracle_nodes);
      r["three_edge_colorable"] = three.colorable;
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExhausted) throw;
      r["error"] = e.what();
      code = kBudget;
    }
    std::cout << r.dump() << "\n";
  }
  return code;
}

json survey_one(const InputGraph& in, const Budgets& b, const std::string& cert_dir, std::size_t index) {
  try {
    require_bridgeless(in.graph, in.id);
    PipelineReport rep = run_pipeline(in.graph, b.config());
    json j = rep.to_json(in.id);
    j["graph6"] = to_graph6(in.graph);
    j["order"] = in.graph.order();
    j["girth"] = girth(in.graph);
    if (rep.certificate && !cert_dir.empty()) {
      auto p = std::filesystem::path(cert_dir) / (file_stem(in.id, index) + ".json");
      write_text(p, rep.certificate->dump() + "\n");
      j["certificate"] = p.string();
    }
    return j;
  } catch (const Error& e) {
    return json{{"id", in.id}, {"verdict", "error"}, {"error", e.what()}};
  }
}

// Workers pull indices; the writer emits lines in input order as they complete.
int cmd_survey(const std::string& source, const Budgets& b, const std::string& out_path, const std::string& cert_dir,
               unsigned threads) {
  auto graphs = load(source);
  std::ofstream file;
  if (!out_path.empty()) file.open(out_path);
  std::ostream& os = out_path.empty() ? std::cout : file;

  std::vector<std::optional<json>> done(graphs.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, graphs.size())));

  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < graphs.size();) {
        json j = survey_one(graphs[i], b, cert_dir, i);
        std::lock_guard lock(mu);
        done[i] = std::move(j);
        cv.notify_one();
      }
    });

  int code = kOk;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return done[i].has_value(); });
    const json& j = *done[i];
    os << j.dump() << "\n" << std::flush;
    const std::string v = j.value("verdict", "");
    if (v == "error") code = std::max(code, int(kInputError));
    else if (v == "unknown") code = std::max(code, int(kBudget));
  }
  return code;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed, int count) {
  if (family == "perm-snarks") {
    std::vector<int> ns = params.empty() ? std::vector<int>{5, 7, 9} : split_ints(params[0], ',');
    auto sample = sample_permutation_snarks(static_cast<std::size_t>(count), seed, ns,
                                            [](const CubicGraph& g) { return !is_3_edge_colorable(g).colorable; });
    for (const auto& s : sample) std::cout << to_graph6(s.graph.graph) << "\n";
    return sample.size() == static_cast<std::size_t>(count) ? kOk : kBudget;
  }
  if (family == "random") {
    if (params.empty()) throw Error(Errc::BadParameter, "random needs an order");
    for (int i = 0; i < count; ++i) std::cout << to_graph6(random_cubic(std::stoi(params[0]), seed + static_cast<std::uint64_t>(i))) << "\n";
    return kOk;
  }
  std::string spec = family;
  for (const auto& p : params) spec += ":" + p;
  auto g = from_spec(spec);
  if (!g) throw Error(Errc::BadParameter, "unknown family " + family);
  std::cout << to_graph6(*g) << "\n";
  return kOk;
}

int cmd_reduce(const std::string& source, const Budgets& b) {
  int code = kOk;
  for (const auto& [id, g] : load(source)) {
    json r{{"id", id}, {"graph6", to_graph6(g)}, {"order", g.order()}};
    try {
      require_bridgeless(g, id);
      auto res = resistance(g, b.oracle_nodes);
      auto red = reduction_number(g, b.oracle_nodes);
      auto odd = oddness_witness(g);
      r["resistance"] = res.value;
      r["reduction_number"] = red.value;
      r["reduction_edges"] = red.edges;
      r["oddness"] = odd.oddness;
      r["oddness_proven"] = odd.proven_minimal;
      r["bound_holds"] = 2 * red.value <= g.order() - odd.oddness;
    } catch (const Error& e) {
      r["error"] = e.what();
      code = std::max(code, e.code() == Errc::BudgetExhausted ? int(kBudget) : int(kInputError));
    }
    std::cout << r.dump() << "\n";
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Z4 x Z2 edge-colorings of bridgeless cubic graphs"};
  app.require_subcommand(1);
  Budgets b;
  auto budget_flags = [&](CLI::App* sub) {
    sub->add_option("--pm-limit", b.pm_limit, "perfect matchings scanned per stage (0: unlimited up to 30 vertices, else 2000)");
    sub->add_option("--search-nodes", b.search_nodes, "node budget of the exhaustive characterization search");
    sub->add_option("--oracle-nodes", b.oracle_nodes, "node budget of the brute-force searches");
  };

  std::string source, out_path, dot_dir, cert_dir, family;
  std::vector<std::string> params;
  bool paranoid = false;
  unsigned threads = 0;
  std::uint64_t seed = 1;
  int count = 1;

  auto* color = app.add_subcommand("color", "color graphs and print one certificate per line");
  color->add_option("input", source, "graph6 file, '-' for stdin, or a generator spec such as flower:5")->required();
  color->add_option("--out", out_path, "write certificates here instead of stdout");
  color->add_option("--emit-dot", dot_dir, "directory for one DOT rendering per certificate");
  budget_flags(color);

  auto* verify_cmd = app.add_subcommand("verify", "re-check certificates; exit 1 if any is invalid");
  verify_cmd->add_option("certificate", source, "certificate JSON file or '-'")->required();

  auto* oracle = app.add_subcommand("oracle", "brute-force colorability verdicts");
  oracle->add_option("input", source)->required();
  oracle->add_flag("--paranoid", paranoid, "disable the colour symmetry reduction");
  budget_flags(oracle);

  auto* survey = app.add_subcommand("survey", "run the pipeline on every graph, one JSON line each");
  survey->add_option("input", source)->required();
  survey->add_option("--out", out_path, "report.jsonl path (default stdout)");
  survey->add_option("--cert-dir", cert_dir, "write each certificate to this directory");
  survey->add_option("--threads", threads, "worker count (0: hardware concurrency)");
  budget_flags(survey);

  auto* gen = app.add_subcommand("gen", "print graph6 for a generator family");
  gen->add_option("family", family,
                  "petersen | blanusa1 | blanusa2 | flower K | k4 | k33 | prism | q3 | random ORDER | perm N PI | perm-snarks NS")
      ->required();
  gen->add_option("params", params);
  gen->add_option("--seed", seed, "seed for random and perm-snarks");
  gen->add_option("--count", count, "number of graphs for random and perm-snarks");

  auto* reduce_cmd = app.add_subcommand("reduce", "resistance, reduction number and the reduction bound");
  reduce_cmd->add_option("input", source)->required();
  budget_flags(reduce_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*color) return cmd_color(source, b, dot_dir, out_path);
    if (*verify_cmd) return cmd_verify(source);
    if (*oracle) return cmd_oracle(source, b, paranoid);
    if (*survey) return cmd_survey(source, b, out_path, cert_dir, threads);
    if (*gen) return cmd_gen(family, params, seed, count);
    if (*reduce_cmd) return cmd_reduce(source, b);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == Errc::BudgetExhausted) return kBudget;
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
