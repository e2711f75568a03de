#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "letterkit/obstructions.hpp"
#include "letterkit/rankwidth.hpp"

namespace {

using nlohmann::json;
using namespace letterkit;

constexpr int kExitDecided = 0;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

WordFormat word_format(const std::string& name) {
  if (name == "alpha") return WordFormat::kAlpha;
  if (name == "ids") return WordFormat::kIds;
  throw ParseError("unknown word format '" + name + "' (expected alpha or ids)");
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw ParseError("bad integer list '" + text + "'");
    out.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) flush();
    } else if (c >= '0' && c <= '9') {
      cur.push_back(c);
    } else {
      throw ParseError("bad integer list '" + text + "'");
    }
  }
  if (!cur.empty()) flush();
  return out;
}

json decoder_json(const Decoder& d) {
  json arcs = json::array();
  for (int a = 0; a < d.k(); ++a) {
    for (int b = 0; b < d.k(); ++b) {
      if (d.arc(a, b)) arcs.push_back(json::array({a, b}));
    }
  }
  return json{{"k", d.k()}, {"arcs", arcs}};
}

void print_certificate(const LettericityResult& res, bool verified) {
  std::cout << "lettericity " << res.k << "\n";
  std::cout << "decoder " << res.decoder.k() << "\n";
  for (int a = 0; a < res.decoder.k(); ++a) {
    for (int b = 0; b < res.decoder.k(); ++b) {
      if (res.decoder.arc(a, b)) std::cout << a << " " << b << "\n";
    }
  }
  std::cout << "word " << format_word(word_of(res.realisation), WordFormat::kAlpha) << "\n";
  std::cout << "order";
  for (int v : res.realisation.order()) std::cout << " " << v;
  std::cout << "\n";
  std::cout << "verified " << (verified ? "true" : "false") << "\n";
}

struct Certificate {
  Decoder decoder;
  Word word;
  std::vector<int> order;
};

// Parses the lettericity subcommand's output back into a certificate.
Certificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<int> k;
  std::vector<std::pair<int, int>> arcs;
  std::optional<Word> word;
  std::vector<int> order;
  bool in_decoder = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "exceeds") throw ParseError("certificate reports 'exceeds': nothing to verify");
    if (head == "decoder") {
      int value;
      if (!(ls >> value)) throw ParseError("certificate: bad decoder line");
      k = value;
      in_decoder = true;
    } else if (head == "word") {
      std::string w;
      ls >> w;
      word = parse_word(w, WordFormat::kAlpha);
      in_decoder = false;
    } else if (head == "order") {
      int v;
      while (ls >> v) order.push_back(v);
      in_decoder = false;
    } else if (in_decoder) {
      int a = std::stoi(head);
      int b;
      if (!(ls >> b)) throw ParseError("certificate: bad arc line");
      arcs.emplace_back(a, b);
    }
  }
  if (!k || !word) throw ParseError("certificate: missing decoder or word");
  Certificate cert;
  cert.decoder = Decoder(*k);
  for (auto [a, b] : arcs) cert.decoder.add_arc(a, b);
  cert.word = *word;
  cert.order = order;
  return cert;
}

Realisation realisation_from(const Word& w, const std::vector<int>& order) {
  Realisation r;
  int n = static_cast<int>(w.size());
  if (static_cast<int>(order.size()) != n) throw ParseError("order and word lengths differ");
  r.position.assign(n, 0);
  r.letter.assign(n, 0);
  VertexSet seen;
  for (int p = 0; p < n; ++p) {
    int v = order[p];
    if (v < 0 || v >= n || seen.contains(v)) throw ParseError("order is not a bijection");
    seen.add(v);
    r.position[v] = p;
    r.letter[v] = w[p];
  }
  return r;
}

int cmd_decode(const std::string& decoder_path, const std::string& word_text,
               const std::string& format) {
  Decoder d = parse_decoder(read_input(decoder_path));
  Word w = parse_word(word_text, word_format(format));
  std::cout << to_edge_list(decode_word(d, w));
  return kExitDecided;
}

int cmd_lettericity(const std::string& graph_path, int max_k, const std::string& method,
                    const std::string& order_spec, bool as_json) {
  Graph g = parse_edge_list(read_input(graph_path));
  std::vector<int> order;
  if (order_spec == "natural") {
    order = natural_order(g.n());
  } else if (order_spec == "lrw") {
    order = linear_rankwidth_exact(g).order;
  } else {
    order = parse_int_list(order_spec);
  }

  std::optional<LettericityResult> res;
  if (method == "brute") {
    res = lettericity_brute(g, max_k);
  } else if (method == "dp") {
    res = lettericity_dp(g, order, max_k);
  } else {
    throw ParseError("unknown method '" + method + "' (expected brute or dp)");
  }

  if (!res) {
    if (as_json) {
      std::cout << json{{"exceeds", max_k}}.dump() << "\n";
    } else {
      std::cout << "exceeds " << max_k << "\n";
    }
    return kExitDecided;
  }
  bool verified = !verify_realisation(g, res->decoder, res->realisation).has_value();
  if (as_json) {
    json out{{"lettericity", res->k},
             {"decoder", decoder_json(res->decoder)},
             {"word", format_word(word_of(res->realisation), WordFormat::kAlpha)},
             {"order", res->realisation.order()},
             {"verified", verified}};
    std::cout << out.dump() << "\n";
  } else {
    print_certificate(*res, verified);
  }
  return kExitDecided;
}

int cmd_verify(const std::string& graph_path, const std::string& decoder_path,
               const std::string& word_text, const std::string& format,
               const std::string& order_spec, const std::string& cert_path) {
  Graph g = parse_edge_list(read_input(graph_path));
  Decoder d;
  Word w;
  std::vector<int> order;
  if (!cert_path.empty()) {
    Certificate cert = parse_certificate(read_input(cert_path));
    d = cert.decoder;
    w = cert.word;
    order = cert.order;
  } else {
    if (decoder_path.empty()) throw ParseError("verify needs --decoder/--word or --cert");
    d = parse_decoder(read_input(decoder_path));
    w = parse_word(word_text, word_format(format));
    if (!order_spec.empty()) order = parse_int_list(order_spec);
  }
  if (static_cast<int>(w.size()) != g.n()) {
    std::cout << "violation word length " << w.size() << " differs from vertex count " << g.n()
              << "\n";
    return kExitDecided;
  }
  if (!order.empty()) {
    Realisation r = realisation_from(w, order);
    if (auto bad = verify_realisation(g, d, r)) {
      std::cout << "violation " << bad->first << " " << bad->second << "\n";
    } else {
      std::cout << "ok\n";
    }
    return kExitDecided;
  }
  // Without an embedding, compare decoded and input graphs up to isomorphism.
  Graph decoded = decode_word(d, w);
  if (canonical_form(decoded) == canonical_form(g)) {
    std::cout << "ok\n";
  } else {
    std::cout << "violation decoded graph not isomorphic to input\n";
  }
  return kExitDecided;
}

int cmd_lrw(const std::string& graph_path) {
  Graph g = parse_edge_list(read_input(graph_path));
  LinearRankWidth res = linear_rankwidth_exact(g);
  std::cout << "lrw " << res.width << "\n";
  std::cout << "order";
  for (int v : res.order) std::cout << " " << v;
  std::cout << "\n";
  return kExitDecided;
}

int cmd_cutrank(const std::string& graph_path, const std::string& set_spec) {
  Graph g = parse_edge_list(read_input(graph_path));
  VertexSet x;
  for (int v : parse_int_list(set_spec)) {
    if (v < 0 || v >= g.n()) throw ParseError("cutrank: vertex out of range");
    x.add(v);
  }
  std::cout << "cutrank " << cutrank(g, x) << "\n";
  return kExitDecided;
}

int cmd_obstructions(int k, int max_n, const std::string& g6_path, const std::string& method_name,
                     bool as_json) {
  SolveMethod method = SolveMethod::kDp;
  if (method_name == "brute") {
    method = SolveMethod::kBrute;
  } else if (method_name != "dp") {
    throw ParseError("unknown method '" + method_name + "' (expected brute or dp)");
  }
  std::vector<Graph> source;
  if (!g6_path.empty()) {
    std::istringstream in(read_input(g6_path));
    source = graphs_from_g6_stream(in);
  } else {
    if (max_n < 1) throw ParseError("obstructions needs --max-n or --g6");
    for (int n = 1; n <= max_n; ++n) {
      for (const Graph& g : enumerate_graphs(n)) source.push_back(g);
    }
  }
  for (const Graph& g : source) {
    bool verdict = is_obstruction(g, k, method);
    if (as_json) {
      json line{{"g6", to_graph6(g)}, {"k", k}, {"verdict", verdict}};
      if (verdict) {
        json deletions = json::array();
        for (const ObstructionReport& report : find_obstructions(k, {g}, method)) {
          for (const DeletionCertificate& del : report.deletions) {
            deletions.push_back(json{{"vertex", del.vertex},
                                     {"lettericity", del.lettericity},
                                     {"decoder", decoder_json(del.decoder)},
                                     {"word", format_word(del.word, WordFormat::kAlpha)}});
          }
        }
        line["deletions"] = deletions;
      }
      std::cout << line.dump() << "\n";
    } else {
      std::cout << "g6 " << to_graph6(g) << " k " << k << " verdict "
                << (verdict ? "true" : "false") << "\n";
    }
  }
  return kExitDecided;
}

int cmd_critical(const std::string& graph_path) {
  Graph g = parse_edge_list(read_input(graph_path));
  LettericityResult res = lettericity_certified(g);
  bool critical = g.n() > 0;
  std::vector<int> deletion_values;
  for (int v = 0; v < g.n(); ++v) {
    int value = lettericity_value(delete_vertex(g, v));
    deletion_values.push_back(value);
    if (value >= res.k) critical = false;
  }
  std::cout << "critical " << (critical ? "true" : "false") << "\n";
  std::cout << "lettericity " << res.k << "\n";
  for (int v = 0; v < g.n(); ++v) {
    std::cout << "deletion " << v << " " << deletion_values[v] << "\n";
  }
  if (critical && g.n() > 0) {
    CriticalStructureReport report = check_critical_structure(g, res.k, res.decoder, res.realisation);
    if (report.ok()) {
      std::cout << "structure ok\n";
    } else {
      for (const std::string& violation : report.violations) {
        std::cout << "structure violation " << violation << "\n";
      }
    }
  }
  return kExitDecided;
}

int cmd_bound(int k) {
  for (int t = 1; t <= k; ++t) {
    std::cout << t << " " << letterkit::to_string(factor_length_bound(k, t)) << "\n";
  }
  return kExitDecided;
}

int cmd_stats(const std::string& word_text, const std::string& format, int alphabet) {
  Word w = parse_word(word_text, word_format(format));
  int maxletter = 0;
  for (auto letter : w) maxletter = std::max(maxletter, static_cast<int>(letter));
  if (alphabet == 0) alphabet = w.empty() ? 1 : maxletter + 1;
  FactorStats stats = word_stats(w, alphabet);
  std::cout << "length " << w.size() << "\n";
  std::cout << "letters " << alphabet << "\n";
  for (int t = 1; t <= alphabet; ++t) {
    std::cout << "sparse " << t << " " << stats.longest_by_t[t - 1] << "\n";
  }
  for (int a = 0; a < alphabet; ++a) {
    for (int b = 0; b < alphabet; ++b) {
      if (a != b) std::cout << "inter " << a << " " << b << " " << stats.inter_matrix[a][b] << "\n";
    }
  }
  return kExitDecided;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"letterkit: letter-graph recognition, certificates, and desk-scale search"};
  app.require_subcommand(1);

  auto* decode = app.add_subcommand("decode", "decode a word over a decoder into a graph");
  std::string decode_decoder;
  std::string decode_word_text;
  std::string decode_format = "alpha";
  decode->add_option("decoder", decode_decoder, "decoder file ('-' for stdin)")->required();
  decode->add_option("word", decode_word_text, "word literal")->required();
  decode->add_option("--format", decode_format, "word format: alpha|ids");

  auto* lett = app.add_subcommand("lettericity", "smallest alphabet realising a graph");
  std::string lett_graph;
  int lett_max_k = 4;
  std::string lett_method = "dp";
  std::string lett_order = "natural";
  bool lett_json = false;
  lett->add_option("graph", lett_graph, "edge-list file ('-' for stdin)")->required();
  lett->add_option("--max-k", lett_max_k, "largest alphabet to try");
  lett->add_option("--method", lett_method, "brute|dp");
  lett->add_option("--order", lett_order, "dp vertex order: natural|lrw|comma list");
  lett->add_flag("--json", lett_json, "JSON output");

  auto* verify = app.add_subcommand("verify", "check a certificate against a graph");
  std::string verify_graph;
  std::string verify_decoder;
  std::string verify_word;
  std::string verify_format = "alpha";
  std::string verify_order;
  std::string verify_cert;
  verify->add_option("graph", verify_graph, "edge-list file ('-' for stdin)")->required();
  verify->add_option("--decoder", verify_decoder, "decoder file");
  verify->add_option("--word", verify_word, "word literal");
  verify->add_option("--format", verify_format, "word format: alpha|ids");
  verify->add_option("--order", verify_order, "position -> vertex list for exact verification");
  verify->add_option("--cert", verify_cert, "certificate file as printed by lettericity ('-' for stdin)");

  auto* lrw = app.add_subcommand("lrw", "exact linear rank-width with witness order");
  std::string lrw_graph;
  lrw->add_option("graph", lrw_graph, "edge-list file ('-' for stdin)")->required();

  auto* cut = app.add_subcommand("cutrank", "GF(2) cut-rank of a vertex subset");
  std::string cut_graph;
  std::string cut_set;
  cut->add_option("graph", cut_graph, "edge-list file ('-' for stdin)")->required();
  cut->add_option("--set", cut_set, "comma-separated vertex subset")->required();

  auto* obs = app.add_subcommand("obstructions", "minimal graphs beyond k letters");
  int obs_k = 1;
  int obs_max_n = 0;
  std::string obs_g6;
  std::string obs_method = "dp";
  bool obs_json = false;
  obs->add_option("k", obs_k, "alphabet size")->required();
  obs->add_option("--max-n", obs_max_n, "enumerate all graphs up to this order");
  obs->add_option("--g6", obs_g6, "graph6 stream file ('-' for stdin)");
  obs->add_option("--method", obs_method, "brute|dp");
  obs->add_flag("--json", obs_json, "JSON-lines output with per-deletion certificates");

  auto* crit = app.add_subcommand("critical", "criticality and structural checks");
  std::string crit_graph;
  crit->add_option("graph", crit_graph, "edge-list file ('-' for stdin)")->required();

  auto* bound = app.add_subcommand("bound", "recursive factor-length bounds");
  int bound_k = 1;
  bound->add_option("k", bound_k, "alphabet size")->required();

  auto* stats = app.add_subcommand("stats", "factor and interlacing statistics of a word");
  std::string stats_word;
  std::string stats_format = "alpha";
  int stats_alphabet = 0;
  stats->add_option("word", stats_word, "word literal")->required();
  stats->add_option("--format", stats_format, "word format: alpha|ids");
  stats->add_option("--alphabet", stats_alphabet, "alphabet size (default: largest letter + 1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitInput;
  }

  try {
    if (decode->parsed()) return cmd_decode(decode_decoder, decode_word_text, decode_format);
    if (lett->parsed()) return cmd_lettericity(lett_graph, lett_max_k, lett_method, lett_order, lett_json);
    if (verify->parsed())
      return cmd_verify(verify_graph, verify_decoder, verify_word, verify_format, verify_order,
                        verify_cert);
    if (lrw->parsed()) return cmd_lrw(lrw_graph);
    if (cut->parsed()) return cmd_cutrank(cut_graph, cut_set);
    if (obs->parsed()) return cmd_obstructions(obs_k, obs_max_n, obs_g6, obs_method, obs_json);
    if (crit->parsed()) return cmd_critical(crit_graph);
    if (bound->parsed()) return cmd_bound(bound_k);
    if (stats->parsed()) return cmd_stats(stats_word, stats_format, stats_alphabet);
  } catch (const letterkit::CapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
