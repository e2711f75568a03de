#include "letterkit/obstructions.hpp"

#include <algorithm>
#include <istream>
#include <map>

namespace letterkit {

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  require_cap(n, 6, "enumerate_graphs");
  if (n == 0) return {Graph(0)};
  if (n > 10) throw CapError("enumerate_graphs: refusing to enumerate beyond 10 vertices");
  int pairs = n * (n - 1) / 2;
  std::map<std::string, Graph> classes;
  for (std::uint64_t word = 0; word < (std::uint64_t{1} << pairs); ++word) {
    Graph g(n);
    int t = 0;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i, ++t) {
        if ((word >> t) & 1u) g.add_edge(i, j);
      }
    }
    std::string canon = canonical_form(g);
    classes.emplace(std::move(canon), g);
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [canon, g] : classes) out.push_back(parse_graph6(canon));
  return out;
}

std::vector<Graph> graphs_from_g6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

namespace {

std::optional<LettericityResult> solve(const Graph& g, int max_k, SolveMethod method) {
  return method == SolveMethod::kBrute ? lettericity_brute(g, max_k) : lettericity_dp(g, max_k);
}

}  // namespace

bool is_obstruction(const Graph& g, int k, SolveMethod method) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (g.n() == 0) return false;
  if (solve(g, k, method).has_value()) return false;
  for (int v = 0; v < g.n(); ++v) {
    if (!solve(delete_vertex(g, v), k, method).has_value()) return false;
  }
  return true;
}

std::vector<ObstructionReport> find_obstructions(int k, const std::vector<Graph>& source,
                                                 SolveMethod method) {
  std::map<std::string, ObstructionReport> found;
  for (const Graph& g : source) {
    std::string canon = canonical_form(g);
    if (found.contains(canon)) continue;
    if (!is_obstruction(g, k, method)) continue;
    ObstructionReport report;
    report.graph = g;
    report.k = k;
    report.canonical = canon;
    for (int v = 0; v < g.n(); ++v) {
      Graph h = delete_vertex(g, v);
      auto res = solve(h, k, method);
      if (!res) throw std::logic_error("deletion of an obstruction must stay within k letters");
      report.deletions.push_back(
          DeletionCertificate{v, res->k, res->decoder, word_of(res->realisation)});
    }
    found.emplace(std::move(canon), std::move(report));
  }
  std::vector<ObstructionReport> out;
  out.reserve(found.size());
  for (auto& [canon, report] : found) out.push_back(std::move(report));
  std::stable_sort(out.begin(), out.end(), [](const ObstructionReport& a, const ObstructionReport& b) {
    if (a.graph.n() != b.graph.n()) return a.graph.n() < b.graph.n();
    return a.canonical < b.canonical;
  });
  return out;
}

CriticalStructureReport check_critical_structure(const Graph& g, int k, const Decoder& d,
                                                 const Realisation& r) {
  if (verify_realisation(g, d, r).has_value()) {
    throw std::invalid_argument("check_critical_structure: realisation does not verify");
  }
  if (d.k() != k) throw std::invalid_argument("check_critical_structure: decoder must have exactly k letters");
  if (lettericity_value(g) != k) {
    throw std::invalid_argument("check_critical_structure: graph does not have lettericity k");
  }
  if (!is_critical(g)) {
    throw std::invalid_argument("check_critical_structure: graph is not critical");
  }

  CriticalStructureReport report;
  for (const VertexSet& cls : twin_classes(g)) {
    if (cls.count() >= 4) {
      report.violations.push_back("twin class of size " + std::to_string(cls.count()) +
                                  " starting at vertex " + std::to_string(cls.min()));
    }
  }
  Word w = word_of(r);
  for (int t = 1; t <= k; ++t) {
    FactorWindow window = longest_sparse_factor(w, t);
    BigUnsigned limit = factor_length_bound(k, t);
    if (static_cast<BigUnsigned>(window.length) > limit) {
      report.violations.push_back("factor [" + std::to_string(window.start) + "," +
                                  std::to_string(window.end) + ") uses at most " + std::to_string(t) +
                                  " letters but has length " + std::to_string(window.length) +
                                  " > " + to_string(limit));
    }
  }
  return report;
}

}  // namespace letterkit
