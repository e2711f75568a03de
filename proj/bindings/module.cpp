#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "letterkit/obstructions.hpp"
#include "letterkit/rankwidth.hpp"

namespace py = pybind11;
using namespace letterkit;

namespace {

std::vector<int> set_to_list(VertexSet s) { return s.to_vector(); }

VertexSet list_to_set(const std::vector<int>& vs) {
  VertexSet s;
  for (int v : vs) {
    if (v < 0 || v >= kMaxVertices) throw std::invalid_argument("vertex out of range");
    s.add(v);
  }
  return s;
}

py::dict result_dict(const LettericityResult& res) {
  py::dict out;
  out["k"] = res.k;
  out["decoder"] = to_decoder_text(res.decoder);
  out["word"] = format_word(word_of(res.realisation), WordFormat::kAlpha);
  out["order"] = res.realisation.order();
  return out;
}

WordFormat format_of(const std::string& name) {
  if (name == "alpha") return WordFormat::kAlpha;
  if (name == "ids") return WordFormat::kIds;
  throw std::invalid_argument("unknown word format '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "letter graphs: decoding, recognition, certificates, and obstruction search";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CapError>(m, "CapError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n") = 0)
      .def_property_readonly("n", &Graph::n)
      .def("add_edge", &Graph::add_edge)
      .def("adjacent", &Graph::adjacent)
      .def("edges", &Graph::edges)
      .def("edge_count", &Graph::edge_count)
      .def("neighbours", [](const Graph& g, int v) { return set_to_list(g.neighbours(v)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        std::ostringstream out;
        out << "Graph(n=" << g.n() << ", edges=" << g.edge_count() << ")";
        return out.str();
      });

  m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
  m.def("to_edge_list", &to_edge_list, py::arg("graph"));
  m.def("parse_graph6", &parse_graph6, py::arg("line"));
  m.def("to_graph6", &to_graph6, py::arg("graph"));
  m.def("complement", &complement, py::arg("graph"));
  m.def(
      "induced_subgraph",
      [](const Graph& g, const std::vector<int>& vs) { return induced_subgraph(g, list_to_set(vs)); },
      py::arg("graph"), py::arg("vertices"));
  m.def("canonical_form", &canonical_form, py::arg("graph"));
  m.def(
      "twin_classes",
      [](const Graph& g) {
        std::vector<std::vector<int>> out;
        for (const VertexSet& cls : twin_classes(g)) out.push_back(set_to_list(cls));
        return out;
      },
      py::arg("graph"));

  m.def(
      "decode",
      [](const std::string& decoder_text, const std::string& word, const std::string& format) {
        return decode_word(parse_decoder(decoder_text), parse_word(word, format_of(format)));
      },
      py::arg("decoder"), py::arg("word"), py::arg("format") = "alpha");

  m.def(
      "lettericity",
      [](const Graph& g, int max_k, const std::string& method) -> py::object {
        std::optional<LettericityResult> res;
        if (method == "brute") {
          res = lettericity_brute(g, max_k);
        } else if (method == "dp") {
          res = lettericity_dp(g, max_k);
        } else {
          throw std::invalid_argument("unknown method '" + method + "'");
        }
        if (!res) return py::none();
        return result_dict(*res);
      },
      py::arg("graph"), py::arg("max_k") = 4, py::arg("method") = "dp");

  m.def(
      "verify",
      [](const Graph& g, const std::string& decoder_text, const std::string& word,
         const std::vector<int>& order, const std::string& format) -> py::object {
        Decoder d = parse_decoder(decoder_text);
        Word w = parse_word(word, format_of(format));
        if (static_cast<int>(order.size()) != g.n() || static_cast<int>(w.size()) != g.n()) {
          throw std::invalid_argument("order and word must cover the vertex set");
        }
        Realisation r;
        r.letter.assign(g.n(), 0);
        r.position.assign(g.n(), 0);
        VertexSet seen;
        for (int p = 0; p < g.n(); ++p) {
          int v = order[p];
          if (v < 0 || v >= g.n() || seen.contains(v)) {
            throw std::invalid_argument("order is not a bijection");
          }
          seen.add(v);
          r.position[v] = p;
          r.letter[v] = w[p];
        }
        auto bad = verify_realisation(g, d, r);
        if (!bad) return py::none();
        return py::make_tuple(bad->first, bad->second);
      },
      py::arg("graph"), py::arg("decoder"), py::arg("word"), py::arg("order"),
      py::arg("format") = "alpha",
      "None when the realisation reproduces the graph, else the first violating vertex pair");

  m.def("lettericity_value", &lettericity_value, py::arg("graph"));
  m.def("is_critical", &is_critical, py::arg("graph"));

  m.def(
      "cutrank",
      [](const Graph& g, const std::vector<int>& vs) { return cutrank(g, list_to_set(vs)); },
      py::arg("graph"), py::arg("vertices"));
  m.def(
      "linear_rankwidth",
      [](const Graph& g) {
        LinearRankWidth res = linear_rankwidth_exact(g);
        return py::make_tuple(res.width, res.order);
      },
      py::arg("graph"));

  m.def("enumerate_graphs", &enumerate_graphs, py::arg("n"));
  m.def(
      "is_obstruction",
      [](const Graph& g, int k) { return is_obstruction(g, k); },
      py::arg("graph"), py::arg("k"));
  m.def(
      "find_obstructions",
      [](int k, int max_n) {
        std::vector<Graph> source;
        for (int n = 1; n <= max_n; ++n) {
          for (const Graph& g : enumerate_graphs(n)) source.push_back(g);
        }
        std::vector<py::dict> out;
        for (const ObstructionReport& report : find_obstructions(k, source)) {
          py::dict item;
          item["g6"] = report.canonical;
          item["k"] = report.k;
          std::vector<int> deletion_values;
          for (const auto& del : report.deletions) deletion_values.push_back(del.lettericity);
          item["deletions"] = deletion_values;
          out.push_back(std::move(item));
        }
        return out;
      },
      py::arg("k"), py::arg("max_n"));

  m.def(
      "bound_table",
      [](int k) {
        std::vector<std::pair<int, std::string>> rows;
        for (int t = 1; t <= k; ++t) rows.emplace_back(t, letterkit::to_string(factor_length_bound(k, t)));
        return rows;
      },
      py::arg("k"), "rows (t, bound) of the recursive factor-length bound");

  m.def(
      "word_stats",
      [](const std::string& word, const std::string& format) {
        Word w = parse_word(word, format_of(format));
        int alphabet = 1;
        for (auto letter : w) alphabet = std::max(alphabet, static_cast<int>(letter) + 1);
        FactorStats stats = word_stats(w, alphabet);
        py::dict out;
        out["length"] = static_cast<int>(w.size());
        out["alphabet"] = alphabet;
        out["longest_by_t"] = stats.longest_by_t;
        out["inter"] = stats.inter_matrix;
        return out;
      },
      py::arg("word"), py::arg("format") = "alpha");
}
