#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockpoly/blocks.hpp"
#include "blockpoly/digraph.hpp"
#include "blockpoly/polynomial.hpp"

namespace blockpoly {

enum class MatrixFormat { Auto, MatrixMarket, Csv };

// Matrix read from disk. Values are always available as complex doubles; when
// every entry is an exact integer the arbitrary-precision view is kept too,
// which is what the exact mode ingests.
struct ParsedMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Complex> values;          // row-major
  bool all_integer = true;
  std::vector<BigInt> int_values;       // row-major, valid iff all_integer

  Matrix<Complex> complex_matrix() const;
  Matrix<BigInt> integer_matrix() const;  // ConfigError if !all_integer
};

// "a+bi" style complex literals (also plain reals, "2i", "-i", "3-0.5i", exponents).
Complex parse_complex(const std::string& token);
std::string format_complex(const Complex& z);
std::string format_double(double v);

// Matrix Market coordinate format, real/integer/complex fields, general or
// symmetric. FormatError carries the offending line.
ParsedMatrix read_matrix_market(std::istream& in);
// Dense CSV: one row per line, comma-separated, complex entries as a+bi.
ParsedMatrix read_csv(std::istream& in);
// Dispatch on format; Auto sniffs the MatrixMarket banner / .mtx/.mm extension.
ParsedMatrix read_matrix_file(const std::string& path, MatrixFormat format = MatrixFormat::Auto);

namespace json_io {

using nlohmann::json;

inline json coeff_to_json(const BigInt& v) {
  if (v.fits_int64()) return json(v.to_int64());
  return json(v.to_string());
}
inline json coeff_to_json(const Complex& v) { return json::array({v.real(), v.imag()}); }

// { "mode": "int"|"complex", "coeffs": [c0, c1, ...] }, complex as [re, im].
template <class R>
json polynomial_to_json(const Polynomial<R>& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(coeff_to_json(c));
  return json{{"mode", coeff_traits<R>::mode_name}, {"coeffs", coeffs}};
}

inline json decomposition_to_json(const BlockDecomposition& d) {
  json blocks = json::array();
  for (const auto& b : d.blocks) blocks.push_back(b);
  json cut_indices = json::object();
  for (const auto& [v, idx] : d.cut_index) cut_indices[std::to_string(v)] = idx;
  json incidence = json::array();
  for (const auto& inc : d.incidence) incidence.push_back(inc);
  return json{{"blocks", blocks},
              {"cut_vertices", d.cut_vertices},
              {"cut_indices", cut_indices},
              {"incidence", incidence}};
}

}  // namespace json_io

// DOT export. Loop weights become node labels; cut-vertices are colored red.
// Symmetric weight pairs collapse to one undirected-drawn edge. When a
// decomposition is given with per_block_colors, non-loop edges are colored by
// their block.
template <class R>
std::string to_dot(const WeightedDigraph<R>& g, const BlockDecomposition* d = nullptr,
                   bool per_block_colors = false);

namespace detail {
std::string dot_palette_color(std::size_t index);
}

template <class R>
std::string to_dot(const WeightedDigraph<R>& g, const BlockDecomposition* d, bool per_block_colors) {
  using T = coeff_traits<R>;
  std::string out = "digraph G {\n";
  const BlockDecomposition* dec = d;
  BlockDecomposition local;
  if (dec == nullptr) {
    local = decompose(g);
    dec = &local;
  }
  for (VertexId v : g.vertices()) {
    out += "  v" + std::to_string(v) + " [label=\"v" + std::to_string(v);
    if (g.has_loop(v)) out += "\\n" + T::to_string(g.loop_weight(v));
    out += "\"";
    if (dec->is_cut_vertex(v)) out += ", color=red, fontcolor=red";
    out += "];\n";
  }
  auto block_of_edge = [&](VertexId u, VertexId v) -> std::size_t {
    for (std::size_t b = 0; b < dec->blocks.size(); ++b) {
      const auto& blk = dec->blocks[b];
      if (std::binary_search(blk.begin(), blk.end(), u) &&
          std::binary_search(blk.begin(), blk.end(), v))
        return b;
    }
    return 0;
  };
  for (const auto& [uv, w] : g.edges()) {
    const auto [u, v] = uv;
    if (u == v) continue;  // loops live in the node label
    const R* back = g.edge(v, u);
    const bool symmetric = back != nullptr && *back == w;
    if (symmetric && u > v) continue;  // drawn once from the smaller endpoint
    out += "  v" + std::to_string(u) + " -> v" + std::to_string(v) + " [label=\"" +
           T::to_string(w) + "\"";
    if (symmetric) out += ", dir=none";
    if (per_block_colors) out += ", color=" + detail::dot_palette_color(block_of_edge(u, v));
    out += "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace blockpoly
