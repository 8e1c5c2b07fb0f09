#pragma once

#include <string>

#include "spckit/boolmat.hpp"
#include "spckit/complex.hpp"
#include "spckit/gain_graph.hpp"
#include "spckit/lattice.hpp"

namespace spckit {

/// JSON documents (all carry "schema_version": "1").
std::string lattice_to_json(const FiniteLattice& l);
std::string complex_to_json(const SimplicialComplex& h);

/// Hasse diagram (covers only), deterministic element order.
std::string lattice_to_dot(const FiniteLattice& l);
std::string gain_graph_to_dot(const GainGraph& g);

/// One "u v label" line per edge / the inverse parser.
std::string gain_graph_to_edge_list(const GainGraph& g);
GainGraph gain_graph_from_edge_list(int vertices, const FiniteGroup& group,
                                    const std::string& text);

/// Comma-separated 0/1 rows; the parser also accepts the plain 0/1 format.
std::string matrix_to_csv(const BooleanMatrix& m);
BooleanMatrix matrix_from_any_text(const std::string& text);

}  // namespace spckit
