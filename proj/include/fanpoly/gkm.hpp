#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fanpoly/cones_fans.hpp"
#include "fanpoly/polynomials.hpp"
#include "fanpoly/ppring.hpp"

namespace fanpoly {

/// Codimension-one cone tau with its two incident maximal cones.
struct GKMEdge {
  Cone tau;
  std::size_t a = 0;
  std::size_t b = 0;
};

struct GKMGraph {
  std::size_t ambient_rank = 0;
  std::vector<Cone> vertices;  // maximal cones, fan order
  std::vector<GKMEdge> edges;  // a < b
};

/// Throws NotComplete.
GKMGraph gkm_graph(const Fan& f);

/// Degree-k piece of the sum of the beta maps. Columns: one Sym^k M block
/// per vertex; rows: one Sym^k M_tau block per edge.
struct BetaSystem {
  unsigned degree = 0;
  IntMatrix matrix;
  std::vector<std::size_t> row_offsets;  // start row of each edge block
  std::size_t block_cols = 0;            // dim Sym^k M
};

BetaSystem beta_system(const GKMGraph& g, unsigned k);

/// Tuples (f_1, ..., f_r) of degree-k polynomials on M = Z^n, one per vertex.
struct TupleBasis {
  unsigned degree = 0;
  std::size_t ambient_rank = 0;
  std::size_t vertices = 0;
  IntMatrix basis;  // rows, HNF

  std::size_t rank() const { return basis.rows(); }
  std::vector<Polynomial> tuple(std::size_t i) const;
};

TupleBasis gkm_kernel_basis(const GKMGraph& g, unsigned k);

/// Each basis element restricted to the maximal cones, written in global
/// coordinates of M (rows follow b.elements). Only for full-dimensional cells.
IntMatrix fixed_point_tuples(const GradedBasis& b);

struct GKMComparison {
  unsigned degree = 0;
  std::size_t pp_rank = 0;
  std::size_t gkm_rank = 0;
  bool equal = false;
  std::string report;
};

/// Throws NotComplete.
GKMComparison gkm_compare(const Fan& f, unsigned k);

}  // namespace fanpoly
