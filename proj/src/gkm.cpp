#include "fanpoly/gkm.hpp"

#include <memory>

#include "fanpoly/error.hpp"

namespace fanpoly {

GKMGraph gkm_graph(const Fan& f) {
  if (!is_complete(f)) throw Error(ErrorKind::NotComplete, "GKM data needs a complete fan");
  GKMGraph g;
  g.ambient_rank = f.ambient_rank();
  g.vertices = f.maximal_cones();
  const std::size_t n = f.ambient_rank();
  for (const auto& [id, entry] : f.face_index()) {
    if (entry.cone.dim() + 1 != n) continue;
    // Completeness guarantees exactly two.
    g.edges.push_back({entry.cone, entry.maximal.at(0), entry.maximal.at(1)});
  }
  return g;
}

BetaSystem beta_system(const GKMGraph& g, unsigned k) {
  const std::size_t n = g.ambient_rank;
  const QuotientLattice m = full_lattice(n);
  BetaSystem out;
  out.degree = k;
  out.block_cols = monomials(n, k).size();
  std::size_t rows = 0;
  std::vector<IntMatrix> blocks;
  for (const auto& e : g.edges) {
    out.row_offsets.push_back(rows);
    blocks.push_back(sym_power(restriction_matrix(m, e.tau.lattice()), k));
    rows += blocks.back().rows();
  }
  out.matrix = IntMatrix(rows, out.block_cols * g.vertices.size());
  for (std::size_t j = 0; j < g.edges.size(); ++j) {
    const IntMatrix& s = blocks[j];
    for (std::size_t r = 0; r < s.rows(); ++r)
      for (std::size_t c = 0; c < s.cols(); ++c) {
        out.matrix(out.row_offsets[j] + r, g.edges[j].a * out.block_cols + c) += s(r, c);
        out.matrix(out.row_offsets[j] + r, g.edges[j].b * out.block_cols + c) -= s(r, c);
      }
  }
  return out;
}

std::vector<Polynomial> TupleBasis::tuple(std::size_t i) const {
  const auto mons = monomials(ambient_rank, degree);
  std::vector<Polynomial> out;
  for (std::size_t v = 0; v < vertices; ++v) {
    Polynomial p(ambient_rank);
    for (std::size_t m = 0; m < mons.size(); ++m) p.add_term(mons[m], basis(i, v * mons.size() + m));
    out.push_back(std::move(p));
  }
  return out;
}

TupleBasis gkm_kernel_basis(const GKMGraph& g, unsigned k) {
  TupleBasis t;
  t.degree = k;
  t.ambient_rank = g.ambient_rank;
  t.vertices = g.vertices.size();
  t.basis = kernel_lattice(beta_system(g, k).matrix);
  return t;
}

IntMatrix fixed_point_tuples(const GradedBasis& b) {
  const auto& d = *b.domain;
  const std::size_t n = d.ambient_rank;
  auto m = std::make_shared<const QuotientLattice>(full_lattice(n));
  const auto mons = monomials(n, b.degree);
  IntMatrix out(0, mons.size() * d.cells.size());
  for (const auto& el : b.elements) {
    IntVector row;
    for (const auto& part : el.parts) {
      if (part.lattice->rank() != n) throw Error(ErrorKind::NotComplete, "maximal cell is not full-dimensional");
      IntegralityReport r = integrality_certificate(extend_to_lattice(part, m));
      // M_sigma = M for a full-dimensional sigma, so this cannot fail.
      if (!r.integral) throw Error(ErrorKind::LatticeMismatch, "non-integral global form");
      for (const auto& e : mons) row.push_back(r.integral->poly.coefficient(e));
    }
    out.append_row(row);
  }
  return out;
}

GKMComparison gkm_compare(const Fan& f, unsigned k) {
  GKMGraph g = gkm_graph(f);
  GradedBasis pp = pp_basis(f, k);
  TupleBasis gk = gkm_kernel_basis(g, k);
  IntMatrix tuples = fixed_point_tuples(pp);
  GKMComparison c;
  c.degree = k;
  c.pp_rank = pp.rank();
  c.gkm_rank = gk.rank();
  c.equal = hnf_basis(tuples) == gk.basis;
  c.report = "degree " + std::to_string(k) + ": pp rank " + std::to_string(c.pp_rank) + ", gkm rank " +
             std::to_string(c.gkm_rank) + (c.equal ? ", lattices equal" : ", lattices differ");
  return c;
}

}  // namespace fanpoly
