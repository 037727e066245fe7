#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fanpoly/intlinalg.hpp"

namespace fanpoly {

/// The character lattice M_sigma = M / (sigma^perp ∩ M) of a cone.
///
/// Coordinates on M_sigma are taken with respect to the dual of a canonical
/// (HNF) basis b_1..b_d of N_sigma = span(sigma) ∩ N: the image of u in M is
/// (u(b_1), ..., u(b_d)). Because N_sigma is saturated this map is onto Z^d
/// and its kernel is exactly sigma^perp ∩ M. The polynomial variables of
/// Sym M_sigma are therefore the coordinates t_i of a point sum t_i b_i.
struct QuotientLattice {
  std::size_t ambient_rank = 0;
  IntMatrix sigma_perp;  // rows: basis of sigma^perp ∩ M
  IntMatrix span_basis;  // rows: basis of N_sigma; doubles as the projection M -> M_sigma
  IntMatrix section;     // ambient_rank x rank; projection * section = identity

  std::size_t rank() const { return span_basis.rows(); }
  const IntMatrix& projection() const { return span_basis; }
  IntVector project(const IntVector& u) const;

  friend bool operator==(const QuotientLattice& a, const QuotientLattice& b) {
    return a.ambient_rank == b.ambient_rank && a.span_basis == b.span_basis;
  }
};

/// Lattice data for the saturated span of arbitrary generators in Z^n.
QuotientLattice lattice_of_span(std::size_t ambient_rank, const IntMatrix& generators);

/// M itself: the quotient lattice of a full-dimensional cone.
QuotientLattice full_lattice(std::size_t ambient_rank);

/// Matrix C with C * from.span_basis = to.span_basis. Column i is the image
/// of the i-th basis vector of M_from in M_to. Requires N_to ⊆ N_from.
IntMatrix restriction_matrix(const QuotientLattice& from, const QuotientLattice& to);

/// A pointed rational polyhedral cone in N_R = R^n.
class Cone {
 public:
  Cone() = default;

  /// Generators are made primitive, deduplicated, pruned to extremal rays
  /// and sorted. Throws ZeroVector / NotPointed / DimensionMismatch.
  static Cone from_generators(std::size_t ambient_rank, const std::vector<IntVector>& generators);
  static Cone zero(std::size_t ambient_rank) { return from_generators(ambient_rank, {}); }

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t dim() const { return lattice_->rank(); }
  const std::vector<IntVector>& generators() const { return generators_; }
  IntMatrix generator_matrix() const;
  const std::vector<IntVector>& facet_normals() const { return facet_normals_; }
  /// Indices (into generators()) of the generators on each facet.
  const std::vector<std::vector<std::size_t>>& facet_generator_sets() const { return facet_sets_; }
  const std::string& id() const { return id_; }
  const QuotientLattice& lattice() const { return *lattice_; }
  const std::shared_ptr<const QuotientLattice>& lattice_ptr() const { return lattice_; }

  bool is_zero() const { return generators_.empty(); }
  bool contains(const IntVector& x) const;
  bool in_relative_interior(const IntVector& x) const;
  bool is_simplicial() const { return generators_.size() == dim(); }
  /// Simplicial with generators extending to a basis of N_sigma.
  bool is_smooth() const;

  friend bool operator==(const Cone& a, const Cone& b) { return a.id_ == b.id_; }
  /// Lexicographic on the sorted generator lists.
  friend bool operator<(const Cone& a, const Cone& b);

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<IntVector> generators_;
  std::vector<IntVector> facet_normals_;
  std::vector<std::vector<std::size_t>> facet_sets_;
  std::string id_;
  std::shared_ptr<const QuotientLattice> lattice_;
};

inline Cone cone_from_generators(std::size_t rank, const std::vector<IntVector>& gens) {
  return Cone::from_generators(rank, gens);
}

/// Canonical id of a sorted generator list, e.g. "[[0,1],[1,0]]".
std::string cone_id(const std::vector<IntVector>& sorted_generators);

/// All faces, including the cone itself and the zero cone, ordered by
/// dimension and then lexicographically.
std::vector<Cone> faces(const Cone& c);

struct ConeIntersection {
  Cone cone;
  bool is_common_face = false;
};

ConeIntersection intersect(const Cone& a, const Cone& b);

bool is_face(const Cone& tau, const Cone& sigma);

/// The smallest face of sigma containing the given points of sigma.
Cone smallest_face_containing(const Cone& sigma, const std::vector<IntVector>& points);

inline const QuotientLattice& quotient_lattice(const Cone& c) { return c.lattice(); }

struct FaceEntry {
  Cone cone;
  std::vector<std::size_t> maximal;  // indices of maximal cones containing the face
};

/// A fan stored by its maximal cones, validated pairwise on construction.
class Fan {
 public:
  /// Throws NotAFan (naming the offending pair in input order), DuplicateCone
  /// or DimensionMismatch.
  static Fan from_maximal_cones(std::size_t ambient_rank, std::vector<Cone> cones);

  std::size_t ambient_rank() const { return ambient_rank_; }
  const std::vector<Cone>& maximal_cones() const { return maximal_; }
  const std::map<std::string, FaceEntry>& face_index() const { return face_index_; }
  const FaceEntry* find(const Cone& c) const;
  std::optional<std::size_t> maximal_index(const Cone& c) const;
  /// Intersection of maximal cones i and j (a common face of both).
  const Cone& intersection(std::size_t i, std::size_t j) const;
  std::vector<Cone> cones_of_dim(std::size_t d) const;
  std::vector<Cone> rays() const { return cones_of_dim(1); }

  bool is_simplicial() const;
  bool is_smooth() const;
  /// Canonical string identifying the fan (ids of its maximal cones).
  std::string key() const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.ambient_rank_ == b.ambient_rank_ && a.maximal_ == b.maximal_;
  }

 private:
  std::size_t ambient_rank_ = 0;
  std::vector<Cone> maximal_;
  std::vector<std::vector<Cone>> intersections_;
  std::map<std::string, FaceEntry> face_index_;
};

inline Fan fan_from_maximal_cones(std::size_t rank, std::vector<Cone> cones) {
  return Fan::from_maximal_cones(rank, std::move(cones));
}

/// Nonempty, all maximal cones n-dimensional, and every codimension-one face
/// of a maximal cone lies in exactly two maximal cones.
bool is_complete(const Fan& f);

/// A refinement Δ' -> Δ with, for each maximal cone of Δ' (in Δ' order), the
/// minimal cone of Δ containing it.
struct SubdivisionMap {
  Fan source;
  Fan target;
  std::vector<Cone> assignment;
};

/// Star subdivision of f at a cone of f through `point` (default: the
/// primitive vector along the sum of the target's generators).
SubdivisionMap star_subdivision(const Fan& f, const Cone& target,
                                const std::optional<IntVector>& point = std::nullopt);

/// The fan of projections of Star(tau) to N / N_tau, in coordinates given by
/// a basis of tau^perp ∩ M.
Fan star_fan(const Fan& f, const Cone& tau);

}  // namespace fanpoly
