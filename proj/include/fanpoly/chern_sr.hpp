#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanpoly/cones_fans.hpp"
#include "fanpoly/polynomials.hpp"
#include "fanpoly/ppring.hpp"

namespace fanpoly {

/// Toric bundle data: for each maximal cone sigma the multiset u_sigma of
/// characters, stored both as representatives in M and as their images in
/// M_sigma. u in u_sigma means the chi^u-isotypical part of the fiber at the
/// distinguished point of U_sigma.
struct BundleData {
  Fan fan;
  std::size_t rank = 0;
  std::vector<std::vector<IntVector>> representatives;  // per maximal cone, global M
  std::vector<std::vector<LocalPolynomial>> multisets;   // per maximal cone, in M_sigma
};

/// Throws IncompatibleMultisets, InvalidInput on a wrong count, DimensionMismatch.
BundleData bundle_validate(const Fan& f, std::size_t rank, const std::vector<std::vector<IntVector>>& reps);
BundleData bundle_validate(const Fan& f, std::size_t rank, const std::map<std::string, std::vector<IntVector>>& reps);

/// Cone-wise multiset union.
BundleData bundle_sum(const BundleData& a, const BundleData& b);

/// c_i as a piecewise polynomial. Throws IndexOutOfRange.
PPElement chern_class(const BundleData& b, std::size_t i);

/// Ray-indexed Stanley-Reisner data of a simplicial complex. When built from
/// a fan, vertices are the rays of the fan in fan order.
struct StanleyReisner {
  std::optional<Fan> fan;
  std::vector<IntVector> rays;
  std::size_t vertex_count = 0;
  std::vector<std::vector<std::size_t>> facets;
  std::vector<std::vector<std::size_t>> minimal_nonfaces;

  bool is_face(const std::vector<std::size_t>& sorted_vertices) const;
};

/// Throws NotSimplicial.
StanleyReisner stanley_reisner(const Fan& f);
/// Abstract complex generated by the given faces.
StanleyReisner stanley_reisner_of_complex(std::size_t vertex_count, const std::vector<std::vector<std::size_t>>& faces);

/// Number of degree-k monomials not divisible by a nonface monomial.
Integer sr_hilbert(const StanleyReisner& s, unsigned k);

struct CourantFunction {
  std::size_t ray = 0;
  std::vector<RationalLocalPolynomial> parts;  // per maximal cone
  std::vector<std::size_t> nonintegral_cones;

  bool integral() const { return nonintegral_cones.empty(); }
};

/// Value 1 at ray j, 0 at the other rays. Throws RayNotFound.
CourantFunction courant_function(const StanleyReisner& s, std::size_t j);
CourantFunction courant_function(const StanleyReisner& s, const IntVector& ray);

}  // namespace fanpoly
