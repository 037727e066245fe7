#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fanpoly/chern_sr.hpp"
#include "fanpoly/cones_fans.hpp"
#include "fanpoly/ppring.hpp"

namespace fanpoly {

/// A poset of abstract nodes labelled by cones. Unlike a fan, two nodes may
/// carry the same cone.
struct Multifan {
  std::size_t ambient_rank = 0;
  std::vector<std::string> nodes;
  std::vector<Cone> phi;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (child, parent)
  std::vector<std::vector<bool>> below;                      // below[a][b]: a <= b
  std::vector<std::size_t> maximal;

  std::size_t index_of(const std::string& id) const;
  std::string key() const;
};

/// Throws NotAPoset, FaceBijectionFailure, InvalidInput, DimensionMismatch.
Multifan multifan_validate(std::size_t rank, const std::vector<std::string>& nodes, const std::vector<Cone>& phi,
                           const std::vector<std::pair<std::string, std::string>>& covers);

/// Nodes are the cones of the fan, ordered by face inclusion.
Multifan multifan_from_fan(const Fan& f);

/// Cells are the maximal nodes; each pair of them is glued along every
/// maximal common lower bound in the poset.
std::shared_ptr<const PiecewiseDomain> domain_of(const Multifan& m);

GradedBasis mpp_basis(const Multifan& m, unsigned k);

struct HypertoricInput {
  std::size_t rank = 0;
  std::vector<IntVector> vectors;
};

/// Linearly independent subsets of the vectors, ordered by inclusion. Node
/// ids list 1-based vector indices, e.g. "{1,3}"; the empty set is "{}".
Multifan hypertoric_multifan(const HypertoricInput& h);

/// The independence complex on the vectors.
StanleyReisner independence_complex(const HypertoricInput& h);

}  // namespace fanpoly
