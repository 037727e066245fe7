#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fanpoly/cones_fans.hpp"
#include "fanpoly/polynomials.hpp"

namespace fanpoly {

/// Parts i and j must agree after restriction to `face`.
struct Agreement {
  std::size_t first = 0;
  std::size_t second = 0;
  Cone face;
};

/// What a ring of piecewise polynomials is computed over: the maximal cells
/// (maximal cones of a fan, or maximal nodes of a multifan) with their cones,
/// and the faces on which pairs of cells are glued. Storing elements on the
/// maximal cells only is faithful; all lower cones are faces of some cell.
struct PiecewiseDomain {
  std::size_t ambient_rank = 0;
  std::vector<std::string> cell_keys;
  std::vector<Cone> cells;
  std::vector<Agreement> agreements;
  std::string key;
};

/// One agreement per pair of maximal cones, on their intersection.
std::shared_ptr<const PiecewiseDomain> domain_of(const Fan& f);

/// An integral piecewise polynomial: one local polynomial per maximal cell.
struct PPElement {
  std::shared_ptr<const PiecewiseDomain> domain;
  std::vector<LocalPolynomial> parts;

  int degree() const;
  bool is_homogeneous(unsigned k) const;

  friend bool operator==(const PPElement& a, const PPElement& b) {
    return a.domain->key == b.domain->key && a.parts == b.parts;
  }
};

/// Throws Incompatible naming both cells, the face, and the two restrictions.
PPElement pp_validate(std::shared_ptr<const PiecewiseDomain> domain, std::vector<LocalPolynomial> parts);
PPElement pp_validate(const Fan& f, std::vector<LocalPolynomial> parts);

PPElement pp_constant(std::shared_ptr<const PiecewiseDomain> domain, const Integer& c);
/// A global polynomial on N_R (in the standard coordinates of M = Z^n)
/// placed on every cell.
PPElement pp_global(std::shared_ptr<const PiecewiseDomain> domain, const Polynomial& f);

PPElement pp_add(const PPElement& a, const PPElement& b);
PPElement pp_sub(const PPElement& a, const PPElement& b);
PPElement pp_mul(const PPElement& a, const PPElement& b);
PPElement pp_scale(const PPElement& a, const Integer& s);

/// Coefficients of the degree-k parts, concatenated cell by cell in
/// graded-lex monomial order.
IntVector pp_coordinates(const PPElement& a, unsigned k);
PPElement pp_from_coordinates(std::shared_ptr<const PiecewiseDomain> domain, unsigned k, const IntVector& coords);

/// A Z-basis of the degree-k piece.
struct GradedBasis {
  unsigned degree = 0;
  std::shared_ptr<const PiecewiseDomain> domain;
  std::vector<PPElement> elements;
  IntMatrix coefficients;  // rows: elements in pp_coordinates form (HNF)

  std::size_t rank() const { return elements.size(); }
  bool contains(const PPElement& a) const;
};

/// Solves the integer kernel problem of the agreement constraints in degree k.
GradedBasis pp_basis(std::shared_ptr<const PiecewiseDomain> domain, unsigned k);
GradedBasis pp_basis(const Fan& f, unsigned k);

/// The constraint matrix whose integer kernel is PP^k.
IntMatrix pp_constraint_matrix(const PiecewiseDomain& domain, unsigned k);

/// f|_sigma for any cone sigma of the fan.
LocalPolynomial pp_restrict_orbit(const Fan& f, const PPElement& a, const Cone& sigma);

/// Pullback along a subdivision; returns an element on m.source.
PPElement pp_pullback(const SubdivisionMap& m, const PPElement& a);

enum class PullbackCondition {
  SubconesDisagree,  // (i) the subcones of a cone carry different polynomials
  NotIntegral,       // (ii) the common polynomial is not in Sym M_sigma
};

struct PullbackCheck {
  std::optional<PPElement> element;  // the preimage on m.target, if any
  std::optional<std::size_t> failing_cone;
  std::optional<PullbackCondition> condition;
  std::string report;
};

/// Decides whether an element on m.source is pulled back from m.target.
PullbackCheck pp_is_pullback(const SubdivisionMap& m, const PPElement& a);

const char* to_string(PullbackCondition c);

}  // namespace fanpoly
