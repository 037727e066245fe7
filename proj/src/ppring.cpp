#include "fanpoly/ppring.hpp"

#include <algorithm>

#include "fanpoly/error.hpp"

namespace fanpoly {

namespace {

void require_domain(const PPElement& a, const std::string& key, const char* what) {
  if (a.domain->key != key) throw Error(ErrorKind::FanMismatch, std::string(what) + ": element lives on another fan");
}

void require_same_domain(const PPElement& a, const PPElement& b) {
  if (a.domain->key != b.domain->key) throw Error(ErrorKind::FanMismatch, "elements live on different fans");
}

std::vector<std::size_t> block_offsets(const PiecewiseDomain& d, unsigned k) {
  std::vector<std::size_t> off{0};
  for (const auto& c : d.cells) off.push_back(off.back() + monomials(c.dim(), k).size());
  return off;
}

}  // namespace

std::shared_ptr<const PiecewiseDomain> domain_of(const Fan& f) {
  auto d = std::make_shared<PiecewiseDomain>();
  d->ambient_rank = f.ambient_rank();
  d->cells = f.maximal_cones();
  for (const auto& c : d->cells) d->cell_keys.push_back(c.id());
  for (std::size_t i = 0; i < d->cells.size(); ++i)
    for (std::size_t j = i + 1; j < d->cells.size(); ++j) d->agreements.push_back({i, j, f.intersection(i, j)});
  d->key = f.key();
  return d;
}

int PPElement::degree() const {
  int deg = -1;
  for (const auto& p : parts) deg = std::max(deg, p.degree());
  return deg;
}

bool PPElement::is_homogeneous(unsigned k) const {
  return std::all_of(parts.begin(), parts.end(), [k](const LocalPolynomial& p) { return p.poly.is_homogeneous(k); });
}

PPElement pp_validate(std::shared_ptr<const PiecewiseDomain> domain, std::vector<LocalPolynomial> parts) {
  if (parts.size() != domain->cells.size())
    throw Error(ErrorKind::InvalidInput, "expected " + std::to_string(domain->cells.size()) + " parts, got " +
                                             std::to_string(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!(*parts[i].lattice == domain->cells[i].lattice()))
      throw Error(ErrorKind::LatticeMismatch, "part for " + domain->cell_keys[i] + " is not over its lattice");
  for (const auto& ag : domain->agreements) {
    LocalPolynomial a = restrict_to_lattice(parts[ag.first], ag.face.lattice_ptr());
    LocalPolynomial b = restrict_to_lattice(parts[ag.second], ag.face.lattice_ptr());
    if (!(a.poly == b.poly))
      throw Error(ErrorKind::Incompatible, domain->cell_keys[ag.first] + " and " + domain->cell_keys[ag.second] +
                                               " disagree on " + ag.face.id() + ": " + a.poly.str() + " vs " +
                                               b.poly.str());
  }
  return {std::move(domain), std::move(parts)};
}

PPElement pp_validate(const Fan& f, std::vector<LocalPolynomial> parts) { return pp_validate(domain_of(f), std::move(parts)); }

PPElement pp_constant(std::shared_ptr<const PiecewiseDomain> domain, const Integer& c) {
  std::vector<LocalPolynomial> parts;
  for (const auto& cell : domain->cells) parts.push_back(LocalPolynomial::constant(cell.lattice_ptr(), c));
  return {std::move(domain), std::move(parts)};
}

PPElement pp_global(std::shared_ptr<const PiecewiseDomain> domain, const Polynomial& f) {
  auto m = std::make_shared<const QuotientLattice>(full_lattice(domain->ambient_rank));
  LocalPolynomial global(m, f);
  std::vector<LocalPolynomial> parts;
  for (const auto& cell : domain->cells) parts.push_back(restrict_to_lattice(global, cell.lattice_ptr()));
  return pp_validate(std::move(domain), std::move(parts));
}

PPElement pp_add(const PPElement& a, const PPElement& b) {
  require_same_domain(a, b);
  PPElement out{a.domain, {}};
  for (std::size_t i = 0; i < a.parts.size(); ++i) out.parts.push_back(a.parts[i] + b.parts[i]);
  return out;
}

PPElement pp_sub(const PPElement& a, const PPElement& b) {
  require_same_domain(a, b);
  PPElement out{a.domain, {}};
  for (std::size_t i = 0; i < a.parts.size(); ++i) out.parts.push_back(a.parts[i] - b.parts[i]);
  return out;
}

PPElement pp_mul(const PPElement& a, const PPElement& b) {
  require_same_domain(a, b);
  PPElement out{a.domain, {}};
  for (std::size_t i = 0; i < a.parts.size(); ++i) out.parts.push_back(a.parts[i] * b.parts[i]);
  return out;
}

PPElement pp_scale(const PPElement& a, const Integer& s) {
  PPElement out{a.domain, {}};
  for (const auto& p : a.parts) out.parts.push_back(scale(p, s));
  return out;
}

IntVector pp_coordinates(const PPElement& a, unsigned k) {
  IntVector v;
  for (const auto& p : a.parts)
    for (const auto& e : monomials(p.lattice->rank(), k)) v.push_back(p.poly.coefficient(e));
  return v;
}

PPElement pp_from_coordinates(std::shared_ptr<const PiecewiseDomain> domain, unsigned k, const IntVector& coords) {
  const auto off = block_offsets(*domain, k);
  if (coords.size() != off.back()) throw Error(ErrorKind::DimensionMismatch, "coordinate vector has wrong length");
  std::vector<LocalPolynomial> parts;
  for (std::size_t i = 0; i < domain->cells.size(); ++i) {
    const auto& cell = domain->cells[i];
    Polynomial p(cell.dim());
    const auto mons = monomials(cell.dim(), k);
    for (std::size_t m = 0; m < mons.size(); ++m) p.add_term(mons[m], coords[off[i] + m]);
    parts.emplace_back(cell.lattice_ptr(), std::move(p));
  }
  return {std::move(domain), std::move(parts)};
}

IntMatrix pp_constraint_matrix(const PiecewiseDomain& domain, unsigned k) {
  const auto off = block_offsets(domain, k);
  IntMatrix a(0, off.back());
  for (const auto& ag : domain.agreements) {
    IntMatrix s1 = sym_power(restriction_matrix(domain.cells[ag.first].lattice(), ag.face.lattice()), k);
    IntMatrix s2 = sym_power(restriction_matrix(domain.cells[ag.second].lattice(), ag.face.lattice()), k);
    for (std::size_t r = 0; r < s1.rows(); ++r) {
      IntVector row(off.back());
      for (std::size_t c = 0; c < s1.cols(); ++c) row[off[ag.first] + c] += s1(r, c);
      for (std::size_t c = 0; c < s2.cols(); ++c) row[off[ag.second] + c] -= s2(r, c);
      a.append_row(row);
    }
  }
  return a;
}

GradedBasis pp_basis(std::shared_ptr<const PiecewiseDomain> domain, unsigned k) {
  GradedBasis b;
  b.degree = k;
  b.coefficients = kernel_lattice(pp_constraint_matrix(*domain, k));
  for (std::size_t i = 0; i < b.coefficients.rows(); ++i)
    b.elements.push_back(pp_from_coordinates(domain, k, b.coefficients.row(i)));
  b.domain = std::move(domain);
  return b;
}

GradedBasis pp_basis(const Fan& f, unsigned k) { return pp_basis(domain_of(f), k); }

bool GradedBasis::contains(const PPElement& a) const {
  if (a.domain->key != domain->key || !a.is_homogeneous(degree)) return false;
  return lattice_contains(coefficients, pp_coordinates(a, degree));
}

LocalPolynomial pp_restrict_orbit(const Fan& f, const PPElement& a, const Cone& sigma) {
  require_domain(a, f.key(), "pp_restrict_orbit");
  const FaceEntry* entry = f.find(sigma);
  if (entry == nullptr) throw Error(ErrorKind::ConeNotInFan, sigma.id() + " is not a cone of the fan");
  return restrict_to_lattice(a.parts[entry->maximal.front()], sigma.lattice_ptr());
}

PPElement pp_pullback(const SubdivisionMap& m, const PPElement& a) {
  require_domain(a, m.target.key(), "pp_pullback");
  std::vector<LocalPolynomial> parts;
  for (std::size_t s = 0; s < m.source.maximal_cones().size(); ++s) {
    const FaceEntry* entry = m.target.find(m.assignment[s]);
    parts.push_back(restrict_to_lattice(a.parts[entry->maximal.front()], m.source.maximal_cones()[s].lattice_ptr()));
  }
  return pp_validate(m.source, std::move(parts));
}

const char* to_string(PullbackCondition c) {
  switch (c) {
    case PullbackCondition::SubconesDisagree: return "(i) subcones disagree";
    case PullbackCondition::NotIntegral: return "(ii) not integral";
  }
  return "?";
}

PullbackCheck pp_is_pullback(const SubdivisionMap& m, const PPElement& a) {
  require_domain(a, m.source.key(), "pp_is_pullback");
  PullbackCheck out;
  std::vector<LocalPolynomial> parts;
  const auto& targets = m.target.maximal_cones();
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const Cone& sigma = targets[t];
    std::vector<std::size_t> subs;
    for (std::size_t s = 0; s < m.assignment.size(); ++s)
      if (m.assignment[s] == sigma) subs.push_back(s);
    if (subs.empty()) throw Error(ErrorKind::InvalidInput, "no subcone is assigned to " + sigma.id());

    const auto& sources = m.source.maximal_cones();
    RationalLocalPolynomial candidate = extend_to_lattice(a.parts[subs.front()], sigma.lattice_ptr());
    for (std::size_t s : subs) {
      if (restrict_to_lattice(candidate, sources[s].lattice_ptr()) == to_rational(a.parts[s])) continue;
      out.failing_cone = t;
      out.condition = PullbackCondition::SubconesDisagree;
      out.report = "condition (i) fails on " + sigma.id() + ": subcones " + sources[subs.front()].id() + " and " +
                   sources[s].id() + " carry different polynomials";
      return out;
    }
    IntegralityReport integral = integrality_certificate(candidate);
    if (!integral.integral) {
      out.failing_cone = t;
      out.condition = PullbackCondition::NotIntegral;
      out.report = "condition (ii) fails on " + sigma.id() + ": " + candidate.poly.str() + " is not integral";
      return out;
    }
    parts.push_back(*integral.integral);
  }
  out.element = pp_validate(m.target, std::move(parts));
  out.report = "pullback";
  return out;
}

}  // namespace fanpoly
