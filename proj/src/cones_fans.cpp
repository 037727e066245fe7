#include "fanpoly/cones_fans.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "fanpoly/error.hpp"

namespace fanpoly {

namespace {

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order.
void for_each_combination(std::size_t n, std::size_t k,
                          const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

IntMatrix rows_of(const std::vector<IntVector>& vs, std::size_t cols) {
  return IntMatrix::from_rows(vs, cols);
}

IntMatrix select_rows(const std::vector<IntVector>& vs, const std::vector<std::size_t>& idx,
                      std::size_t cols) {
  IntMatrix m(idx.size(), cols);
  for (std::size_t i = 0; i < idx.size(); ++i)
    std::copy(vs[idx[i]].begin(), vs[idx[i]].end(), m.row_span(i).begin());
  return m;
}

bool vector_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct Facet {
  IntVector normal;
  std::vector<std::size_t> on;  // generator indices on the facet
};

// Facets of the cone spanned by `gens` (dimension d, perp basis w in HNF):
// each facet is spanned by d-1 independent generators and its normal is the
// primitive generator of (kernel of those generators) / w that is
// nonnegative on every generator.
std::vector<Facet> compute_facets(const std::vector<IntVector>& gens, const IntMatrix& w,
                                  std::size_t d, std::size_t n) {
  std::vector<Facet> out;
  if (d == 0) return out;
  const IntMatrix g = rows_of(gens, n);
  const IntMatrix gt = g.transposed();
  std::set<std::vector<std::size_t>> seen;
  for_each_combination(gens.size(), d - 1, [&](const std::vector<std::size_t>& subset) {
    IntMatrix gs = subset.empty() ? IntMatrix(0, n) : select_rows(gens, subset, n);
    if (rank(gs) != d - 1) return;
    IntMatrix k = kernel_lattice(gs);
    IntMatrix pairing = k * gt;
    HNFResult h = hnf(pairing);
    if (h.rank != 1) return;
    IntVector values = h.H.row(0);
    IntVector combo = h.U.row(0);
    IntVector u(n);
    for (std::size_t i = 0; i < k.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) u[j] += combo[i] * k(i, j);
    bool nonneg = std::all_of(values.begin(), values.end(), [](const Integer& x) { return x >= 0; });
    bool nonpos = std::all_of(values.begin(), values.end(), [](const Integer& x) { return x <= 0; });
    if (!nonneg && !nonpos) return;
    if (!nonneg)
      for (auto& x : u) x = -x;
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] == 0) on.push_back(i);
    if (!seen.insert(on).second) return;
    out.push_back({reduce_modulo(w, u), std::move(on)});
  });
  std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) { return a.on < b.on; });
  return out;
}

}  // namespace

// ---------------------------------------------------------------- lattices

IntVector QuotientLattice::project(const IntVector& u) const { return span_basis.apply(u); }

QuotientLattice lattice_of_span(std::size_t n, const IntMatrix& generators) {
  QuotientLattice q;
  q.ambient_rank = n;
  IntMatrix g = generators.rows() == 0 ? IntMatrix(0, n) : generators;
  q.sigma_perp = kernel_lattice(g);
  q.span_basis = kernel_lattice(q.sigma_perp);
  const std::size_t d = q.span_basis.rows();
  // HNF of span_basis^T is [I_d; 0]; the first d rows of its transform are
  // preimages of the unit vectors.
  HNFResult h = hnf(q.span_basis.transposed());
  q.section = h.U.take_rows(0, d).transposed();
  if (d == 0) q.section = IntMatrix(n, 0);
  return q;
}

QuotientLattice full_lattice(std::size_t n) { return lattice_of_span(n, IntMatrix::identity(n)); }

IntMatrix restriction_matrix(const QuotientLattice& from, const QuotientLattice& to) {
  if (from.ambient_rank != to.ambient_rank)
    throw Error(ErrorKind::LatticeMismatch, "lattices live in different ambient ranks");
  IntMatrix c = to.span_basis * from.section;
  if (!(c * from.span_basis == to.span_basis))
    throw Error(ErrorKind::LatticeMismatch, "target span is not contained in source span");
  return c;
}

// ---------------------------------------------------------------- Cone

std::string cone_id(const std::vector<IntVector>& gens) {
  std::string s = "[";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ',';
    s += to_string(gens[i]);
  }
  return s + "]";
}

Cone Cone::from_generators(std::size_t n, const std::vector<IntVector>& input) {
  std::vector<IntVector> gens;
  for (const auto& g : input) {
    if (g.size() != n)
      throw Error(ErrorKind::DimensionMismatch, "generator " + to_string(g) + " not in rank " + std::to_string(n));
    if (content(g) == 0) throw Error(ErrorKind::ZeroVector, "zero generator");
    gens.push_back(primitive(g));
  }
  std::sort(gens.begin(), gens.end(), vector_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  const IntMatrix g = gens.empty() ? IntMatrix(0, n) : rows_of(gens, n);
  auto lattice = std::make_shared<QuotientLattice>(lattice_of_span(n, g));
  const std::size_t d = lattice->rank();
  std::vector<Facet> facets = compute_facets(gens, lattice->sigma_perp, d, n);

  if (d > 0) {
    IntMatrix normals = lattice->sigma_perp;
    for (const auto& f : facets) normals.append_row(f.normal);
    if (rank(normals) != n)
      throw Error(ErrorKind::NotPointed, "cone " + cone_id(gens) + " contains a line");
  }

  // A generator is extremal iff the facets through it cut out a line.
  std::vector<IntVector> extremal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    IntMatrix through = lattice->sigma_perp;
    for (const auto& f : facets)
      if (std::binary_search(f.on.begin(), f.on.end(), i)) through.append_row(f.normal);
    if (rank(through) + 1 == n) extremal.push_back(gens[i]);
  }
  if (extremal.size() != gens.size()) return from_generators(n, extremal);

  Cone c;
  c.ambient_rank_ = n;
  c.generators_ = std::move(gens);
  for (auto& f : facets) {
    c.facet_normals_.push_back(std::move(f.normal));
    c.facet_sets_.push_back(std::move(f.on));
  }
  c.id_ = cone_id(c.generators_);
  c.lattice_ = std::move(lattice);
  return c;
}

IntMatrix Cone::generator_matrix() const {
  return generators_.empty() ? IntMatrix(0, ambient_rank_) : rows_of(generators_, ambient_rank_);
}

bool Cone::contains(const IntVector& x) const {
  if (x.size() != ambient_rank_) throw Error(ErrorKind::DimensionMismatch, "point has wrong rank");
  for (std::size_t i = 0; i < lattice_->sigma_perp.rows(); ++i)
    if (dot(lattice_->sigma_perp.row_span(i), x) != 0) return false;
  for (const auto& u : facet_normals_)
    if (dot(u, x) < 0) return false;
  return true;
}

bool Cone::in_relative_interior(const IntVector& x) const {
  if (!contains(x)) return false;
  for (const auto& u : facet_normals_)
    if (dot(u, x) <= 0) return false;
  return true;
}

bool Cone::is_smooth() const {
  if (!is_simplicial()) return false;
  if (is_zero()) return true;
  return hnf_basis(generator_matrix()) == lattice_->span_basis;
}

bool operator<(const Cone& a, const Cone& b) {
  return std::lexicographical_compare(a.generators_.begin(), a.generators_.end(), b.generators_.begin(),
                                      b.generators_.end(), vector_less);
}

std::vector<Cone> faces(const Cone& c) {
  std::vector<std::size_t> all(c.generators().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<std::vector<std::size_t>> seen{all};
  std::deque<std::vector<std::size_t>> queue{all};
  while (!queue.empty()) {
    auto f = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : c.facet_generator_sets()) {
      std::vector<std::size_t> meet;
      std::set_intersection(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(meet));
      if (seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  std::vector<Cone> out;
  for (const auto& idx : seen) {
    std::vector<IntVector> gens;
    for (auto i : idx) gens.push_back(c.generators()[i]);
    out.push_back(Cone::from_generators(c.ambient_rank(), gens));
  }
  std::sort(out.begin(), out.end(), [](const Cone& a, const Cone& b) {
    return a.dim() != b.dim() ? a.dim() < b.dim() : a < b;
  });
  return out;
}

Cone smallest_face_containing(const Cone& sigma, const std::vector<IntVector>& points) {
  std::vector<std::size_t> on(sigma.generators().size());
  for (std::size_t i = 0; i < on.size(); ++i) on[i] = i;
  for (std::size_t f = 0; f < sigma.facet_normals().size(); ++f) {
    const auto& u = sigma.facet_normals()[f];
    bool vanishes = std::all_of(points.begin(), points.end(), [&](const IntVector& p) { return dot(u, p) == 0; });
    if (!vanishes) continue;
    const auto& s = sigma.facet_generator_sets()[f];
    std::vector<std::size_t> meet;
    std::set_intersection(on.begin(), on.end(), s.begin(), s.end(), std::back_inserter(meet));
    on = std::move(meet);
  }
  std::vector<IntVector> gens;
  for (auto i : on) gens.push_back(sigma.generators()[i]);
  return Cone::from_generators(sigma.ambient_rank(), gens);
}

bool is_face(const Cone& tau, const Cone& sigma) {
  if (tau.ambient_rank() != sigma.ambient_rank()) return false;
  for (const auto& g : tau.generators())
    if (!sigma.contains(g)) return false;
  return smallest_face_containing(sigma, tau.generators()) == tau;
}

ConeIntersection intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw Error(ErrorKind::DimensionMismatch, "intersecting cones of different ambient rank");
  if (a == b) return {a, true};
  const std::size_t n = a.ambient_rank();
  IntMatrix eq = vstack(a.lattice().sigma_perp, b.lattice().sigma_perp);
  if (eq.rows() == 0) eq = IntMatrix(0, n);
  std::vector<IntVector> ineq = a.facet_normals();
  ineq.insert(ineq.end(), b.facet_normals().begin(), b.facet_normals().end());

  // Extreme rays of {eq x = 0, ineq x >= 0}: one-dimensional solution sets of
  // eq plus (n - 1 - rank eq) tight inequalities.
  const std::size_t r = rank(eq);
  std::vector<IntVector> rays;
  if (r < n) {
    for_each_combination(ineq.size(), n - 1 - r, [&](const std::vector<std::size_t>& subset) {
      IntMatrix sys = eq;
      for (auto i : subset) sys.append_row(ineq[i]);
      IntMatrix k = kernel_lattice(sys);
      if (k.rows() != 1) return;
      IntVector x = k.row(0);
      bool pos = std::all_of(ineq.begin(), ineq.end(), [&](const IntVector& u) { return dot(u, x) >= 0; });
      bool neg = std::all_of(ineq.begin(), ineq.end(), [&](const IntVector& u) { return dot(u, x) <= 0; });
      if (!pos && neg)
        for (auto& v : x) v = -v;
      if (pos || neg) rays.push_back(std::move(x));
    });
  }
  Cone c = Cone::from_generators(n, rays);
  return {c, is_face(c, a) && is_face(c, b)};
}

// ---------------------------------------------------------------- Fan

Fan Fan::from_maximal_cones(std::size_t n, std::vector<Cone> cones) {
  for (std::size_t i = 0; i < cones.size(); ++i)
    if (cones[i].ambient_rank() != n)
      throw Error(ErrorKind::DimensionMismatch, "cone " + std::to_string(i) + " is not in rank " + std::to_string(n));
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      if (cones[i] == cones[j])
        throw Error(ErrorKind::DuplicateCone, "cones " + std::to_string(i) + " and " + std::to_string(j) +
                                                  " are both " + cones[i].id());
      ConeIntersection x = intersect(cones[i], cones[j]);
      std::string pair = "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
      if (!x.is_common_face)
        throw Error(ErrorKind::NotAFan, "cones " + pair + " " + cones[i].id() + " and " + cones[j].id() +
                                            " meet in " + x.cone.id() + ", which is not a common face");
      if (x.cone == cones[i] || x.cone == cones[j])
        throw Error(ErrorKind::NotAFan, "cones " + pair + ": one is a face of the other");
    }

  Fan f;
  f.ambient_rank_ = n;
  std::sort(cones.begin(), cones.end());
  f.maximal_ = std::move(cones);
  const std::size_t m = f.maximal_.size();
  f.intersections_.assign(m, std::vector<Cone>(m));
  for (std::size_t i = 0; i < m; ++i) {
    f.intersections_[i][i] = f.maximal_[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      Cone x = intersect(f.maximal_[i], f.maximal_[j]).cone;
      f.intersections_[i][j] = x;
      f.intersections_[j][i] = x;
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (auto& face : faces(f.maximal_[i])) {
      auto [it, inserted] = f.face_index_.try_emplace(face.id(), FaceEntry{face, {}});
      it->second.maximal.push_back(i);
    }
  return f;
}

const FaceEntry* Fan::find(const Cone& c) const {
  auto it = face_index_.find(c.id());
  return it == face_index_.end() ? nullptr : &it->second;
}

std::optional<std::size_t> Fan::maximal_index(const Cone& c) const {
  auto it = std::lower_bound(maximal_.begin(), maximal_.end(), c);
  if (it == maximal_.end() || !(*it == c)) return std::nullopt;
  return static_cast<std::size_t>(it - maximal_.begin());
}

const Cone& Fan::intersection(std::size_t i, std::size_t j) const { return intersections_.at(i).at(j); }

std::vector<Cone> Fan::cones_of_dim(std::size_t d) const {
  std::vector<Cone> out;
  for (const auto& [id, entry] : face_index_)
    if (entry.cone.dim() == d) out.push_back(entry.cone);
  std::sort(out.begin(), out.end());
  return out;
}

bool Fan::is_simplicial() const {
  return std::all_of(maximal_.begin(), maximal_.end(), [](const Cone& c) { return c.is_simplicial(); });
}

bool Fan::is_smooth() const {
  return std::all_of(maximal_.begin(), maximal_.end(), [](const Cone& c) { return c.is_smooth(); });
}

std::string Fan::key() const {
  std::string s = std::to_string(ambient_rank_) + ":";
  for (const auto& c : maximal_) s += c.id() + ";";
  return s;
}

bool is_complete(const Fan& f) {
  const std::size_t n = f.ambient_rank();
  if (f.maximal_cones().empty()) return false;
  for (const auto& c : f.maximal_cones())
    if (c.dim() != n) return false;
  if (n == 0) return true;
  for (const auto& [id, entry] : f.face_index())
    if (entry.cone.dim() + 1 == n && entry.maximal.size() != 2) return false;
  return true;
}

SubdivisionMap star_subdivision(const Fan& f, const Cone& target, const std::optional<IntVector>& point) {
  const FaceEntry* entry = f.find(target);
  if (entry == nullptr) throw Error(ErrorKind::TargetNotInFan, "cone " + target.id() + " is not in the fan");
  if (target.is_zero()) throw Error(ErrorKind::PointNotInterior, "cannot subdivide at the zero cone");
  const std::size_t n = f.ambient_rank();
  IntVector v(n);
  if (point) {
    v = *point;
  } else {
    for (const auto& g : target.generators())
      for (std::size_t i = 0; i < n; ++i) v[i] += g[i];
    v = primitive(v);
  }
  if (v.size() != n || content(v) != 1 || !target.in_relative_interior(v))
    throw Error(ErrorKind::PointNotInterior,
                to_string(v) + " is not a primitive point in the relative interior of " + target.id());

  std::vector<Cone> cones;
  std::vector<Cone> assigned;
  for (std::size_t i = 0; i < f.maximal_cones().size(); ++i) {
    const Cone& sigma = f.maximal_cones()[i];
    if (!std::binary_search(entry->maximal.begin(), entry->maximal.end(), i)) {
      cones.push_back(sigma);
      assigned.push_back(sigma);
      continue;
    }
    // Join the new ray with every facet of sigma not containing the target.
    for (std::size_t k = 0; k < sigma.facet_normals().size(); ++k) {
      const auto& u = sigma.facet_normals()[k];
      bool contains_target = std::all_of(target.generators().begin(), target.generators().end(),
                                         [&](const IntVector& g) { return dot(u, g) == 0; });
      if (contains_target) continue;
      std::vector<IntVector> gens{v};
      for (auto idx : sigma.facet_generator_sets()[k]) gens.push_back(sigma.generators()[idx]);
      Cone c = Cone::from_generators(n, gens);
      assigned.push_back(smallest_face_containing(sigma, c.generators()));
      cones.push_back(std::move(c));
    }
  }
  std::map<std::string, Cone> by_id;
  for (std::size_t i = 0; i < cones.size(); ++i) by_id.emplace(cones[i].id(), assigned[i]);
  SubdivisionMap m{Fan::from_maximal_cones(n, std::move(cones)), f, {}};
  for (const auto& c : m.source.maximal_cones()) m.assignment.push_back(by_id.at(c.id()));
  return m;
}

Fan star_fan(const Fan& f, const Cone& tau) {
  const FaceEntry* entry = f.find(tau);
  if (entry == nullptr) throw Error(ErrorKind::TargetNotInFan, "cone " + tau.id() + " is not in the fan");
  const IntMatrix& w = tau.lattice().sigma_perp;
  const std::size_t q = w.rows();
  std::vector<Cone> projected;
  for (auto i : entry->maximal) {
    std::vector<IntVector> gens;
    for (const auto& g : f.maximal_cones()[i].generators()) {
      IntVector p = w.apply(g);
      if (content(p) != 0) gens.push_back(std::move(p));
    }
    projected.push_back(Cone::from_generators(q, gens));
  }
  return Fan::from_maximal_cones(q, std::move(projected));
}

}  // namespace fanpoly
