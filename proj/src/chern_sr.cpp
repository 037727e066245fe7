#include "fanpoly/chern_sr.hpp"

#include <algorithm>
#include <set>

#include "fanpoly/error.hpp"

namespace fanpoly {

namespace {

std::vector<IntVector> sorted_images(const QuotientLattice& l, const std::vector<IntVector>& reps) {
  std::vector<IntVector> out;
  for (const auto& u : reps) out.push_back(l.project(u));
  std::sort(out.begin(), out.end());
  return out;
}

std::string multiset_str(const std::vector<IntVector>& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? ", " : "") + to_string(m[i]);
  return s + "}";
}

}  // namespace

BundleData bundle_validate(const Fan& f, std::size_t rank, const std::vector<std::vector<IntVector>>& reps) {
  const auto& cones = f.maximal_cones();
  if (reps.size() != cones.size())
    throw Error(ErrorKind::InvalidInput, "expected one multiset per maximal cone (" + std::to_string(cones.size()) + ")");
  BundleData b{f, rank, reps, {}};
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (reps[i].size() != rank)
      throw Error(ErrorKind::InvalidInput, "multiset on " + cones[i].id() + " has size " +
                                               std::to_string(reps[i].size()) + ", expected " + std::to_string(rank));
    std::vector<LocalPolynomial> ms;
    for (const auto& u : reps[i]) {
      if (u.size() != f.ambient_rank()) throw Error(ErrorKind::DimensionMismatch, "character of wrong length");
      ms.push_back(character(cones[i].lattice_ptr(), u));
    }
    b.multisets.push_back(std::move(ms));
  }
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      const Cone& tau = f.intersection(i, j);
      auto a = sorted_images(tau.lattice(), reps[i]);
      auto c = sorted_images(tau.lattice(), reps[j]);
      if (a != c)
        throw Error(ErrorKind::IncompatibleMultisets, cones[i].id() + " and " + cones[j].id() + " restrict to " +
                                                          multiset_str(a) + " and " + multiset_str(c) + " on " +
                                                          tau.id());
    }
  return b;
}

BundleData bundle_validate(const Fan& f, std::size_t rank, const std::map<std::string, std::vector<IntVector>>& reps) {
  std::vector<std::vector<IntVector>> ordered;
  for (const auto& c : f.maximal_cones()) {
    auto it = reps.find(c.id());
    if (it == reps.end()) throw Error(ErrorKind::InvalidInput, "no multiset given for " + c.id());
    ordered.push_back(it->second);
  }
  if (reps.size() != ordered.size()) throw Error(ErrorKind::InvalidInput, "multiset given for a non-maximal cone");
  return bundle_validate(f, rank, ordered);
}

BundleData bundle_sum(const BundleData& a, const BundleData& b) {
  if (!(a.fan == b.fan)) throw Error(ErrorKind::FanMismatch, "bundles live on different fans");
  auto reps = a.representatives;
  for (std::size_t i = 0; i < reps.size(); ++i)
    reps[i].insert(reps[i].end(), b.representatives[i].begin(), b.representatives[i].end());
  return bundle_validate(a.fan, a.rank + b.rank, reps);
}

PPElement chern_class(const BundleData& b, std::size_t i) {
  if (i > b.rank)
    throw Error(ErrorKind::IndexOutOfRange, "c_" + std::to_string(i) + " of a rank " + std::to_string(b.rank) + " bundle");
  const auto& cones = b.fan.maximal_cones();
  std::vector<LocalPolynomial> parts;
  for (std::size_t s = 0; s < cones.size(); ++s)
    parts.push_back(elementary_symmetric(cones[s].lattice_ptr(), b.multisets[s], i));
  return pp_validate(b.fan, std::move(parts));
}

bool StanleyReisner::is_face(const std::vector<std::size_t>& sorted_vertices) const {
  return std::any_of(facets.begin(), facets.end(), [&](const std::vector<std::size_t>& f) {
    return std::includes(f.begin(), f.end(), sorted_vertices.begin(), sorted_vertices.end());
  });
}

StanleyReisner stanley_reisner_of_complex(std::size_t vertex_count, const std::vector<std::vector<std::size_t>>& faces) {
  StanleyReisner s;
  s.vertex_count = vertex_count;
  for (auto f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (auto v : f)
      if (v >= vertex_count) throw Error(ErrorKind::IndexOutOfRange, "face vertex out of range");
    s.facets.push_back(std::move(f));
  }
  // Keep only inclusion-maximal faces.
  std::sort(s.facets.begin(), s.facets.end());
  s.facets.erase(std::unique(s.facets.begin(), s.facets.end()), s.facets.end());
  std::vector<std::vector<std::size_t>> maximal;
  for (const auto& f : s.facets) {
    bool covered = std::any_of(s.facets.begin(), s.facets.end(), [&](const std::vector<std::size_t>& g) {
      return g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (!covered) maximal.push_back(f);
  }
  s.facets = std::move(maximal);

  // All faces, then minimal nonfaces as F + {v} (v > max F) whose every
  // codimension-one subset is a face.
  std::set<std::vector<std::size_t>> all;
  for (const auto& f : s.facets)
    for (std::size_t mask = 0; mask < (std::size_t{1} << f.size()); ++mask) {
      std::vector<std::size_t> sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1) sub.push_back(f[i]);
      all.insert(sub);
    }
  for (const auto& f : all) {
    std::size_t start = f.empty() ? 0 : f.back() + 1;
    for (std::size_t v = start; v < vertex_count; ++v) {
      auto cand = f;
      cand.push_back(v);
      if (all.count(cand)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < cand.size() && minimal; ++drop) {
        auto sub = cand;
        sub.erase(sub.begin() + static_cast<long>(drop));
        minimal = all.count(sub) > 0;
      }
      if (minimal) s.minimal_nonfaces.push_back(std::move(cand));
    }
  }
  std::sort(s.minimal_nonfaces.begin(), s.minimal_nonfaces.end());
  return s;
}

StanleyReisner stanley_reisner(const Fan& f) {
  if (!f.is_simplicial()) throw Error(ErrorKind::NotSimplicial, "Stanley-Reisner data needs a simplicial fan");
  std::vector<IntVector> rays;
  for (const auto& r : f.rays()) rays.push_back(r.generators().front());
  std::vector<std::vector<std::size_t>> faces;
  for (const auto& c : f.maximal_cones()) {
    std::vector<std::size_t> face;
    for (const auto& g : c.generators())
      face.push_back(static_cast<std::size_t>(std::find(rays.begin(), rays.end(), g) - rays.begin()));
    faces.push_back(std::move(face));
  }
  StanleyReisner s = stanley_reisner_of_complex(rays.size(), faces);
  s.fan = f;
  s.rays = std::move(rays);
  return s;
}

Integer sr_hilbert(const StanleyReisner& s, unsigned k) {
  Integer count = 0;
  for (const auto& e : monomials(s.vertex_count, k)) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) support.push_back(i);
    if (s.is_face(support)) ++count;
  }
  return count;
}

CourantFunction courant_function(const StanleyReisner& s, std::size_t j) {
  if (!s.fan) throw Error(ErrorKind::InvalidInput, "Courant functions need a fan");
  if (j >= s.rays.size()) throw Error(ErrorKind::RayNotFound, "ray index " + std::to_string(j) + " out of range");
  CourantFunction out;
  out.ray = j;
  const auto& cones = s.fan->maximal_cones();
  for (std::size_t i = 0; i < cones.size(); ++i) {
    const Cone& c = cones[i];
    const auto& gens = c.generators();
    auto pos = std::find(gens.begin(), gens.end(), s.rays[j]);
    RationalPolynomial p(c.dim());
    if (pos != gens.end()) {
      // Coordinates of the generators in the basis of N_sigma; the linear
      // form with values e_j on the generators is column j of the inverse.
      auto coords = solve_left(to_rational(c.lattice().span_basis), to_rational(c.generator_matrix()));
      auto inv = inverse(*coords);
      std::size_t col = static_cast<std::size_t>(pos - gens.begin());
      for (std::size_t k = 0; k < c.dim(); ++k) {
        Exponent e(c.dim(), 0);
        e[k] = 1;
        p.add_term(e, (*inv)(k, col));
      }
    }
    out.parts.emplace_back(c.lattice_ptr(), std::move(p));
    if (!integrality_certificate(out.parts.back()).integral) out.nonintegral_cones.push_back(i);
  }
  return out;
}

CourantFunction courant_function(const StanleyReisner& s, const IntVector& ray) {
  auto it = std::find(s.rays.begin(), s.rays.end(), ray);
  if (it == s.rays.end()) throw Error(ErrorKind::RayNotFound, to_string(ray) + " is not a ray of the fan");
  return courant_function(s, static_cast<std::size_t>(it - s.rays.begin()));
}

}  // namespace fanpoly
