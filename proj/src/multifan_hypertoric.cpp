#include "fanpoly/multifan_hypertoric.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "fanpoly/error.hpp"

namespace fanpoly {

std::size_t Multifan::index_of(const std::string& id) const {
  auto it = std::find(nodes.begin(), nodes.end(), id);
  if (it == nodes.end()) throw Error(ErrorKind::InvalidInput, "unknown node " + id);
  return static_cast<std::size_t>(it - nodes.begin());
}

std::string Multifan::key() const {
  std::string k = "multifan " + std::to_string(ambient_rank) + ":";
  for (std::size_t i = 0; i < nodes.size(); ++i) k += nodes[i] + "=" + phi[i].id() + ";";
  auto sorted = covers;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [c, p] : sorted) k += std::to_string(c) + "<" + std::to_string(p) + ";";
  return k;
}

Multifan multifan_validate(std::size_t rank, const std::vector<std::string>& nodes, const std::vector<Cone>& phi,
                           const std::vector<std::pair<std::string, std::string>>& covers) {
  if (nodes.size() != phi.size()) throw Error(ErrorKind::InvalidInput, "one cone per node is required");
  Multifan m;
  m.ambient_rank = rank;
  m.nodes = nodes;
  m.phi = phi;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!seen.insert(nodes[i]).second) throw Error(ErrorKind::InvalidInput, "duplicate node id " + nodes[i]);
    if (phi[i].ambient_rank() != rank) throw Error(ErrorKind::DimensionMismatch, "cone of node " + nodes[i]);
  }
  const std::size_t n = nodes.size();
  m.below.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) m.below[i][i] = true;
  for (const auto& [child, parent] : covers) {
    std::size_t c = m.index_of(child), p = m.index_of(parent);
    if (c == p) throw Error(ErrorKind::NotAPoset, "node " + child + " covers itself");
    m.covers.emplace_back(c, p);
    m.below[c][p] = true;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (m.below[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (m.below[k][j]) m.below[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (m.below[i][j] && m.below[j][i])
        throw Error(ErrorKind::NotAPoset, "cycle through " + nodes[i] + " and " + nodes[j]);

  std::map<std::string, std::size_t> face_count;
  for (std::size_t s = 0; s < n; ++s) {
    const Cone& top = phi[s];
    auto [it, fresh] = face_count.try_emplace(top.id(), 0);
    if (fresh) it->second = faces(top).size();
    std::set<std::string> images;
    for (std::size_t t = 0; t < n; ++t) {
      if (!m.below[t][s]) continue;
      if (!is_face(phi[t], top))
        throw Error(ErrorKind::FaceBijectionFailure, nodes[s] + ": " + phi[t].id() + " (node " + nodes[t] +
                                                         ") is not a face of " + top.id());
      if (!images.insert(phi[t].id()).second)
        throw Error(ErrorKind::FaceBijectionFailure, nodes[s] + ": face " + phi[t].id() + " is hit twice");
    }
    if (images.size() != it->second)
      throw Error(ErrorKind::FaceBijectionFailure, nodes[s] + ": lower set has " + std::to_string(images.size()) +
                                                       " nodes but " + top.id() + " has " +
                                                       std::to_string(it->second) + " faces");
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool top = true;
    for (std::size_t j = 0; j < n && top; ++j) top = j == i || !m.below[i][j];
    if (top) m.maximal.push_back(i);
  }
  return m;
}

Multifan multifan_from_fan(const Fan& f) {
  std::vector<std::string> nodes;
  std::vector<Cone> phi;
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& [id, entry] : f.face_index()) {
    nodes.push_back(id);
    phi.push_back(entry.cone);
    for (const auto& tau : faces(entry.cone))
      if (tau.dim() + 1 == entry.cone.dim()) covers.emplace_back(tau.id(), id);
  }
  return multifan_validate(f.ambient_rank(), nodes, phi, covers);
}

std::shared_ptr<const PiecewiseDomain> domain_of(const Multifan& m) {
  auto d = std::make_shared<PiecewiseDomain>();
  d->ambient_rank = m.ambient_rank;
  for (std::size_t s : m.maximal) {
    d->cells.push_back(m.phi[s]);
    d->cell_keys.push_back(m.nodes[s]);
  }
  const std::size_t n = m.nodes.size();
  for (std::size_t i = 0; i < m.maximal.size(); ++i)
    for (std::size_t j = i + 1; j < m.maximal.size(); ++j) {
      std::vector<std::size_t> common;
      for (std::size_t t = 0; t < n; ++t)
        if (m.below[t][m.maximal[i]] && m.below[t][m.maximal[j]]) common.push_back(t);
      for (std::size_t t : common) {
        bool top = std::none_of(common.begin(), common.end(), [&](std::size_t u) { return u != t && m.below[t][u]; });
        if (top) d->agreements.push_back({i, j, m.phi[t]});
      }
    }
  d->key = m.key();
  return d;
}

GradedBasis mpp_basis(const Multifan& m, unsigned k) { return pp_basis(domain_of(m), k); }

namespace {

std::string subset_id(const std::vector<std::size_t>& s) {
  std::string id = "{";
  for (std::size_t i = 0; i < s.size(); ++i) id += (i ? "," : "") + std::to_string(s[i] + 1);
  return id + "}";
}

bool independent(const HypertoricInput& h, const std::vector<std::size_t>& s) {
  IntMatrix a(0, h.rank);
  for (std::size_t i : s) a.append_row(h.vectors[i]);
  return rank(a) == s.size();
}

// Independent subsets, grouped by size, each list in lexicographic order.
std::vector<std::vector<std::size_t>> independent_sets(const HypertoricInput& h) {
  for (const auto& v : h.vectors) {
    if (v.size() != h.rank) throw Error(ErrorKind::DimensionMismatch, "vector of wrong length");
    if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; }))
      throw Error(ErrorKind::ZeroVector, "hypertoric vectors must be nonzero");
  }
  std::vector<std::vector<std::size_t>> out{{}};
  std::vector<std::vector<std::size_t>> layer{{}};
  while (!layer.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& s : layer) {
      std::size_t start = s.empty() ? 0 : s.back() + 1;
      for (std::size_t e = start; e < h.vectors.size(); ++e) {
        auto t = s;
        t.push_back(e);
        if (independent(h, t)) next.push_back(std::move(t));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

Multifan hypertoric_multifan(const HypertoricInput& h) {
  std::vector<std::string> nodes;
  std::vector<Cone> phi;
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& s : independent_sets(h)) {
    std::vector<IntVector> gens;
    for (std::size_t i : s) gens.push_back(h.vectors[i]);
    nodes.push_back(subset_id(s));
    phi.push_back(Cone::from_generators(h.rank, gens));
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      auto sub = s;
      sub.erase(sub.begin() + static_cast<long>(drop));
      covers.emplace_back(subset_id(sub), nodes.back());
    }
  }
  return multifan_validate(h.rank, nodes, phi, covers);
}

StanleyReisner independence_complex(const HypertoricInput& h) {
  return stanley_reisner_of_complex(h.vectors.size(), independent_sets(h));
}

}  // namespace fanpoly
