#include <doctest.h>

#include <random>

#include "fanpoly/error.hpp"
#include "fanpoly/multifan_hypertoric.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Multifan load(const std::string& name) { return io::load_multifan(fixture(name + ".multifan.json")); }

ErrorKind kind_of(std::size_t rank, const std::vector<std::string>& nodes, const std::vector<Cone>& phi,
                  const std::vector<std::pair<std::string, std::string>>& covers) {
  try {
    multifan_validate(rank, nodes, phi, covers);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::InvalidInput;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("a fan is a multifan") {
  for (const char* name : {"p1", "p2", "diamond", "blp2", "cube"}) {
    Fan f = fixture_fan(name);
    Multifan m = multifan_from_fan(f);
    CHECK(m.maximal.size() == f.maximal_cones().size());
    CHECK(m.nodes.size() == f.face_index().size());
    for (unsigned k = 0; k <= 2; ++k) CHECK(mpp_basis(m, k).rank() == pp_basis(f, k).rank());
  }
}

TEST_CASE("the doubled cone") {
  Multifan m = load("doubled-cone");
  CHECK(m.nodes.size() == 5);
  CHECK(m.maximal.size() == 2);
  Fan single = Fan::from_maximal_cones(2, {C(2, {{1, 0}, {0, 1}})});
  std::vector<std::size_t> doubled, one;
  for (unsigned k = 0; k <= 3; ++k) {
    doubled.push_back(mpp_basis(m, k).rank());
    one.push_back(pp_basis(single, k).rank());
    // Pairs (f, g) with f - g vanishing on both axes, so divisible by xy.
    CHECK(doubled.back() == (k + 1) + (k >= 2 ? k - 1 : 0));
  }
  CHECK(doubled == std::vector<std::size_t>{1, 2, 4, 6});
  CHECK(one == std::vector<std::size_t>{1, 2, 3, 4});

  // Both cells glue along both rays.
  auto dom = domain_of(m);
  std::size_t rays = 0;
  for (const auto& a : dom->agreements)
    if (a.face.dim() == 1) ++rays;
  CHECK(rays == 2);
}

TEST_CASE("validation errors") {
  Cone zero = Cone::zero(2), x = C(2, {{1, 0}}), y = C(2, {{0, 1}}), q = C(2, {{1, 0}, {0, 1}});
  CHECK(kind_of(2, {"0", "x"}, {zero, x}, {{"0", "x"}, {"x", "0"}}) == ErrorKind::NotAPoset);
  CHECK(kind_of(2, {"0", "x"}, {zero, x}, {{"x", "x"}}) == ErrorKind::NotAPoset);
  // The quadrant node sees only one of its rays.
  CHECK(kind_of(2, {"0", "x", "A"}, {zero, x, q}, {{"0", "x"}, {"x", "A"}}) == ErrorKind::FaceBijectionFailure);
  // Two nodes below the quadrant carry the same ray.
  CHECK(kind_of(2, {"0", "x", "x2", "y", "A"}, {zero, x, x, y, q},
                {{"0", "x"}, {"0", "x2"}, {"0", "y"}, {"x", "A"}, {"x2", "A"}, {"y", "A"}}) ==
        ErrorKind::FaceBijectionFailure);
  CHECK(kind_of(2, {"0", "x"}, {zero, x}, {{"0", "z"}}) == ErrorKind::InvalidInput);
  CHECK(kind_of(2, {"0", "0"}, {zero, zero}, {}) == ErrorKind::InvalidInput);
  CHECK(kind_of(2, {"0"}, {zero, x}, {}) == ErrorKind::InvalidInput);
  CHECK(kind_of(3, {"0", "x"}, {Cone::zero(3), x}, {{"0", "x"}}) == ErrorKind::DimensionMismatch);
  CHECK_NOTHROW(multifan_validate(2, {"0", "x", "y", "A"}, {zero, x, y, q}, {{"0", "x"}, {"0", "y"}, {"x", "A"}, {"y", "A"}}));
}

TEST_CASE("hypertoric multifan of three lines") {
  HypertoricInput h{2, {V({1, 0}), V({0, 1}), V({1, 1})}};
  Multifan m = hypertoric_multifan(h);
  CHECK(m.nodes.size() == 7);
  CHECK(m.maximal.size() == 3);
  CHECK(m.index_of("{1,3}") < m.nodes.size());
  CHECK(m.phi[m.index_of("{1,3}")] == C(2, {{1, 0}, {1, 1}}));
  CHECK(m.key() == load("hypertoric-3lines").key());

  auto s = independence_complex(h);
  CHECK(s.vertex_count == 3);
  CHECK(s.minimal_nonfaces == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  std::vector<std::size_t> ranks;
  for (unsigned k = 0; k <= 3; ++k) {
    ranks.push_back(mpp_basis(m, k).rank());
    CHECK(ranks.back() == sr_hilbert(s, k));
  }
  CHECK(ranks == std::vector<std::size_t>{1, 3, 6, 9});
}

TEST_CASE("random hypertoric inputs") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> c(-2, 2), count(2, 4);
  for (int t = 0; t < 15; ++t) {
    HypertoricInput h{2, {}};
    const int n = count(rng);
    while (static_cast<int>(h.vectors.size()) < n) {
      IntVector v = V({c(rng), c(rng)});
      if (v[0] == 0 && v[1] == 0) continue;
      if (std::gcd(v[0].get_si(), v[1].get_si()) != 1) continue;
      h.vectors.push_back(v);
    }
    Multifan m = hypertoric_multifan(h);
    // Independent subsets: the empty set, every vector, and the independent pairs.
    std::size_t pairs = 0;
    for (const auto& s : subsets(h.vectors.size(), 2))
      if (rank(rows_of({h.vectors[s[0]], h.vectors[s[1]]}, 2)) == 2) ++pairs;
    CHECK(m.nodes.size() == 1 + h.vectors.size() + pairs);
    auto s = independence_complex(h);
    for (unsigned k = 0; k <= 3; ++k) CHECK(mpp_basis(m, k).rank() == sr_hilbert(s, k));
  }
  // With all pairs independent the complex is a complete graph.
  HypertoricInput four{2, {V({1, 0}), V({0, 1}), V({1, 1}), V({1, -1})}};
  auto s = independence_complex(four);
  for (unsigned k = 1; k <= 3; ++k) CHECK(sr_hilbert(s, k) == 4 + binomial(4, 2) * (k - 1));
  CHECK_THROWS_AS(hypertoric_multifan({2, {V({1, 0, 0})}}), Error);
}
