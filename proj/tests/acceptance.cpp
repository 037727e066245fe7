// One line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "fanpoly/chern_sr.hpp"
#include "fanpoly/cli.hpp"
#include "fanpoly/error.hpp"
#include "fanpoly/gkm.hpp"
#include "fanpoly/mayer_vietoris.hpp"
#include "fanpoly/multifan_hypertoric.hpp"
#include "support.hpp"

using namespace testing;
using json = nlohmann::json;

namespace {

// Collects the first failure of a criterion.
struct Check {
  std::string failure;
  void operator()(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
  bool ok() const { return failure.empty(); }
};

// Criterion 1: 2-torsion on the diamond, through the CLI.
void torsion_example(Check& check) {
  std::ostringstream out, err;
  auto r = cli::run({"mv-h3", fixture("diamond.fan.json"), "--json"}, out, err);
  check(r.exit_code == 0, "mv-h3 exit code " + std::to_string(r.exit_code));
  json j = json::parse(out.str());
  auto divisors = j["results"]["elementary_divisors"];
  check(std::find(divisors.begin(), divisors.end(), json("2")) != divisors.end(), "no elementary divisor 2");
  auto summands = j["results"]["torsion_summands"];
  check(std::find(summands.begin(), summands.end(), json("2")) != summands.end(), "no Z/2 summand");
  check(j["results"]["parity_certificate"] == true, "parity certificate missing");
  // The certificate itself, recomputed: every column of d has even sum.
  IntMatrix d = mv_row(fixture_fan("diamond")).d;
  for (std::size_t c = 0; c < d.cols(); ++c) {
    Integer s = 0;
    for (std::size_t i = 0; i < d.rows(); ++i) s += d(i, c);
    check(s % 2 == 0, "column " + std::to_string(c) + " of d has odd sum");
  }
}

// Criterion 2: lattice equality with the GKM description.
void gkm_equivalence(Check& check) {
  for (const char* name : {"p1", "p2", "p1xp1", "diamond", "cube", "blp2"}) {
    Fan f = fixture_fan(name);
    unsigned top = std::string(name) == "cube" ? 2 : 3;
    for (unsigned k = 0; k <= top; ++k) {
      GKMComparison c = gkm_compare(f, k);
      check(c.equal, std::string(name) + " k=" + std::to_string(k) + ": " + c.report);
      // Recheck lattice equality on canonical forms.
      IntMatrix fixed = hnf_basis(fixed_point_tuples(pp_basis(f, k)));
      check(fixed == gkm_kernel_basis(gkm_graph(f), k).basis, std::string(name) + ": HNF bases differ");
    }
  }
}

// Criterion 3: restriction to the maximal cones is injective.
void injectivity(Check& check) {
  for (const char* name : {"p1", "p2", "p1xp1", "diamond", "cube", "blp2"}) {
    Fan f = fixture_fan(name);
    for (unsigned k = 0; k <= 3; ++k) {
      GradedBasis b = pp_basis(f, k);
      IntMatrix m = fixed_point_tuples(b).transposed();
      check(rank(m) == b.rank(), std::string(name) + " k=" + std::to_string(k) + ": rank deficient");
    }
  }
}

std::size_t monomials_on_faces(const StanleyReisner& s, unsigned k) {
  std::size_t count = 0;
  for (const auto& e : monomials(s.vertex_count, k)) {
    bool ok = true;
    for (const auto& nf : s.minimal_nonfaces) {
      bool divides = true;
      for (std::size_t v : nf) divides = divides && e[v] > 0;
      ok = ok && !divides;
    }
    if (ok) ++count;
  }
  return count;
}

// Criterion 4: smooth fans match Stanley-Reisner counts.
void smooth_sr(Check& check) {
  for (const char* name : {"p1", "p2", "p1xp1", "blp2"}) {
    Fan f = fixture_fan(name);
    auto s = stanley_reisner(f);
    for (unsigned k = 0; k <= 4; ++k) {
      std::size_t pp = pp_basis(f, k).rank();
      check(sr_hilbert(s, k) == pp, std::string(name) + " k=" + std::to_string(k) + ": sr_hilbert differs");
      check(monomials_on_faces(s, k) == pp, std::string(name) + " k=" + std::to_string(k) + ": monomial count differs");
    }
  }
  std::vector<std::size_t> p2;
  for (unsigned k = 0; k <= 4; ++k) p2.push_back(pp_basis(fixture_fan("p2"), k).rank());
  check(p2 == std::vector<std::size_t>{1, 3, 6, 9, 12}, "p2 ranks are not 1 3 6 9 12");
}

// Criterion 5: Courant functions.
void courant(Check& check) {
  Fan diamond = fixture_fan("diamond");
  auto s = stanley_reisner(diamond);
  for (std::size_t j = 0; j < s.rays.size(); ++j) {
    CourantFunction c = courant_function(s, j);
    std::vector<std::size_t> incident;
    for (std::size_t i = 0; i < diamond.maximal_cones().size(); ++i) {
      const auto& g = diamond.maximal_cones()[i].generators();
      if (std::find(g.begin(), g.end(), s.rays[j]) != g.end()) incident.push_back(i);
    }
    check(c.nonintegral_cones == incident, "diamond ray " + std::to_string(j) + ": wrong non-integral cones");
  }
  auto p2 = stanley_reisner(fixture_fan("p2"));
  for (std::size_t j = 0; j < p2.rays.size(); ++j) check(courant_function(p2, j).integral(), "p2 Courant not integral");
}

// A random compatible bundle: each ray gets a multiset of values, and each
// maximal cone pairs the values of its two rays by a random bijection whose
// pairs come from integral characters with coordinates in [-3, 3].
std::optional<BundleData> random_bundle(const Fan& f, std::size_t r, std::mt19937& rng) {
  std::uniform_int_distribution<int> val(-3, 3);
  auto rays = f.rays();
  std::vector<std::vector<int>> values(rays.size());
  for (auto& v : values)
    for (std::size_t i = 0; i < r; ++i) v.push_back(val(rng));
  std::vector<std::vector<IntVector>> reps;
  for (const Cone& c : f.maximal_cones()) {
    std::size_t ray_index[2];
    for (std::size_t g = 0; g < 2; ++g) {
      std::size_t j = 0;
      while (rays[j].generators()[0] != c.generators()[g]) ++j;
      ray_index[g] = j;
    }
    RatMatrix gens = to_rational(c.generator_matrix()).transposed();
    std::vector<std::size_t> perm(r);
    for (std::size_t i = 0; i < r; ++i) perm[i] = i;
    std::vector<std::vector<IntVector>> options;
    do {
      std::vector<IntVector> us;
      for (std::size_t i = 0; i < r; ++i) {
        RatMatrix rhs(1, 2);
        rhs(0, 0) = values[ray_index[0]][i];
        rhs(0, 1) = values[ray_index[1]][perm[i]];
        auto u = solve_left(gens, rhs);
        if (!u || (*u)(0, 0).get_den() != 1 || (*u)(0, 1).get_den() != 1) break;
        IntVector x{(*u)(0, 0).get_num(), (*u)(0, 1).get_num()};
        if (abs(x[0]) > 3 || abs(x[1]) > 3) break;
        us.push_back(x);
      }
      if (us.size() == r) options.push_back(us);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (options.empty()) return std::nullopt;
    reps.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
  }
  return bundle_validate(f, r, reps);
}

// Criterion 6: Chern classes are piecewise polynomials and satisfy Whitney.
void chern_properties(Check& check) {
  std::mt19937 rng(20240917);
  std::uniform_int_distribution<std::size_t> rank_of(1, 3);
  for (const char* name : {"p2", "diamond"}) {
    Fan f = fixture_fan(name);
    int made = 0;
    while (made < 100) {
      auto b1 = random_bundle(f, rank_of(rng), rng);
      auto b2 = random_bundle(f, rank_of(rng), rng);
      if (!b1 || !b2) continue;
      ++made;
      BundleData sum = bundle_sum(*b1, *b2);
      std::vector<PPElement> c1, c2;
      for (std::size_t i = 0; i <= b1->rank; ++i) c1.push_back(chern_class(*b1, i));
      for (std::size_t i = 0; i <= b2->rank; ++i) c2.push_back(chern_class(*b2, i));
      for (const auto& c : c1) pp_validate(f, c.parts);
      for (const auto& c : c2) pp_validate(f, c.parts);
      for (std::size_t i = 0; i <= sum.rank; ++i) {
        PPElement lhs = chern_class(sum, i);
        pp_validate(f, lhs.parts);
        PPElement rhs = pp_constant(lhs.domain, 0);
        for (std::size_t p = 0; p <= i; ++p)
          if (p <= b1->rank && i - p <= b2->rank) rhs = pp_add(rhs, pp_mul(c1[p], c2[i - p]));
        check(lhs == rhs, std::string(name) + ": Whitney fails for c_" + std::to_string(i));
      }
    }
  }
}

// Criterion 7: pullback along p2 <- blp2.
void pullback(Check& check) {
  Fan p2 = fixture_fan("p2");
  SubdivisionMap m = star_subdivision(p2, C(2, {{1, 0}, {0, 1}}));
  check(m.source == fixture_fan("blp2"), "subdivision is not blp2");
  for (unsigned k = 0; k <= 3; ++k) {
    GradedBasis b = pp_basis(p2, k);
    IntMatrix images(0, pp_constraint_matrix(*domain_of(m.source), k).cols());
    for (const auto& e : b.elements) {
      PPElement up = pp_pullback(m, e);
      PullbackCheck back = pp_is_pullback(m, up);
      check(back.element && *back.element == e, "round trip fails in degree " + std::to_string(k));
      images.append_row(pp_coordinates(up, k));
    }
    check(rank(images) == b.rank(), "pullback not injective in degree " + std::to_string(k));
  }
  auto [f, kink] = io::pp_from_json(io::read_json_file(fixture("blp2-kink.pp.json")), FANPOLY_FIXTURES);
  PullbackCheck r = pp_is_pullback(m, kink);
  check(!r.element, "kink accepted");
  check(r.condition == PullbackCondition::SubconesDisagree, "kink rejected for the wrong reason");
  check(r.report.find("condition (i)") != std::string::npos, "report does not name condition (i)");
}

// Criterion 8: multifans.
void multifans(Check& check) {
  HypertoricInput h{2, {V({1, 0}), V({0, 1}), V({1, 1})}};
  Multifan m = hypertoric_multifan(h);
  check(m.nodes.size() == 7, "hypertoric multifan has " + std::to_string(m.nodes.size()) + " nodes");
  auto s = independence_complex(h);
  for (unsigned k = 0; k <= 3; ++k)
    check(mpp_basis(m, k).rank() == sr_hilbert(s, k), "hypertoric rank differs in degree " + std::to_string(k));
  Multifan doubled = io::load_multifan(fixture("doubled-cone.multifan.json"));
  Fan single = Fan::from_maximal_cones(2, {C(2, {{1, 0}, {0, 1}})});
  bool differs = false;
  for (unsigned k = 0; k <= 3; ++k) differs = differs || mpp_basis(doubled, k).rank() != pp_basis(single, k).rank();
  check(differs, "doubled cone has the ranks of a single cone");
}

// Criterion 9: exact lattice algorithms on random matrices.
void exactness(Check& check) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> dim(1, 4), small(1, 3);
  for (int t = 0; t < 200; ++t) {
    IntMatrix a = random_matrix(rng, dim(rng), dim(rng), -9, 9);
    SNFResult s = snf(a);
    check(s.U * a * s.V == s.S, "U A V != S");
    check(abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1, "SNF transforms not unimodular");
    auto d = s.diagonal();
    Integer prod = 1;
    for (std::size_t k = 1; k <= d.size(); ++k) {
      if (k < d.size() && d[k - 1] != 0) check(d[k] % d[k - 1] == 0, "divisibility chain broken");
      prod *= d[k - 1];
      check(prod == determinantal_divisor(a, k), "SNF disagrees with determinantal divisors");
    }

    HNFResult h = hnf(a);
    check(h.U * a == h.H, "U A != H");
    // Random combinations of the rows together with the rows themselves
    // generate the same lattice.
    IntMatrix mixed = random_matrix(rng, a.rows(), a.rows(), -2, 2) * a;
    for (std::size_t i = 0; i < a.rows(); ++i) mixed.append_row(a.row(i));
    check(hnf_basis(mixed) == hnf_basis(a), "HNF not canonical");

    IntMatrix b = random_matrix(rng, small(rng), small(rng) + 1, -3, 3);
    IntMatrix k = kernel_lattice(b);
    check(k.rows() + rank(b) == b.cols(), "kernel rank");
    for_each_box_vector(b.cols(), 4, [&](const IntVector& x) {
      if (b.apply(x) == IntVector(b.rows())) check(lattice_contains(k, x), "kernel vector missed");
    });
    for (std::size_t i = 0; i < k.rows(); ++i) check(b.apply(k.row_span(i)) == IntVector(b.rows()), "not in kernel");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
    double limit_seconds;
  };
  std::vector<Criterion> criteria = {
      {"torsion example on the diamond", torsion_example, 1.0},
      {"GKM lattice equality", gkm_equivalence, 60.0},
      {"injectivity of restriction to maximal cones", injectivity, 0},
      {"smooth fans match Stanley-Reisner counts", smooth_sr, 0},
      {"Courant integrality", courant, 0},
      {"Chern classes and Whitney formula", chern_properties, 0},
      {"pullback round trip along p2 <- blp2", pullback, 0},
      {"multifan and hypertoric ranks", multifans, 0},
      {"exact SNF/HNF/kernel invariants", exactness, 0},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criteria[i].limit_seconds > 0)
      check(secs < criteria[i].limit_seconds, "took " + std::to_string(secs) + " s");
    all = all && check.ok();
    std::cout << "criterion " << i + 1 << " (" << criteria[i].name << "): " << (check.ok() ? "PASS" : "FAIL");
    std::cout << " [" << std::fixed;
    std::cout.precision(3);
    std::cout << secs << " s]";
    if (!check.ok()) std::cout << ": " << check.failure;
    std::cout << '\n';
  }
  return all ? 0 : 1;
}
