#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "fanpoly/cones_fans.hpp"
#include "fanpoly/intlinalg.hpp"
#include "fanpoly/io.hpp"

namespace testing {

using namespace fanpoly;

inline IntVector V(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.push_back(x);
  return v;
}

inline Cone C(std::size_t n, std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<IntVector> g;
  for (auto v : gens) g.push_back(V(v));
  return Cone::from_generators(n, g);
}

inline std::string fixture(const std::string& name) { return std::string(FANPOLY_FIXTURES) + "/" + name; }

inline Fan fixture_fan(const std::string& name) { return io::load_fan(fixture(name + ".fan.json")); }

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = d(rng);
  return a;
}

// Calls f on every integer vector in [-b, b]^n.
template <class F>
void for_each_box_vector(std::size_t n, int b, F f) {
  IntVector x(n, -b);
  while (true) {
    f(x);
    std::size_t i = 0;
    while (i < n && x[i] == b) x[i++] = -b;
    if (i == n) return;
    ++x[i];
  }
}

// k-element subsets of {0..n-1}.
inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> s;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (s.size() == k) {
      out.push_back(s);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      s.push_back(i);
      self(self, i + 1);
      s.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// gcd of all k x k minors (0 if all vanish).
inline Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
  Integer g = 0;
  for (const auto& rs : subsets(a.rows(), k))
    for (const auto& cs : subsets(a.cols(), k)) {
      IntMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rs[i], cs[j]);
      Integer d = determinant(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

// Membership in the row lattice of a full-row-rank basis, decided by solving
// over Q and testing integrality of the coefficients.
inline bool in_row_lattice_by_solving(const IntMatrix& basis, const IntVector& v) {
  RatMatrix b(1, v.size());
  for (std::size_t j = 0; j < v.size(); ++j) b(0, j) = v[j];
  if (basis.rows() == 0) return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
  auto x = solve_left(to_rational(basis), b);
  if (!x) return false;
  for (std::size_t j = 0; j < x->cols(); ++j)
    if ((*x)(0, j).get_den() != 1) return false;
  return true;
}

inline IntMatrix rows_of(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

}  // namespace testing
