#pragma once

#include <cstddef>
#include <vector>

#include "fanpoly/cones_fans.hpp"
#include "fanpoly/intlinalg.hpp"

namespace fanpoly {

/// The degree-two row for a complete surface fan: d maps one copy of
/// Sym^1 M = Z^2 per maximal cone to one copy of Sym^1 M_tau = Z per ray.
struct MVRow {
  Fan fan;
  std::vector<Cone> cone_order;
  std::vector<Cone> ray_order;
  IntMatrix d;
};

/// Throws WrongRank, NotComplete.
MVRow mv_row(const Fan& f);

struct TorsionReport {
  std::vector<Integer> elementary_divisors;  // nonzero diagonal of the SNF of d
  std::size_t free_rank = 0;                 // rank of coker d modulo torsion
  std::vector<Integer> torsion_summands;     // prime powers
  bool parity_certificate = false;           // (1,...,1) d = 0 mod 2
};

TorsionReport h3_torsion(const Fan& f);
TorsionReport torsion_of_cokernel(const IntMatrix& d);

/// Prime-power decomposition of Z/n, in increasing prime order.
std::vector<Integer> prime_power_factors(Integer n);

}  // namespace fanpoly
