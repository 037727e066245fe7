#include "fanpoly/mayer_vietoris.hpp"

#include "fanpoly/error.hpp"
#include "fanpoly/polynomials.hpp"

namespace fanpoly {

MVRow mv_row(const Fan& f) {
  if (f.ambient_rank() != 2) throw Error(ErrorKind::WrongRank, "Mayer-Vietoris row is implemented for rank 2 only");
  if (!is_complete(f)) throw Error(ErrorKind::NotComplete, "Mayer-Vietoris row needs a complete fan");
  MVRow row;
  row.fan = f;
  row.cone_order = f.maximal_cones();
  row.ray_order = f.rays();
  row.d = IntMatrix(row.ray_order.size(), 2 * row.cone_order.size());
  const QuotientLattice m = full_lattice(2);
  for (std::size_t r = 0; r < row.ray_order.size(); ++r) {
    const Cone& tau = row.ray_order[r];
    const FaceEntry* entry = f.find(tau);
    IntMatrix p = restriction_matrix(m, tau.lattice());  // 1 x 2
    std::size_t a = entry->maximal.at(0), b = entry->maximal.at(1);
    for (std::size_t c = 0; c < 2; ++c) {
      row.d(r, 2 * a + c) += p(0, c);
      row.d(r, 2 * b + c) -= p(0, c);
    }
  }
  return row;
}

std::vector<Integer> prime_power_factors(Integer n) {
  std::vector<Integer> out;
  for (Integer p = 2; p * p <= n; ++p) {
    Integer q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    if (q > 1) out.push_back(q);
  }
  if (n > 1) out.push_back(n);
  return out;
}

TorsionReport torsion_of_cokernel(const IntMatrix& d) {
  TorsionReport t;
  for (const auto& e : snf(d).diagonal())
    if (e != 0) t.elementary_divisors.push_back(e);
  t.free_rank = d.rows() - t.elementary_divisors.size();
  for (const auto& e : t.elementary_divisors)
    for (auto& q : prime_power_factors(e)) t.torsion_summands.push_back(q);
  t.parity_certificate = true;
  for (std::size_t c = 0; c < d.cols(); ++c) {
    Integer s = 0;
    for (std::size_t r = 0; r < d.rows(); ++r) s += d(r, c);
    if (s % 2 != 0) t.parity_certificate = false;
  }
  return t;
}

TorsionReport h3_torsion(const Fan& f) { return torsion_of_cokernel(mv_row(f).d); }

}  // namespace fanpoly
