#include "fanpoly/polynomials.hpp"

#include <algorithm>
#include <numeric>

namespace fanpoly {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  // Larger exponent in an earlier variable sorts first.
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Exponent> monomials(std::size_t nvars, unsigned degree) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent e(nvars, 0);
  // Enumerate compositions with the first variable's exponent descending.
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<std::vector<Integer>> restriction_images(const IntMatrix& c) {
  std::vector<std::vector<Integer>> images(c.cols());
  for (std::size_t i = 0; i < c.cols(); ++i) images[i] = c.column(i);
  return images;
}

IntMatrix sym_power(const IntMatrix& c, unsigned k) {
  const auto src = monomials(c.cols(), k);
  const auto dst = monomials(c.rows(), k);
  std::map<Exponent, std::size_t> row_of;
  for (std::size_t i = 0; i < dst.size(); ++i) row_of.emplace(dst[i], i);
  const auto images = restriction_images(c);
  IntMatrix out(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    Polynomial m(c.cols());
    m.add_term(src[j], 1);
    const Polynomial image = substitute(m, images, c.rows());
    for (const auto& [e, coef] : image.terms()) out(row_of.at(e), j) = coef;
  }
  return out;
}

bool same_lattice(const QuotientLattice& a, const QuotientLattice& b) { return a == b; }

namespace {

void require_same(const std::shared_ptr<const QuotientLattice>& a, const std::shared_ptr<const QuotientLattice>& b) {
  if (a != b && !(*a == *b)) throw Error(ErrorKind::LatticeMismatch, "polynomials live on different lattices");
}

template <class Coeff>
BasicLocalPolynomial<Coeff> restrict_impl(const BasicLocalPolynomial<Coeff>& f,
                                          std::shared_ptr<const QuotientLattice> to) {
  IntMatrix c = restriction_matrix(*f.lattice, *to);
  std::vector<std::vector<Coeff>> images(c.cols());
  for (std::size_t i = 0; i < c.cols(); ++i)
    for (std::size_t j = 0; j < c.rows(); ++j) images[i].push_back(Coeff(c(j, i)));
  std::size_t r = to->rank();
  return {std::move(to), substitute(f.poly, images, r)};
}

template <class Coeff>
RationalLocalPolynomial extend_impl(const BasicLocalPolynomial<Coeff>& f, std::shared_ptr<const QuotientLattice> to) {
  // Restriction substitutes x = C^T y, so the extension substitutes
  // y = (C^T)^{-1} x.
  IntMatrix c = restriction_matrix(*to, *f.lattice);
  auto d = inverse(to_rational(c).transposed());
  if (!d) throw Error(ErrorKind::LatticeMismatch, "extension needs lattices of equal rank");
  std::vector<std::vector<Rational>> images(d->rows());
  for (std::size_t j = 0; j < d->rows(); ++j) images[j] = d->row(j);
  RationalPolynomial src(f.poly.nvars());
  for (const auto& [e, coef] : f.poly.terms()) src.add_term(e, Rational(coef));
  std::size_t r = to->rank();
  return {std::move(to), substitute(src, images, r)};
}

}  // namespace

LocalPolynomial character(std::shared_ptr<const QuotientLattice> lattice, const IntVector& u) {
  IntVector coords = lattice->project(u);
  return {std::move(lattice), Polynomial::linear(coords)};
}

LocalPolynomial poly_arith(PolyOp op, const LocalPolynomial& f, const LocalPolynomial& g) {
  switch (op) {
    case PolyOp::Add:
      require_same(f.lattice, g.lattice);
      return {f.lattice, f.poly + g.poly};
    case PolyOp::Mul:
      require_same(f.lattice, g.lattice);
      return {f.lattice, f.poly * g.poly};
    case PolyOp::Scale: {
      if (g.poly.degree() > 0) throw Error(ErrorKind::InvalidInput, "scale factor must be a constant");
      Integer s = g.poly.coefficient(Exponent(g.poly.nvars(), 0));
      return {f.lattice, f.poly.scaled(s)};
    }
  }
  return f;
}

LocalPolynomial operator+(const LocalPolynomial& f, const LocalPolynomial& g) { return poly_arith(PolyOp::Add, f, g); }
LocalPolynomial operator-(const LocalPolynomial& f, const LocalPolynomial& g) {
  require_same(f.lattice, g.lattice);
  return {f.lattice, f.poly - g.poly};
}
LocalPolynomial operator*(const LocalPolynomial& f, const LocalPolynomial& g) { return poly_arith(PolyOp::Mul, f, g); }
LocalPolynomial scale(const LocalPolynomial& f, const Integer& s) { return {f.lattice, f.poly.scaled(s)}; }

LocalPolynomial restrict_to_lattice(const LocalPolynomial& f, std::shared_ptr<const QuotientLattice> to) {
  return restrict_impl(f, std::move(to));
}

RationalLocalPolynomial restrict_to_lattice(const RationalLocalPolynomial& f,
                                            std::shared_ptr<const QuotientLattice> to) {
  return restrict_impl(f, std::move(to));
}

LocalPolynomial restrict_to_face(const LocalPolynomial& f, const Cone& sigma, const Cone& tau) {
  require_same(f.lattice, sigma.lattice_ptr());
  if (!is_face(tau, sigma)) throw Error(ErrorKind::NotAFace, tau.id() + " is not a face of " + sigma.id());
  return restrict_impl(f, tau.lattice_ptr());
}

RationalLocalPolynomial extend_to_lattice(const LocalPolynomial& f, std::shared_ptr<const QuotientLattice> to) {
  return extend_impl(f, std::move(to));
}

RationalLocalPolynomial extend_to_lattice(const RationalLocalPolynomial& f,
                                          std::shared_ptr<const QuotientLattice> to) {
  return extend_impl(f, std::move(to));
}

RationalLocalPolynomial to_rational(const LocalPolynomial& f) {
  RationalPolynomial p(f.poly.nvars());
  for (const auto& [e, c] : f.poly.terms()) p.add_term(e, Rational(c));
  return {f.lattice, std::move(p)};
}

IntegralityReport integrality_certificate(const RationalLocalPolynomial& f) {
  IntegralityReport report;
  Polynomial p(f.poly.nvars());
  for (const auto& [e, c] : f.poly.terms()) {
    if (c.get_den() != 1) report.fractional.emplace_back(e, c);
    else p.add_term(e, c.get_num());
  }
  if (report.fractional.empty()) report.integral = LocalPolynomial(f.lattice, std::move(p));
  return report;
}

LocalPolynomial elementary_symmetric(std::shared_ptr<const QuotientLattice> lattice,
                                     const std::vector<LocalPolynomial>& multiset, std::size_t i) {
  if (i > multiset.size())
    throw Error(ErrorKind::IndexOutOfRange,
                "e_" + std::to_string(i) + " of a multiset of size " + std::to_string(multiset.size()));
  const std::size_t r = lattice->rank();
  // e[k] after processing a prefix = e_k of that prefix; fold in (1 + t u).
  std::vector<Polynomial> e(i + 1, Polynomial(r));
  e[0] = Polynomial::constant(r, 1);
  for (const auto& u : multiset) {
    require_same(lattice, u.lattice);
    for (std::size_t k = i; k >= 1; --k) e[k] += e[k - 1] * u.poly;
  }
  return {std::move(lattice), std::move(e[i])};
}

}  // namespace fanpoly
