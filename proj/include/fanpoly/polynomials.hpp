#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanpoly/cones_fans.hpp"
#include "fanpoly/error.hpp"
#include "fanpoly/intlinalg.hpp"

namespace fanpoly {

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Graded lexicographic: lower total degree first; within a degree, x1 > x2 > ...
/// so x^2 precedes xy precedes y^2.
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// All exponent vectors of the given total degree in `nvars` variables, in
/// graded-lex order.
std::vector<Exponent> monomials(std::size_t nvars, unsigned degree);

/// Sparse multivariate polynomial with exact coefficients. Zero coefficients
/// are never stored.
template <class Coeff>
class BasicPolynomial {
 public:
  using Terms = std::map<Exponent, Coeff, GradedLexLess>;

  explicit BasicPolynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static BasicPolynomial constant(std::size_t nvars, const Coeff& c) {
    BasicPolynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
  }
  static BasicPolynomial variable(std::size_t nvars, std::size_t i) {
    BasicPolynomial p(nvars);
    Exponent e(nvars, 0);
    e.at(i) = 1;
    p.add_term(e, Coeff(1));
    return p;
  }
  static BasicPolynomial linear(const std::vector<Coeff>& coeffs) {
    BasicPolynomial p(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      Exponent e(coeffs.size(), 0);
      e[i] = 1;
      p.add_term(e, coeffs[i]);
    }
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Maximal total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.rbegin()->first)); }
  bool is_homogeneous(unsigned k) const {
    for (const auto& [e, c] : terms_)
      if (total_degree(e) != k) return false;
    return true;
  }

  Coeff coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff(0) : it->second;
  }

  void add_term(const Exponent& e, const Coeff& c) {
    if (e.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "exponent length differs from variable count");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasicPolynomial& operator+=(const BasicPolynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  BasicPolynomial& operator-=(const BasicPolynomial& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  BasicPolynomial scaled(const Coeff& s) const {
    BasicPolynomial p(nvars_);
    if (s == 0) return p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, c * s);
    return p;
  }
  friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
  friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
    a.check(b);
    BasicPolynomial p(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        p.add_term(e, ca * cb);
      }
    return p;
  }
  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  void check(const BasicPolynomial& o) const {
    if (o.nvars_ != nvars_) throw Error(ErrorKind::LatticeMismatch, "polynomials in different variable counts");
  }

  std::size_t nvars_;
  Terms terms_;
};

using Polynomial = BasicPolynomial<Integer>;
using RationalPolynomial = BasicPolynomial<Rational>;

template <class Coeff>
std::string BasicPolynomial<Coeff>::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // Highest degree first; x1 before x2 within a degree.
  std::vector<const typename Terms::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(),
                   [](auto a, auto b) { return total_degree(a->first) > total_degree(b->first); });
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    std::string cs = c.get_str();
    bool neg = cs.front() == '-';
    if (neg) cs.erase(0, 1);
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) s += cs;
    else if (cs == "1") s += mono;
    else s += cs + "*" + mono;
  }
  return s;
}

/// Replaces variable i by the linear form images[i] (a coefficient vector of
/// length new_nvars).
template <class Coeff>
BasicPolynomial<Coeff> substitute(const BasicPolynomial<Coeff>& f, const std::vector<std::vector<Coeff>>& images,
                                  std::size_t new_nvars) {
  if (images.size() != f.nvars()) throw Error(ErrorKind::DimensionMismatch, "substitution arity mismatch");
  std::vector<std::vector<BasicPolynomial<Coeff>>> powers(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i)
    powers[i].push_back(BasicPolynomial<Coeff>::constant(new_nvars, Coeff(1)));
  auto power = [&](std::size_t i, unsigned k) -> const BasicPolynomial<Coeff>& {
    while (powers[i].size() <= k)
      powers[i].push_back(powers[i].back() * BasicPolynomial<Coeff>::linear(images[i]));
    return powers[i][k];
  };
  BasicPolynomial<Coeff> out(new_nvars);
  for (const auto& [e, c] : f.terms()) {
    BasicPolynomial<Coeff> term = BasicPolynomial<Coeff>::constant(new_nvars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

/// Substitution images for the restriction with matrix c (column i is the
/// image of variable i).
std::vector<std::vector<Integer>> restriction_images(const IntMatrix& c);

/// Matrix of Sym^k of the linear map M_from -> M_to given by c, in the
/// graded-lex monomial bases (rows: target monomials, columns: source).
IntMatrix sym_power(const IntMatrix& c, unsigned k);

/// An element of Sym M_sigma: a polynomial in the canonical coordinates of
/// the given quotient lattice.
template <class Coeff>
struct BasicLocalPolynomial {
  std::shared_ptr<const QuotientLattice> lattice;
  BasicPolynomial<Coeff> poly;

  BasicLocalPolynomial() = default;
  BasicLocalPolynomial(std::shared_ptr<const QuotientLattice> l, BasicPolynomial<Coeff> p)
      : lattice(std::move(l)), poly(std::move(p)) {
    if (poly.nvars() != lattice->rank())
      throw Error(ErrorKind::LatticeMismatch, "polynomial variable count differs from lattice rank");
  }

  static BasicLocalPolynomial zero(std::shared_ptr<const QuotientLattice> l) {
    std::size_t r = l->rank();
    return {std::move(l), BasicPolynomial<Coeff>(r)};
  }
  static BasicLocalPolynomial constant(std::shared_ptr<const QuotientLattice> l, const Coeff& c) {
    std::size_t r = l->rank();
    return {std::move(l), BasicPolynomial<Coeff>::constant(r, c)};
  }

  int degree() const { return poly.degree(); }

  friend bool operator==(const BasicLocalPolynomial& a, const BasicLocalPolynomial& b) {
    return (a.lattice == b.lattice || *a.lattice == *b.lattice) && a.poly == b.poly;
  }
};

using LocalPolynomial = BasicLocalPolynomial<Integer>;
using RationalLocalPolynomial = BasicLocalPolynomial<Rational>;

bool same_lattice(const QuotientLattice& a, const QuotientLattice& b);

/// The image of a global character u in M_sigma, as a linear form.
LocalPolynomial character(std::shared_ptr<const QuotientLattice> lattice, const IntVector& u);

enum class PolyOp { Add, Mul, Scale };

/// Ring arithmetic in Sym M_sigma. For Scale, g must be a constant.
LocalPolynomial poly_arith(PolyOp op, const LocalPolynomial& f, const LocalPolynomial& g);
LocalPolynomial operator+(const LocalPolynomial& f, const LocalPolynomial& g);
LocalPolynomial operator-(const LocalPolynomial& f, const LocalPolynomial& g);
LocalPolynomial operator*(const LocalPolynomial& f, const LocalPolynomial& g);
LocalPolynomial scale(const LocalPolynomial& f, const Integer& s);

/// Image under Sym M_from -> Sym M_to; requires N_to ⊆ N_from.
LocalPolynomial restrict_to_lattice(const LocalPolynomial& f, std::shared_ptr<const QuotientLattice> to);
RationalLocalPolynomial restrict_to_lattice(const RationalLocalPolynomial& f, std::shared_ptr<const QuotientLattice> to);

/// f over M_sigma restricted to a face tau of sigma. Throws NotAFace,
/// LatticeMismatch.
LocalPolynomial restrict_to_face(const LocalPolynomial& f, const Cone& sigma, const Cone& tau);

/// The unique rational polynomial g over `to` whose restriction to f's
/// lattice is f. Requires N_from ⊆ N_to of equal rank.
RationalLocalPolynomial extend_to_lattice(const LocalPolynomial& f, std::shared_ptr<const QuotientLattice> to);
RationalLocalPolynomial extend_to_lattice(const RationalLocalPolynomial& f, std::shared_ptr<const QuotientLattice> to);

RationalLocalPolynomial to_rational(const LocalPolynomial& f);

struct IntegralityReport {
  std::optional<LocalPolynomial> integral;
  std::vector<std::pair<Exponent, Rational>> fractional;  // non-integral coefficients
};

/// Decides membership in Sym M_sigma (as opposed to Sym M_sigma ⊗ Q).
IntegralityReport integrality_certificate(const RationalLocalPolynomial& f);

/// e_i of a multiset of degree-one elements of Sym M_sigma.
LocalPolynomial elementary_symmetric(std::shared_ptr<const QuotientLattice> lattice,
                                     const std::vector<LocalPolynomial>& multiset, std::size_t i);

}  // namespace fanpoly
