#include "fanpoly/io.hpp"

#include <fstream>
#include <map>

#include "fanpoly/error.hpp"

namespace fanpoly::io {

namespace {

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorKind::ParseError, msg); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t rank_field(const json& j) {
  const json& r = field(j, "rank");
  if (!r.is_number_unsigned()) parse_fail("\"rank\" must be a nonnegative integer");
  return r.get<std::size_t>();
}

std::vector<IntVector> vectors_from_json(const json& j, std::size_t n) {
  if (!j.is_array()) parse_fail("expected a list of vectors");
  std::vector<IntVector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v, n));
  return out;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FileError, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    parse_fail(path.string() + ": " + e.what());
  }
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(std::to_string(j.get<unsigned long long>()))
                                                           : Integer(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) parse_fail("not an integer: \"" + j.get<std::string>() + "\"");
    return x;
  }
  parse_fail("expected an integer, got " + j.dump());
}

json integer_to_json(const Integer& x) { return x.get_str(); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (!j.is_string()) parse_fail("expected a rational, got " + j.dump());
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) parse_fail("not a rational: " + j.dump());
  q.canonicalize();
  return q;
}

json rational_to_json(const Rational& x) { return x.get_str(); }

IntVector vector_from_json(const json& j, std::size_t expected_size) {
  if (!j.is_array()) parse_fail("expected a vector, got " + j.dump());
  if (j.size() != expected_size)
    throw Error(ErrorKind::DimensionMismatch, "vector " + j.dump() + " should have length " + std::to_string(expected_size));
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

json vector_to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer_to_json(x));
  return a;
}

json vector_to_plain_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) a.push_back(x.get_si());
    else a.push_back(x.get_str());
  }
  return a;
}

Cone cone_from_id(std::size_t rank, const std::string& id) {
  json j;
  try {
    j = json::parse(id);
  } catch (const json::parse_error&) {
    parse_fail("bad cone id \"" + id + "\"");
  }
  return Cone::from_generators(rank, vectors_from_json(j, rank));
}

Fan fan_from_json(const json& j) {
  const std::size_t n = rank_field(j);
  const json& cones = field(j, "maximal_cones");
  if (!cones.is_array()) parse_fail("\"maximal_cones\" must be a list");
  std::vector<Cone> out;
  for (const auto& c : cones) out.push_back(Cone::from_generators(n, vectors_from_json(c, n)));
  return Fan::from_maximal_cones(n, std::move(out));
}

json fan_to_json(const Fan& f) {
  json cones = json::array();
  for (const auto& c : f.maximal_cones()) {
    json gens = json::array();
    for (const auto& g : c.generators()) gens.push_back(vector_to_plain_json(g));
    cones.push_back(gens);
  }
  return {{"rank", f.ambient_rank()}, {"maximal_cones", cones}};
}

Fan load_fan(const std::filesystem::path& path) { return fan_from_json(read_json_file(path)); }

Multifan multifan_from_json(const json& j) {
  const std::size_t n = rank_field(j);
  std::vector<std::string> ids;
  std::vector<Cone> phi;
  const json& nodes = field(j, "nodes");
  if (!nodes.is_array()) parse_fail("\"nodes\" must be a list");
  for (const auto& node : nodes) {
    const json& id = field(node, "id");
    if (!id.is_string()) parse_fail("node ids must be strings");
    ids.push_back(id.get<std::string>());
    phi.push_back(Cone::from_generators(n, vectors_from_json(field(node, "generators"), n)));
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers")) {
    for (const auto& c : j.at("covers")) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
        parse_fail("covers are [child, parent] pairs of node ids");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  return multifan_validate(n, ids, phi, covers);
}

json multifan_to_json(const Multifan& m) {
  json nodes = json::array();
  for (std::size_t i = 0; i < m.nodes.size(); ++i) {
    json gens = json::array();
    for (const auto& g : m.phi[i].generators()) gens.push_back(vector_to_plain_json(g));
    nodes.push_back({{"id", m.nodes[i]}, {"generators", gens}});
  }
  json covers = json::array();
  for (const auto& [c, p] : m.covers) covers.push_back({m.nodes[c], m.nodes[p]});
  return {{"rank", m.ambient_rank}, {"nodes", nodes}, {"covers", covers}};
}

Multifan load_multifan(const std::filesystem::path& path) { return multifan_from_json(read_json_file(path)); }

namespace {

template <class Coeff, class Read>
BasicPolynomial<Coeff> poly_from_json(const json& j, std::size_t nvars, Read read) {
  if (!j.is_array()) parse_fail("a polynomial is a list of [exponents, coefficient] pairs");
  BasicPolynomial<Coeff> p(nvars);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_array()) parse_fail("bad term " + term.dump());
    if (term[0].size() != nvars)
      throw Error(ErrorKind::DimensionMismatch, "exponent " + term[0].dump() + " should have length " + std::to_string(nvars));
    Exponent e;
    for (const auto& x : term[0]) {
      if (!x.is_number_unsigned()) parse_fail("exponents must be nonnegative integers");
      e.push_back(x.get<unsigned>());
    }
    p.add_term(e, read(term[1]));
  }
  return p;
}

template <class Coeff, class Write>
json poly_to_json(const BasicPolynomial<Coeff>& p, Write write) {
  json a = json::array();
  for (const auto& [e, c] : p.terms()) a.push_back({e, write(c)});
  return a;
}

}  // namespace

Polynomial polynomial_from_json(const json& j, std::size_t nvars) {
  return poly_from_json<Integer>(j, nvars, integer_from_json);
}
json polynomial_to_json(const Polynomial& p) { return poly_to_json(p, integer_to_json); }
RationalPolynomial rational_polynomial_from_json(const json& j, std::size_t nvars) {
  return poly_from_json<Rational>(j, nvars, rational_from_json);
}
json rational_polynomial_to_json(const RationalPolynomial& p) { return poly_to_json(p, rational_to_json); }

BundleData bundle_from_json(const Fan& f, const json& j) {
  const std::size_t rank = rank_field(j);
  const json& ms = field(j, "multisets");
  if (!ms.is_object()) parse_fail("\"multisets\" must map cone ids to lists of characters");
  std::map<std::string, std::vector<IntVector>> reps;
  for (const auto& [key, val] : ms.items()) {
    std::string id = cone_from_id(f.ambient_rank(), key).id();
    if (!reps.emplace(id, vectors_from_json(val, f.ambient_rank())).second) parse_fail("cone " + id + " listed twice");
  }
  return bundle_validate(f, rank, reps);
}

json bundle_to_json(const BundleData& b) {
  json ms = json::object();
  const auto& cones = b.fan.maximal_cones();
  for (std::size_t i = 0; i < cones.size(); ++i) {
    json list = json::array();
    for (const auto& u : b.representatives[i]) list.push_back(vector_to_plain_json(u));
    ms[cones[i].id()] = list;
  }
  return {{"rank", b.rank}, {"multisets", ms}};
}

std::pair<Fan, PPElement> pp_from_json(const json& j, const std::filesystem::path& base_dir) {
  const json& fj = field(j, "fan");
  Fan f;
  if (fj.is_string()) {
    std::filesystem::path p = fj.get<std::string>();
    f = load_fan(p.is_relative() ? base_dir / p : p);
  } else {
    f = fan_from_json(fj);
  }
  auto domain = domain_of(f);
  const json& parts = field(j, "parts");
  if (!parts.is_object()) parse_fail("\"parts\" must map cone ids to polynomials");
  std::map<std::string, Polynomial> given;
  for (const auto& [key, val] : parts.items()) {
    Cone c = cone_from_id(f.ambient_rank(), key);
    given.insert_or_assign(c.id(), polynomial_from_json(val, c.dim()));
  }
  std::vector<LocalPolynomial> local;
  for (const auto& c : f.maximal_cones()) {
    auto it = given.find(c.id());
    if (it == given.end()) throw Error(ErrorKind::InvalidInput, "no part given for " + c.id());
    local.emplace_back(c.lattice_ptr(), it->second);
  }
  if (given.size() != local.size()) throw Error(ErrorKind::InvalidInput, "part given for a non-maximal cone");
  return {f, pp_validate(domain, std::move(local))};
}

json pp_parts_to_json(const PPElement& a) {
  json parts = json::object();
  for (std::size_t i = 0; i < a.parts.size(); ++i) parts[a.domain->cell_keys[i]] = polynomial_to_json(a.parts[i].poly);
  return parts;
}

json pp_to_json(const PPElement& a, const Fan& f) {
  if (a.domain->key != f.key()) throw Error(ErrorKind::FanMismatch, "element lives on another fan");
  return {{"fan", fan_to_json(f)}, {"parts", pp_parts_to_json(a)}};
}

json torsion_to_json(const TorsionReport& t) {
  json d = json::array(), s = json::array();
  for (const auto& x : t.elementary_divisors) d.push_back(integer_to_json(x));
  for (const auto& x : t.torsion_summands) s.push_back(integer_to_json(x));
  return {{"elementary_divisors", d},
          {"free_rank", std::to_string(t.free_rank)},
          {"torsion_summands", s},
          {"parity_certificate", t.parity_certificate}};
}

TorsionReport torsion_from_json(const json& j) {
  TorsionReport t;
  for (const auto& x : field(j, "elementary_divisors")) t.elementary_divisors.push_back(integer_from_json(x));
  t.free_rank = integer_from_json(field(j, "free_rank")).get_ui();
  for (const auto& x : field(j, "torsion_summands")) t.torsion_summands.push_back(integer_from_json(x));
  t.parity_certificate = field(j, "parity_certificate").get<bool>();
  return t;
}

}  // namespace fanpoly::io
