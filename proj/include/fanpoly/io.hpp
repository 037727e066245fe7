#pragma once

#include <filesystem>
#include <string>
#include <utility>

#include <json.hpp>

#include "fanpoly/chern_sr.hpp"
#include "fanpoly/cones_fans.hpp"
#include "fanpoly/mayer_vietoris.hpp"
#include "fanpoly/multifan_hypertoric.hpp"
#include "fanpoly/polynomials.hpp"
#include "fanpoly/ppring.hpp"

namespace fanpoly::io {

using json = nlohmann::json;

/// Parse errors throw Error(ParseError); unreadable files Error(FileError).
json read_json_file(const std::filesystem::path& path);

/// Accepts a JSON integer or a decimal string.
Integer integer_from_json(const json& j);
json integer_to_json(const Integer& x);  // decimal string
Rational rational_from_json(const json& j);
json rational_to_json(const Rational& x);  // "p/q" or "p"
IntVector vector_from_json(const json& j, std::size_t expected_size);
json vector_to_json(const IntVector& v);  // decimal strings
json vector_to_plain_json(const IntVector& v);  // JSON integers where they fit

/// A cone id such as "[[0,1],[1,0]]", canonicalized.
Cone cone_from_id(std::size_t rank, const std::string& id);

/// {"rank": n, "maximal_cones": [[[v11,...,v1n], ...], ...]}
Fan fan_from_json(const json& j);
json fan_to_json(const Fan& f);
Fan load_fan(const std::filesystem::path& path);

/// {"rank": n, "nodes": [{"id": s, "generators": [...]}], "covers": [[child, parent], ...]}
Multifan multifan_from_json(const json& j);
json multifan_to_json(const Multifan& m);
Multifan load_multifan(const std::filesystem::path& path);

/// [[[e1,...,er], "coeff"], ...]
Polynomial polynomial_from_json(const json& j, std::size_t nvars);
json polynomial_to_json(const Polynomial& p);
RationalPolynomial rational_polynomial_from_json(const json& j, std::size_t nvars);
json rational_polynomial_to_json(const RationalPolynomial& p);

/// {"rank": r, "multisets": {cone_id: [[u-coordinates in M], ...]}}; an
/// optional "fan" entry is ignored here.
BundleData bundle_from_json(const Fan& f, const json& j);
json bundle_to_json(const BundleData& b);

/// {"fan": <path or inline fan>, "parts": {cone_id: polynomial}}. Relative
/// paths resolve against base_dir.
std::pair<Fan, PPElement> pp_from_json(const json& j, const std::filesystem::path& base_dir = {});
json pp_to_json(const PPElement& a, const Fan& f);
/// Parts keyed by cell keys, without a fan reference (also for multifans).
json pp_parts_to_json(const PPElement& a);

json torsion_to_json(const TorsionReport& t);
TorsionReport torsion_from_json(const json& j);

}  // namespace fanpoly::io
