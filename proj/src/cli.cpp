#include "fanpoly/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fanpoly/chern_sr.hpp"
#include "fanpoly/error.hpp"
#include "fanpoly/gkm.hpp"
#include "fanpoly/io.hpp"
#include "fanpoly/mayer_vietoris.hpp"
#include "fanpoly/multifan_hypertoric.hpp"
#include "fanpoly/ppring.hpp"

namespace fanpoly::cli {

namespace {

namespace fs = std::filesystem;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  bool json_output = false;
  std::optional<unsigned> max_degree;
  std::optional<unsigned> degree;
  std::vector<std::string> files;
  std::string cone;
  std::string point;
  std::string ray;
  std::string vectors;
  std::string output;
  std::optional<std::size_t> index;
  std::optional<std::size_t> rank;
  bool show_basis = false;
};

std::string str(std::size_t x) { return std::to_string(x); }

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      os << r[c];
      if (c + 1 < r.size()) os << std::string(width[c] - r[c].size() + 2, ' ');
    }
    os << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& r : rows) line(r);
  return os.str();
}

std::vector<unsigned> degrees(const Options& o) {
  if (o.degree) return {*o.degree};
  std::vector<unsigned> ks;
  for (unsigned k = 0; k <= o.max_degree.value_or(default_max_degree()); ++k) ks.push_back(k);
  return ks;
}

const std::string& file(const Options& o, std::size_t i, const char* what) {
  if (o.files.size() <= i) throw UsageError(std::string("missing ") + what);
  return o.files[i];
}

std::vector<IntVector> vector_arg(const std::string& text, std::size_t rank, const char* what) {
  std::vector<IntVector> v;
  try {
    v = parse_vector_list(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
  for (const auto& x : v)
    if (x.size() != rank) throw UsageError(std::string(what) + ": vectors must have length " + str(rank));
  return v;
}

// Each verb fills report.results and returns its text rendering.
using Handler = std::function<std::string(const Options&, RunReport&)>;

std::string do_validate(const Options& o, RunReport& r) {
  const std::string& path = file(o, 0, "input file");
  r.inputs["file"] = path;
  json j = io::read_json_file(path);
  std::ostringstream os;
  if (j.contains("nodes")) {
    Multifan m = io::multifan_from_json(j);
    r.results = {{"kind", "multifan"},
                 {"nodes", str(m.nodes.size())},
                 {"maximal_nodes", str(m.maximal.size())},
                 {"multifan", io::multifan_to_json(m)}};
    os << "valid multifan: " << m.nodes.size() << " nodes, " << m.maximal.size() << " maximal\n";
  } else if (j.contains("parts")) {
    auto [f, a] = io::pp_from_json(j, fs::path(path).parent_path());
    r.results = {{"kind", "pp_element"}, {"degree", std::to_string(a.degree())}, {"element", io::pp_to_json(a, f)}};
    os << "valid piecewise polynomial of degree " << a.degree() << '\n';
  } else if (j.contains("multisets")) {
    if (!j.contains("fan")) throw UsageError("bundle files need a \"fan\" entry");
    Fan f = j["fan"].is_string() ? io::load_fan(fs::path(path).parent_path() / j["fan"].get<std::string>())
                                 : io::fan_from_json(j["fan"]);
    BundleData b = io::bundle_from_json(f, j);
    r.results = {{"kind", "bundle"}, {"rank", str(b.rank)}, {"bundle", io::bundle_to_json(b)}};
    os << "valid rank " << b.rank << " bundle data\n";
  } else {
    Fan f = io::fan_from_json(j);
    r.results = {{"kind", "fan"},
                 {"rank", str(f.ambient_rank())},
                 {"maximal_cones", str(f.maximal_cones().size())},
                 {"rays", str(f.rays().size())},
                 {"complete", is_complete(f)},
                 {"simplicial", f.is_simplicial()},
                 {"smooth", f.is_smooth()},
                 {"fan", io::fan_to_json(f)}};
    os << table({"rank", "maximal cones", "rays", "complete", "simplicial", "smooth"},
                {{str(f.ambient_rank()), str(f.maximal_cones().size()), str(f.rays().size()),
                  is_complete(f) ? "yes" : "no", f.is_simplicial() ? "yes" : "no", f.is_smooth() ? "yes" : "no"}});
  }
  return os.str();
}

std::string do_pp_basis(const Options& o, RunReport& r) {
  const std::string& path = file(o, 0, "fan file");
  r.inputs["file"] = path;
  Fan f = io::load_fan(path);
  json rows = json::array();
  std::vector<std::vector<std::string>> text;
  for (unsigned k : degrees(o)) {
    GradedBasis b = pp_basis(f, k);
    json row = {{"degree", str(k)}, {"rank", str(b.rank())}};
    if (o.show_basis) {
      json els = json::array();
      for (const auto& e : b.elements) els.push_back(io::pp_parts_to_json(e));
      row["basis"] = els;
    }
    rows.push_back(row);
    text.push_back({str(k), str(b.rank())});
  }
  r.results["degrees"] = rows;
  return table({"degree", "rank"}, text);
}

std::string do_gkm_check(const Options& o, RunReport& r) {
  const std::string& path = file(o, 0, "fan file");
  r.inputs["file"] = path;
  Fan f = io::load_fan(path);
  json rows = json::array();
  std::vector<std::vector<std::string>> text;
  for (unsigned k : degrees(o)) {
    GKMComparison c = gkm_compare(f, k);
    rows.push_back({{"degree", str(k)}, {"pp_rank", str(c.pp_rank)}, {"gkm_rank", str(c.gkm_rank)}, {"equal", c.equal}});
    text.push_back({str(k), str(c.pp_rank), str(c.gkm_rank), c.equal ? "yes" : "no"});
    if (!c.equal) r.exit_code = CheckFailed;
  }
  r.results["degrees"] = rows;
  r.results["pass"] = r.exit_code == Ok;
  return table({"degree", "pp_rank", "gkm_rank", "equal"}, text);
}

std::string do_chern(const Options& o, RunReport& r) {
  // Either "fan bundle", or a single bundle file with its own "fan" entry.
  const std::string& bundle_path = file(o, o.files.size() == 1 ? 0 : 1, "bundle file");
  r.inputs["bundle"] = bundle_path;
  json bj = io::read_json_file(bundle_path);
  Fan f;
  if (o.files.size() > 1) {
    r.inputs["fan"] = o.files[0];
    f = io::load_fan(o.files[0]);
  } else if (bj.contains("fan") && bj["fan"].is_string()) {
    f = io::load_fan(fs::path(bundle_path).parent_path() / bj["fan"].get<std::string>());
  } else if (bj.contains("fan")) {
    f = io::fan_from_json(bj["fan"]);
  } else {
    throw UsageError("missing fan file");
  }
  BundleData b = io::bundle_from_json(f, bj);
  std::vector<std::size_t> which;
  if (o.index) which.push_back(*o.index);
  else
    for (std::size_t i = 0; i <= b.rank; ++i) which.push_back(i);
  json classes = json::array();
  std::ostringstream os;
  for (std::size_t i : which) {
    PPElement c = chern_class(b, i);
    classes.push_back({{"index", str(i)}, {"parts", io::pp_parts_to_json(c)}});
    os << "c_" << i << ":\n";
    for (std::size_t s = 0; s < c.parts.size(); ++s)
      os << "  " << c.domain->cell_keys[s] << "  " << c.parts[s].poly.str() << '\n';
  }
  r.results["rank"] = str(b.rank);
  r.results["classes"] = classes;
  return os.str();
}

std::string do_courant(const Options& o, RunReport& r) {
  const std::string& path = file(o, 0, "fan file");
  r.inputs["file"] = path;
  Fan f = io::load_fan(path);
  StanleyReisner s = stanley_reisner(f);
  std::vector<std::size_t> which;
  if (!o.ray.empty()) {
    r.inputs["ray"] = o.ray;
    auto v = vector_arg(o.ray, f.ambient_rank(), "--ray");
    if (v.size() != 1) throw UsageError("--ray takes one vector");
    auto it = std::find(s.rays.begin(), s.rays.end(), v[0]);
    if (it == s.rays.end()) throw Error(ErrorKind::RayNotFound, to_string(v[0]) + " is not a ray of the fan");
    which.push_back(static_cast<std::size_t>(it - s.rays.begin()));
  } else {
    for (std::size_t j = 0; j < s.rays.size(); ++j) which.push_back(j);
  }
  const auto& cones = f.maximal_cones();
  json fns = json::array();
  std::vector<std::vector<std::string>> text;
  for (std::size_t j : which) {
    CourantFunction c = courant_function(s, j);
    json parts = json::object(), bad = json::array();
    std::string bad_text;
    for (std::size_t i = 0; i < cones.size(); ++i) parts[cones[i].id()] = io::rational_polynomial_to_json(c.parts[i].poly);
    for (std::size_t i : c.nonintegral_cones) {
      bad.push_back(cones[i].id());
      bad_text += (bad_text.empty() ? "" : " ") + cones[i].id();
    }
    fns.push_back({{"ray", io::vector_to_plain_json(s.rays[j])}, {"integral", c.integral()}, {"nonintegral_cones", bad},
                   {"parts", parts}});
    text.push_back({to_string(s.rays[j]), c.integral() ? "yes" : "no", bad_text.empty() ? "-" : bad_text});
  }
  r.results["functions"] = fns;
  return table({"ray", "integral", "non-integral on"}, text);
}

std::string do_sr_hilbert(const Options& o, RunReport& r) {
  const std::string& path = file(o, 0, "fan file");
  r.inputs["file"] = path;
  Fan f = io::load_fan(path);
  StanleyReisner s = stanley_reisner(f);
  json rows = json::array(), nonfaces = json::array();
  std::vector<std::vector<std::string>> text;
  for (unsigned k : degrees(o)) {
    Integer h = sr_hilbert(s, k);
    rows.push_back({{"degree", str(k)}, {"count", io::integer_to_json(h)}});
    text.push_back({str(k), h.get_str()});
  }
  for (const auto& nf : s.minimal_nonfaces) {
    json rays = json::array();
    for (auto v : nf) rays.push_back(io::vector_to_plain_json(s.rays[v]));
    nonfaces.push_back(rays);
  }
  r.results["degrees"] = rows;
  r.results["minimal_nonfaces"] = nonfaces;
  return table({"degree", "count"}, text);
}

std::string do_mv_h3(const Options& o, RunReport& r) {
  const std::string& path = file(o, 0, "fan file");
  r.inputs["file"] = path;
  Fan f = io::load_fan(path);
  MVRow row = mv_row(f);
  TorsionReport t = torsion_of_cokernel(row.d);
  r.results = io::torsion_to_json(t);
  json d = json::array();
  for (std::size_t i = 0; i < row.d.rows(); ++i) d.push_back(io::vector_to_json(row.d.row(i)));
  r.results["d"] = d;
  r.results["shape"] = {str(row.d.rows()), str(row.d.cols())};
  std::ostringstream os;
  os << "d: Z^" << row.d.cols() << " -> Z^" << row.d.rows() << '\n';
  std::string divs, tors;
  for (const auto& e : t.elementary_divisors) divs += (divs.empty() ? "" : " ") + e.get_str();
  for (const auto& e : t.torsion_summands) tors += (tors.empty() ? "" : " ") + e.get_str();
  os << table({"elementary divisors", "free rank", "torsion", "parity"},
              {{divs.empty() ? "-" : divs, str(t.free_rank), tors.empty() ? "none" : tors,
                t.parity_certificate ? "even" : "odd"}});
  return os.str();
}

SubdivisionMap subdivision_from(const Options& o, const Fan& f, RunReport& r) {
  if (o.cone.empty()) throw UsageError("--cone is required");
  r.inputs["cone"] = o.cone;
  Cone target = Cone::from_generators(f.ambient_rank(), vector_arg(o.cone, f.ambient_rank(), "--cone"));
  std::optional<IntVector> point;
  if (!o.point.empty()) {
    r.inputs["point"] = o.point;
    auto p = vector_arg(o.point, f.ambient_rank(), "--point");
    if (p.size() != 1) throw UsageError("--point takes one vector");
    point = p[0];
  }
  return star_subdivision(f, target, point);
}

std::string do_subdivide(const Options& o, RunReport& r) {
  const std::string& path = file(o, 0, "fan file");
  r.inputs["file"] = path;
  Fan f = io::load_fan(path);
  SubdivisionMap m = subdivision_from(o, f, r);
  json assignment = json::object();
  std::vector<std::vector<std::string>> text;
  for (std::size_t i = 0; i < m.assignment.size(); ++i) {
    assignment[m.source.maximal_cones()[i].id()] = m.assignment[i].id();
    text.push_back({m.source.maximal_cones()[i].id(), m.assignment[i].id()});
  }
  r.results = {{"fan", io::fan_to_json(m.source)}, {"assignment", assignment}};
  if (!o.output.empty()) {
    std::ofstream out(o.output);
    if (!out) throw Error(ErrorKind::FileError, "cannot write " + o.output);
    out << io::fan_to_json(m.source).dump(2) << '\n';
    r.inputs["output"] = o.output;
  }
  return table({"subcone", "assigned to"}, text);
}

std::string do_pullback_check(const Options& o, RunReport& r) {
  const std::string& fan_path = file(o, 0, "fan file");
  const std::string& el_path = file(o, 1, "element file");
  r.inputs["fan"] = fan_path;
  r.inputs["element"] = el_path;
  Fan f = io::load_fan(fan_path);
  SubdivisionMap m = subdivision_from(o, f, r);
  auto [ef, a] = io::pp_from_json(io::read_json_file(el_path), fs::path(el_path).parent_path());
  if (!(ef == m.source)) throw Error(ErrorKind::FanMismatch, "element is not on the subdivided fan");
  PullbackCheck c = pp_is_pullback(m, a);
  r.results["pullback"] = c.element.has_value();
  r.results["report"] = c.report;
  if (c.element) {
    r.results["element"] = io::pp_to_json(*c.element, m.target);
  } else {
    r.results["failing_cone"] = m.target.maximal_cones()[*c.failing_cone].id();
    r.results["condition"] = *c.condition == PullbackCondition::SubconesDisagree ? "i" : "ii";
    r.exit_code = CheckFailed;
  }
  return (c.element ? "pullback: yes\n" : "pullback: no\n") + c.report + "\n";
}

std::string mpp_table(const Multifan& m, const std::optional<StanleyReisner>& sr, const Options& o, RunReport& r) {
  json rows = json::array();
  std::vector<std::vector<std::string>> text;
  for (unsigned k : degrees(o)) {
    GradedBasis b = mpp_basis(m, k);
    json row = {{"degree", str(k)}, {"mpp_rank", str(b.rank())}};
    std::vector<std::string> line{str(k), str(b.rank())};
    if (sr) {
      Integer h = sr_hilbert(*sr, k);
      row["sr_rank"] = io::integer_to_json(h);
      line.push_back(h.get_str());
    }
    if (o.show_basis) {
      json els = json::array();
      for (const auto& e : b.elements) els.push_back(io::pp_parts_to_json(e));
      row["basis"] = els;
    }
    rows.push_back(row);
    text.push_back(line);
  }
  r.results["degrees"] = rows;
  std::vector<std::string> header{"degree", "mpp_rank"};
  if (sr) header.push_back("sr_rank");
  return table(header, text);
}

std::string do_hypertoric(const Options& o, RunReport& r) {
  if (!o.rank) throw UsageError("--rank is required");
  if (o.vectors.empty()) throw UsageError("--vectors is required");
  r.inputs["rank"] = str(*o.rank);
  r.inputs["vectors"] = o.vectors;
  HypertoricInput h{*o.rank, vector_arg(o.vectors, *o.rank, "--vectors")};
  Multifan m = hypertoric_multifan(h);
  r.results["nodes"] = str(m.nodes.size());
  r.results["multifan"] = io::multifan_to_json(m);
  std::string out = str(m.nodes.size()) + " nodes, " + str(m.maximal.size()) + " maximal\n";
  return out + mpp_table(m, independence_complex(h), o, r);
}

std::string do_mpp_basis(const Options& o, RunReport& r) {
  const std::string& path = file(o, 0, "multifan file");
  r.inputs["file"] = path;
  Multifan m = io::load_multifan(path);
  r.results["nodes"] = str(m.nodes.size());
  return mpp_table(m, std::nullopt, o, r);
}

}  // namespace

json RunReport::to_json() const {
  return {{"verb", verb}, {"inputs", inputs}, {"results", results}, {"exit_code", exit_code}};
}

unsigned default_max_degree() {
  if (const char* env = std::getenv("FANPOLY_MAX_DEGREE")) {
    try {
      std::size_t used = 0;
      long v = std::stol(env, &used);
      if (used == std::string(env).size() && v >= 0 && v <= 64) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 4;
}

std::vector<IntVector> parse_vector_list(const std::string& text) {
  std::vector<IntVector> out;
  std::stringstream vs(text);
  std::string item;
  while (std::getline(vs, item, ';')) {
    IntVector v;
    std::stringstream cs(item);
    std::string coord;
    while (std::getline(cs, coord, ',')) {
      coord.erase(std::remove_if(coord.begin(), coord.end(), ::isspace), coord.end());
      Integer x;
      if (coord.empty() || x.set_str(coord, 10) != 0) throw std::invalid_argument("bad coordinate \"" + coord + "\"");
      v.push_back(x);
    }
    if (v.empty()) throw std::invalid_argument("empty vector in \"" + text + "\"");
    out.push_back(std::move(v));
  }
  if (out.empty()) throw std::invalid_argument("no vectors given");
  return out;
}

RunReport run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Piecewise polynomials on fans and multifans", "fanpoly"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::pair<std::string, std::pair<std::string, Handler>>> verbs = {
      {"validate", {"check a fan, multifan, bundle or element file", do_validate}},
      {"pp-basis", {"graded ranks (and bases) of piecewise polynomials", do_pp_basis}},
      {"gkm-check", {"compare with the fixed-point description", do_gkm_check}},
      {"chern", {"equivariant Chern classes of bundle data", do_chern}},
      {"courant", {"Courant functions and their integrality", do_courant}},
      {"sr-hilbert", {"Stanley-Reisner monomial counts", do_sr_hilbert}},
      {"mv-h3", {"cokernel of the Mayer-Vietoris map for a complete surface fan", do_mv_h3}},
      {"subdivide", {"star subdivision", do_subdivide}},
      {"pullback-check", {"decide whether an element is pulled back along a star subdivision", do_pullback_check}},
      {"hypertoric", {"hypertoric multifan of a vector configuration", do_hypertoric}},
      {"mpp-basis", {"graded ranks of piecewise polynomials on a multifan", do_mpp_basis}},
  };

  std::map<CLI::App*, Handler> handlers;
  for (const auto& [name, desc] : verbs) {
    CLI::App* sub = app.add_subcommand(name, desc.first);
    handlers[sub] = desc.second;
    sub->add_flag("--json", o.json_output, "emit one JSON document");
    if (name != "hypertoric") sub->add_option("files", o.files, "input files");
    if (name == "pp-basis" || name == "gkm-check" || name == "sr-hilbert" || name == "hypertoric" ||
        name == "mpp-basis") {
      sub->add_option("--max-degree", o.max_degree, "highest degree (default: $FANPOLY_MAX_DEGREE or 4)");
      sub->add_option("--degree", o.degree, "a single degree");
    }
    if (name == "pp-basis" || name == "hypertoric" || name == "mpp-basis")
      sub->add_flag("--show-basis", o.show_basis, "include basis elements");
    if (name == "subdivide" || name == "pullback-check") {
      sub->add_option("--cone", o.cone, "target cone, e.g. \"1,0;0,1\"");
      sub->add_option("--point", o.point, "subdivision point (default: primitive sum of generators)");
    }
    if (name == "subdivide") sub->add_option("-o,--output", o.output, "write the subdivided fan here");
    if (name == "chern") sub->add_option("--index", o.index, "only c_i");
    if (name == "courant") sub->add_option("--ray", o.ray, "only this ray, e.g. \"1,1\"");
    if (name == "hypertoric") {
      sub->add_option("--rank", o.rank, "lattice rank");
      sub->add_option("--vectors", o.vectors, "vectors, e.g. \"1,0;0,1;1,1\"");
    }
  }

  RunReport report;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return report;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    report.exit_code = Usage;
    return report;
  }

  CLI::App* sub = app.get_subcommands().front();
  report.verb = sub->get_name();
  std::string text;
  try {
    text = handlers.at(sub)(o, report);
  } catch (const UsageError& e) {
    report.exit_code = Usage;
    report.results = {{"error", {{"kind", "Usage"}, {"message", e.what()}}}};
  } catch (const Error& e) {
    bool input = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::FileError;
    report.exit_code = input ? InputError : CheckFailed;
    report.results = {{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}};
  }

  if (o.json_output) {
    out << report.to_json().dump(2) << '\n';
  } else if (report.results.contains("error")) {
    err << "error: " << report.results["error"]["message"].get<std::string>() << '\n';
  } else {
    out << text;
  }
  return report;
}

}  // namespace fanpoly::cli
