#include "tropical/io.hpp"

#include "tropical/error.hpp"
#include "tropical/linalg.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace tropical::io {

using nlohmann::json;

namespace {

json int_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json int_vec_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

json rat_vec_json(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(format_rational(x));
  return a;
}

json polyhedron_json(const Polyhedron& p) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : p.vertices()) j["vertices"].push_back(rat_vec_json(v));
  j["rays"] = json::array();
  for (const auto& r : p.rays()) j["rays"].push_back(int_vec_json(r));
  j["lineality"] = json::array();
  for (const auto& l : p.lineality()) j["lineality"].push_back(int_vec_json(l));
  return j;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

const json& array_field(const json& j, const char* name) {
  const auto& a = field(j, name);
  if (!a.is_array()) throw ParseError(std::string("field \"") + name + "\" must be an array");
  return a;
}

std::size_t read_count(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw ParseError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

Rational read_rat(const json& j) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string");
}

Integer read_int(const json& j) {
  const Rational q = read_rat(j);
  if (!is_integer(q)) throw ValidationError("expected an integer, got " + format_rational(q));
  return q.get_num();
}

IntVector read_int_vec(const json& j, std::size_t n) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  if (j.size() != n) throw DimensionMismatch("vector has length " + std::to_string(j.size()) + ", expected " + std::to_string(n));
  IntVector v;
  for (const auto& x : j) v.push_back(read_int(x));
  return v;
}

RatVector read_rat_vec(const json& j, std::size_t n) {
  if (!j.is_array()) throw ParseError("expected an array of rationals");
  if (j.size() != n) throw DimensionMismatch("vector has length " + std::to_string(j.size()) + ", expected " + std::to_string(n));
  RatVector v;
  for (const auto& x : j) v.push_back(read_rat(x));
  return v;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// Reduces v modulo the span of RREF rows and makes it primitive.
IntVector reduce_modulo(const IntVector& v, const std::vector<IntVector>& rref_rows) {
  RatVector r = to_rational(v);
  for (const auto& row : rref_rows) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    const Rational f = r[p] / Rational(row[p]);
    if (f == 0) continue;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= f * row[i];
  }
  return integer_direction(r);
}

}  // namespace

std::string write_rational(const Rational& q) { return format_rational(q); }

std::string write_cycle(const TropicalCycle& x) {
  if (!x.is_fan()) throw ValidationError("only fan cycles can be written as cycle documents");
  const std::size_t n = x.ambient_dim();
  const auto common = linalg::canonical_span_basis(x.lineality_basis(), n);
  std::vector<std::vector<IntVector>> cell_rays;
  std::set<IntVector> all;
  for (const auto& c : x.cells()) {
    std::vector<IntVector> gens;
    for (const auto& r : c.rays()) gens.push_back(reduce_modulo(r, common));
    for (const auto& l : c.lineality()) {
      auto red = reduce_modulo(l, common);
      if (is_zero(red)) continue;
      gens.push_back(red);
      gens.push_back(negated(red));
    }
    std::vector<IntVector> kept;
    for (auto& g : gens)
      if (!is_zero(g)) {
        all.insert(g);
        kept.push_back(std::move(g));
      }
    cell_rays.push_back(std::move(kept));
  }
  const std::vector<IntVector> rays(all.begin(), all.end());
  json j;
  j["ambient_dim"] = n;
  j["dimension"] = x.dim();
  j["lineality"] = json::array();
  for (const auto& l : common) j["lineality"].push_back(int_vec_json(l));
  j["rays"] = json::array();
  for (const auto& r : rays) j["rays"].push_back(int_vec_json(r));
  std::vector<std::pair<std::vector<std::size_t>, std::string>> cones;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<std::size_t> idx;
    for (const auto& r : cell_rays[i])
      idx.push_back(static_cast<std::size_t>(std::lower_bound(rays.begin(), rays.end(), r) - rays.begin()));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    cones.emplace_back(std::move(idx), format_rational(x.mults()[i]));
  }
  std::sort(cones.begin(), cones.end());
  j["cones"] = json::array();
  for (const auto& [idx, m] : cones) j["cones"].push_back({{"rays", idx}, {"multiplicity", m}});
  return dump(j);
}

TropicalCycle read_cycle(std::string_view text) {
  const auto j = parse_json(text);
  const std::size_t n = read_count(field(j, "ambient_dim"), "ambient_dim");
  std::vector<IntVector> rays;
  for (const auto& r : array_field(j, "rays")) {
    auto v = read_int_vec(r, n);
    if (is_zero(v)) throw ValidationError("zero ray in cycle document");
    if (primitive(v) != v) throw ValidationError("ray " + to_string(v) + " is not primitive");
    if (std::find(rays.begin(), rays.end(), v) != rays.end()) throw ValidationError("duplicate ray " + to_string(v));
    rays.push_back(std::move(v));
  }
  std::vector<IntVector> lin;
  if (j.contains("lineality"))
    for (const auto& l : array_field(j, "lineality")) lin.push_back(read_int_vec(l, n));
  std::vector<Polyhedron> cells;
  std::vector<Rational> mults;
  for (const auto& c : array_field(j, "cones")) {
    std::vector<IntVector> gens;
    for (const auto& i : array_field(c, "rays")) {
      const auto k = read_count(i, "ray index");
      if (k >= rays.size()) throw ValidationError("cone refers to missing ray " + std::to_string(k));
      gens.push_back(rays[k]);
    }
    const Rational m = read_rat(field(c, "multiplicity"));
    if (m == 0) throw ValidationError("cone multiplicity must be nonzero");
    cells.push_back(Polyhedron::cone(n, gens, lin));
    mults.push_back(m);
  }
  int dim = -1;
  if (j.contains("dimension")) {
    const auto& d = j.at("dimension");
    if (!d.is_number_integer()) throw ParseError("dimension must be an integer");
    dim = d.get<int>();
  }
  auto x = TropicalCycle::from_cells(n, cells, mults);
  if (x.is_zero()) return TropicalCycle::zero(n, dim);
  if (dim >= 0 && x.dim() != dim) throw ValidationError("declared dimension does not match the cones");
  return x;
}

std::string write_polytope(const RationalPolytope& p) {
  json j;
  j["ambient_dim"] = p.ambient_dim();
  j["vertices"] = json::array();
  for (const auto& v : p.vertices()) j["vertices"].push_back(rat_vec_json(v));
  return dump(j);
}

RationalPolytope read_polytope(std::string_view text) {
  const auto j = parse_json(text);
  const std::size_t n = read_count(field(j, "ambient_dim"), "ambient_dim");
  std::vector<RatVector> pts;
  for (const auto& v : array_field(j, "vertices")) pts.push_back(read_rat_vec(v, n));
  if (pts.empty()) throw ValidationError("polytope document has no vertices");
  return RationalPolytope(n, pts);
}

std::string write_matrix(const IntMatrix& a) {
  json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  j["entries"] = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) j["entries"].push_back(int_vec_json(a.row(i)));
  return dump(j);
}

IntMatrix read_matrix(std::string_view text) {
  const auto j = parse_json(text);
  const std::size_t r = read_count(field(j, "rows"), "rows");
  const std::size_t c = read_count(field(j, "cols"), "cols");
  const auto& e = array_field(j, "entries");
  if (e.size() != r) throw DimensionMismatch("matrix has " + std::to_string(e.size()) + " rows, expected " + std::to_string(r));
  std::vector<IntVector> rows;
  for (const auto& row : e) rows.push_back(read_int_vec(row, c));
  return IntMatrix::from_rows(rows, c);
}

std::string write_fan(const ReferenceFan& f) {
  json j;
  j["ambient_dim"] = f.ambient_dim;
  j["rays"] = json::array();
  for (const auto& r : f.rays) j["rays"].push_back(int_vec_json(r));
  j["cones"] = f.cones;
  return dump(j);
}

ReferenceFan read_fan(std::string_view text) {
  const auto j = parse_json(text);
  ReferenceFan f;
  f.ambient_dim = read_count(field(j, "ambient_dim"), "ambient_dim");
  for (const auto& r : array_field(j, "rays")) f.rays.push_back(read_int_vec(r, f.ambient_dim));
  for (const auto& c : array_field(j, "cones")) {
    if (!c.is_array()) throw ParseError("each fan cone must be an array of ray indices");
    std::vector<std::size_t> idx;
    for (const auto& i : c) idx.push_back(read_count(i, "ray index"));
    f.cones.push_back(std::move(idx));
  }
  f.validate();
  return f;
}

std::string write_balance_report(const BalanceReport& r) {
  json j;
  j["balanced"] = r.balanced;
  j["failing_ridges"] = json::array();
  for (const auto& t : r.failing_ridges) j["failing_ridges"].push_back(polyhedron_json(t));
  return dump(j);
}

std::string write_intersection_report(const IntersectionReport& r) {
  json j;
  j["generic_vector"] = rat_vec_json(r.generic_vector.v);
  j["avoided_subspaces"] = r.generic_vector.certificate.size();
  j["certificate_verified"] = r.generic_vector.verify();
  j["faces"] = json::array();
  for (const auto& f : r.faces) {
    json fj;
    fj["cell"] = polyhedron_json(f.cell);
    fj["multiplicity"] = format_rational(f.multiplicity);
    fj["pairs"] = json::array();
    for (const auto& p : f.pairs)
      fj["pairs"].push_back(
          {{"sigma", p.sigma}, {"tau", p.tau}, {"index", int_json(p.index)}, {"term", format_rational(p.term)}});
    j["faces"].push_back(std::move(fj));
  }
  j["result"] = json::parse(write_cycle(r.result));
  return dump(j);
}

std::string write_connectivity_report(const ConnectivityReport& r) {
  json j;
  j["connected"] = r.connected;
  j["facets"] = r.facets.size();
  j["components"] = r.components;
  return dump(j);
}

std::string write_decomposition(const PowerDecomposition& d, const HypersurfaceBasis& b) {
  json j;
  j["basis"] = json::array();
  for (std::size_t i = 0; i < b.cycles.size(); ++i) {
    json bj;
    bj["weights"] = rat_vec_json(b.weights[i]);
    bj["polytope"] = json::parse(write_polytope(b.polytopes[i]));
    j["basis"].push_back(std::move(bj));
  }
  j["walls"] = b.walls;
  j["terms"] = json::array();
  for (std::size_t i = 0; i < d.terms.size(); ++i)
    j["terms"].push_back({{"factors", d.terms[i]}, {"coefficient", format_rational(d.coefficients[i])}});
  return dump(j);
}

std::string write_example_6_2(const Example62Report& r) {
  json j;
  j["t1_facets"] = r.t1.size();
  j["t2_facets"] = r.t2.size();
  j["t1_connected"] = r.t1_connected;
  j["t2_connected"] = r.t2_connected;
  j["union_connected"] = r.union_connected;
  j["both_contain_cone_neg_e1_neg_e2"] = r.union_contains_negative_quadrant;
  j["t1h_facets"] = r.t1h.size();
  j["t2h_facets"] = r.t2h.size();
  j["slice_intersection_is_origin"] = r.slice_intersection_is_origin;
  j["slice_intersection"] = json::array();
  for (const auto& c : r.slice_intersection) j["slice_intersection"].push_back(polyhedron_json(c));
  j["disconnected"] = r.sliced_union_disconnected;
  j["sliced_union_components"] = r.sliced_union_components;
  j["all_claims_hold"] = r.all_claims_hold();
  return dump(j);
}

std::string write_error(const std::string& category, const std::string& message) {
  json j;
  j["error"] = category;
  j["message"] = message;
  return j.dump() + "\n";
}

}  // namespace tropical::io
