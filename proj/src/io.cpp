#include "lambdak/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace lambdak {

namespace {

Json matrix_rows(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_rows(const PrimeField& f, const Json& j, std::size_t rows, std::size_t cols, const std::string& what) {
  if (!j.is_array()) throw FormatError(what + ": matrix must be a list of rows");
  Matrix m(f, rows, cols);
  if (rows == 0 || cols == 0) {
    // An empty matrix may be written as [] or as rows of length zero.
    return m;
  }
  if (j.size() != rows) throw FormatError(what + ": expected " + std::to_string(rows) + " rows");
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw FormatError(what + ": expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number_integer()) throw FormatError(what + ": entries must be integers");
      m(r, c) = f.from_int(j[r][c].get<long long>());
    }
  }
  return m;
}

std::vector<std::size_t> dims_from(const Json& j, std::size_t n, const std::string& what) {
  if (!j.is_array() || j.size() != n) throw FormatError(what + ": expected " + std::to_string(n) + " dimensions");
  std::vector<std::size_t> d;
  for (const auto& x : j) {
    if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0))
      throw FormatError(what + ": dimensions must be nonnegative integers");
    d.push_back(x.get<std::size_t>());
  }
  return d;
}

Json optional_size(const std::optional<std::size_t>& x) { return x ? Json(*x) : Json(nullptr); }

Json optional_bool(const std::optional<bool>& x) { return x ? Json(*x) : Json(nullptr); }

}  // namespace

Json algebra_reference(const AlgebraPtr& a) { return Json{{"presentation", format_quiver_spec(a->presentation())}}; }

AlgebraPtr algebra_from_reference(const Json& j, const AlgebraPtr& known) {
  if (!j.is_object() || !j.contains("presentation") || !j["presentation"].is_string())
    throw FormatError("algebra reference needs a \"presentation\" string");
  const auto text = j["presentation"].get<std::string>();
  if (known) {
    if (format_quiver_spec(parse_quiver_spec(text)) != format_quiver_spec(known->presentation()))
      throw FormatError("module file refers to a different algebra");
    return known;
  }
  return BoundQuiverAlgebra::build(parse_quiver_spec(text));
}

Json to_json(const Representation& m) {
  Json j;
  j["algebra"] = algebra_reference(m.algebra);
  j["dims"] = m.dims;
  Json arrows = Json::object();
  const auto& q = m.algebra->quiver();
  for (std::size_t a = 0; a < q.num_arrows(); ++a) arrows[q.arrow(a).label] = matrix_rows(m.arrows[a]);
  j["arrows"] = std::move(arrows);
  return j;
}

Representation module_from_json(const Json& j, const AlgebraPtr& known) {
  if (!j.is_object()) throw FormatError("module must be a JSON object");
  if (j.value("graded", false)) throw FormatError("graded module given where an ungraded one is expected");
  if (!j.contains("algebra")) throw FormatError("module needs an \"algebra\" reference");
  auto a = algebra_from_reference(j["algebra"], known);
  if (!j.contains("dims")) throw FormatError("module needs \"dims\"");
  Representation m(a, dims_from(j["dims"], a->num_vertices(), "dims"));
  const auto& q = a->quiver();
  const Json arrows = j.value("arrows", Json::object());
  if (!arrows.is_object()) throw FormatError("\"arrows\" must map arrow labels to matrices");
  for (const auto& [label, mat] : arrows.items()) {
    auto idx = q.find_arrow(label);
    if (!idx) throw FormatError("unknown arrow '" + label + "'");
    const auto& ar = q.arrow(*idx);
    m.arrows[*idx] = matrix_from_rows(a->field(), mat, m.dims[ar.target], m.dims[ar.source], "arrow " + label);
  }
  auto problems = check_representation(m);
  if (!problems.empty()) throw FormatError("not a representation: " + problems.front());
  return m;
}

Json to_json(const GradedModule& x) {
  Json j;
  j["algebra"] = algebra_reference(x.algebra);
  j["graded"] = true;
  const auto t = trim(x);
  const auto nv = x.algebra->num_vertices();
  Json slices = Json::array();
  for (std::size_t s = 0; s < t.width(); ++s) {
    std::vector<std::size_t> d(nv);
    for (std::size_t v = 0; v < nv; ++v) d[v] = t.rep.dims[t.cover->vertex(v, s)];
    slices.push_back(Json{{"degree", t.lo + static_cast<int>(s)}, {"dims", d}});
  }
  j["slices"] = std::move(slices);
  Json arrows = Json::array();
  const auto& q = x.algebra->quiver();
  for (std::size_t s = 0; s < t.width(); ++s)
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
      auto ca = t.cover->arrow(a, s);
      if (!ca || t.rep.arrows[*ca].empty()) continue;
      arrows.push_back(Json{{"arrow", q.arrow(a).label},
                            {"degree", t.lo + static_cast<int>(s)},
                            {"matrix", matrix_rows(t.rep.arrows[*ca])}});
    }
  j["arrows"] = std::move(arrows);
  return j;
}

GradedModule graded_module_from_json(const Json& j, const AlgebraPtr& known) {
  if (!j.is_object() || !j.value("graded", false)) throw FormatError("graded module needs \"graded\": true");
  if (!j.contains("algebra")) throw FormatError("module needs an \"algebra\" reference");
  auto a = algebra_from_reference(j["algebra"], known);
  const auto nv = a->num_vertices();
  const Json slices = j.value("slices", Json::array());
  std::map<int, std::vector<std::size_t>> by_degree;
  for (const auto& s : slices) {
    if (!s.contains("degree") || !s["degree"].is_number_integer()) throw FormatError("slice needs an integer degree");
    const int d = s["degree"].get<int>();
    if (by_degree.count(d)) throw FormatError("degree " + std::to_string(d) + " listed twice");
    by_degree[d] = dims_from(s.value("dims", Json()), nv, "slice " + std::to_string(d));
  }
  if (by_degree.empty()) return graded_zero(a);
  const int lo = by_degree.begin()->first;
  const auto width = static_cast<std::size_t>(by_degree.rbegin()->first - lo + 1);
  auto c = window_cover(a, width);
  std::vector<std::size_t> dims(nv * width, 0);
  for (const auto& [d, ds] : by_degree)
    for (std::size_t v = 0; v < nv; ++v) dims[c->vertex(v, static_cast<std::size_t>(d - lo))] = ds[v];
  Representation rep(c->algebra, dims);
  const auto& q = a->quiver();
  for (const auto& e : j.value("arrows", Json::array())) {
    const auto label = e.value("arrow", std::string());
    auto idx = q.find_arrow(label);
    if (!idx) throw FormatError("unknown arrow '" + label + "'");
    if (!e.contains("degree") || !e["degree"].is_number_integer()) throw FormatError("arrow entry needs an integer degree");
    const int d = e["degree"].get<int>();
    if (d < lo || d >= lo + static_cast<int>(width)) throw FormatError("arrow " + label + " at a degree outside the support");
    auto ca = c->arrow(*idx, static_cast<std::size_t>(d - lo));
    const auto& ar = q.arrow(*idx);
    const auto src = c->vertex(ar.source, static_cast<std::size_t>(d - lo));
    if (!ca) {
      if (dims[src] != 0) throw FormatError("arrow " + label + " at degree " + std::to_string(d) + " leaves the support");
      continue;
    }
    const auto tgt = c->vertex(ar.target, static_cast<std::size_t>(d - lo + ar.degree));
    rep.arrows[*ca] = matrix_from_rows(a->field(), e.value("matrix", Json::array()), dims[tgt], dims[src],
                                       "arrow " + label + " at degree " + std::to_string(d));
  }
  auto problems = check_representation(rep);
  if (!problems.empty()) throw FormatError("not a graded representation: " + problems.front());
  return make_graded(a, lo, rep);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

Json algebra_summary(const AlgebraPtr& a) {
  Json j;
  j["vertices"] = a->num_vertices();
  j["arrows"] = a->num_arrows();
  j["dimension"] = a->dim();
  j["basis_size"] = a->dim();
  j["max_degree"] = a->max_degree();
  j["max_path_length"] = a->max_length();
  auto g = a->gorenstein_parameter();
  j["gorenstein_parameter"] = g ? Json(*g) : Json(nullptr);
  j["cartan"] = cartan_matrix(*a);
  j["field_characteristic"] = a->field().characteristic();
  return j;
}

Json to_json(const GorensteinCertificate& c) {
  return Json{{"bound", c.bound},
              {"right_injective_dimension", optional_size(c.right)},
              {"left_injective_dimension", optional_size(c.left)},
              {"sides_agree", c.sides_agree()},
              {"gorenstein_dimension", optional_size(c.dimension())}};
}

Json to_json(const GpVerdict& v) {
  return Json{{"gorenstein_projective", v.gorenstein_projective},
              {"ext", optional_bool(v.ext)},
              {"restriction", optional_bool(v.restriction)},
              {"monic", optional_bool(v.monic)},
              {"ext_dims", v.profile.dims},
              {"methods_agree", v.agree()}};
}

Json to_json(const ARQuiver& q) {
  Json j;
  j["mode"] = to_string(q.mode);
  j["gorenstein_dimension"] = q.gorenstein_dim;
  j["status"] = q.closed ? "closed" : "budget-exceeded";
  j["closed"] = q.closed;
  j["nodes"] = q.nodes.size();
  j["projective_nodes"] = q.num_projective();
  Json nodes = Json::array();
  std::map<std::string, std::size_t> multiset;
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    const auto& n = q.nodes[i];
    const auto dv = format_dims(n.module.dims);
    ++multiset[dv];
    Json middle = Json::array();
    for (auto [x, mult] : n.middle) middle.push_back(Json{{"node", x}, {"multiplicity", mult}});
    nodes.push_back(Json{{"id", i},
                         {"dims", n.module.dims},
                         {"projective", n.projective},
                         {"tau", optional_size(n.tau)},
                         {"tau_inverse", optional_size(n.tau_inverse)},
                         {"middle", middle}});
  }
  j["dimension_vectors"] = multiset;
  j["node_list"] = std::move(nodes);
  Json arrows = Json::array();
  for (const auto& [e, mult] : q.arrows) arrows.push_back(Json{{"from", e.first}, {"to", e.second}, {"multiplicity", mult}});
  j["irreducible_maps"] = std::move(arrows);
  j["diagnostics"] = q.diagnostics;
  return j;
}

Json to_json(const AlmostSplitSequence& s) {
  auto check = check_sequence(s);
  return Json{{"left", to_json(s.left)},
              {"middle", to_json(s.middle)},
              {"right", to_json(s.right)},
              {"left_dims", s.left.dims},
              {"middle_dims", s.middle.dims},
              {"right_dims", s.right.dims},
              {"ext_dim", s.ext_dim},
              {"exact", check.exact},
              {"non_split", check.non_split}};
}

Json to_json(const CMReport& r) {
  Json j;
  j["type"] = r.type ? Json(r.type->name()) : Json(nullptr);
  j["k"] = r.k;
  j["verdict"] = to_string(r.verdict);
  j["graded_verdict"] = to_string(r.graded_verdict);
  j["count"] = optional_size(r.count);
  j["count_method"] = r.count_method;
  j["gamma_type"] = r.gamma ? Json(r.gamma->name()) : Json(nullptr);
  j["tubular_boundary"] = r.tubular ? Json(*r.tubular) : Json(nullptr);
  j["notes"] = r.notes;
  return j;
}

Json to_json(const TiltingCandidate& t) {
  Json summands = Json::array();
  for (std::size_t i = 0; i < t.summands.size(); ++i)
    summands.push_back(Json{{"shift", i}, {"dims", format_graded_dims(t.summands[i])}, {"dim", t.summands[i].total_dim()}});
  return Json{{"k", t.k},
              {"summands", summands},
              {"total_dim", t.total.total_dim()},
              {"total_dims", format_graded_dims(t.total)},
              {"gorenstein_projective", t.gorenstein_projective}};
}

Json to_json(const EndComparison& e) {
  Json m = e.matching ? Json(*e.matching) : Json(nullptr);
  return Json{{"ok", e.ok()},
              {"dim", e.dim},
              {"expected_dim", e.expected_dim},
              {"target_dim", e.target_dim},
              {"cartan_match", e.cartan_match},
              {"isomorphism", e.isomorphism},
              {"cartan_end", e.cartan_end},
              {"cartan_target", e.cartan_target},
              {"matching", m},
              {"arrow_images", e.arrow_images},
              {"diagnostic", e.diagnostic}};
}

Json to_json(const SyzygyPeriodCheck& s) {
  Json steps = Json::array();
  for (const auto& gens : s.cover_generators) {
    Json g = Json::array();
    for (auto [v, d] : gens) g.push_back(Json{{"vertex", v}, {"degree", d}});
    steps.push_back(std::move(g));
  }
  return Json{{"ok", s.ok()},
              {"omega2_dims", s.omega2_dims},
              {"expected_dims", s.expected_dims},
              {"certificate_rank", s.certificate_rank},
              {"cover_generators", steps}};
}

Json to_json(const HomVanishing& h) {
  Json dims = Json::array();
  for (auto [i, d] : h.dims) dims.push_back(Json{{"shift", i}, {"stable_hom_dim", d}});
  return Json{{"ok", h.ok()}, {"dims", dims}};
}

Json to_json(const ShortExactCheck& s) {
  return Json{{"ok", s.ok()},
              {"homomorphisms", s.homomorphisms},
              {"injective", s.injective},
              {"surjective", s.surjective},
              {"composite_zero", s.composite_zero},
              {"dimensions", s.dimensions}};
}

Json to_json(const SequencePairCheck& s) {
  return Json{{"ok", s.ok()},
              {"dim_m", s.dim_m},
              {"expected_dim", s.expected_dim},
              {"m_dims", s.m_dims},
              {"first", to_json(s.first)},
              {"first_end_isomorphic", s.first_end_iso},
              {"second", to_json(s.second)}};
}

}  // namespace lambdak
