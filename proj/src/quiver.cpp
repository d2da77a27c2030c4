#include "lambdak/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "lambdak/field.hpp"

namespace lambdak {

std::size_t Quiver::add_vertex(const std::string& label) {
  if (label.empty()) throw std::invalid_argument("empty vertex label");
  if (vertex_index_.count(label)) throw std::invalid_argument("duplicate vertex label '" + label + "'");
  vertex_index_[label] = vertices_.size();
  vertices_.push_back(label);
  return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(const std::string& label, std::size_t source, std::size_t target, int degree) {
  if (label.empty()) throw std::invalid_argument("empty arrow label");
  if (arrow_index_.count(label)) throw std::invalid_argument("duplicate arrow label '" + label + "'");
  if (source >= vertices_.size() || target >= vertices_.size())
    throw std::invalid_argument("arrow '" + label + "' has an endpoint outside the vertex set");
  arrow_index_[label] = arrows_.size();
  arrows_.push_back({label, source, target, degree});
  return arrows_.size() - 1;
}

std::optional<std::size_t> Quiver::find_vertex(const std::string& label) const {
  auto it = vertex_index_.find(label);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Quiver::find_arrow(const std::string& label) const {
  auto it = arrow_index_.find(label);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

bool Quiver::is_composable(const Word& w) const {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (arrows_.at(w[i]).target != arrows_.at(w[i + 1]).source) return false;
  return true;
}

int Quiver::word_degree(const Word& w) const {
  int d = 0;
  for (auto a : w) d += arrows_.at(a).degree;
  return d;
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm on the vertex graph.
  std::vector<std::size_t> indeg(vertices_.size(), 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (indeg[v] == 0) stack.push_back(v);
  std::size_t seen = 0;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
  }
  return seen == vertices_.size();
}

std::string Quiver::format(const Word& w) const {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += '.';
    s += arrows_.at(w[i]).label;
  }
  return s;
}

void validate(const AlgebraPresentation& p) {
  const auto& q = p.quiver;
  for (const auto& a : q.arrows())
    if (a.degree < 0) throw std::invalid_argument("arrow '" + a.label + "' has negative degree");
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const auto& rel = p.relations[r];
    if (rel.terms.empty()) throw std::invalid_argument("relation " + std::to_string(r) + " is empty");
    const auto& first = rel.terms.front().word;
    for (const auto& t : rel.terms) {
      if (t.word.size() < 2)
        throw std::invalid_argument("relation " + std::to_string(r) + " has a path of length < 2");
      for (auto a : t.word)
        if (a >= q.num_arrows()) throw std::invalid_argument("relation uses an unknown arrow");
      if (!q.is_composable(t.word))
        throw std::invalid_argument("relation term '" + q.format(t.word) + "' is not a path");
      if (q.word_source(t.word) != q.word_source(first) || q.word_target(t.word) != q.word_target(first))
        throw std::invalid_argument("relation " + std::to_string(r) + " mixes non-parallel paths");
    }
  }
}

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

long long parse_int(const std::string& s, std::size_t line, const std::string& what) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "bad " + what + " '" + s + "'");
  }
}

Word parse_word(const Quiver& q, const std::string& text, std::size_t line) {
  Word w;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto dot = text.find('.', start);
    auto label = text.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    auto idx = q.find_arrow(label);
    if (!idx) throw ParseError(line, "unknown arrow '" + label + "'");
    w.push_back(*idx);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return w;
}

RelationTerm parse_term(const Quiver& q, std::string tok, std::size_t line) {
  RelationTerm t;
  auto star = tok.find('*');
  if (star != std::string::npos) {
    t.coefficient = parse_int(tok.substr(0, star), line, "coefficient");
    tok = tok.substr(star + 1);
  } else if (!tok.empty() && (tok[0] == '-' || tok[0] == '+')) {
    t.coefficient = tok[0] == '-' ? -1 : 1;
    tok = tok.substr(1);
  }
  if (tok.empty()) throw ParseError(line, "relation term without a path");
  t.word = parse_word(q, tok, line);
  return t;
}

}  // namespace

AlgebraPresentation parse_quiver_spec(const std::string& text) {
  AlgebraPresentation p;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  bool have_vertices = false;
  while (std::getline(in, raw)) {
    ++line;
    auto hash = raw.find('#');
    std::string s = strip(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (s.empty()) continue;
    auto head = split_ws(s).front();
    if (head == "field") {
      auto toks = split_ws(s);
      if (toks.size() != 2) throw ParseError(line, "expected 'field p=<prime>' or 'field Q'");
      if (toks[1] == "Q") {
        p.field.characteristic = 0;
      } else if (toks[1].rfind("p=", 0) == 0) {
        auto v = parse_int(toks[1].substr(2), line, "characteristic");
        if (v < 2 || v >= (1ll << 31) || !is_prime(static_cast<std::uint64_t>(v)))
          throw ParseError(line, "characteristic " + toks[1].substr(2) + " is not a prime below 2^31");
        p.field.characteristic = static_cast<std::uint32_t>(v);
      } else {
        throw ParseError(line, "bad field '" + toks[1] + "'");
      }
    } else if (head == "vertices:" || head.rfind("vertices:", 0) == 0) {
      auto rest = s.substr(s.find(':') + 1);
      for (const auto& v : split_ws(rest)) {
        if (p.quiver.find_vertex(v)) throw ParseError(line, "duplicate vertex '" + v + "'");
        p.quiver.add_vertex(v);
      }
      have_vertices = true;
    } else if (head == "arrow") {
      if (!have_vertices) throw ParseError(line, "arrow before vertices");
      auto colon = s.find(':');
      if (colon == std::string::npos) throw ParseError(line, "expected 'arrow <label>: <src> -> <tgt>'");
      auto label = strip(s.substr(5, colon - 5));
      auto toks = split_ws(s.substr(colon + 1));
      if (toks.size() < 3 || toks[1] != "->") throw ParseError(line, "expected '<src> -> <tgt>'");
      auto src = p.quiver.find_vertex(toks[0]);
      auto tgt = p.quiver.find_vertex(toks[2]);
      if (!src) throw ParseError(line, "unknown source vertex '" + toks[0] + "'");
      if (!tgt) throw ParseError(line, "unknown target vertex '" + toks[2] + "'");
      int deg = 0;
      for (std::size_t i = 3; i < toks.size(); ++i) {
        std::string opt = toks[i];
        if (!opt.empty() && opt.front() == '[') opt.erase(0, 1);
        if (!opt.empty() && opt.back() == ']') opt.pop_back();
        if (opt.rfind("deg=", 0) != 0) throw ParseError(line, "unknown arrow option '" + toks[i] + "'");
        auto value = opt.substr(4);
        if (value.empty()) throw ParseError(line, "degree missing for arrow '" + label + "'");
        deg = static_cast<int>(parse_int(value, line, "degree"));
        if (deg < 0) throw ParseError(line, "negative degree for arrow '" + label + "'");
      }
      if (label.empty() || p.quiver.find_arrow(label)) throw ParseError(line, "bad or duplicate arrow label");
      p.quiver.add_arrow(label, *src, *tgt, deg);
    } else if (head == "relation") {
      Relation rel;
      auto toks = split_ws(s);
      for (std::size_t i = 1; i < toks.size(); ++i) rel.terms.push_back(parse_term(p.quiver, toks[i], line));
      if (rel.terms.empty()) throw ParseError(line, "empty relation");
      const auto& first = rel.terms.front().word;
      for (const auto& t : rel.terms) {
        if (!p.quiver.is_composable(t.word))
          throw ParseError(line, "'" + p.quiver.format(t.word) + "' is not a path");
        if (t.word.size() < 2) throw ParseError(line, "relation paths must have length at least 2");
        if (p.quiver.word_source(t.word) != p.quiver.word_source(first) ||
            p.quiver.word_target(t.word) != p.quiver.word_target(first))
          throw ParseError(line, "relation paths are not parallel");
      }
      p.relations.push_back(std::move(rel));
    } else {
      throw ParseError(line, "unrecognized line '" + s + "'");
    }
  }
  if (!have_vertices) throw ParseError(line, "no vertices declared");
  p.loop_shape = detect_loop_shape(p);
  return p;
}

AlgebraPresentation load_quiver_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_quiver_spec(ss.str());
}

std::string format_quiver_spec(const AlgebraPresentation& p) {
  std::ostringstream os;
  if (p.field.is_rational())
    os << "field Q\n";
  else
    os << "field p=" << p.field.characteristic << '\n';
  os << "vertices:";
  for (const auto& v : p.quiver.vertices()) os << ' ' << v;
  os << '\n';
  for (const auto& a : p.quiver.arrows()) {
    os << "arrow " << a.label << ": " << p.quiver.vertex(a.source) << " -> " << p.quiver.vertex(a.target);
    if (a.degree != 0) os << " [deg=" << a.degree << ']';
    os << '\n';
  }
  for (const auto& r : p.relations) {
    os << "relation";
    for (const auto& t : r.terms) os << ' ' << (t.coefficient >= 0 ? "+" : "") << t.coefficient << '*' << p.quiver.format(t.word);
    os << '\n';
  }
  return os.str();
}

namespace {

std::string fresh_label(const Quiver& q, std::string label) {
  while (q.find_arrow(label)) label += '\'';
  return label;
}

}  // namespace

AlgebraPresentation build_lambda_k(const AlgebraPresentation& lambda, std::size_t k) {
  if (k == 0) throw std::invalid_argument("build_lambda_k: k must be positive");
  auto base = std::make_shared<const AlgebraPresentation>(lambda);
  if (k == 1) {
    AlgebraPresentation out = lambda;
    TensorLoopShape shape;
    shape.k = 1;
    for (std::size_t a = 0; a < lambda.quiver.num_arrows(); ++a) shape.base_arrows.push_back(a);
    shape.base = base;
    out.loop_shape = shape;
    return out;
  }
  AlgebraPresentation out;
  out.field = lambda.field;
  const auto& q0 = lambda.quiver;
  for (const auto& v : q0.vertices()) out.quiver.add_vertex(v);
  TensorLoopShape shape;
  shape.k = k;
  shape.base = base;
  for (const auto& a : q0.arrows()) shape.base_arrows.push_back(out.quiver.add_arrow(a.label, a.source, a.target, a.degree));
  for (std::size_t v = 0; v < q0.num_vertices(); ++v)
    shape.loops.push_back(out.quiver.add_arrow(fresh_label(out.quiver, "eps" + q0.vertex(v)), v, v, 1));
  for (std::size_t v = 0; v < q0.num_vertices(); ++v)
    out.relations.push_back(Relation{{RelationTerm{1, Word(k, shape.loops[v])}}});
  for (std::size_t a = 0; a < q0.num_arrows(); ++a) {
    const auto& arr = q0.arrow(a);
    const auto ba = shape.base_arrows[a];
    out.relations.push_back(Relation{{RelationTerm{1, {shape.loops[arr.source], ba}},
                                      RelationTerm{-1, {ba, shape.loops[arr.target]}}}});
  }
  for (const auto& r : lambda.relations) {
    Relation lifted;
    for (const auto& t : r.terms) {
      Word w;
      for (auto a : t.word) w.push_back(shape.base_arrows[a]);
      lifted.terms.push_back({t.coefficient, w});
    }
    out.relations.push_back(lifted);
  }
  out.loop_shape = shape;
  return out;
}

AlgebraPresentation tensor_presentation(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (a.field.characteristic != b.field.characteristic)
    throw std::invalid_argument("tensor_presentation: fields differ");
  const auto& qa = a.quiver;
  const auto& qb = b.quiver;
  AlgebraPresentation out;
  out.field = a.field;
  auto vid = [&](std::size_t i, std::size_t j) { return i * qb.num_vertices() + j; };
  for (std::size_t i = 0; i < qa.num_vertices(); ++i)
    for (std::size_t j = 0; j < qb.num_vertices(); ++j) out.quiver.add_vertex(qa.vertex(i) + "|" + qb.vertex(j));
  // (alpha, j) for arrows of A, then (i, beta) for arrows of B.
  std::vector<std::vector<std::size_t>> a_lift(qa.num_arrows()), b_lift(qb.num_arrows());
  for (std::size_t x = 0; x < qa.num_arrows(); ++x)
    for (std::size_t j = 0; j < qb.num_vertices(); ++j) {
      const auto& ar = qa.arrow(x);
      a_lift[x].push_back(out.quiver.add_arrow(ar.label + "|" + qb.vertex(j), vid(ar.source, j), vid(ar.target, j), ar.degree));
    }
  for (std::size_t y = 0; y < qb.num_arrows(); ++y)
    for (std::size_t i = 0; i < qa.num_vertices(); ++i) {
      const auto& br = qb.arrow(y);
      b_lift[y].push_back(out.quiver.add_arrow(qa.vertex(i) + "|" + br.label, vid(i, br.source), vid(i, br.target), br.degree));
    }
  for (const auto& r : a.relations)
    for (std::size_t j = 0; j < qb.num_vertices(); ++j) {
      Relation lifted;
      for (const auto& t : r.terms) {
        Word w;
        for (auto x : t.word) w.push_back(a_lift[x][j]);
        lifted.terms.push_back({t.coefficient, w});
      }
      out.relations.push_back(lifted);
    }
  for (const auto& r : b.relations)
    for (std::size_t i = 0; i < qa.num_vertices(); ++i) {
      Relation lifted;
      for (const auto& t : r.terms) {
        Word w;
        for (auto y : t.word) w.push_back(b_lift[y][i]);
        lifted.terms.push_back({t.coefficient, w});
      }
      out.relations.push_back(lifted);
    }
  for (std::size_t x = 0; x < qa.num_arrows(); ++x)
    for (std::size_t y = 0; y < qb.num_arrows(); ++y) {
      const auto& ar = qa.arrow(x);
      const auto& br = qb.arrow(y);
      // (s_a, s_b) -> (t_a, s_b) -> (t_a, t_b)  equals  (s_a, s_b) -> (s_a, t_b) -> (t_a, t_b)
      out.relations.push_back(Relation{{RelationTerm{1, {a_lift[x][br.source], b_lift[y][ar.target]}},
                                        RelationTerm{-1, {b_lift[y][ar.source], a_lift[x][br.target]}}}});
    }
  return out;
}

AlgebraPresentation truncated_polynomial(std::size_t k, FieldSpec field) {
  if (k == 0) throw std::invalid_argument("truncated_polynomial: k must be positive");
  AlgebraPresentation p;
  p.field = field;
  p.quiver.add_vertex("0");
  if (k == 1) return p;
  auto x = p.quiver.add_arrow("x", 0, 0, 1);
  p.relations.push_back(Relation{{RelationTerm{1, Word(k, x)}}});
  return p;
}

AlgebraPresentation build_triangular(const AlgebraPresentation& lambda, std::size_t m) {
  if (m == 0) throw std::invalid_argument("build_triangular: m must be positive");
  if (m == 1) return lambda;
  const auto& q0 = lambda.quiver;
  AlgebraPresentation out;
  out.field = lambda.field;
  auto vid = [&](std::size_t v, std::size_t r) { return r * q0.num_vertices() + v; };
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t v = 0; v < q0.num_vertices(); ++v) out.quiver.add_vertex(q0.vertex(v) + "_" + std::to_string(r + 1));
  std::vector<std::vector<std::size_t>> lift(m);
  for (std::size_t r = 0; r < m; ++r)
    for (const auto& a : q0.arrows())
      lift[r].push_back(out.quiver.add_arrow(a.label + "_" + std::to_string(r + 1), vid(a.source, r), vid(a.target, r), a.degree));
  std::vector<std::vector<std::size_t>> vert(m - 1);
  for (std::size_t r = 0; r + 1 < m; ++r)
    for (std::size_t v = 0; v < q0.num_vertices(); ++v)
      vert[r].push_back(out.quiver.add_arrow(
          fresh_label(out.quiver, "u" + q0.vertex(v) + "_" + std::to_string(r + 1)), vid(v, r), vid(v, r + 1)));
  for (std::size_t r = 0; r < m; ++r)
    for (const auto& rel : lambda.relations) {
      Relation lifted;
      for (const auto& t : rel.terms) {
        Word w;
        for (auto a : t.word) w.push_back(lift[r][a]);
        lifted.terms.push_back({t.coefficient, w});
      }
      out.relations.push_back(lifted);
    }
  for (std::size_t r = 0; r + 1 < m; ++r)
    for (std::size_t a = 0; a < q0.num_arrows(); ++a) {
      const auto& ar = q0.arrow(a);
      out.relations.push_back(Relation{{RelationTerm{1, {lift[r][a], vert[r][ar.target]}},
                                        RelationTerm{-1, {vert[r][ar.source], lift[r + 1][a]}}}});
    }
  return out;
}

std::optional<TensorLoopShape> detect_loop_shape(const AlgebraPresentation& p) {
  const auto& q = p.quiver;
  const std::size_t n = q.num_vertices();
  std::vector<std::optional<std::size_t>> loop(n);
  std::vector<bool> is_loop(q.num_arrows(), false);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    if (ar.source != ar.target) continue;
    if (loop[ar.source]) return std::nullopt;
    loop[ar.source] = a;
    is_loop[a] = true;
  }
  for (const auto& l : loop)
    if (!l) return std::nullopt;

  std::optional<std::size_t> k;
  std::vector<bool> nilpotent(n, false);
  std::vector<bool> commutes(q.num_arrows(), false);
  std::vector<Relation> base_relations;
  for (const auto& r : p.relations) {
    bool touches_loop = false;
    for (const auto& t : r.terms)
      for (auto a : t.word) touches_loop = touches_loop || is_loop[a];
    if (!touches_loop) {
      base_relations.push_back(r);
      continue;
    }
    if (r.terms.size() == 1) {
      const auto& w = r.terms.front().word;
      if (std::any_of(w.begin(), w.end(), [&](std::size_t a) { return a != w.front(); })) return std::nullopt;
      if (!is_loop[w.front()]) return std::nullopt;
      if (k && *k != w.size()) return std::nullopt;
      k = w.size();
      nilpotent[q.arrow(w.front()).source] = true;
      continue;
    }
    if (r.terms.size() != 2 || r.terms[0].coefficient != -r.terms[1].coefficient) return std::nullopt;
    const auto& w0 = r.terms[0].word;
    const auto& w1 = r.terms[1].word;
    if (w0.size() != 2 || w1.size() != 2) return std::nullopt;
    // Either order of the two terms: loop_s a  and  a loop_t.
    auto match = [&](const Word& x, const Word& y) -> std::optional<std::size_t> {
      if (!is_loop[x[0]] || is_loop[x[1]] || is_loop[y[0]] || !is_loop[y[1]]) return std::nullopt;
      if (x[1] != y[0]) return std::nullopt;
      const auto& ar = q.arrow(x[1]);
      if (x[0] != *loop[ar.source] || y[1] != *loop[ar.target]) return std::nullopt;
      return x[1];
    };
    auto a = match(w0, w1);
    if (!a) a = match(w1, w0);
    if (!a) return std::nullopt;
    commutes[*a] = true;
  }
  if (!k || *k < 2) return std::nullopt;
  for (std::size_t v = 0; v < n; ++v)
    if (!nilpotent[v]) return std::nullopt;

  auto base = std::make_shared<AlgebraPresentation>();
  base->field = p.field;
  for (const auto& v : q.vertices()) base->quiver.add_vertex(v);
  TensorLoopShape shape;
  shape.k = *k;
  std::vector<std::size_t> to_base(q.num_arrows(), 0);
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    if (is_loop[a]) continue;
    if (!commutes[a]) return std::nullopt;
    const auto& ar = q.arrow(a);
    to_base[a] = base->quiver.add_arrow(ar.label, ar.source, ar.target, ar.degree);
    shape.base_arrows.push_back(a);
  }
  for (const auto& r : base_relations) {
    Relation br;
    for (const auto& t : r.terms) {
      Word w;
      for (auto a : t.word) w.push_back(to_base[a]);
      br.terms.push_back({t.coefficient, w});
    }
    base->relations.push_back(br);
  }
  for (std::size_t v = 0; v < n; ++v) shape.loops.push_back(*loop[v]);
  shape.base = base;
  return shape;
}

}  // namespace lambdak
