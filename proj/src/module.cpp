#include "lambdak/module.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace lambdak {

Representation::Representation(AlgebraPtr a, std::vector<std::size_t> d) : algebra(std::move(a)), dims(std::move(d)) {
  if (dims.size() != algebra->num_vertices()) throw std::invalid_argument("Representation: wrong number of vertices");
  for (const auto& ar : algebra->quiver().arrows()) arrows.emplace_back(algebra->field(), dims[ar.target], dims[ar.source]);
}

std::size_t Representation::total_dim() const { return std::accumulate(dims.begin(), dims.end(), std::size_t{0}); }

std::vector<std::size_t> Representation::offsets() const {
  std::vector<std::size_t> off(dims.size() + 1, 0);
  for (std::size_t v = 0; v < dims.size(); ++v) off[v + 1] = off[v] + dims[v];
  return off;
}

std::string format_dims(const std::vector<std::size_t>& dims) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? "," : "") << dims[i];
  os << ')';
  return os.str();
}

std::vector<std::string> check_representation(const Representation& m) {
  std::vector<std::string> out;
  const auto& q = m.algebra->quiver();
  if (m.dims.size() != q.num_vertices()) return {"wrong number of vertex spaces"};
  if (m.arrows.size() != q.num_arrows()) return {"wrong number of arrow matrices"};
  bool shapes_ok = true;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    if (m.arrows[a].rows() != m.dims[ar.target] || m.arrows[a].cols() != m.dims[ar.source]) {
      out.push_back("arrow '" + ar.label + "' has shape " + std::to_string(m.arrows[a].rows()) + "x" +
                    std::to_string(m.arrows[a].cols()) + ", expected " + std::to_string(m.dims[ar.target]) + "x" +
                    std::to_string(m.dims[ar.source]));
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return out;
  const auto& f = m.field();
  for (const auto& r : m.algebra->presentation().relations) {
    const auto s = q.word_source(r.terms.front().word);
    const auto t = q.word_target(r.terms.front().word);
    Matrix total(f, m.dims[t], m.dims[s]);
    for (const auto& term : r.terms) {
      Matrix p = Matrix::identity(f, m.dims[s]);
      for (auto a : term.word) p = m.arrows[a] * p;
      total.add_scaled(f.from_int(term.coefficient), p);
    }
    if (!total.is_zero()) {
      std::string desc;
      for (const auto& term : r.terms) desc += (desc.empty() ? "" : " ") + std::to_string(term.coefficient) + "*" + q.format(term.word);
      out.push_back("relation " + desc + " does not vanish");
    }
  }
  return out;
}

std::vector<Matrix> path_matrices(const Representation& m) {
  const auto& a = *m.algebra;
  std::vector<Matrix> p(a.dim());
  for (std::size_t b = 0; b < a.dim(); ++b) {
    const auto& be = a.basis(b);
    if (be.word.empty())
      p[b] = Matrix::identity(m.field(), m.dims[be.source]);
    else
      p[b] = m.arrows[be.last_arrow] * p[be.prefix];
  }
  return p;
}

Matrix element_action(const Representation& m, const std::vector<Matrix>& paths, const Element& x, std::size_t i,
                      std::size_t j) {
  Matrix out(m.field(), m.dims[j], m.dims[i]);
  for (const auto& [b, c] : x) out.add_scaled(c, paths[b]);
  return out;
}

ModuleMap zero_map(const Representation& from, const Representation& to) {
  ModuleMap f;
  for (std::size_t v = 0; v < from.dims.size(); ++v) f.blocks.emplace_back(from.field(), to.dims[v], from.dims[v]);
  return f;
}

ModuleMap identity_map(const Representation& m) {
  ModuleMap f;
  for (auto d : m.dims) f.blocks.push_back(Matrix::identity(m.field(), d));
  return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(g.blocks[v] * f.blocks[v]);
  return h;
}

ModuleMap add_maps(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h;
  for (std::size_t v = 0; v < f.blocks.size(); ++v) h.blocks.push_back(f.blocks[v] + g.blocks[v]);
  return h;
}

ModuleMap scale_map(const ModuleMap& f, PrimeField::value_type c) {
  ModuleMap h;
  for (const auto& b : f.blocks) h.blocks.push_back(b.scaled(c));
  return h;
}

ModuleMap linear_combination(const std::vector<ModuleMap>& basis, const std::vector<PrimeField::value_type>& coeffs,
                             const Representation& from, const Representation& to) {
  ModuleMap h = zero_map(from, to);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t v = 0; v < h.blocks.size(); ++v) h.blocks[v].add_scaled(coeffs[i], basis[i].blocks[v]);
  return h;
}

bool is_homomorphism(const Representation& from, const Representation& to, const ModuleMap& f) {
  const auto& q = from.algebra->quiver();
  if (f.blocks.size() != from.dims.size()) return false;
  for (std::size_t v = 0; v < from.dims.size(); ++v)
    if (f.blocks[v].rows() != to.dims[v] || f.blocks[v].cols() != from.dims[v]) return false;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto& ar = q.arrow(a);
    if (to.arrows[a] * f.blocks[ar.source] != f.blocks[ar.target] * from.arrows[a]) return false;
  }
  return true;
}

bool is_zero_map(const ModuleMap& f) {
  for (const auto& b : f.blocks)
    if (!b.is_zero()) return false;
  return true;
}

bool is_injective(const ModuleMap& f, const Representation& from) {
  for (std::size_t v = 0; v < f.blocks.size(); ++v)
    if (rank(f.blocks[v]) != from.dims[v]) return false;
  return true;
}

bool is_surjective(const ModuleMap& f, const Representation& to) {
  for (std::size_t v = 0; v < f.blocks.size(); ++v)
    if (rank(f.blocks[v]) != to.dims[v]) return false;
  return true;
}

bool is_invertible(const ModuleMap& f) {
  for (const auto& b : f.blocks)
    if (b.rows() != b.cols() || rank(b) != b.rows()) return false;
  return true;
}

std::optional<ModuleMap> invert(const ModuleMap& f) {
  ModuleMap g;
  for (const auto& b : f.blocks) {
    auto inv = inverse(b);
    if (!inv) return std::nullopt;
    g.blocks.push_back(*inv);
  }
  return g;
}

PrimeField::value_type map_trace(const PrimeField& f, const ModuleMap& m) {
  PrimeField::value_type t = 0;
  for (const auto& b : m.blocks) t = f.add(t, trace(b));
  return t;
}

std::vector<PrimeField::value_type> flatten(const ModuleMap& f) {
  std::vector<PrimeField::value_type> out;
  for (const auto& b : f.blocks)
    for (std::size_t i = 0; i < b.rows(); ++i) out.insert(out.end(), b.row_data(i), b.row_data(i) + b.cols());
  return out;
}

MapCoordinates::MapCoordinates(const PrimeField& f, const std::vector<ModuleMap>& basis) : n_(basis.size()) {
  if (basis.empty()) return;
  const auto first = flatten(basis.front());
  Matrix cols(f, first.size(), n_);
  for (std::size_t j = 0; j < n_; ++j) {
    const auto v = flatten(basis[j]);
    for (std::size_t i = 0; i < v.size(); ++i) cols(i, j) = v[i];
  }
  auto e = rref(cols.transpose());
  if (e.rank() != n_) throw std::invalid_argument("MapCoordinates: family is linearly dependent");
  rows_ = e.pivots;
  inverse_rows_ = *inverse(cols.select_rows(rows_));
  columns_ = std::move(cols);
}

std::optional<std::vector<PrimeField::value_type>> MapCoordinates::operator()(const ModuleMap& h) const {
  const auto v = flatten(h);
  if (n_ == 0) {
    for (auto x : v)
      if (x != 0) return std::nullopt;
    return std::vector<PrimeField::value_type>{};
  }
  const auto& f = columns_->field();
  if (v.size() != columns_->rows()) throw std::invalid_argument("MapCoordinates: shape mismatch");
  Matrix r(f, n_, 1);
  for (std::size_t i = 0; i < n_; ++i) r(i, 0) = v[rows_[i]];
  Matrix x = *inverse_rows_ * r;
  Matrix back = *columns_ * x;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (back(i, 0) != v[i]) return std::nullopt;
  std::vector<PrimeField::value_type> out(n_);
  for (std::size_t i = 0; i < n_; ++i) out[i] = x(i, 0);
  return out;
}

Generators top_generators(const Representation& m) {
  const auto& q = m.algebra->quiver();
  const auto& f = m.field();
  Generators g;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    if (m.dims[v] == 0) continue;
    Matrix rad(f, m.dims[v], 0);
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
      if (q.arrow(a).target == v) rad = hstack(rad, m.arrows[a]);
    for (auto c : complement_coordinates(rad)) {
      Matrix vec(f, m.dims[v], 1);
      vec(c, 0) = 1;
      g.vertex.push_back(v);
      g.vector.push_back(vec);
    }
  }
  return g;
}

CoverData cover_data(const Representation& m) {
  const auto& a = *m.algebra;
  const auto& f = m.field();
  CoverData cd;
  cd.gens = top_generators(m);
  auto paths = path_matrices(m);
  const std::size_t nv = m.dims.size();
  cd.pi.resize(nv);
  cd.columns.resize(nv);
  cd.pivots.resize(nv);
  cd.pivot_inverse.resize(nv);
  cd.kernel.resize(nv);
  for (std::size_t w = 0; w < nv; ++w) {
    for (std::size_t g = 0; g < cd.gens.vertex.size(); ++g)
      for (auto b : a.between(cd.gens.vertex[g], w)) cd.columns[w].emplace_back(g, b);
    Matrix pi(f, m.dims[w], cd.columns[w].size());
    for (std::size_t c = 0; c < cd.columns[w].size(); ++c) {
      const auto [g, b] = cd.columns[w][c];
      pi.set_block(0, c, paths[b] * cd.gens.vector[g]);
    }
    auto e = rref(pi);
    if (e.rank() != m.dims[w]) throw std::logic_error("cover_data: top generators do not generate");
    cd.pivots[w] = e.pivots;
    cd.pivot_inverse[w] = *inverse(pi.select_columns(e.pivots));
    cd.kernel[w] = kernel_from_rref(e);
    cd.pi[w] = std::move(pi);
  }
  return cd;
}

std::vector<ModuleMap> hom_space(const CoverData& cd, const Representation& m, const Representation& n) {
  const auto& f = m.field();
  const std::size_t ng = cd.gens.vertex.size();
  std::vector<std::size_t> off(ng + 1, 0);
  for (std::size_t g = 0; g < ng; ++g) off[g + 1] = off[g] + n.dims[cd.gens.vertex[g]];
  const std::size_t unknowns = off[ng];
  if (unknowns == 0) return {};
  auto npaths = path_matrices(n);

  std::size_t nrows = 0;
  for (std::size_t w = 0; w < m.dims.size(); ++w) nrows += cd.kernel[w].cols() * n.dims[w];
  Matrix eq(f, nrows, unknowns);
  std::size_t row = 0;
  for (std::size_t w = 0; w < m.dims.size(); ++w) {
    const auto& k = cd.kernel[w];
    for (std::size_t kc = 0; kc < k.cols(); ++kc) {
      for (std::size_t c = 0; c < cd.columns[w].size(); ++c) {
        const auto u = k(c, kc);
        if (u == 0) continue;
        const auto [g, b] = cd.columns[w][c];
        const auto& pm = npaths[b];
        for (std::size_t i = 0; i < pm.rows(); ++i)
          for (std::size_t j = 0; j < pm.cols(); ++j)
            if (pm(i, j) != 0) eq(row + i, off[g] + j) = f.add(eq(row + i, off[g] + j), f.mul(u, pm(i, j)));
      }
      row += n.dims[w];
    }
  }
  auto sol = kernel_basis(eq);
  const std::size_t ns = sol.cols();
  std::vector<ModuleMap> out(ns);
  for (std::size_t w = 0; w < m.dims.size(); ++w) {
    const auto& piv = cd.pivots[w];
    // Column block c of images holds the value on pivot column c for every solution.
    std::vector<Matrix> images;
    images.reserve(piv.size());
    for (std::size_t c = 0; c < piv.size(); ++c) {
      const auto [g, b] = cd.columns[w][piv[c]];
      images.push_back(npaths[b] * sol.block(off[g], 0, n.dims[cd.gens.vertex[g]], ns));
    }
    for (std::size_t s = 0; s < ns; ++s) {
      Matrix fw(f, n.dims[w], piv.size());
      for (std::size_t c = 0; c < piv.size(); ++c)
        for (std::size_t i = 0; i < n.dims[w]; ++i) fw(i, c) = images[c](i, s);
      out[s].blocks.push_back(fw * cd.pivot_inverse[w]);
    }
  }
  return out;
}

std::vector<ModuleMap> hom_space(const Representation& m, const Representation& n) {
  if (m.algebra != n.algebra) throw std::invalid_argument("hom_space: modules over different algebras");
  return hom_space(cover_data(m), m, n);
}

std::size_t hom_dim(const Representation& m, const Representation& n) { return hom_space(m, n).size(); }

Representation simple_module(const AlgebraPtr& a, std::size_t i) {
  std::vector<std::size_t> d(a->num_vertices(), 0);
  d.at(i) = 1;
  return Representation(a, d);
}

Representation free_module(const AlgebraPtr& a, const std::vector<std::size_t>& gens) {
  const std::size_t nv = a->num_vertices();
  std::vector<std::size_t> d(nv, 0);
  // offset[g][w]: start of generator g's block at vertex w
  std::vector<std::vector<std::size_t>> offset(gens.size(), std::vector<std::size_t>(nv, 0));
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t w = 0; w < nv; ++w) {
      offset[g][w] = d[w];
      d[w] += a->between(gens[g], w).size();
    }
  Representation m(a, d);
  const auto& q = a->quiver();
  for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
    const auto s = q.arrow(ar).source;
    const auto t = q.arrow(ar).target;
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (auto b : a->between(gens[g], s))
        for (const auto& [b2, c] : a->times_arrow(b, ar))
          m.arrows[ar](offset[g][t] + a->position(b2), offset[g][s] + a->position(b)) = c;
  }
  return m;
}

Representation projective_module(const AlgebraPtr& a, std::size_t i) { return free_module(a, {i}); }

Representation regular_module(const AlgebraPtr& a) {
  std::vector<std::size_t> gens(a->num_vertices());
  std::iota(gens.begin(), gens.end(), 0);
  return free_module(a, gens);
}

Representation injective_module(const AlgebraPtr& a, std::size_t i) {
  const std::size_t nv = a->num_vertices();
  std::vector<std::size_t> d(nv);
  for (std::size_t w = 0; w < nv; ++w) d[w] = a->between(w, i).size();
  Representation m(a, d);
  const auto& q = a->quiver();
  for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
    const auto t = q.arrow(ar).target;
    // (phi . ar)(y) = phi(ar y) for y in e_t A e_i.
    for (auto y : a->between(t, i))
      for (const auto& [b, c] : a->multiply(a->arrow_element(ar), y)) m.arrows[ar](a->position(y), a->position(b)) = c;
  }
  return m;
}

ModuleMap map_from_free(const AlgebraPtr& a, const std::vector<std::size_t>& gens, const Representation& target,
                        const std::vector<Matrix>& images) {
  return map_from_free(a, gens, target, images, path_matrices(target));
}

ModuleMap map_from_free(const AlgebraPtr& a, const std::vector<std::size_t>& gens, const Representation& target,
                        const std::vector<Matrix>& images, const std::vector<Matrix>& paths) {
  const auto& f = target.field();
  ModuleMap h;
  for (std::size_t w = 0; w < a->num_vertices(); ++w) {
    std::size_t cols = 0;
    for (auto g : gens) cols += a->between(g, w).size();
    Matrix blk(f, target.dims[w], cols);
    std::size_t c = 0;
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (auto b : a->between(gens[g], w)) blk.set_block(0, c++, paths[b] * images[g]);
    h.blocks.push_back(std::move(blk));
  }
  return h;
}

ModuleMap left_multiplication(const AlgebraPtr& a, std::size_t i, std::size_t j, const Element& x) {
  const auto& f = a->field();
  ModuleMap h;
  for (std::size_t w = 0; w < a->num_vertices(); ++w) {
    const auto& src = a->between(i, w);
    Matrix blk(f, a->between(j, w).size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [b, v] : a->multiply(x, Element{{src[c], 1}})) blk(a->position(b), c) = v;
    h.blocks.push_back(std::move(blk));
  }
  return h;
}

Inclusion submodule(const Representation& m, const std::vector<Matrix>& bases) {
  const auto& q = m.algebra->quiver();
  std::vector<std::size_t> d;
  for (const auto& b : bases) d.push_back(b.cols());
  Inclusion inc{Representation(m.algebra, d), ModuleMap{bases}};
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto s = q.arrow(a).source;
    const auto t = q.arrow(a).target;
    if (d[s] == 0 || d[t] == 0) continue;
    auto sol = solve_linear(bases[t], m.arrows[a] * bases[s]);
    if (!sol) throw std::logic_error("submodule: subspaces are not closed under arrow '" + q.arrow(a).label + "'");
    inc.module.arrows[a] = sol->particular;
  }
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto s = q.arrow(a).source;
    const auto t = q.arrow(a).target;
    if (d[s] != 0 && d[t] == 0 && !(m.arrows[a] * bases[s]).is_zero())
      throw std::logic_error("submodule: subspaces are not closed under arrow '" + q.arrow(a).label + "'");
  }
  return inc;
}

Projection quotient(const Representation& m, const std::vector<Matrix>& bases) {
  const auto& q = m.algebra->quiver();
  const auto& f = m.field();
  const std::size_t nv = m.dims.size();
  std::vector<std::size_t> d(nv);
  std::vector<Matrix> lift(nv), proj(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    auto comp = complement_coordinates(bases[v]);
    d[v] = comp.size();
    lift[v] = Matrix::identity(f, m.dims[v]).select_columns(comp);
    auto full = inverse(hstack(bases[v], lift[v]));
    if (!full) throw std::logic_error("quotient: subspace basis is not independent");
    proj[v] = full->block(bases[v].cols(), 0, comp.size(), m.dims[v]);
  }
  Projection p{Representation(m.algebra, d), ModuleMap{proj}};
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const auto s = q.arrow(a).source;
    const auto t = q.arrow(a).target;
    p.module.arrows[a] = proj[t] * m.arrows[a] * lift[s];
  }
  return p;
}

Inclusion kernel(const ModuleMap& h, const Representation& from) {
  std::vector<Matrix> bases;
  for (const auto& b : h.blocks) bases.push_back(kernel_basis(b));
  return submodule(from, bases);
}

Projection cokernel(const ModuleMap& h, const Representation& to) {
  std::vector<Matrix> bases;
  for (const auto& b : h.blocks) bases.push_back(column_space(b));
  return quotient(to, bases);
}

Inclusion image(const ModuleMap& h, const Representation& to) {
  std::vector<Matrix> bases;
  for (const auto& b : h.blocks) bases.push_back(column_space(b));
  return submodule(to, bases);
}

DirectSum direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: no parts");
  const auto& alg = parts.front().algebra;
  const auto& f = alg->field();
  const std::size_t nv = alg->num_vertices();
  std::vector<std::size_t> d(nv, 0);
  for (const auto& p : parts) {
    if (p.algebra != alg) throw std::invalid_argument("direct_sum: modules over different algebras");
    for (std::size_t v = 0; v < nv; ++v) d[v] += p.dims[v];
  }
  DirectSum out{Representation(alg, d), {}, {}};
  const auto& q = alg->quiver();
  std::vector<std::size_t> off(nv, 0);
  for (const auto& p : parts) {
    ModuleMap inc, pr;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix i(f, d[v], p.dims[v]);
      for (std::size_t k = 0; k < p.dims[v]; ++k) i(off[v] + k, k) = 1;
      pr.blocks.push_back(i.transpose());
      inc.blocks.push_back(std::move(i));
    }
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
      out.module.arrows[a].set_block(off[q.arrow(a).target], off[q.arrow(a).source], p.arrows[a]);
    for (std::size_t v = 0; v < nv; ++v) off[v] += p.dims[v];
    out.inclusions.push_back(std::move(inc));
    out.projections.push_back(std::move(pr));
  }
  return out;
}

Representation direct_sum(const Representation& a, const Representation& b) { return direct_sum({a, b}).module; }

Representation transport(const Representation& m, const std::vector<Matrix>& g) {
  const auto& q = m.algebra->quiver();
  Representation out = m;
  std::vector<Matrix> ginv;
  for (const auto& b : g) {
    auto inv = inverse(b);
    if (!inv) throw std::invalid_argument("transport: base change not invertible");
    ginv.push_back(*inv);
  }
  for (std::size_t a = 0; a < q.num_arrows(); ++a)
    out.arrows[a] = g[q.arrow(a).target] * m.arrows[a] * ginv[q.arrow(a).source];
  return out;
}

std::pair<Representation, ModuleMap> random_base_change(const Representation& m, std::mt19937_64& rng) {
  const auto& f = m.field();
  std::uniform_int_distribution<std::uint32_t> dist(0, f.characteristic() - 1);
  ModuleMap g;
  for (auto d : m.dims) {
    for (;;) {
      Matrix b(f, d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) b(i, j) = dist(rng);
      if (rank(b) == d) {
        g.blocks.push_back(std::move(b));
        break;
      }
    }
  }
  return {transport(m, g.blocks), g};
}

ProjectiveCover projective_cover(const Representation& m) {
  auto gens = top_generators(m);
  ProjectiveCover pc;
  pc.gen_vertices = gens.vertex;
  pc.module = free_module(m.algebra, gens.vertex);
  pc.surjection = map_from_free(m.algebra, gens.vertex, m, gens.vector);
  return pc;
}

SyzygyData syzygy_data(const Representation& m) {
  SyzygyData s;
  s.cover = projective_cover(m);
  s.syzygy = kernel(s.cover.surjection, s.cover.module);
  return s;
}

Representation syzygy(const Representation& m) { return syzygy_data(m).syzygy.module; }

Representation syzygy(const Representation& m, std::size_t times) {
  Representation x = m;
  for (std::size_t i = 0; i < times; ++i) x = syzygy(x);
  return x;
}

bool is_projective(const Representation& m) {
  auto gens = top_generators(m);
  std::size_t d = 0;
  for (auto v : gens.vertex) d += m.algebra->starting_at(v).size();
  return d == m.total_dim();
}

std::optional<std::size_t> projective_dimension(const Representation& m, std::size_t cap) {
  Representation x = m;
  for (std::size_t n = 0; n <= cap; ++n) {
    if (is_projective(x)) return n;
    x = syzygy(x);
  }
  return std::nullopt;
}

Representation dualize(const Representation& m) {
  auto op = m.algebra->opposite();
  Representation d(op, m.dims);
  for (std::size_t a = 0; a < m.arrows.size(); ++a) d.arrows[a] = m.arrows[a].transpose();
  return d;
}

ModuleMap dualize(const ModuleMap& h) {
  ModuleMap d;
  for (const auto& b : h.blocks) d.blocks.push_back(b.transpose());
  return d;
}

AlgebraPtr base_algebra(const AlgebraPtr& a) {
  const auto& shape = a->presentation().loop_shape;
  if (!shape) throw std::invalid_argument("algebra is not of the form Lambda (x) K[X]/(X^k)");
  static std::mutex mu;
  static std::map<const BoundQuiverAlgebra*, std::pair<std::weak_ptr<const BoundQuiverAlgebra>, AlgebraPtr>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(a.get());
  if (it != cache.end()) {
    if (auto alive = it->second.first.lock(); alive && alive == a) return it->second.second;
  }
  auto base = shape->k == 1 && shape->loops.empty() && shape->base_arrows.size() == a->num_arrows()
                  ? a
                  : BoundQuiverAlgebra::build(*shape->base);
  cache[a.get()] = {a, base};
  return base;
}

Representation restrict_to_base(const Representation& m) {
  const auto& shape = m.algebra->presentation().loop_shape;
  if (!shape) throw std::invalid_argument("restrict_to_base: algebra is not of the form Lambda (x) K[X]/(X^k)");
  auto base = base_algebra(m.algebra);
  Representation r(base, m.dims);
  for (std::size_t i = 0; i < shape->base_arrows.size(); ++i) r.arrows[i] = m.arrows[shape->base_arrows[i]];
  return r;
}

Representation random_cokernel(const AlgebraPtr& a, const std::vector<std::size_t>& p1,
                               const std::vector<std::size_t>& p0, std::mt19937_64& rng, double density) {
  auto f0 = free_module(a, p0);
  const auto& f = a->field();
  std::uniform_int_distribution<std::uint32_t> dist(1, f.characteristic() - 1);
  std::bernoulli_distribution keep(density);
  std::vector<Matrix> images;
  for (auto v : p1) {
    Matrix img(f, f0.dims[v], 1);
    for (std::size_t i = 0; i < f0.dims[v]; ++i)
      if (keep(rng)) img(i, 0) = dist(rng);
    images.push_back(std::move(img));
  }
  auto h = map_from_free(a, p1, f0, images);
  return cokernel(h, f0).module;
}

}  // namespace lambdak
