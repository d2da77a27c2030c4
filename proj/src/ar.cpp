#include "lambdak/ar.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "lambdak/decompose.hpp"
#include "lambdak/gorenstein.hpp"

namespace lambdak {

namespace {

Matrix as_column(const std::vector<PrimeField::value_type>& v, const PrimeField& f) {
  Matrix c(f, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) c(i, 0) = v[i];
  return c;
}

Matrix flat_columns(const PrimeField& f, const std::vector<ModuleMap>& family, std::size_t rows) {
  Matrix m(f, rows, family.size());
  for (std::size_t j = 0; j < family.size(); ++j) {
    const auto v = flatten(family[j]);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = v[i];
  }
  return m;
}

std::size_t flat_size(const Representation& from, const Representation& to) {
  std::size_t n = 0;
  for (std::size_t v = 0; v < from.dims.size(); ++v) n += from.dims[v] * to.dims[v];
  return n;
}

// Maps out of the free module on gens into l, one per basis vector of l at a generator vertex.
std::vector<ModuleMap> maps_from_free(const AlgebraPtr& a, const std::vector<std::size_t>& gens,
                                      const Representation& l) {
  const auto& f = l.field();
  const auto paths = path_matrices(l);
  std::vector<ModuleMap> out;
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t e = 0; e < l.dims[gens[g]]; ++e) {
      std::vector<Matrix> images;
      for (std::size_t h = 0; h < gens.size(); ++h) images.emplace_back(f, l.dims[gens[h]], 1);
      images[g](e, 0) = 1;
      out.push_back(map_from_free(a, gens, l, images, paths));
    }
  return out;
}

// Per-vertex right inverse of a surjective map.
ModuleMap section(const ModuleMap& p) {
  ModuleMap s;
  for (const auto& b : p.blocks) {
    auto sol = solve_linear(b, Matrix::identity(b.field(), b.rows()));
    if (!sol) throw std::logic_error("section: map is not surjective");
    s.blocks.push_back(sol->particular);
  }
  return s;
}

}  // namespace

bool in_span(const PrimeField& field, const std::vector<ModuleMap>& family, const ModuleMap& f) {
  const auto v = flatten(f);
  Matrix m = flat_columns(field, family, v.size());
  return rank(m) == rank(hstack(m, as_column(v, field)));
}

Representation transpose_tr(const Representation& m) {
  const auto& a = m.algebra;
  auto op = a->opposite();
  const auto& f = m.field();
  auto sd = syzygy_data(m);
  const auto& p0_gens = sd.cover.gen_vertices;
  const auto& omega = sd.syzygy.module;
  auto rel = top_generators(omega);
  const auto& p1_gens = rel.vertex;

  // Offsets of generator blocks of P0 at each vertex.
  const std::size_t nv = a->num_vertices();
  std::vector<std::vector<std::size_t>> off(p0_gens.size(), std::vector<std::size_t>(nv, 0));
  {
    std::vector<std::size_t> run(nv, 0);
    for (std::size_t g = 0; g < p0_gens.size(); ++g)
      for (std::size_t w = 0; w < nv; ++w) {
        off[g][w] = run[w];
        run[w] += a->between(p0_gens[g], w).size();
      }
  }
  auto target = free_module(op, p1_gens);
  std::vector<std::vector<std::size_t>> toff(p1_gens.size(), std::vector<std::size_t>(nv, 0));
  {
    std::vector<std::size_t> run(nv, 0);
    for (std::size_t r = 0; r < p1_gens.size(); ++r)
      for (std::size_t w = 0; w < nv; ++w) {
        toff[r][w] = run[w];
        run[w] += op->between(p1_gens[r], w).size();
      }
  }
  std::vector<Matrix> images;
  for (std::size_t g = 0; g < p0_gens.size(); ++g) images.emplace_back(f, target.dims[p0_gens[g]], 1);
  for (std::size_t r = 0; r < p1_gens.size(); ++r) {
    const auto j = p1_gens[r];
    Matrix u = sd.syzygy.map.blocks[j] * rel.vector[r];
    for (std::size_t g = 0; g < p0_gens.size(); ++g) {
      const auto i = p0_gens[g];
      for (auto b : a->between(i, j)) {
        const auto c = u(off[g][j] + a->position(b), 0);
        if (c == 0) continue;
        for (const auto& [bo, co] : a->to_opposite(b)) {
          auto& slot = images[g](toff[r][i] + op->position(bo), 0);
          slot = f.add(slot, f.mul(c, co));
        }
      }
    }
  }
  auto h = map_from_free(op, p0_gens, target, images);
  return cokernel(h, target).module;
}

Representation tau(const Representation& m) {
  if (is_projective(m)) throw std::invalid_argument("tau: module is projective");
  return dualize(transpose_tr(m));
}

Representation tau_inverse(const Representation& m) {
  auto d = dualize(m);
  if (is_projective(d)) throw std::invalid_argument("tau_inverse: module is injective");
  return transpose_tr(d);
}

Representation relative_tau(const Representation& m, std::mt19937_64& rng) {
  if (is_projective(m)) throw std::invalid_argument("relative_tau: module is projective");
  const std::size_t d = gorenstein_dimension_value(m.algebra);
  Representation x = tau(m);
  x = syzygy(x, d);
  x = strip_projectives(x, rng);
  if (x.is_zero()) throw std::logic_error("relative_tau: translate vanished");
  return strip_projectives(gp_cosyzygy(x, d), rng);
}

Representation relative_tau_inverse(const Representation& m, std::mt19937_64& rng) {
  if (is_projective(m)) throw std::invalid_argument("relative_tau_inverse: module is projective");
  auto t = relative_tau(star_dual(m).module, rng);
  return star_dual(t).module;
}

StableHom stable_hom(const Representation& m, const Representation& n) {
  StableHom s;
  const auto& f = m.field();
  auto h = hom_space(m, n);
  s.hom_dim = h.size();
  if (h.empty()) return s;
  auto cover = projective_cover(n);
  MapCoordinates coords(f, h);
  Matrix fac(f, h.size(), 0);
  for (const auto& u : hom_space(m, cover.module)) {
    auto c = coords(compose(cover.surjection, u));
    if (!c) throw std::logic_error("stable_hom: composite outside Hom(M, N)");
    fac = hstack(fac, as_column(*c, f));
  }
  auto comp = complement_coordinates(fac);
  s.dim = comp.size();
  for (auto c : comp) s.basis.push_back(h[c]);
  return s;
}

AlmostSplitSequence almost_split_sequence(const Representation& m, const Representation& l) {
  if (m.algebra != l.algebra) throw std::invalid_argument("almost_split_sequence: modules over different algebras");
  if (is_projective(m)) throw std::invalid_argument("almost_split_sequence: module is projective");
  const auto& a = m.algebra;
  const auto& f = m.field();
  auto sd = syzygy_data(m);
  const auto& omega = sd.syzygy.module;
  const auto& iota = sd.syzygy.map;
  const auto& gens = sd.cover.gen_vertices;
  const auto& p0 = sd.cover.module;
  const auto& pi = sd.cover.surjection;

  auto hbasis = hom_space(omega, l);
  if (hbasis.empty()) throw std::logic_error("almost_split_sequence: Ext^1 vanishes");
  MapCoordinates coords(f, hbasis);
  const std::size_t h = hbasis.size();
  auto coords_of = [&](const ModuleMap& x) {
    auto c = coords(x);
    if (!c) throw std::logic_error("almost_split_sequence: map outside Hom(Omega M, L)");
    return as_column(*c, f);
  };

  // Restrictions of maps P0 -> L span the trivial extensions.
  Matrix triv(f, h, 0);
  for (const auto& u : maps_from_free(a, gens, l)) triv = hstack(triv, coords_of(compose(u, iota)));
  Matrix quot = kernel_basis(triv.transpose()).transpose();  // rows annihilate the trivial part
  AlmostSplitSequence out;
  out.ext_dim = quot.rows();
  if (out.ext_dim == 0) throw std::logic_error("almost_split_sequence: Ext^1 vanishes");

  // xi is in the socle when xi . r is trivial for every r in rad End(M). Impose a
  // few random radical elements, then confirm against the whole radical basis and
  // add any violated condition.
  auto gen_vectors = top_generators(m);
  const auto p0_paths = path_matrices(p0);
  auto pullback = [&](const ModuleMap& r) {
    std::vector<Matrix> pre;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const auto v = gens[g];
      auto sol = solve_linear(pi.blocks[v], r.blocks[v] * gen_vectors.vector[g]);
      if (!sol) throw std::logic_error("almost_split_sequence: lift failed");
      pre.push_back(sol->particular);
    }
    auto lift = map_from_free(a, gens, p0, pre, p0_paths);
    ModuleMap r1;
    for (std::size_t v = 0; v < omega.dims.size(); ++v) {
      auto sol = solve_linear(iota.blocks[v], lift.blocks[v] * iota.blocks[v]);
      if (!sol) throw std::logic_error("almost_split_sequence: lift does not preserve the syzygy");
      r1.blocks.push_back(sol->particular);
    }
    return r1;
  };
  const auto radical = endomorphisms(m).radical;
  std::vector<ModuleMap> pulled;
  for (const auto& r : radical) pulled.push_back(pullback(r));
  auto condition_rows = [&](const ModuleMap& r1) {
    Matrix act(f, h, h);
    for (std::size_t j = 0; j < h; ++j) act.set_block(0, j, coords_of(compose(hbasis[j], r1)));
    return quot * act;
  };
  std::mt19937_64 rng(0xa5);
  std::uniform_int_distribution<std::uint32_t> coef(0, f.characteristic() - 1);
  Matrix cond(f, 0, h);
  for (int t = 0; t < 2 && !radical.empty(); ++t) {
    std::vector<PrimeField::value_type> c(radical.size());
    for (auto& x : c) x = coef(rng);
    cond = vstack(cond, condition_rows(linear_combination(pulled, c, omega, omega)));
  }
  ModuleMap xi;
  for (;;) {
    Matrix socle = kernel_basis(cond);
    std::optional<std::size_t> pick;
    for (std::size_t c = 0; c < socle.cols() && !pick; ++c)
      if (!(quot * socle.column(c)).is_zero()) pick = c;
    if (!pick) throw std::logic_error("almost_split_sequence: socle of Ext^1 is degenerate");
    std::vector<PrimeField::value_type> coeff(h);
    for (std::size_t j = 0; j < h; ++j) coeff[j] = socle(j, *pick);
    xi = linear_combination(hbasis, coeff, omega, l);
    std::optional<std::size_t> violated;
    for (std::size_t i = 0; i < pulled.size() && !violated; ++i)
      if (!(quot * coords_of(compose(xi, pulled[i]))).is_zero()) violated = i;
    if (!violated) break;
    cond = vstack(cond, condition_rows(pulled[*violated]));
  }

  auto sum = direct_sum({l, p0});
  auto phi = add_maps(compose(sum.inclusions[0], xi), scale_map(compose(sum.inclusions[1], iota), f.neg(1)));
  auto p = cokernel(phi, sum.module);
  out.left = l;
  out.right = m;
  out.middle = p.module;
  out.f = compose(p.map, sum.inclusions[0]);
  out.g = compose(compose(pi, sum.projections[1]), section(p.map));
  return out;
}

AlmostSplitSequence almost_split_sequence(const Representation& m) { return almost_split_sequence(m, tau(m)); }

SequenceCheck check_sequence(const AlmostSplitSequence& s) {
  SequenceCheck c;
  c.exact = is_homomorphism(s.left, s.middle, s.f) && is_homomorphism(s.middle, s.right, s.g) &&
            is_injective(s.f, s.left) && is_surjective(s.g, s.right) && is_zero_map(compose(s.g, s.f)) &&
            s.middle.total_dim() == s.left.total_dim() + s.right.total_dim();
  std::vector<ModuleMap> through;
  for (const auto& t : hom_space(s.right, s.middle)) through.push_back(compose(s.g, t));
  c.non_split = !in_span(s.right.field(), through, identity_map(s.right));
  return c;
}

bool factors_through_middle(const AlmostSplitSequence& s, const Representation& x, const ModuleMap& h) {
  std::vector<ModuleMap> through;
  for (const auto& t : hom_space(x, s.middle)) through.push_back(compose(s.g, t));
  return in_span(x.field(), through, h);
}

std::vector<ModuleMap> radical_maps(const Representation& x, const Representation& y, bool same_object) {
  if (same_object) return endomorphisms(x).radical;
  return hom_space(x, y);
}

KnitMode parse_knit_mode(const std::string& s) {
  if (s == "knit") return KnitMode::knit;
  if (s == "sweep") return KnitMode::sweep;
  throw std::invalid_argument("unknown enumeration mode '" + s + "'");
}

std::string to_string(KnitMode m) { return m == KnitMode::knit ? "knit" : "sweep"; }

std::size_t ARQuiver::num_projective() const {
  std::size_t n = 0;
  for (const auto& x : nodes) n += x.projective;
  return n;
}

std::optional<std::size_t> find_node(const ARQuiver& q, const Representation& m) {
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    const auto& x = q.nodes[i].module;
    if (x.dims == m.dims && isomorphic_indecomposables(x, m)) return i;
  }
  return std::nullopt;
}

namespace {

class Knitter {
 public:
  Knitter(const AlgebraPtr& a, const KnitOptions& o) : a_(a), opts_(o), rng_(o.seed) {
    q_.algebra = a;
    q_.mode = o.mode;
  }

  ARQuiver run() {
    q_.gorenstein_dim = gorenstein_dimension_value(a_);
    if (opts_.mode == KnitMode::knit && q_.gorenstein_dim > 1 && !opts_.allow_higher_gorenstein)
      throw std::domain_error("knitting mode needs a 1-Gorenstein algebra; use sweep mode");
    for (std::size_t i = 0; i < a_->num_vertices(); ++i) admit(projective_module(a_, i));
    for (std::size_t i = 0; i < a_->num_vertices(); ++i) admit_summands(syzygy(simple_module(a_, i), q_.gorenstein_dim));
    if (opts_.mode == KnitMode::sweep) sweep_seeds();
    while (!queue_.empty() && !over_budget_) {
      const auto idx = queue_.front();
      queue_.pop_front();
      process(idx);
    }
    q_.closed = !over_budget_;
    if (q_.closed) build_arrows();
    return std::move(q_);
  }

 private:
  std::optional<std::size_t> admit(const Representation& m) {
    if (auto i = find_node(q_, m)) return i;
    if (q_.nodes.size() >= opts_.budget || m.total_dim() > opts_.dim_cap) {
      if (!over_budget_)
        q_.diagnostics.push_back(m.total_dim() > opts_.dim_cap ? "module dimension exceeds cap " +
                                                                     std::to_string(opts_.dim_cap)
                                                               : "node budget " + std::to_string(opts_.budget) +
                                                                     " exceeded");
      over_budget_ = true;
      return std::nullopt;
    }
    if (!is_indecomposable(m))
      throw std::logic_error("knit: produced module " + format_dims(m.dims) + " is not absolutely indecomposable");
    if (!is_gorenstein_projective(m).gorenstein_projective)
      throw std::logic_error("knit: produced module " + format_dims(m.dims) + " is not Gorenstein projective");
    ARNode node;
    node.module = m;
    node.projective = is_projective(m);
    q_.nodes.push_back(std::move(node));
    queue_.push_back(q_.nodes.size() - 1);
    return q_.nodes.size() - 1;
  }

  void admit_summands(const Representation& m) {
    if (m.is_zero()) return;
    for (auto& s : decompose(m, rng_))
      if (!is_projective(s.module)) admit(s.module);
  }

  void sweep_seeds() {
    const std::size_t nv = a_->num_vertices();
    std::uniform_int_distribution<std::size_t> vert(0, nv - 1), count(1, 3);
    for (std::size_t s = 0; s < opts_.sweep_samples && !over_budget_; ++s) {
      std::vector<std::size_t> p0(count(rng_) == 3 ? 2 : 1), p1(count(rng_));
      for (auto& v : p0) v = vert(rng_);
      for (auto& v : p1) v = vert(rng_);
      auto m = random_cokernel(a_, p1, p0, rng_, 0.6);
      admit_summands(syzygy(m, q_.gorenstein_dim));
    }
  }

  // Intermediate modules must stay decomposable over the coefficient field.
  bool too_large(const Representation& x) {
    const std::size_t limit = std::min<std::size_t>(2 * opts_.dim_cap, a_->field().characteristic() - 1);
    if (x.total_dim() <= limit) return false;
    if (!over_budget_) q_.diagnostics.push_back("intermediate module dimension exceeds " + std::to_string(limit));
    over_budget_ = true;
    return true;
  }

  std::optional<Representation> guarded_relative_tau(const Representation& m) {
    Representation x = tau(m);
    if (too_large(x)) return std::nullopt;
    x = syzygy(x, q_.gorenstein_dim);
    if (too_large(x)) return std::nullopt;
    x = strip_projectives(x, rng_);
    x = gp_cosyzygy(x, q_.gorenstein_dim);
    if (too_large(x)) return std::nullopt;
    return strip_projectives(x, rng_);
  }

  void process(std::size_t idx) {
    if (q_.nodes[idx].projective) return;
    const Representation m = q_.nodes[idx].module;
    auto l = guarded_relative_tau(m);
    if (!l) return;
    auto t = admit(*l);
    if (!t) return;
    q_.nodes[idx].tau = t;
    auto seq = almost_split_sequence(m, q_.nodes[*t].module);
    if (too_large(seq.middle)) return;
    auto check = check_sequence(seq);
    if (!check.ok())
      throw std::logic_error("knit: sequence ending at " + format_dims(m.dims) + " is not exact and non-split");
    std::map<std::size_t, std::size_t> mult;
    for (auto& s : decompose(seq.middle, rng_)) {
      auto j = admit(s.module);
      if (!j) return;
      ++mult[*j];
    }
    q_.nodes[idx].middle.assign(mult.begin(), mult.end());
    auto dual = star_dual(m).module;
    if (too_large(dual)) return;
    Representation x = tau(dual);
    if (too_large(x)) return;
    x = strip_projectives(gp_cosyzygy(strip_projectives(syzygy(x, q_.gorenstein_dim), rng_), q_.gorenstein_dim), rng_);
    if (too_large(x)) return;
    auto u = admit(star_dual(x).module);
    if (!u) return;
    q_.nodes[idx].tau_inverse = u;
  }

  void set_arrow(std::size_t from, std::size_t to, std::size_t mult) {
    auto [it, inserted] = q_.arrows.emplace(std::make_pair(from, to), mult);
    if (!inserted && it->second != mult)
      q_.diagnostics.push_back("inconsistent arrow multiplicity " + std::to_string(from) + " -> " +
                               std::to_string(to));
  }

  void build_arrows() {
    for (std::size_t i = 0; i < q_.nodes.size(); ++i) {
      const auto& n = q_.nodes[i];
      if (n.projective || !n.tau) continue;
      for (const auto& [x, mult] : n.middle) {
        set_arrow(x, i, mult);
        set_arrow(*n.tau, x, mult);
      }
    }
  }

  AlgebraPtr a_;
  KnitOptions opts_;
  std::mt19937_64 rng_;
  ARQuiver q_;
  std::deque<std::size_t> queue_;
  bool over_budget_ = false;
};

}  // namespace

ARQuiver knit_gproj(const AlgebraPtr& a, const KnitOptions& opts) { return Knitter(a, opts).run(); }

std::map<std::pair<std::size_t, std::size_t>, std::size_t> irreducible_map_counts(const ARQuiver& q) {
  if (!q.closed) throw std::invalid_argument("irreducible_map_counts: quiver is not closed");
  const std::size_t n = q.nodes.size();
  const auto& f = q.algebra->field();
  std::vector<std::vector<std::vector<ModuleMap>>> rad(n, std::vector<std::vector<ModuleMap>>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rad[x][y] = radical_maps(q.nodes[x].module, q.nodes[y].module, x == y);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (rad[x][y].empty()) continue;
      const std::size_t rows = flat_size(q.nodes[x].module, q.nodes[y].module);
      std::vector<ModuleMap> sq;
      for (std::size_t z = 0; z < n; ++z)
        for (const auto& u : rad[x][z])
          for (const auto& v : rad[z][y]) sq.push_back(compose(v, u));
      const std::size_t r2 = sq.empty() ? 0 : rank(flat_columns(f, sq, rows));
      const std::size_t m = rad[x][y].size() - r2;
      if (m) out[{x, y}] = m;
    }
  return out;
}

std::optional<std::vector<std::size_t>> syzygy_permutation(const ARQuiver& q) {
  std::mt19937_64 rng(0x0e6a);
  std::vector<std::size_t> perm(q.nodes.size());
  std::vector<bool> hit(q.nodes.size(), false);
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    perm[i] = i;
    if (q.nodes[i].projective) continue;
    auto s = strip_projectives(syzygy(q.nodes[i].module), rng);
    auto j = find_node(q, s);
    if (!j || q.nodes[*j].projective || hit[*j]) return std::nullopt;
    hit[*j] = true;
    perm[i] = *j;
  }
  return perm;
}

std::string to_dot(const ARQuiver& q) {
  std::ostringstream os;
  os << "digraph ar_quiver {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < q.nodes.size(); ++i) {
    const auto& n = q.nodes[i];
    os << "  n" << i << " [label=\"" << format_dims(n.module.dims) << "\", shape=" << (n.projective ? "box" : "ellipse")
       << "];\n";
  }
  for (const auto& [e, m] : q.arrows) {
    os << "  n" << e.first << " -> n" << e.second;
    if (m > 1) os << " [label=\"" << m << "\"]";
    os << ";\n";
  }
  for (std::size_t i = 0; i < q.nodes.size(); ++i)
    if (q.nodes[i].tau) os << "  n" << i << " -> n" << *q.nodes[i].tau << " [style=dashed, constraint=false];\n";
  os << "}\n";
  return os.str();
}

}  // namespace lambdak
