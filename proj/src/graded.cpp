#include "lambdak/graded.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "lambdak/ar.hpp"
#include "lambdak/decompose.hpp"
#include "lambdak/gorenstein.hpp"

namespace lambdak {

namespace {

std::size_t wrap(long long slot, std::size_t modulus) {
  const auto m = static_cast<long long>(modulus);
  return static_cast<std::size_t>(((slot % m) + m) % m);
}

CoverPtr build_cover(const AlgebraPtr& a, std::size_t slots, bool cyclic) {
  if (slots == 0) throw std::invalid_argument("covering algebra needs at least one slot");
  const auto& q = a->quiver();
  for (const auto& ar : q.arrows())
    if (ar.degree < 0) throw std::invalid_argument("graded modules need nonnegative arrow degrees");
  auto c = std::make_shared<CoveringAlgebra>();
  c->base = a;
  c->slots = slots;
  c->cyclic = cyclic;
  if (cyclic && slots == 1) {
    c->algebra = a;
    for (std::size_t i = 0; i < q.num_arrows(); ++i) c->arrow_index.push_back(i);
    return c;
  }
  AlgebraPresentation p;
  p.field = a->presentation().field;
  for (std::size_t s = 0; s < slots; ++s)
    for (std::size_t v = 0; v < q.num_vertices(); ++v) p.quiver.add_vertex(q.vertex(v) + "@" + std::to_string(s));
  c->arrow_index.assign(q.num_arrows() * slots, std::nullopt);
  for (std::size_t s = 0; s < slots; ++s)
    for (std::size_t i = 0; i < q.num_arrows(); ++i) {
      const auto& ar = q.arrow(i);
      const long long t = static_cast<long long>(s) + ar.degree;
      if (!cyclic && t >= static_cast<long long>(slots)) continue;
      const auto ts = cyclic ? wrap(t, slots) : static_cast<std::size_t>(t);
      c->arrow_index[i * slots + s] = p.quiver.add_arrow(ar.label + "@" + std::to_string(s), c->vertex(ar.source, s),
                                                         c->vertex(ar.target, ts), 0);
    }
  for (const auto& rel : a->presentation().relations) {
    for (std::size_t s = 0; s < slots; ++s) {
      Relation lifted;
      bool inside = true;
      for (const auto& term : rel.terms) {
        Word w;
        long long slot = static_cast<long long>(s);
        for (auto ar : term.word) {
          const auto cur = cyclic ? wrap(slot, slots) : static_cast<std::size_t>(slot);
          if (!cyclic && slot >= static_cast<long long>(slots)) {
            inside = false;
            break;
          }
          auto idx = c->arrow_index[ar * slots + cur];
          if (!idx) {
            inside = false;
            break;
          }
          w.push_back(*idx);
          slot += q.arrow(ar).degree;
        }
        if (!inside) break;
        lifted.terms.push_back({term.coefficient, w});
      }
      if (inside) p.relations.push_back(std::move(lifted));
    }
  }
  c->algebra = BoundQuiverAlgebra::build(p);
  return c;
}

CoverPtr cached_cover(const AlgebraPtr& a, std::size_t slots, bool cyclic) {
  static std::mutex mu;
  static std::map<std::tuple<const BoundQuiverAlgebra*, std::size_t, bool>, CoverPtr> cache;
  const auto key = std::make_tuple(a.get(), slots, cyclic);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end() && it->second->base == a) return it->second;
  }
  auto c = build_cover(a, slots, cyclic);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(key, c).first->second;
}

std::size_t slot_of(const GradedModule& x, int degree) { return static_cast<std::size_t>(degree - x.lo); }

bool in_frame(const GradedModule& x, int degree) { return degree >= x.lo && degree <= x.hi(); }

std::size_t max_arrow_degree(const AlgebraPtr& a) { return static_cast<std::size_t>(std::max(0, a->max_degree())); }

}  // namespace

CoverPtr window_cover(const AlgebraPtr& a, std::size_t width) { return cached_cover(a, width, false); }

CoverPtr cyclic_cover(const AlgebraPtr& a, std::size_t modulus) { return cached_cover(a, modulus, true); }

std::size_t GradedModule::dim(std::size_t v, int degree) const {
  if (!in_frame(*this, degree)) return 0;
  return rep.dims[cover->vertex(v, slot_of(*this, degree))];
}

std::optional<std::pair<int, int>> GradedModule::support() const {
  std::optional<std::pair<int, int>> s;
  const auto nv = algebra->num_vertices();
  for (std::size_t slot = 0; slot < width(); ++slot)
    for (std::size_t v = 0; v < nv; ++v) {
      if (rep.dims[cover->vertex(v, slot)] == 0) continue;
      const int d = lo + static_cast<int>(slot);
      if (!s) s = std::make_pair(d, d);
      s->first = std::min(s->first, d);
      s->second = std::max(s->second, d);
    }
  return s;
}

GradedModule make_graded(const AlgebraPtr& a, int lo, const Representation& rep) {
  GradedModule x;
  x.algebra = a;
  x.lo = lo;
  const auto nv = a->num_vertices();
  if (nv == 0 || rep.dims.size() % nv != 0) throw std::invalid_argument("make_graded: representation is not over a cover");
  x.cover = window_cover(a, rep.dims.size() / nv);
  if (rep.algebra != x.cover->algebra) throw std::invalid_argument("make_graded: representation is not over the window cover");
  x.rep = rep;
  return x;
}

GradedModule graded_zero(const AlgebraPtr& a) {
  auto c = window_cover(a, 1);
  return make_graded(a, 0, Representation(c->algebra, std::vector<std::size_t>(a->num_vertices(), 0)));
}

GradedModule graded_simple(const AlgebraPtr& a, std::size_t v, int degree) {
  auto c = window_cover(a, 1);
  std::vector<std::size_t> dims(a->num_vertices(), 0);
  dims.at(v) = 1;
  return make_graded(a, degree, Representation(c->algebra, dims));
}

FreeGradedModule graded_free(const AlgebraPtr& a, const std::vector<std::pair<std::size_t, int>>& gens) {
  if (gens.empty()) return {graded_zero(a), {std::vector<std::pair<std::size_t, std::size_t>>(a->num_vertices())}};
  int lo = gens.front().second, top = gens.front().second;
  for (const auto& [v, d] : gens) {
    lo = std::min(lo, d);
    top = std::max(top, d);
  }
  const std::size_t width = static_cast<std::size_t>(top - lo) + max_arrow_degree(a) + 1;
  auto c = window_cover(a, width);
  const auto nv = a->num_vertices();
  FreeGradedModule out;
  out.coordinates.assign(nv * width, {});
  std::vector<std::map<std::size_t, std::size_t>> index(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (auto b : a->starting_at(gens[g].first)) {
      const auto& be = a->basis(b);
      const auto cv = c->vertex(be.target, static_cast<std::size_t>(gens[g].second - lo + be.degree));
      index[g][b] = out.coordinates[cv].size();
      out.coordinates[cv].push_back({g, b});
    }
  std::vector<std::size_t> dims(nv * width);
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = out.coordinates[i].size();
  Representation rep(c->algebra, dims);
  const auto& q = a->quiver();
  for (std::size_t slot = 0; slot < width; ++slot)
    for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
      auto ca = c->arrow(ar, slot);
      if (!ca) continue;
      const auto src = c->vertex(q.arrow(ar).source, slot);
      auto& mat = rep.arrows[*ca];
      for (std::size_t col = 0; col < out.coordinates[src].size(); ++col) {
        const auto [g, b] = out.coordinates[src][col];
        for (const auto& [r, coef] : a->times_arrow(b, ar)) mat(index[g].at(r), col) = coef;
      }
    }
  out.module = make_graded(a, lo, rep);
  return out;
}

GradedModule graded_projective(const AlgebraPtr& a, std::size_t v) { return graded_free(a, {{v, 0}}).module; }

GradedModule graded_regular(const AlgebraPtr& a) {
  std::vector<std::pair<std::size_t, int>> gens;
  for (std::size_t v = 0; v < a->num_vertices(); ++v) gens.push_back({v, 0});
  return graded_free(a, gens).module;
}

GradedModule grade_shift(const GradedModule& x, int i) {
  GradedModule y = x;
  y.lo = x.lo - i;
  return y;
}

GradedModule reframe(const GradedModule& x, int lo, std::size_t width) {
  if (lo == x.lo && width == x.width()) return x;
  auto c = window_cover(x.algebra, width);
  const auto nv = x.algebra->num_vertices();
  const int hi = lo + static_cast<int>(width) - 1;
  std::vector<std::size_t> dims(nv * width, 0);
  for (std::size_t slot = 0; slot < x.width(); ++slot) {
    const int d = x.lo + static_cast<int>(slot);
    for (std::size_t v = 0; v < nv; ++v) {
      const auto n = x.rep.dims[x.cover->vertex(v, slot)];
      if (n == 0) continue;
      if (d < lo || d > hi) throw std::invalid_argument("reframe: support does not fit the frame");
      dims[c->vertex(v, static_cast<std::size_t>(d - lo))] = n;
    }
  }
  Representation rep(c->algebra, dims);
  const auto& q = x.algebra->quiver();
  for (std::size_t slot = 0; slot < width; ++slot) {
    const int d = lo + static_cast<int>(slot);
    if (!in_frame(x, d)) continue;
    for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
      auto na = c->arrow(ar, slot);
      auto oa = x.cover->arrow(ar, slot_of(x, d));
      if (na && oa) rep.arrows[*na] = x.rep.arrows[*oa];
    }
  }
  GradedModule y;
  y.algebra = x.algebra;
  y.lo = lo;
  y.cover = c;
  y.rep = std::move(rep);
  return y;
}

GradedModule trim(const GradedModule& x) {
  auto s = x.support();
  if (!s) return graded_zero(x.algebra);
  return reframe(x, s->first, static_cast<std::size_t>(s->second - s->first + 1));
}

std::pair<GradedModule, GradedModule> common_frame(const GradedModule& x, const GradedModule& y,
                                                   std::size_t margin_below, std::size_t margin_above) {
  if (x.algebra != y.algebra) throw std::invalid_argument("graded modules over different algebras");
  auto tx = trim(x), ty = trim(y);
  int lo, hi;
  if (x.is_zero() && y.is_zero()) {
    lo = hi = 0;
  } else if (x.is_zero()) {
    lo = ty.lo, hi = ty.hi();
  } else if (y.is_zero()) {
    lo = tx.lo, hi = tx.hi();
  } else {
    lo = std::min(tx.lo, ty.lo);
    hi = std::max(tx.hi(), ty.hi());
  }
  lo -= static_cast<int>(margin_below);
  hi += static_cast<int>(margin_above);
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  return {reframe(tx, lo, width), reframe(ty, lo, width)};
}

GradedMap truncation_map(const GradedModule& x, int i, TruncationSide side) {
  const auto& f = x.rep.field();
  const auto nv = x.algebra->num_vertices();
  std::vector<Matrix> bases;
  for (std::size_t slot = 0; slot < x.width(); ++slot)
    for (std::size_t v = 0; v < nv; ++v) {
      const auto n = x.rep.dims[x.cover->vertex(v, slot)];
      const int d = x.lo + static_cast<int>(slot);
      const bool keep = side == TruncationSide::at_least ? d >= i : d >= i + 1;
      bases.push_back(keep ? Matrix::identity(f, n) : Matrix(f, n, 0));
    }
  // bases is indexed by slot-major cover vertex order, matching CoveringAlgebra::vertex.
  GradedMap out;
  if (side == TruncationSide::at_least) {
    auto inc = submodule(x.rep, bases);
    out.source = make_graded(x.algebra, x.lo, inc.module);
    out.target = x;
    out.map = inc.map;
  } else {
    auto proj = quotient(x.rep, bases);
    out.source = x;
    out.target = make_graded(x.algebra, x.lo, proj.module);
    out.map = proj.map;
  }
  return out;
}

GradedModule truncate(const GradedModule& x, int i, TruncationSide side) {
  auto m = truncation_map(x, i, side);
  return trim(side == TruncationSide::at_least ? m.source : m.target);
}

Representation forget(const GradedModule& x, std::size_t m) {
  if (m == 0) return x.rep;
  auto c = cyclic_cover(x.algebra, m);
  const auto nv = x.algebra->num_vertices();
  const auto& f = x.rep.field();
  // Slices of residue class r are stacked in increasing degree.
  std::vector<std::size_t> dims(nv * m, 0);
  std::vector<std::size_t> offset(x.rep.dims.size(), 0);
  for (std::size_t slot = 0; slot < x.width(); ++slot) {
    const auto r = wrap(x.lo + static_cast<long long>(slot), m);
    for (std::size_t v = 0; v < nv; ++v) {
      const auto cv = x.cover->vertex(v, slot);
      offset[cv] = dims[c->vertex(v, r)];
      dims[c->vertex(v, r)] += x.rep.dims[cv];
    }
  }
  Representation out(c->algebra, dims);
  const auto& q = x.algebra->quiver();
  for (std::size_t slot = 0; slot < x.width(); ++slot) {
    const auto r = wrap(x.lo + static_cast<long long>(slot), m);
    for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
      auto oa = x.cover->arrow(ar, slot);
      if (!oa) continue;
      const auto& blk = x.rep.arrows[*oa];
      if (blk.empty()) continue;
      const auto ts = slot + static_cast<std::size_t>(q.arrow(ar).degree);
      const auto src = x.cover->vertex(q.arrow(ar).source, slot);
      const auto tgt = x.cover->vertex(q.arrow(ar).target, ts);
      auto na = c->arrow(ar, r);
      out.arrows[*na].set_block(offset[tgt], offset[src], blk);
    }
  }
  (void)f;
  return out;
}

GradedHom graded_hom(const GradedModule& x, const GradedModule& y) {
  auto [cx, cy] = common_frame(x, y);
  GradedHom h{cx, cy, hom_space(cx.rep, cy.rep)};
  return h;
}

std::size_t graded_hom_dim(const GradedModule& x, const GradedModule& y) { return graded_hom(x, y).basis.size(); }

std::size_t graded_stable_hom_dim(const GradedModule& x, const GradedModule& y) {
  // Room above y so the projective cover of y is not cut off by the frame.
  auto [cx, cy] = common_frame(x, y, 0, max_arrow_degree(x.algebra));
  return stable_hom(cx.rep, cy.rep).dim;
}

GradedSyzygy graded_syzygy_data(const GradedModule& x) {
  auto t = trim(x);
  auto w = reframe(t, t.lo, t.width() + max_arrow_degree(x.algebra));
  auto sd = syzygy_data(w.rep);
  GradedSyzygy out;
  const auto nv = x.algebra->num_vertices();
  for (auto cv : sd.cover.gen_vertices) out.cover_generators.push_back({cv % nv, w.lo + static_cast<int>(cv / nv)});
  out.syzygy = trim(make_graded(x.algebra, w.lo, sd.syzygy.module));
  return out;
}

GradedModule graded_syzygy(const GradedModule& x, std::size_t times) {
  GradedModule y = x;
  for (std::size_t i = 0; i < times; ++i) y = graded_syzygy_data(y).syzygy;
  return y;
}

GradedModule graded_cosyzygy(const GradedModule& x, std::size_t times) {
  GradedModule y = x;
  const auto m = max_arrow_degree(x.algebra);
  for (std::size_t i = 0; i < times; ++i) {
    auto t = trim(y);
    auto w = reframe(t, t.lo - static_cast<int>(m), t.width() + 2 * m);
    y = trim(make_graded(x.algebra, w.lo, gp_cosyzygy(w.rep)));
  }
  return y;
}

GradedModule graded_suspension(const GradedModule& x, int i) {
  if (i >= 0) return graded_cosyzygy(x, static_cast<std::size_t>(i));
  return graded_syzygy(x, static_cast<std::size_t>(-i));
}

bool graded_is_projective(const GradedModule& x) {
  auto t = trim(x);
  return is_projective(reframe(t, t.lo, t.width() + max_arrow_degree(x.algebra)).rep);
}

GradedModule graded_strip_projectives(const GradedModule& x, std::mt19937_64& rng) {
  auto t = trim(x);
  auto w = reframe(t, t.lo, t.width() + max_arrow_degree(x.algebra));
  return trim(make_graded(x.algebra, w.lo, strip_projectives(w.rep, rng)));
}

std::optional<ModuleMap> graded_is_isomorphic(const GradedModule& x, const GradedModule& y, std::mt19937_64& rng) {
  auto [cx, cy] = common_frame(x, y);
  return is_isomorphic(cx.rep, cy.rep, rng);
}

GradedModule graded_direct_sum(const std::vector<GradedModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("graded_direct_sum: no summands");
  int lo = 0, hi = 0;
  bool any = false;
  for (const auto& p : parts) {
    auto s = p.support();
    if (!s) continue;
    lo = any ? std::min(lo, s->first) : s->first;
    hi = any ? std::max(hi, s->second) : s->second;
    any = true;
  }
  if (!any) return graded_zero(parts.front().algebra);
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  std::vector<Representation> reps;
  for (const auto& p : parts) reps.push_back(reframe(trim(p), lo, width).rep);
  return make_graded(parts.front().algebra, lo, direct_sum(reps).module);
}

bool is_graded_homomorphism(const GradedMap& f) {
  if (f.source.lo != f.target.lo || f.source.width() != f.target.width()) return false;
  return is_homomorphism(f.source.rep, f.target.rep, f.map);
}

std::string format_graded_dims(const GradedModule& x) {
  std::ostringstream os;
  const auto nv = x.algebra->num_vertices();
  bool first = true;
  for (std::size_t slot = 0; slot < x.width(); ++slot) {
    std::vector<std::size_t> d(nv);
    bool nonzero = false;
    for (std::size_t v = 0; v < nv; ++v) {
      d[v] = x.rep.dims[x.cover->vertex(v, slot)];
      nonzero = nonzero || d[v] != 0;
    }
    if (!nonzero) continue;
    os << (first ? "" : " ") << x.lo + static_cast<int>(slot) << ':' << format_dims(d);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace lambdak
