#include "lambdak/gorenstein.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace lambdak {

std::size_t ext1_dim(const Representation& n, const Representation& l) {
  if (n.algebra != l.algebra) throw std::invalid_argument("ext1_dim: modules over different algebras");
  auto sd = syzygy_data(n);
  std::size_t hom_p0 = 0;
  for (auto v : sd.cover.gen_vertices) hom_p0 += l.dims[v];
  const std::size_t a = hom_dim(sd.syzygy.module, l);
  const std::size_t b = hom_dim(n, l);
  return a + b - hom_p0;
}

bool ExtProfile::vanishes() const {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; });
}

ExtProfile ext_dims(const Representation& m, std::size_t bound) {
  ExtProfile p;
  if (bound == 0) return p;
  const auto reg = regular_module(m.algebra);
  Representation x = m;
  for (std::size_t i = 1; i <= bound; ++i) {
    if (is_projective(x)) {
      p.dims.resize(bound, 0);
      break;
    }
    p.dims.push_back(ext1_dim(x, reg));
    if (i < bound) x = syzygy(x);
  }
  return p;
}

std::optional<std::size_t> GorensteinCertificate::dimension() const {
  if (right && left && *right == *left) return right;
  return std::nullopt;
}

GorensteinCertificate gorenstein_dimension(const AlgebraPtr& a, std::size_t bound) {
  GorensteinCertificate c;
  c.bound = bound;
  c.right = projective_dimension(dualize(regular_module(a)), bound);
  c.left = projective_dimension(dualize(regular_module(a->opposite())), bound);
  return c;
}

std::size_t gorenstein_dimension_value(const AlgebraPtr& a) {
  static std::mutex mu;
  static std::map<const BoundQuiverAlgebra*, std::pair<std::weak_ptr<const BoundQuiverAlgebra>, std::size_t>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(a.get());
    if (it != cache.end())
      if (auto alive = it->second.first.lock(); alive && alive == a) return it->second.second;
  }
  auto cert = gorenstein_dimension(a);
  auto d = cert.dimension();
  if (!d) throw std::domain_error("algebra is not Gorenstein within the injective dimension bound");
  std::lock_guard<std::mutex> lock(mu);
  cache[a.get()] = {a, *d};
  return *d;
}

std::optional<std::size_t> global_dimension(const AlgebraPtr& a, std::size_t cap) {
  std::size_t g = 0;
  for (std::size_t i = 0; i < a->num_vertices(); ++i) {
    auto pd = projective_dimension(simple_module(a, i), cap);
    if (!pd) return std::nullopt;
    g = std::max(g, *pd);
  }
  return g;
}

GpMethod parse_gp_method(const std::string& s) {
  if (s == "ext") return GpMethod::ext;
  if (s == "restriction") return GpMethod::restriction;
  if (s == "monic") return GpMethod::monic;
  if (s == "all") return GpMethod::all;
  throw std::invalid_argument("unknown GP test method '" + s + "'");
}

std::string to_string(GpMethod m) {
  switch (m) {
    case GpMethod::ext: return "ext";
    case GpMethod::restriction: return "restriction";
    case GpMethod::monic: return "monic";
    case GpMethod::all: return "all";
  }
  return "?";
}

bool GpVerdict::agree() const {
  std::optional<bool> first;
  for (const auto& v : {ext, restriction, monic}) {
    if (!v) continue;
    if (!first) first = v;
    if (*first != *v) return false;
  }
  return true;
}

bool restriction_test_applies(const AlgebraPtr& a) { return a->presentation().loop_shape.has_value(); }

bool monic_test_applies(const AlgebraPtr& a) {
  const auto& shape = a->presentation().loop_shape;
  return shape && shape->base && shape->base->is_hereditary_shape();
}

bool restriction_test(const Representation& m) { return is_projective(restrict_to_base(m)); }

bool monic_test(const Representation& m) {
  if (!monic_test_applies(m.algebra)) throw std::invalid_argument("monic test needs a hereditary base algebra");
  const auto& shape = *m.algebra->presentation().loop_shape;
  const auto& q = m.algebra->quiver();
  const auto& f = m.field();
  for (std::size_t t = 0; t < m.dims.size(); ++t) {
    Matrix incoming(f, m.dims[t], 0);
    for (auto a : shape.base_arrows)
      if (q.arrow(a).target == t) incoming = hstack(incoming, m.arrows[a]);
    if (rank(incoming) != incoming.cols()) return false;
  }
  return true;
}

GpVerdict is_gorenstein_projective(const Representation& m, GpMethod method, bool paranoid) {
  GpVerdict v;
  const bool want_ext = method == GpMethod::ext || method == GpMethod::all;
  if (method == GpMethod::restriction && !restriction_test_applies(m.algebra))
    throw std::invalid_argument("restriction test needs a Lambda_k shaped algebra");
  if (method == GpMethod::monic && !monic_test_applies(m.algebra))
    throw std::invalid_argument("monic test needs a Lambda_k shaped algebra with hereditary base");
  if (want_ext) {
    const std::size_t d = gorenstein_dimension_value(m.algebra);
    v.profile = ext_dims(m, paranoid ? 2 * d + 2 : d);
    v.ext = v.profile.vanishes();
  }
  if ((method == GpMethod::restriction || method == GpMethod::all) && restriction_test_applies(m.algebra))
    v.restriction = restriction_test(m);
  if ((method == GpMethod::monic || method == GpMethod::all) && monic_test_applies(m.algebra))
    v.monic = monic_test(m);
  v.gorenstein_projective = v.ext ? *v.ext : v.restriction ? *v.restriction : v.monic.value_or(false);
  return v;
}

CosyzygyData gp_cosyzygy_data(const Representation& m) {
  const auto& a = m.algebra;
  const auto& f = m.field();
  const auto& q = a->quiver();
  const std::size_t nv = a->num_vertices();
  std::vector<Representation> proj(nv);
  std::vector<std::vector<ModuleMap>> homs(nv);
  for (std::size_t i = 0; i < nv; ++i) proj[i] = projective_module(a, i);
  const auto cd = cover_data(m);
  for (std::size_t i = 0; i < nv; ++i) homs[i] = hom_space(cd, m, proj[i]);

  std::vector<std::size_t> gens;
  std::vector<ModuleMap> chosen;
  for (std::size_t i = 0; i < nv; ++i) {
    if (homs[i].empty()) continue;
    MapCoordinates coords(f, homs[i]);
    Matrix rad(f, homs[i].size(), 0);
    for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
      if (q.arrow(ar).source != i) continue;
      const auto t = q.arrow(ar).target;
      auto lambda = left_multiplication(a, t, i, Element{{a->arrow_element(ar), 1}});
      for (const auto& h : homs[t]) {
        auto c = coords(compose(lambda, h));
        if (!c) throw std::logic_error("gp_cosyzygy: composite outside Hom(M, P)");
        Matrix col(f, c->size(), 1);
        for (std::size_t r = 0; r < c->size(); ++r) col(r, 0) = (*c)[r];
        rad = hstack(rad, col);
      }
    }
    for (auto c : complement_coordinates(rad)) {
      gens.push_back(i);
      chosen.push_back(homs[i][c]);
    }
  }
  CosyzygyData out;
  out.projective = free_module(a, gens);
  ModuleMap emb;
  for (std::size_t w = 0; w < nv; ++w) {
    Matrix blk(f, 0, m.dims[w]);
    for (const auto& h : chosen) blk = vstack(blk, h.blocks[w]);
    emb.blocks.push_back(std::move(blk));
  }
  if (!is_injective(emb, m)) throw std::domain_error("gp_cosyzygy: module is not torsionless, hence not GP");
  out.embedding = emb;
  out.cosyzygy = cokernel(emb, out.projective);
  return out;
}

Representation gp_cosyzygy(const Representation& m) { return gp_cosyzygy_data(m).cosyzygy.module; }

Representation gp_cosyzygy(const Representation& m, std::size_t times) {
  Representation x = m;
  for (std::size_t i = 0; i < times; ++i) x = gp_cosyzygy(x);
  return x;
}

StarDual star_dual(const Representation& m) {
  const auto& a = m.algebra;
  const auto& f = m.field();
  const auto& q = a->quiver();
  const std::size_t nv = a->num_vertices();
  StarDual out;
  out.basis.resize(nv);
  const auto cd = cover_data(m);
  std::vector<std::size_t> dims(nv);
  for (std::size_t i = 0; i < nv; ++i) {
    out.basis[i] = hom_space(cd, m, projective_module(a, i));
    dims[i] = out.basis[i].size();
  }
  out.module = Representation(a->opposite(), dims);
  for (std::size_t ar = 0; ar < q.num_arrows(); ++ar) {
    const auto s = q.arrow(ar).source;
    const auto t = q.arrow(ar).target;
    if (dims[s] == 0 || dims[t] == 0) continue;
    // The opposite arrow runs t -> s and sends h to (left multiplication by ar) after h.
    auto lambda = left_multiplication(a, t, s, Element{{a->arrow_element(ar), 1}});
    MapCoordinates coords(f, out.basis[s]);
    Matrix mat(f, dims[s], dims[t]);
    for (std::size_t j = 0; j < dims[t]; ++j) {
      auto c = coords(compose(lambda, out.basis[t][j]));
      if (!c) throw std::logic_error("star_dual: composite outside Hom(M, P)");
      for (std::size_t r = 0; r < dims[s]; ++r) mat(r, j) = (*c)[r];
    }
    out.module.arrows[ar] = std::move(mat);
  }
  return out;
}

}  // namespace lambdak
