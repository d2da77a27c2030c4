#include "lambdak/decompose.hpp"

#include <algorithm>

#include "lambdak/polynomial.hpp"

namespace lambdak {

namespace {

// Entry (i, j) is tr(a_i b_j); tr(x y) is the dot product of x with the transpose of y.
Matrix trace_pairing(const PrimeField& f, const std::vector<ModuleMap>& a, const std::vector<ModuleMap>& b) {
  std::size_t flat = 0;
  if (!a.empty())
    for (const auto& blk : a.front().blocks) flat += blk.rows() * blk.cols();
  Matrix left(f, a.size(), flat), right(f, flat, b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t pos = 0;
    for (const auto& blk : a[i].blocks) {
      for (std::size_t r = 0; r < blk.rows(); ++r)
        for (std::size_t c = 0; c < blk.cols(); ++c) left(i, pos + r * blk.cols() + c) = blk(r, c);
      pos += blk.rows() * blk.cols();
    }
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    std::size_t pos = 0;
    for (const auto& blk : b[j].blocks) {
      // blk is the transpose shape of the matching block of a.
      for (std::size_t r = 0; r < blk.rows(); ++r)
        for (std::size_t c = 0; c < blk.cols(); ++c) right(pos + c * blk.rows() + r, j) = blk(r, c);
      pos += blk.rows() * blk.cols();
    }
  }
  return left * right;
}

void require_large_characteristic(const Representation& m) {
  if (m.field().characteristic() <= m.total_dim())
    throw std::domain_error("decomposition needs field characteristic > module dimension (" +
                            std::to_string(m.total_dim()) + ")");
}

std::vector<PrimeField::value_type> random_coefficients(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, f.characteristic() - 1);
  std::vector<PrimeField::value_type> c(n);
  for (auto& x : c) x = dist(rng);
  return c;
}

Matrix power(const Matrix& m, std::size_t e) {
  Matrix r = Matrix::identity(m.field(), m.rows());
  Matrix b = m;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::vector<Summand> split(const Representation& m, std::mt19937_64& rng) {
  if (m.is_zero()) return {};
  const auto& f = m.field();
  auto end = endomorphisms(m);
  if (end.semisimple_dim == 1) return {Summand{m, identity_map(m), identity_map(m), 1, true}};

  const std::size_t n = m.total_dim();
  constexpr int kTrials = 64;
  for (int trial = 0; trial < kTrials; ++trial) {
    auto phi = linear_combination(end.basis, random_coefficients(f, end.basis.size(), rng), m, m);
    std::optional<PrimeField::value_type> lambda;
    std::vector<std::size_t> order(m.dims.size());
    for (std::size_t v = 0; v < order.size(); ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (auto v : order) {
      if (m.dims[v] == 0) continue;
      lambda = find_root(f, characteristic_polynomial(phi.blocks[v]), rng);
      if (lambda) break;
    }
    if (!lambda) continue;
    std::vector<Matrix> ker(m.dims.size()), img(m.dims.size());
    std::size_t kdim = 0;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
      Matrix psi = phi.blocks[v] - Matrix::identity(f, m.dims[v]).scaled(*lambda);
      Matrix pn = power(psi, n);
      ker[v] = kernel_basis(pn);
      img[v] = column_space(pn);
      kdim += ker[v].cols();
    }
    if (kdim == 0 || kdim == n) continue;
    auto k_inc = submodule(m, ker);
    auto i_inc = submodule(m, img);
    ModuleMap k_proj, i_proj;
    for (std::size_t v = 0; v < m.dims.size(); ++v) {
      auto t = inverse(hstack(ker[v], img[v]));
      if (!t) throw std::logic_error("decompose: Fitting decomposition is not direct");
      k_proj.blocks.push_back(t->block(0, 0, ker[v].cols(), m.dims[v]));
      i_proj.blocks.push_back(t->block(ker[v].cols(), 0, img[v].cols(), m.dims[v]));
    }
    std::vector<Summand> out;
    for (auto [part, inc, proj] : {std::tuple{&k_inc.module, &k_inc.map, &k_proj},
                                   std::tuple{&i_inc.module, &i_inc.map, &i_proj}}) {
      for (auto& s : split(*part, rng)) {
        s.inclusion = compose(*inc, s.inclusion);
        s.projection = compose(s.projection, *proj);
        out.push_back(std::move(s));
      }
    }
    return out;
  }
  return {Summand{m, identity_map(m), identity_map(m), end.semisimple_dim, false}};
}

}  // namespace

EndomorphismData endomorphisms(const Representation& m) {
  require_large_characteristic(m);
  const auto& f = m.field();
  EndomorphismData e;
  e.basis = hom_space(m, m);
  const std::size_t r = e.basis.size();
  Matrix gram = trace_pairing(f, e.basis, e.basis);
  auto rk = rref_rank_kernel(gram);
  e.semisimple_dim = rk.rank;
  for (std::size_t c = 0; c < rk.kernel.cols(); ++c) {
    std::vector<PrimeField::value_type> coeffs(r);
    for (std::size_t i = 0; i < r; ++i) coeffs[i] = rk.kernel(i, c);
    e.radical.push_back(linear_combination(e.basis, coeffs, m, m));
  }
  return e;
}

std::vector<Summand> decompose(const Representation& m, std::mt19937_64& rng) {
  require_large_characteristic(m);
  return split(m, rng);
}

std::vector<Summand> decompose(const Representation& m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return decompose(m, rng);
}

bool is_indecomposable(const Representation& m) {
  if (m.is_zero()) return false;
  return endomorphisms(m).semisimple_dim == 1;
}

std::optional<ModuleMap> isomorphic_indecomposables(const Representation& m, const Representation& n) {
  if (m.algebra != n.algebra || m.dims != n.dims) return std::nullopt;
  require_large_characteristic(m);
  const auto& f = m.field();
  auto h = hom_space(m, n);
  if (h.empty()) return std::nullopt;
  std::mt19937_64 rng(0x150);
  for (int t = 0; t < 3; ++t) {
    auto x = linear_combination(h, random_coefficients(f, h.size(), rng), m, n);
    if (is_invertible(x)) return x;
  }
  auto g = hom_space(n, m);
  if (g.empty()) return std::nullopt;
  // Some g f is invertible iff some tr(g f) is nonzero, as End is local.
  Matrix pairing = trace_pairing(f, h, g);
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (pairing(i, j) != 0) return h[i];
  return std::nullopt;
}

std::vector<SummandClass> decompose_grouped(const Representation& m, std::mt19937_64& rng) {
  std::vector<SummandClass> out;
  for (auto& s : decompose(m, rng)) {
    bool matched = false;
    for (auto& c : out) {
      auto iso = s.absolutely_indecomposable && c.representative.absolutely_indecomposable
                     ? isomorphic_indecomposables(s.module, c.representative.module)
                     : std::optional<ModuleMap>{};
      if (iso) {
        ++c.multiplicity;
        matched = true;
        break;
      }
    }
    if (!matched) out.push_back({std::move(s), 1});
  }
  return out;
}

std::optional<ModuleMap> is_isomorphic(const Representation& m, const Representation& n, std::mt19937_64& rng) {
  if (m.algebra != n.algebra || m.dims != n.dims) return std::nullopt;
  if (m.is_zero()) return identity_map(m);
  auto h = hom_space(m, n);
  if (h.empty()) return std::nullopt;
  constexpr int kTrials = 8;
  for (int t = 0; t < kTrials; ++t) {
    auto x = linear_combination(h, random_coefficients(m.field(), h.size(), rng), m, n);
    if (is_invertible(x)) return x;
  }
  // Deterministic fallback: match indecomposable summands one by one.
  auto sm = decompose(m, rng);
  auto sn = decompose(n, rng);
  if (sm.size() != sn.size()) return std::nullopt;
  std::vector<bool> used(sn.size(), false);
  ModuleMap total = zero_map(m, n);
  for (const auto& a : sm) {
    bool found = false;
    for (std::size_t j = 0; j < sn.size() && !found; ++j) {
      if (used[j]) continue;
      auto iso = isomorphic_indecomposables(a.module, sn[j].module);
      if (!iso) continue;
      used[j] = true;
      found = true;
      total = add_maps(total, compose(sn[j].inclusion, compose(*iso, a.projection)));
    }
    if (!found) return std::nullopt;
  }
  if (!is_invertible(total) || !is_homomorphism(m, n, total)) return std::nullopt;
  return total;
}

std::optional<ModuleMap> is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return is_isomorphic(m, n, rng);
}

Representation strip_projectives(const Representation& m, std::mt19937_64& rng) {
  if (m.is_zero()) return m;
  std::vector<Representation> keep;
  for (auto& s : decompose(m, rng))
    if (!is_projective(s.module)) keep.push_back(std::move(s.module));
  if (keep.empty()) return Representation(m.algebra, std::vector<std::size_t>(m.dims.size(), 0));
  return direct_sum(keep).module;
}

}  // namespace lambdak
