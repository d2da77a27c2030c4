#include "lambdak/polynomial.hpp"

#include <utility>

namespace lambdak {
namespace {

using V = PrimeField::value_type;

void trim(Polynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Polynomial sub(const PrimeField& f, Polynomial a, const Polynomial& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.sub(a[i], b[i]);
  trim(a);
  return a;
}

Polynomial mul(const PrimeField& f, const Polynomial& a, const Polynomial& b) {
  if (a.empty() || b.empty()) return {};
  Polynomial r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  trim(r);
  return r;
}

// Remainder and quotient of a by b (b nonzero).
std::pair<Polynomial, Polynomial> divmod(const PrimeField& f, Polynomial a, const Polynomial& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  Polynomial q(a.size() - b.size() + 1, 0);
  const V lead_inv = f.inv(b.back());
  for (std::size_t k = a.size(); k-- >= b.size();) {
    const V c = f.mul(a[k], lead_inv);
    q[k - (b.size() - 1)] = c;
    if (c != 0)
      for (std::size_t j = 0; j < b.size(); ++j) {
        auto& t = a[k - (b.size() - 1) + j];
        t = f.sub(t, f.mul(c, b[j]));
      }
    if (k == 0) break;
  }
  trim(q);
  trim(a);
  return {q, a};
}

Polynomial mod(const PrimeField& f, const Polynomial& a, const Polynomial& b) { return divmod(f, a, b).second; }

Polynomial gcd(const PrimeField& f, Polynomial a, Polynomial b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const V inv = f.inv(a.back());
    for (auto& c : a) c = f.mul(c, inv);
  }
  return a;
}

Polynomial powmod(const PrimeField& f, Polynomial base, std::uint64_t e, const Polynomial& m) {
  Polynomial r{1};
  base = mod(f, base, m);
  while (e) {
    if (e & 1) r = mod(f, mul(f, r, base), m);
    base = mod(f, mul(f, base, base), m);
    e >>= 1;
  }
  return r;
}

}  // namespace

Polynomial characteristic_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic_polynomial: matrix not square");
  const PrimeField& f = m.field();
  const std::size_t n = m.rows();
  Matrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t r = c + 1;
    while (r < n && h(r, c) == 0) ++r;
    if (r == n) continue;
    if (r != c + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(r, j), h(c + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(h(i, r), h(i, c + 1));
    }
    const V piv_inv = f.inv(h(c + 1, c));
    for (std::size_t i = c + 2; i < n; ++i) {
      const V u = f.mul(h(i, c), piv_inv);
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h(i, j) = f.sub(h(i, j), f.mul(u, h(c + 1, j)));
      for (std::size_t j = 0; j < n; ++j) h(j, c + 1) = f.add(h(j, c + 1), f.mul(u, h(j, i)));
    }
  }
  std::vector<Polynomial> p(n + 1);
  p[0] = {1};
  for (std::size_t mm = 1; mm <= n; ++mm) {
    const std::size_t k = mm - 1;
    p[mm] = mul(f, Polynomial{f.neg(h(k, k)), 1}, p[mm - 1]);
    V t = 1;
    for (std::size_t i = 1; i < mm; ++i) {
      t = f.mul(t, h(k - i + 1, k - i));
      const V c = f.mul(h(k - i, k), t);
      if (c == 0) continue;
      Polynomial term = p[mm - i - 1];
      for (auto& x : term) x = f.mul(x, c);
      p[mm] = sub(f, p[mm], term);
    }
  }
  return p[n];
}

V evaluate(const PrimeField& f, const Polynomial& p, V x) {
  V r = 0;
  for (std::size_t i = p.size(); i-- > 0;) r = f.add(f.mul(r, x), p[i]);
  return r;
}

std::optional<V> find_root(const PrimeField& f, const Polynomial& p, std::mt19937_64& rng) {
  Polynomial g = p;
  trim(g);
  if (g.size() < 2) return std::nullopt;
  const std::uint32_t q = f.characteristic();
  if (q <= 4096) {
    for (V x = 0; x < q; ++x)
      if (evaluate(f, g, x) == 0) return x;
    return std::nullopt;
  }
  // Split off the product of linear factors, then equal-degree splitting.
  g = gcd(f, g, sub(f, powmod(f, Polynomial{0, 1}, q, g), Polynomial{0, 1}));
  if (g.size() < 2) return std::nullopt;
  std::uniform_int_distribution<V> dist(0, q - 1);
  while (g.size() > 2) {
    const V a = dist(rng);
    auto h = gcd(f, g, sub(f, powmod(f, Polynomial{a, 1}, (q - 1) / 2, g), Polynomial{1}));
    if (h.size() >= 2 && h.size() < g.size()) {
      auto other = divmod(f, g, h).first;
      g = h.size() <= other.size() ? h : gcd(f, other, other);
    }
  }
  return f.neg(f.div(g[0], g[1]));
}

}  // namespace lambdak
