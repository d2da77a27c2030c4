#include "lambdak/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace lambdak {

namespace {

void add_into(const PrimeField& f, Element& acc, std::size_t idx, PrimeField::value_type c) {
  if (c == 0) return;
  for (auto& [i, v] : acc)
    if (i == idx) {
      v = f.add(v, c);
      return;
    }
  acc.emplace_back(idx, c);
}

void prune(Element& e) {
  e.erase(std::remove_if(e.begin(), e.end(), [](const auto& t) { return t.second == 0; }), e.end());
  std::sort(e.begin(), e.end());
}

}  // namespace

AlgebraPresentation opposite_presentation(const AlgebraPresentation& p) {
  AlgebraPresentation out;
  out.field = p.field;
  for (const auto& v : p.quiver.vertices()) out.quiver.add_vertex(v);
  for (const auto& a : p.quiver.arrows()) out.quiver.add_arrow(a.label, a.target, a.source, a.degree);
  for (const auto& r : p.relations) {
    Relation rr;
    for (const auto& t : r.terms) rr.terms.push_back({t.coefficient, Word(t.word.rbegin(), t.word.rend())});
    out.relations.push_back(rr);
  }
  return out;
}

AlgebraPtr BoundQuiverAlgebra::build(const AlgebraPresentation& p, std::size_t max_length) {
  validate(p);
  if (p.field.is_rational())
    throw std::invalid_argument("algebra tables need a prime field; rerun with a prime characteristic");
  const auto& q = p.quiver;
  for (const auto& r : p.relations) {
    const auto len = r.terms.front().word.size();
    const int deg = q.word_degree(r.terms.front().word);
    for (const auto& t : r.terms) {
      if (t.word.size() != len) throw std::invalid_argument("relation is not homogeneous in path length");
      if (q.word_degree(t.word) != deg) throw std::invalid_argument("relation is not homogeneous for the arrow grading");
    }
  }

  std::shared_ptr<BoundQuiverAlgebra> a(new BoundQuiverAlgebra());
  a->pres_ = p;
  a->field_ = PrimeField(p.field.characteristic);
  const PrimeField& f = a->field_;
  const std::size_t nv = q.num_vertices();
  const std::size_t na = q.num_arrows();

  std::vector<std::vector<std::size_t>> level(1);
  for (std::size_t v = 0; v < nv; ++v) {
    BasisElement e;
    e.source = e.target = v;
    e.prefix = a->basis_.size();
    a->idempotent_.push_back(a->basis_.size());
    level[0].push_back(a->basis_.size());
    a->basis_.push_back(e);
  }
  a->times_.assign(a->basis_.size() * na, {});

  // Reduction of an element of lower length times an arrow, all inside built levels.
  auto times = [&](const Element& x, std::size_t arrow) {
    Element out;
    for (const auto& [b, c] : x)
      for (const auto& [b2, c2] : a->times_[b * na + arrow]) add_into(f, out, b2, f.mul(c, c2));
    prune(out);
    return out;
  };

  for (std::size_t len = 1;; ++len) {
    if (len > max_length)
      throw std::runtime_error("path basis did not terminate below length " + std::to_string(max_length) +
                               "; the ideal is not admissible");
    struct Candidate {
      std::size_t prev, arrow;
    };
    // Candidates grouped by (source, target).
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Candidate>> blocks;
    for (auto b : level[len - 1])
      for (std::size_t ar = 0; ar < na; ++ar)
        if (q.arrow(ar).source == a->basis_[b].target)
          blocks[{a->basis_[b].source, q.arrow(ar).target}].push_back({b, ar});
    if (blocks.empty()) break;

    // Relation rows, written in candidate coordinates.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<std::pair<std::size_t, PrimeField::value_type>>>> rows;
    std::map<std::pair<std::size_t, std::size_t>, std::map<std::pair<std::size_t, std::size_t>, std::size_t>> column;
    for (auto& [key, cands] : blocks)
      for (std::size_t c = 0; c < cands.size(); ++c) column[key][{cands[c].prev, cands[c].arrow}] = c;

    for (const auto& r : p.relations) {
      const std::size_t rl = r.terms.front().word.size();
      if (rl > len) continue;
      const std::size_t rs = q.word_source(r.terms.front().word);
      const std::size_t rt = q.word_target(r.terms.front().word);
      for (auto u : level[len - rl]) {
        if (a->basis_[u].target != rs) continue;
        const std::pair<std::size_t, std::size_t> key{a->basis_[u].source, rt};
        auto bit = blocks.find(key);
        if (bit == blocks.end()) continue;
        std::vector<std::pair<std::size_t, PrimeField::value_type>> row;
        for (const auto& t : r.terms) {
          Element x{{u, 1}};
          for (std::size_t i = 0; i + 1 < t.word.size(); ++i) x = times(x, t.word[i]);
          const auto coef = f.from_int(t.coefficient);
          for (const auto& [b, c] : x) {
            auto col = column[key].at({b, t.word.back()});
            bool found = false;
            for (auto& [cc, vv] : row)
              if (cc == col) {
                vv = f.add(vv, f.mul(coef, c));
                found = true;
              }
            if (!found) row.emplace_back(col, f.mul(coef, c));
          }
        }
        rows[key].push_back(std::move(row));
      }
    }

    std::vector<std::size_t> next;
    for (auto& [key, cands] : blocks) {
      const auto& rs = rows[key];
      Matrix m(f, rs.size(), cands.size());
      for (std::size_t i = 0; i < rs.size(); ++i)
        for (const auto& [c, v] : rs[i]) m(i, c) = v;
      auto e = rref(m);
      std::vector<bool> is_pivot(cands.size(), false);
      for (auto pc : e.pivots) is_pivot[pc] = true;
      std::vector<std::size_t> new_index(cands.size(), 0);
      for (std::size_t c = 0; c < cands.size(); ++c) {
        if (is_pivot[c]) continue;
        BasisElement be;
        be.word = a->basis_[cands[c].prev].word;
        be.word.push_back(cands[c].arrow);
        be.source = key.first;
        be.target = key.second;
        be.degree = a->basis_[cands[c].prev].degree + q.arrow(cands[c].arrow).degree;
        be.prefix = cands[c].prev;
        be.last_arrow = cands[c].arrow;
        new_index[c] = a->basis_.size();
        next.push_back(a->basis_.size());
        a->basis_.push_back(std::move(be));
      }
      a->times_.resize(a->basis_.size() * na);
      for (std::size_t c = 0; c < cands.size(); ++c) {
        Element red;
        if (!is_pivot[c]) {
          red.emplace_back(new_index[c], 1);
        } else {
          const std::size_t row = static_cast<std::size_t>(
              std::find(e.pivots.begin(), e.pivots.end(), c) - e.pivots.begin());
          for (std::size_t j = 0; j < cands.size(); ++j)
            if (!is_pivot[j] && e.reduced(row, j) != 0) red.emplace_back(new_index[j], f.neg(e.reduced(row, j)));
          prune(red);
        }
        a->times_[cands[c].prev * na + cands[c].arrow] = std::move(red);
      }
    }
    if (next.empty()) break;
    level.push_back(std::move(next));
    a->max_length_ = len;
  }
  a->times_.resize(a->basis_.size() * na);

  a->between_.assign(nv * nv, {});
  a->starting_.assign(nv, {});
  a->ending_.assign(nv, {});
  a->position_.assign(a->basis_.size(), 0);
  for (std::size_t b = 0; b < a->basis_.size(); ++b) {
    const auto& be = a->basis_[b];
    auto& slot = a->between_[be.source * nv + be.target];
    a->position_[b] = slot.size();
    slot.push_back(b);
    a->starting_[be.source].push_back(b);
    a->ending_[be.target].push_back(b);
    a->max_degree_ = std::max(a->max_degree_, be.degree);
  }
  a->arrow_element_.assign(na, 0);
  for (std::size_t ar = 0; ar < na; ++ar) {
    auto red = a->reduce({ar});
    if (red.size() != 1 || red[0].second != 1) throw std::runtime_error("arrow does not survive as a basis element");
    a->arrow_element_[ar] = red[0].first;
  }
  return a;
}

const Element& BoundQuiverAlgebra::times_arrow(std::size_t b, std::size_t arrow) const {
  return times_.at(b * num_arrows() + arrow);
}

Element BoundQuiverAlgebra::multiply(const Element& x, const Element& y) const {
  Element out;
  for (const auto& [b1, c1] : x)
    for (const auto& [b2, c2] : y)
      for (const auto& [b, c] : multiply(b1, b2)) add_into(field_, out, b, field_.mul(field_.mul(c1, c2), c));
  prune(out);
  return out;
}

Element BoundQuiverAlgebra::multiply(std::size_t b1, std::size_t b2) const {
  const auto& e2 = basis_.at(b2);
  if (basis_.at(b1).target != e2.source) return {};
  Element x{{b1, 1}};
  for (auto ar : e2.word) {
    Element nx;
    for (const auto& [b, c] : x)
      for (const auto& [bb, cc] : times_arrow(b, ar)) add_into(field_, nx, bb, field_.mul(c, cc));
    prune(nx);
    x = std::move(nx);
    if (x.empty()) break;
  }
  return x;
}

Element BoundQuiverAlgebra::reduce(const Word& w) const {
  if (w.empty()) throw std::invalid_argument("reduce: empty word");
  if (!quiver().is_composable(w)) return {};
  Element x{{idempotent(quiver().word_source(w)), 1}};
  for (auto ar : w) {
    Element nx;
    for (const auto& [b, c] : x)
      for (const auto& [bb, cc] : times_arrow(b, ar)) add_into(field_, nx, bb, field_.mul(c, cc));
    prune(nx);
    x = std::move(nx);
    if (x.empty()) break;
  }
  return x;
}

AlgebraPtr BoundQuiverAlgebra::opposite() const {
  std::lock_guard<std::mutex> lock(op_mutex_);
  if (op_strong_) return op_strong_;
  if (auto w = op_weak_.lock()) return w;
  AlgebraPresentation op = opposite_presentation(pres_);
  auto built = build(op, std::max<std::size_t>(max_length_ + 1, 2));
  {
    std::lock_guard<std::mutex> inner(built->op_mutex_);
    built->op_weak_ = shared_from_this();
  }
  op_strong_ = built;
  return built;
}

Element BoundQuiverAlgebra::to_opposite(std::size_t b) const {
  const auto& be = basis_.at(b);
  auto op = opposite();
  if (be.word.empty()) return {{op->idempotent(be.source), 1}};
  return op->reduce(Word(be.word.rbegin(), be.word.rend()));
}

std::vector<Element> BoundQuiverAlgebra::right_socle() const {
  std::vector<Element> out;
  const std::size_t nv = num_vertices();
  for (std::size_t i = 0; i < nv; ++i)
    for (std::size_t j = 0; j < nv; ++j) {
      const auto& blk = between(i, j);
      if (blk.empty()) continue;
      // Split further by degree so that the socle basis is homogeneous.
      std::map<int, std::vector<std::size_t>> by_degree;
      for (auto b : blk) by_degree[basis_[b].degree].push_back(b);
      for (const auto& [deg, elems] : by_degree) {
        std::map<std::size_t, std::size_t> row_of;
        std::vector<std::vector<std::pair<std::size_t, PrimeField::value_type>>> cols(elems.size());
        for (std::size_t c = 0; c < elems.size(); ++c)
          for (std::size_t ar = 0; ar < num_arrows(); ++ar)
            for (const auto& [b, v] : times_arrow(elems[c], ar)) {
              auto it = row_of.emplace(b, row_of.size()).first;
              cols[c].emplace_back(it->second, v);
            }
        Matrix mm(field_, row_of.size(), elems.size());
        for (std::size_t c = 0; c < elems.size(); ++c)
          for (const auto& [r, v] : cols[c]) mm(r, c) = field_.add(mm(r, c), v);
        auto k = kernel_basis(mm);
        for (std::size_t kc = 0; kc < k.cols(); ++kc) {
          Element e;
          for (std::size_t r = 0; r < elems.size(); ++r)
            if (k(r, kc) != 0) e.emplace_back(elems[r], k(r, kc));
          out.push_back(std::move(e));
        }
      }
    }
  return out;
}

std::optional<int> BoundQuiverAlgebra::gorenstein_parameter() const {
  std::optional<int> deg;
  for (const auto& e : right_socle()) {
    const int d = basis_[e.front().first].degree;
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

std::string BoundQuiverAlgebra::summary() const {
  std::ostringstream os;
  os << "vertices " << num_vertices() << ", arrows " << num_arrows() << ", relations " << pres_.relations.size()
     << ", dim " << dim() << ", max degree " << max_degree_;
  return os.str();
}

std::vector<std::vector<std::size_t>> cartan_matrix(const BoundQuiverAlgebra& a) {
  const std::size_t n = a.num_vertices();
  std::vector<std::vector<std::size_t>> c(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = a.between(i, j).size();
  return c;
}

}  // namespace lambdak
