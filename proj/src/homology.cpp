#include "origami/homology.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "origami/error.hpp"

namespace origami {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

std::size_t uz(int x) { return static_cast<std::size_t>(x); }

}  // namespace

HomologyModel::HomologyModel(Origami o) : origami_(std::move(o)) {
  const int n = origami_.squares();
  const auto& h = origami_.h();
  const auto& v = origami_.v();
  const std::size_t edges = 2 * uz(n);

  // Vertex classes of bottom-left corners; the top-right corner of square i is
  // both BL(h(v(i))) and BL(v(h(i))).
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) uf.unite(v.at0(h.at0(i)), h.at0(v.at0(i)));
  bl_vertex_.assign(uz(n), -1);
  std::vector<int> root_id(uz(n), -1);
  for (int i = 0; i < n; ++i) {
    const int r = uf.find(i);
    if (root_id[uz(r)] < 0) root_id[uz(r)] = vertex_count_++;
    bl_vertex_[uz(i)] = root_id[uz(r)];
  }

  // Bottom-left sectors around each vertex in counter-clockwise order:
  // s ↦ v(h(v⁻¹(h⁻¹(s)))).
  const Permutation hi = h.inverse();
  const Permutation vi = v.inverse();
  const Permutation turn = compose(v, compose(h, compose(vi, hi)));
  sectors_.assign(uz(vertex_count_), {});
  for (const auto& cyc : turn.cycles()) {
    const int vertex = bl_vertex_[uz(cyc.front() - 1)];
    if (!sectors_[uz(vertex)].empty()) throw Error(ErrorCode::internal, "homology: vertex sectors split across cycles");
    for (int s : cyc) {
      if (bl_vertex_[uz(s - 1)] != vertex) throw Error(ErrorCode::internal, "homology: sector cycle leaves its vertex");
      sectors_[uz(vertex)].push_back(s - 1);
    }
  }

  const int euler = vertex_count_ - n;
  if (euler % 2 != 0) throw Error(ErrorCode::internal, "homology: odd Euler characteristic");
  genus_ = 1 - euler / 2;

  // Edge endpoints: σᵢ from BL(i) to BL(h(i)); ζᵢ from BL(i) to BL(v(i)).
  std::vector<int> tail(edges), head(edges);
  for (int i = 0; i < n; ++i) {
    tail[uz(i)] = bl_vertex_[uz(i)];
    head[uz(i)] = bl_vertex_[uz(h.at0(i))];
    tail[uz(n + i)] = bl_vertex_[uz(i)];
    head[uz(n + i)] = bl_vertex_[uz(v.at0(i))];
  }

  boundary1_ = IntMatrix(uz(vertex_count_), edges);
  for (std::size_t e = 0; e < edges; ++e) {
    boundary1_(uz(head[e]), e) += 1;
    boundary1_(uz(tail[e]), e) -= 1;
  }
  boundary2_ = IntMatrix(edges, uz(n));
  for (int i = 0; i < n; ++i) {
    boundary2_(uz(i), uz(i)) += 1;
    boundary2_(uz(n + h.at0(i)), uz(i)) += 1;
    boundary2_(uz(v.at0(i)), uz(i)) -= 1;
    boundary2_(uz(n + i), uz(i)) -= 1;
  }

  // Spanning tree of the 1-skeleton.
  std::vector<std::vector<std::size_t>> incident(uz(vertex_count_));
  for (std::size_t e = 0; e < edges; ++e) {
    if (tail[e] == head[e]) continue;
    incident[uz(tail[e])].push_back(e);
    incident[uz(head[e])].push_back(e);
  }
  std::vector<bool> in_tree(edges, false);
  std::vector<std::ptrdiff_t> up_edge(uz(vertex_count_), -1);
  std::vector<int> up_parent(uz(vertex_count_), -1);
  {
    std::vector<bool> seen(uz(vertex_count_), false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (std::size_t e : incident[uz(x)]) {
        const int y = tail[e] == x ? head[e] : tail[e];
        if (seen[uz(y)]) continue;
        seen[uz(y)] = true;
        in_tree[e] = true;
        up_edge[uz(y)] = static_cast<std::ptrdiff_t>(e);
        up_parent[uz(y)] = x;
        queue.push_back(y);
      }
    }
  }
  // Chain from vertex x to the root along the tree.
  auto path_to_root = [&](int x, IntVector& chain, std::int64_t sign) {
    while (up_parent[uz(x)] >= 0) {
      const auto e = static_cast<std::size_t>(up_edge[uz(x)]);
      chain[e] += head[e] == x ? -sign : sign;
      x = up_parent[uz(x)];
    }
  };

  // Spanning tree of the dual graph on the edges not used above. σᵢ separates
  // squares i and v⁻¹(i); ζᵢ separates i and h⁻¹(i).
  auto dual_ends = [&](std::size_t e) -> std::pair<int, int> {
    const int i = static_cast<int>(e) % n;
    return e < uz(n) ? std::pair{i, vi.at0(i)} : std::pair{i, hi.at0(i)};
  };
  std::vector<std::vector<std::size_t>> dual_incident(uz(n));
  for (std::size_t e = 0; e < edges; ++e) {
    if (in_tree[e]) continue;
    const auto [a, b] = dual_ends(e);
    if (a == b) continue;
    dual_incident[uz(a)].push_back(e);
    dual_incident[uz(b)].push_back(e);
  }
  std::vector<bool> in_cotree(edges, false);
  std::vector<std::ptrdiff_t> dual_up(uz(n), -1);
  std::vector<int> dual_order;
  {
    std::vector<bool> seen(uz(n), false);
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      dual_order.push_back(x);
      for (std::size_t e : dual_incident[uz(x)]) {
        const auto [a, b] = dual_ends(e);
        const int y = a == x ? b : a;
        if (seen[uz(y)]) continue;
        seen[uz(y)] = true;
        in_cotree[e] = true;
        dual_up[uz(y)] = static_cast<std::ptrdiff_t>(e);
        queue.push_back(y);
      }
    }
    if (dual_order.size() != uz(n)) throw Error(ErrorCode::internal, "homology: dual tree does not span");
  }

  std::vector<std::size_t> leftover;
  for (std::size_t e = 0; e < edges; ++e)
    if (!in_tree[e] && !in_cotree[e]) leftover.push_back(e);
  if (leftover.size() != uz(2 * genus_)) throw Error(ErrorCode::internal, "homology: tree-cotree count mismatch");

  for (std::size_t e : leftover) {
    IntVector loop(edges, 0);
    loop[e] += 1;
    path_to_root(head[e], loop, 1);
    path_to_root(tail[e], loop, -1);
    basis_.push_back(std::move(loop));
  }

  // Dual cocycles: zero on the tree, δ on the leftover edges, solved on the
  // cotree by peeling squares from the leaves.
  cocycles_ = IntMatrix(leftover.size(), edges);
  for (std::size_t k = 0; k < leftover.size(); ++k) {
    IntVector f(edges, 0);
    f[leftover[k]] = 1;
    for (auto it = dual_order.rbegin(); it != dual_order.rend(); ++it) {
      const int s = *it;
      if (dual_up[uz(s)] < 0) continue;
      const auto p = static_cast<std::size_t>(dual_up[uz(s)]);
      std::map<std::size_t, std::int64_t> rel;
      rel[uz(s)] += 1;
      rel[uz(n + h.at0(s))] += 1;
      rel[uz(v.at0(s))] -= 1;
      rel[uz(n + s)] -= 1;
      std::int64_t rest = 0;
      for (const auto& [e, c] : rel)
        if (e != p) rest += c * f[e];
      const std::int64_t cp = rel[p];
      if (cp != 1 && cp != -1) throw Error(ErrorCode::internal, "homology: cotree edge is not simple in its square");
      f[p] = -rest * cp;
    }
    for (std::size_t e = 0; e < edges; ++e) cocycles_(k, e) = f[e];
  }

  // Consistency: ∂₁∂₂ = 0, cocycles kill boundaries and are dual to the loops.
  const IntMatrix dd = boundary1_ * boundary2_;
  for (std::size_t r = 0; r < dd.rows(); ++r)
    for (std::size_t c = 0; c < dd.cols(); ++c)
      if (dd(r, c) != 0) throw Error(ErrorCode::internal, "homology: ∂₁∂₂ ≠ 0");
  const IntMatrix fb = cocycles_ * boundary2_;
  for (std::size_t r = 0; r < fb.rows(); ++r)
    for (std::size_t c = 0; c < fb.cols(); ++c)
      if (fb(r, c) != 0) throw Error(ErrorCode::internal, "homology: coordinate cocycle is not closed");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (!is_cycle(basis_[k])) throw Error(ErrorCode::internal, "homology: basis loop is not a cycle");
    const IntVector c = cocycles_ * basis_[k];
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != (j == k ? 1 : 0)) throw Error(ErrorCode::internal, "homology: cocycles not dual to loops");
  }

  gram_ = IntMatrix(basis_.size(), basis_.size());
  for (std::size_t a = 0; a < basis_.size(); ++a)
    for (std::size_t b = 0; b < basis_.size(); ++b) gram_(a, b) = intersect_chains(basis_[a], basis_[b]);
}

IntVector HomologyModel::sigma(int square) const {
  IntVector c = zero_chain();
  c[sigma_index(square)] = 1;
  return c;
}

IntVector HomologyModel::zeta(int square) const {
  IntVector c = zero_chain();
  c[zeta_index(square)] = 1;
  return c;
}

bool HomologyModel::is_cycle(const IntVector& chain) const {
  const IntVector d = boundary1_ * chain;
  return std::all_of(d.begin(), d.end(), [](std::int64_t x) { return x == 0; });
}

IntVector HomologyModel::coordinates(const IntVector& cycle) const {
  if (!is_cycle(cycle)) throw Error(ErrorCode::invalid_argument, "homology: chain is not a cycle");
  return cocycles_ * cycle;
}

IntVector HomologyModel::pushoff(const IntVector& b) const {
  // Dual edges: index i is the rightward edge from the centre of square i+1 to
  // that of h(i+1) (crossing ζ_{h(i+1)}); index N+i the upward edge to v(i+1)
  // (crossing σ_{v(i+1)}).
  const int n = squares();
  const auto& h = origami_.h();
  const auto& v = origami_.v();
  IntVector dual(2 * uz(n), 0);
  std::vector<std::int64_t> excess(uz(n), 0);
  for (int i = 0; i < n; ++i) {
    const std::int64_t bs = b[uz(i)];
    const std::int64_t bz = b[uz(n + i)];
    dual[uz(i)] += bs;
    dual[uz(n + i)] += bz;
    excess[uz(h.at0(i))] += bs;
    excess[uz(i)] -= bs;
    excess[uz(v.at0(i))] += bz;
    excess[uz(i)] -= bz;
  }
  // Close the shifted chain around each vertex through its corner sectors.
  for (const auto& ring : sectors_) {
    std::int64_t carry = 0;
    for (std::size_t k = 0; k + 1 < ring.size(); ++k) {
      carry += excess[uz(ring[k])];
      if (carry == 0) continue;
      const int left = h.inverse().at0(ring[k]);
      const int below = v.inverse().at0(left);
      const int right = h.at0(below);
      dual[uz(left)] -= carry;
      dual[uz(n + below)] -= carry;
      dual[uz(below)] += carry;
      dual[uz(n + right)] += carry;
    }
    if (carry + excess[uz(ring.back())] != 0) throw Error(ErrorCode::internal, "homology: push-off of a non-cycle");
  }
  return dual;
}

std::int64_t HomologyModel::intersect_chains(const IntVector& a, const IntVector& b) const {
  const int n = squares();
  const auto vi = origami_.v().inverse();
  const auto hi = origami_.h().inverse();
  const IntVector bp = pushoff(b);
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    // The upward dual edge from v⁻¹(i) crosses σᵢ positively (rightward × upward).
    total += a[uz(i)] * bp[uz(n + vi.at0(i))];
    // The rightward dual edge from h⁻¹(i) crosses ζᵢ negatively.
    total -= a[uz(n + i)] * bp[uz(hi.at0(i))];
  }
  return total;
}

std::int64_t HomologyModel::pair(const IntVector& x, const IntVector& y) const { return dot(x, gram_ * y); }

// ---------------------------------------------------------------------------

namespace {

IntVector apply_move_chain(const Origami& source, Move m, const IntVector& c) {
  const int n = source.squares();
  const auto& h = source.h();
  const auto& v = source.v();
  IntVector out(c.size(), 0);
  for (int i = 0; i < n; ++i) {
    const std::int64_t s = c[uz(i)];
    const std::int64_t z = c[uz(n + i)];
    if (s == 0 && z == 0) continue;
    switch (m) {
      case Move::T:
        out[uz(i)] += s + z;
        out[uz(n + h.at0(i))] += z;
        break;
      case Move::T_inv: {
        const int hp = h.inverse().at0(i);
        out[uz(i)] += s;
        out[uz(n + hp)] += z;
        out[uz(hp)] -= z;
        break;
      }
      case Move::J:
        out[uz(n + v.inverse().at0(i))] += s;
        out[uz(i)] -= z;
        break;
      case Move::J_inv:
        out[uz(n + i)] -= s;
        out[uz(h.inverse().at0(i))] += z;
        break;
    }
  }
  return out;
}

}  // namespace

IntMatrix move_chain_map(const Origami& source, Move m) {
  const std::size_t edges = 2 * uz(source.squares());
  IntMatrix out(edges, edges);
  IntVector unit(edges, 0);
  for (std::size_t e = 0; e < edges; ++e) {
    unit[e] = 1;
    const IntVector img = apply_move_chain(source, m, unit);
    for (std::size_t r = 0; r < edges; ++r) out(r, e) = img[r];
    unit[e] = 0;
  }
  return out;
}

IntMatrix relabel_chain_map(const Permutation& phi) {
  const int n = phi.size();
  const Permutation inv = phi.inverse();
  IntMatrix out(2 * uz(n), 2 * uz(n));
  for (int j = 0; j < n; ++j) {
    out(uz(inv.at0(j)), uz(j)) = 1;
    out(uz(n + inv.at0(j)), uz(n + j)) = 1;
  }
  return out;
}

IntVector pull_back(const Origami& o, const MoveWord& word, const IntVector& chain) {
  std::vector<Origami> frames{o};
  for (Move m : word) frames.push_back(apply_move(frames.back(), m));
  IntVector c = chain;
  for (std::size_t k = word.size(); k > 0; --k) c = apply_move_chain(frames[k], inverse(word[k - 1]), c);
  return c;
}

// ---------------------------------------------------------------------------

namespace {

bool is_vertical_frame(const CylinderDecomposition& dec) {
  return dec.direction == Direction::vertical() && dec.frame == MoveWord{Move::J};
}

CylinderDecomposition decomposition_for(const Origami& o, const Direction& d) {
  if (d.same_line(Direction::horizontal())) return horizontal_cylinders(o);
  if (d.same_line(Direction::vertical())) return vertical_cylinders(o);
  return direction_cylinders(o, d.p, d.q);
}

}  // namespace

IntVector waist_chain_of_row(const HomologyModel& m, const CylinderDecomposition& dec, std::size_t index, std::size_t row) {
  if (index >= dec.cylinders.size()) throw Error(ErrorCode::invalid_argument, "waist: cylinder index out of range");
  const auto& cyl = dec.cylinders[index];
  if (row >= cyl.rows.size()) throw Error(ErrorCode::invalid_argument, "waist: row index out of range");
  const Origami& o = m.origami();
  if (cyl.squares().back() > o.squares()) throw Error(ErrorCode::invalid_argument, "waist: cylinder from a different origami");
  IntVector c = m.zero_chain();
  if (is_vertical_frame(dec)) {
    for (int i : cyl.rows[row]) c[m.zeta_index(i)] += 1;
    return c;
  }
  for (int i : cyl.rows[row]) c[m.sigma_index(i)] += 1;
  if (dec.frame.empty()) return c;
  return pull_back(o, dec.frame, c);
}

IntVector waist_chain(const HomologyModel& m, const CylinderDecomposition& dec, std::size_t index) {
  return waist_chain_of_row(m, dec, index, 0);
}

IntVector waist_class(const HomologyModel& m, const CylinderDecomposition& dec, std::size_t index) {
  return m.coordinates(waist_chain(m, dec, index));
}

int homological_dimension(const HomologyModel& m, const CylinderDecomposition& dec) {
  std::vector<IntVector> classes;
  for (std::size_t i = 0; i < dec.cylinders.size(); ++i) classes.push_back(waist_class(m, dec, i));
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (m.pair(classes[i], classes[j]) != 0) throw Error(ErrorCode::internal, "waist classes of one direction are not isotropic");
  return static_cast<int>(rank(from_columns(classes, uz(m.rank()))));
}

bool is_lagrangian(const HomologyModel& m, const CylinderDecomposition& dec) {
  return homological_dimension(m, dec) == m.genus();
}

IntMatrix intersection_matrix_geometric(const Origami& o) {
  const auto hor = horizontal_cylinders(o);
  const auto ver = vertical_cylinders(o);
  IntMatrix e(hor.cylinders.size(), ver.cylinders.size());
  for (std::size_t i = 0; i < hor.cylinders.size(); ++i) {
    const auto a = hor.cylinders[i].squares();
    for (std::size_t j = 0; j < ver.cylinders.size(); ++j) {
      const auto b = ver.cylinders[j].squares();
      std::vector<int> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      // The overlap is tiled by rectangles of the two transverse sizes.
      const auto cell = static_cast<std::size_t>(hor.cylinders[i].height * ver.cylinders[j].height);
      e(i, j) = static_cast<std::int64_t>(common.size() / cell);
    }
  }
  return e;
}

IntMatrix intersection_matrix(const HomologyModel& m, const CylinderDecomposition& a, const CylinderDecomposition& b) {
  if (a.direction.same_line(b.direction))
    throw Error(ErrorCode::invalid_argument, "intersection matrix needs a pair of distinct (transverse) directions");
  std::vector<IntVector> wa, wb;
  for (std::size_t i = 0; i < a.cylinders.size(); ++i) wa.push_back(waist_class(m, a, i));
  for (std::size_t j = 0; j < b.cylinders.size(); ++j) wb.push_back(waist_class(m, b, j));
  IntMatrix e(wa.size(), wb.size());
  for (std::size_t i = 0; i < wa.size(); ++i)
    for (std::size_t j = 0; j < wb.size(); ++j) e(i, j) = std::llabs(m.pair(wa[i], wb[j]));
  return e;
}

IntMatrix intersection_matrix(const HomologyModel& m, const Direction& a, const Direction& b) {
  if (a.same_line(b)) throw Error(ErrorCode::invalid_argument, "intersection matrix needs a pair of distinct (transverse) directions");
  return intersection_matrix(m, decomposition_for(m.origami(), a), decomposition_for(m.origami(), b));
}

RankBound homological_rank_lb(const HomologyModel& m, std::int64_t max_denom) {
  if (max_denom < 1) throw Error(ErrorCode::invalid_argument, "max_denom must be at least 1");
  const auto dirs = primitive_directions(max_denom);
  std::vector<std::vector<IntVector>> waists;
  for (const auto& d : dirs) {
    const auto dec = decomposition_for(m.origami(), d);
    std::vector<IntVector> w;
    for (std::size_t i = 0; i < dec.cylinders.size(); ++i) w.push_back(waist_class(m, dec, i));
    waists.push_back(std::move(w));
  }
  RankBound best{0, dirs[0], dirs.size() > 1 ? dirs[1] : dirs[0], 0};
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      IntMatrix e(waists[i].size(), waists[j].size());
      for (std::size_t r = 0; r < waists[i].size(); ++r)
        for (std::size_t c = 0; c < waists[j].size(); ++c) e(r, c) = std::llabs(m.pair(waists[i][r], waists[j][c]));
      ++best.pairs_checked;
      const int r = static_cast<int>(rank(e));
      if (r > best.rank) {
        best.rank = r;
        best.a = dirs[i];
        best.b = dirs[j];
      }
      if (best.rank == m.genus()) return best;
    }
  return best;
}

namespace {

// Least positive rational a with a / rᵢ integral for every ratio rᵢ.
Rational least_common_multiple(const QVector& ratios) {
  std::int64_t num = 1, den = 0;
  for (const auto& r : ratios) {
    num = std::lcm(num, r.num());
    den = std::gcd(den, r.den());
  }
  return Rational(num, den);
}

QVector mul(const IntMatrix& e, const QVector& x, bool transpose) {
  const std::size_t rows = transpose ? e.cols() : e.rows();
  const std::size_t cols = transpose ? e.rows() : e.cols();
  QVector out(rows, Rational(0));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const std::int64_t w = transpose ? e(c, r) : e(r, c);
      if (w != 0) out[r] += Rational(w) * x[c];
    }
  return out;
}

QVector scale_diag(const std::vector<std::int64_t>& d, const QVector& x) {
  QVector out(x);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] *= Rational(d[i]);
  return out;
}

QVector scale(const Rational& s, const QVector& x) {
  QVector out(x);
  for (auto& v : out) v *= s;
  return out;
}

}  // namespace

ParabolicReport parabolic_eigen_check(const HomologyModel& m, const Direction& a, const Direction& b) {
  const auto da = decomposition_for(m.origami(), a);
  const auto db = decomposition_for(m.origami(), b);
  ParabolicReport rep;
  rep.E = intersection_matrix(m, da, db);
  const Rational d(std::llabs(a.p * b.q - a.q * b.p));

  for (const auto& c : da.cylinders) {
    rep.x.push_back(Rational(c.width));
    rep.y.push_back(Rational(c.height) / d);
  }
  for (const auto& c : db.cylinders) {
    rep.xi.push_back(Rational(c.height) / d);
    rep.eta.push_back(Rational(c.width));
  }

  QVector ra, rb;
  for (std::size_t i = 0; i < rep.x.size(); ++i) ra.push_back(rep.x[i] / rep.y[i]);
  for (std::size_t j = 0; j < rep.eta.size(); ++j) rb.push_back(rep.eta[j] / rep.xi[j]);
  rep.a = least_common_multiple(ra);
  rep.b = least_common_multiple(rb);
  rep.t = rep.a * rep.b;
  for (std::size_t i = 0; i < rep.x.size(); ++i) {
    const Rational mi = rep.a * rep.y[i] / rep.x[i];
    if (!mi.is_integer()) throw Error(ErrorCode::internal, "parabolic: twist multiplier is not integral");
    rep.m.push_back(mi.num());
  }
  for (std::size_t j = 0; j < rep.eta.size(); ++j) {
    const Rational nj = rep.b * rep.xi[j] / rep.eta[j];
    if (!nj.is_integer()) throw Error(ErrorCode::internal, "parabolic: twist multiplier is not integral");
    rep.n.push_back(nj.num());
  }

  auto check = [&](bool good, const char* what) {
    if (!good && rep.failure.empty()) rep.failure = what;
  };
  check(mul(rep.E, rep.xi, false) == rep.x, "x = E xi");
  check(mul(rep.E, rep.y, true) == rep.eta, "eta = E^t y");
  check(scale_diag(rep.m, rep.x) == scale(rep.a, rep.y), "D_m x = a y");
  check(scale_diag(rep.n, rep.eta) == scale(rep.b, rep.xi), "D_n eta = b xi");
  const QVector lhs_x = mul(rep.E, scale_diag(rep.n, mul(rep.E, scale_diag(rep.m, rep.x), true)), false);
  check(lhs_x == scale(rep.t, rep.x), "E D_n E^t D_m x = (ab) x");
  const QVector lhs_eta = mul(rep.E, scale_diag(rep.m, mul(rep.E, scale_diag(rep.n, rep.eta), false)), true);
  check(lhs_eta == scale(rep.t, rep.eta), "E^t D_m E D_n eta = (ab) eta");
  rep.ok = rep.failure.empty();
  return rep;
}

IntVector poincare_dual(const HomologyModel& m, const CylinderDecomposition& dec) {
  IntVector total(uz(m.rank()), 0);
  for (std::size_t i = 0; i < dec.cylinders.size(); ++i) {
    const IntVector w = waist_class(m, dec, i);
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += dec.cylinders[i].height * w[k];
  }
  return total;
}

TautologicalPlane tautological_plane(const HomologyModel& m) {
  TautologicalPlane p;
  p.horizontal = poincare_dual(m, horizontal_cylinders(m.origami()));
  p.vertical = poincare_dual(m, vertical_cylinders(m.origami()));
  p.pairing = m.pair(p.horizontal, p.vertical);
  if (p.pairing == 0) throw Error(ErrorCode::internal, "tautological plane is degenerate");
  return p;
}

}  // namespace origami
