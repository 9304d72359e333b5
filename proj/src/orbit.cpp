#include "origami/orbit.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "origami/error.hpp"

namespace origami {

namespace {

constexpr Move kMoves[] = {Move::T, Move::T_inv, Move::J, Move::J_inv};

int move_slot(Move m) { return static_cast<int>(m); }

}  // namespace

std::optional<int> OrbitGraph::find(const Origami& o) const {
  const Origami c = o.canonical();
  const auto it = std::lower_bound(nodes.begin(), nodes.end(), c);
  if (it == nodes.end() || !(*it == c)) return std::nullopt;
  return static_cast<int>(it - nodes.begin());
}

const OrbitEdge& OrbitGraph::edge(int from, Move m) const {
  return edges[static_cast<std::size_t>(from) * 4 + static_cast<std::size_t>(move_slot(m))];
}

std::vector<int> OrbitGraph::cusp_sizes() const {
  std::vector<int> out;
  for (const auto& c : cusps) out.push_back(static_cast<int>(c.size()));
  return out;
}

std::vector<int> OrbitGraph::cusp_of() const {
  std::vector<int> out(nodes.size(), -1);
  for (std::size_t k = 0; k < cusps.size(); ++k)
    for (int x : cusps[k]) out[static_cast<std::size_t>(x)] = static_cast<int>(k);
  return out;
}

OrbitGraph orbit(const Origami& o, std::size_t budget) {
  struct RawEdge {
    int from, to;
    Move move;
    Permutation relabel;
  };
  std::map<Origami, int> index;
  std::vector<Origami> found;
  std::vector<RawEdge> raw;

  const Origami start = o.canonical();
  index.emplace(start, 0);
  found.push_back(start);
  for (std::size_t head = 0; head < found.size(); ++head) {
    const Origami x = found[head];
    for (Move m : kMoves) {
      const Origami y = apply_move(x, m);
      auto c = canonical_pair(y.h(), y.v());
      Origami cy(std::move(c.h), std::move(c.v));
      auto [it, inserted] = index.emplace(cy, static_cast<int>(found.size()));
      if (inserted) {
        if (found.size() >= budget)
          throw Error(ErrorCode::orbit_overflow, "orbit exceeds the node budget of " + std::to_string(budget));
        found.push_back(cy);
      }
      raw.push_back({static_cast<int>(head), it->second, m, std::move(c.relabel)});
    }
  }

  // Renumber in canonical lexicographic order (std::map iteration order).
  std::vector<int> new_index(found.size());
  OrbitGraph g;
  g.nodes.reserve(found.size());
  for (const auto& [origami, old] : index) {
    new_index[static_cast<std::size_t>(old)] = static_cast<int>(g.nodes.size());
    g.nodes.push_back(origami);
  }
  g.basepoint = new_index[0];
  g.edges.resize(raw.size());
  for (auto& e : raw) {
    const int from = new_index[static_cast<std::size_t>(e.from)];
    g.edges[static_cast<std::size_t>(from) * 4 + static_cast<std::size_t>(move_slot(e.move))] =
        OrbitEdge{from, new_index[static_cast<std::size_t>(e.to)], e.move, std::move(e.relabel)};
  }

  std::vector<bool> seen(g.nodes.size(), false);
  for (std::size_t s = 0; s < g.nodes.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cusp;
    for (int x = static_cast<int>(s); !seen[static_cast<std::size_t>(x)]; x = g.edge(x, Move::T).to) {
      seen[static_cast<std::size_t>(x)] = true;
      cusp.push_back(x);
    }
    g.cusps.push_back(std::move(cusp));
  }
  return g;
}

namespace {

MoveWord free_reduce(const MoveWord& w) {
  MoveWord out;
  for (Move m : w) {
    if (!out.empty() && out.back() == inverse(m))
      out.pop_back();
    else
      out.push_back(m);
  }
  return out;
}

}  // namespace

std::vector<StabilizerWord> stabilizer_words(const OrbitGraph& g) {
  const std::size_t n = g.nodes.size();
  std::vector<MoveWord> path(n);
  std::vector<bool> reached(n, false);
  std::vector<bool> tree_edge(g.edges.size(), false);
  std::deque<int> queue{g.basepoint};
  reached[static_cast<std::size_t>(g.basepoint)] = true;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (Move m : {Move::T, Move::J}) {
      const auto& e = g.edge(x, m);
      if (reached[static_cast<std::size_t>(e.to)]) continue;
      reached[static_cast<std::size_t>(e.to)] = true;
      tree_edge[static_cast<std::size_t>(x) * 4 + static_cast<std::size_t>(move_slot(m))] = true;
      path[static_cast<std::size_t>(e.to)] = path[static_cast<std::size_t>(x)];
      path[static_cast<std::size_t>(e.to)].push_back(m);
      queue.push_back(e.to);
    }
  }

  const Origami& base = g.nodes[static_cast<std::size_t>(g.basepoint)];
  std::vector<StabilizerWord> out;
  for (std::size_t x = 0; x < n; ++x) {
    for (Move m : {Move::T, Move::J}) {
      const std::size_t slot = x * 4 + static_cast<std::size_t>(move_slot(m));
      if (tree_edge[slot]) continue;
      const auto& e = g.edges[slot];
      MoveWord w = path[x];
      w.push_back(m);
      const auto& back = path[static_cast<std::size_t>(e.to)];
      for (auto it = back.rbegin(); it != back.rend(); ++it) w.push_back(inverse(*it));
      w = free_reduce(w);

      const Origami image = apply_word(base, w);
      const auto c = canonical_pair(image.h(), image.v());
      if (!(Origami(c.h, c.v) == base)) throw Error(ErrorCode::internal, "stabilizer word does not fix the basepoint");
      // base = φ⁻¹ image φ, so image = ψ⁻¹ base ψ with ψ = φ⁻¹.
      out.push_back({std::move(w), c.relabel.inverse()});
    }
  }
  return out;
}

nlohmann::json to_json(const OrbitGraph& g) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& o : g.nodes) nodes.push_back(to_json(o));
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"move", move_name(e.move)}, {"relabel", e.relabel.images()}});
  return nlohmann::json{{"nodes", nodes}, {"edges", edges}, {"cusps", g.cusps}, {"basepoint", g.basepoint}};
}

OrbitGraph orbit_from_json(const nlohmann::json& j) {
  OrbitGraph g;
  try {
    for (const auto& n : j.at("nodes")) g.nodes.push_back(origami_from_json(n));
    g.basepoint = j.at("basepoint").get<int>();
    g.cusps = j.at("cusps").get<std::vector<std::vector<int>>>();
    g.edges.resize(g.nodes.size() * 4);
    std::vector<bool> filled(g.edges.size(), false);
    for (const auto& e : j.at("edges")) {
      OrbitEdge edge{e.at("from").get<int>(), e.at("to").get<int>(), parse_move(e.at("move").get<std::string>()),
                     Permutation(e.at("relabel").get<std::vector<int>>())};
      if (edge.from < 0 || edge.to < 0 || static_cast<std::size_t>(edge.from) >= g.nodes.size() ||
          static_cast<std::size_t>(edge.to) >= g.nodes.size())
        throw Error(ErrorCode::validation_failed, "orbit json: edge endpoint out of range");
      const std::size_t slot = static_cast<std::size_t>(edge.from) * 4 + static_cast<std::size_t>(move_slot(edge.move));
      filled[slot] = true;
      g.edges[slot] = std::move(edge);
    }
    if (std::find(filled.begin(), filled.end(), false) != filled.end())
      throw Error(ErrorCode::validation_failed, "orbit json: missing edges");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::validation_failed, std::string("orbit json: ") + e.what());
  }
  if (g.basepoint < 0 || static_cast<std::size_t>(g.basepoint) >= g.nodes.size())
    throw Error(ErrorCode::validation_failed, "orbit json: basepoint out of range");
  if (!std::is_sorted(g.nodes.begin(), g.nodes.end()))
    throw Error(ErrorCode::validation_failed, "orbit json: nodes are not in canonical order");
  for (const auto& e : g.edges) {
    const Origami moved = apply_move(g.nodes[static_cast<std::size_t>(e.from)], e.move);
    if (!(moved.conjugated(e.relabel) == g.nodes[static_cast<std::size_t>(e.to)]))
      throw Error(ErrorCode::validation_failed, "orbit json: edge relabel does not match its move");
  }
  return g;
}

}  // namespace origami
