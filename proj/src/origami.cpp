#include "origami/origami.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "origami/error.hpp"

namespace origami {

std::string Stratum::name() const {
  if (zero_orders.empty()) return "H(0)";
  std::string s = "H(";
  for (std::size_t i = 0; i < zero_orders.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(zero_orders[i]);
  }
  return s + ")";
}

Origami::Origami(Permutation h, Permutation v) : h_(std::move(h)), v_(std::move(v)) {
  if (h_.size() != v_.size())
    throw Error(ErrorCode::size_mismatch,
                "origami: h acts on " + std::to_string(h_.size()) + " squares, v on " + std::to_string(v_.size()));
  if (h_.size() == 0) throw Error(ErrorCode::size_mismatch, "origami: no squares");
  if (!is_transitive(h_, v_)) throw Error(ErrorCode::not_transitive, "origami: (h, v) does not act transitively");
}

Origami Origami::conjugated(const Permutation& phi) const {
  return Origami(conjugate(h_, phi), conjugate(v_, phi));
}

Origami Origami::canonical() const {
  auto c = canonical_pair(h_, v_);
  return Origami(std::move(c.h), std::move(c.v));
}

std::vector<std::vector<int>> vertex_cycles(const Origami& o) {
  const auto& h = o.h();
  const auto& v = o.v();
  const Permutation commutator = compose(v.inverse(), compose(h.inverse(), compose(v, h)));
  return commutator.cycles();
}

Stratum stratum(const Origami& o) {
  const auto cycles = vertex_cycles(o);
  Stratum s;
  int total = 0;
  for (const auto& c : cycles) {
    const int order = static_cast<int>(c.size()) - 1;
    if (order > 0) {
      s.zero_orders.push_back(order);
      total += order;
    }
  }
  std::sort(s.zero_orders.rbegin(), s.zero_orders.rend());
  if (total % 2 != 0) throw Error(ErrorCode::internal, "stratum: odd total zero order " + std::to_string(total));
  s.genus = 1 + total / 2;
  // Euler characteristic: V - 2N + N = 2 - 2g.
  const int euler = static_cast<int>(cycles.size()) - o.squares();
  if (euler != 2 - 2 * s.genus) throw Error(ErrorCode::internal, "stratum: Euler characteristic mismatch");
  return s;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Origami parse_origami(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string h_text, v_text;
  int n = 0;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::malformed_cycles, "origami: expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "h") {
      h_text = value;
    } else if (key == "v") {
      v_text = value;
    } else if (key == "n") {
      try {
        std::size_t used = 0;
        n = std::stoi(value, &used);
        if (used != value.size() || n < 1) throw std::invalid_argument(value);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::malformed_cycles, "origami: bad square count '" + value + "'");
      }
    } else {
      throw Error(ErrorCode::malformed_cycles, "origami: unknown key '" + key + "'");
    }
  }
  if (h_text.empty() || v_text.empty()) throw Error(ErrorCode::malformed_cycles, "origami: both h and v are required");

  auto h = Permutation::parse_cycles(h_text, n);
  auto v = Permutation::parse_cycles(v_text, n);
  if (n == 0) {
    // Pad both to the largest label seen; omitted fixed points are allowed.
    const int size = std::max(h.size(), v.size());
    h = Permutation::parse_cycles(h_text, size);
    v = Permutation::parse_cycles(v_text, size);
  }
  return Origami(std::move(h), std::move(v));
}

std::string serialize(const Origami& o) {
  std::ostringstream os;
  os << "n = " << o.squares() << "\n"
     << "h = " << o.h().to_cycle_string() << "\n"
     << "v = " << o.v().to_cycle_string() << "\n";
  return os.str();
}

nlohmann::json to_json(const Origami& o) {
  return nlohmann::json{{"n", o.squares()}, {"h", o.h().images()}, {"v", o.v().images()}};
}

Origami origami_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    auto h = j.at("h").get<std::vector<int>>();
    auto v = j.at("v").get<std::vector<int>>();
    if (static_cast<int>(h.size()) != n || static_cast<int>(v.size()) != n)
      throw Error(ErrorCode::size_mismatch, "origami json: image arrays must have length n");
    return Origami(Permutation(std::move(h)), Permutation(std::move(v)));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::malformed_cycles, std::string("origami json: ") + e.what());
  }
}

Origami load_origami(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::malformed_cycles, std::string("origami json: ") + e.what());
    }
    return origami_from_json(j.contains("origami") ? j.at("origami") : j);
  }
  return parse_origami(text);
}

}  // namespace origami
