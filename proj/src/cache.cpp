#include "origami/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "origami/error.hpp"
#include "origami/report.hpp"

namespace origami {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string key_text(const Origami& o) { return std::string(report::tool_version) + "\n" + serialize(o.canonical()); }

}  // namespace

std::optional<OrbitCache> OrbitCache::from_environment() {
  const char* dir = std::getenv("ORIGAMI_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return OrbitCache(dir);
}

std::filesystem::path OrbitCache::path_for(const Origami& o) const {
  char name[40];
  std::snprintf(name, sizeof name, "orbit-%016llx.json", static_cast<unsigned long long>(fnv1a(key_text(o))));
  return dir_ / name;
}

std::optional<OrbitGraph> OrbitCache::load(const Origami& o) const {
  std::ifstream in(path_for(o));
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("version").get<std::string>() != report::tool_version) return std::nullopt;
    if (j.at("key").get<std::string>() != key_text(o)) return std::nullopt;
    OrbitGraph g = orbit_from_json(j.at("orbit"));
    const auto base = g.find(o);
    if (!base) return std::nullopt;
    g.basepoint = *base;
    return g;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  } catch (const Error&) {
    return std::nullopt;
  }
}

void OrbitCache::store(const OrbitGraph& g) const {
  const Origami& base = g.nodes[static_cast<std::size_t>(g.basepoint)];
  std::filesystem::create_directories(dir_);
  const auto target = path_for(base);
  std::random_device rd;
  auto tmp = target;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::invalid_argument, "cannot write cache file " + tmp.string());
    out << nlohmann::json{{"version", report::tool_version}, {"key", key_text(base)}, {"orbit", to_json(g)}}.dump();
    if (!out) throw Error(ErrorCode::invalid_argument, "cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace origami
