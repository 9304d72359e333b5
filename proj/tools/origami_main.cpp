// Command-line front end: `origami <subcommand> [input] [options]`.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "origami/cache.hpp"
#include "origami/error.hpp"
#include "origami/report.hpp"

using namespace origami;
using nlohmann::json;

namespace {

struct Input {
  std::string file;
  std::string h, v;

  Origami load() const {
    if (!h.empty() || !v.empty()) {
      if (!file.empty()) throw Error(ErrorCode::invalid_argument, "give either an input file or --h/--v, not both");
      if (h.empty() || v.empty()) throw Error(ErrorCode::invalid_argument, "--h and --v must be given together");
      return parse_origami("h = " + h + "\nv = " + v + "\n");
    }
    if (file.empty()) throw Error(ErrorCode::invalid_argument, "no origami given (file or --h/--v)");
    return load_origami(file);
  }
};

void add_input(CLI::App* sub, Input& in, bool positional = true) {
  // --h names the horizontal permutation, so help is only available as --help.
  sub->set_help_flag("--help", "Print this help message and exit");
  if (positional) sub->add_option("file", in.file, "origami file (text or JSON)");
  sub->add_option("--h", in.h, "horizontal permutation in cycle notation");
  sub->add_option("--v", in.v, "vertical permutation in cycle notation");
}

std::string join(const std::vector<Rational>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + xs[i].str();
  return s + "}";
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::invalid_argument, "expected a comma-separated integer list, got '" + text + "'");
    }
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& group : items) {
    std::stringstream in(group);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
  }
  return out;
}

Direction parse_direction(const std::string& text) {
  const auto xs = parse_int_list(text);
  if (xs.size() != 2) throw Error(ErrorCode::invalid_argument, "direction must be 'p,q', got '" + text + "'");
  return {xs[0], xs[1]};
}

CylinderDecomposition decompose(const Origami& o, const Direction& d) {
  if (d == Direction::horizontal()) return horizontal_cylinders(o);
  if (d == Direction::vertical()) return vertical_cylinders(o);
  return direction_cylinders(o, d.p, d.q);
}

OrbitGraph get_orbit(const Origami& o, std::size_t budget, bool use_cache, bool* from_cache = nullptr) {
  const auto cache = use_cache ? OrbitCache::from_environment() : std::nullopt;
  if (cache)
    if (auto hit = cache->load(o)) {
      if (from_cache) *from_cache = true;
      return *hit;
    }
  OrbitGraph g = orbit(o, budget);
  if (cache) cache->store(g);
  return g;
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square-tiled surfaces: cylinders, SL(2,Z)-orbits, homology and Lyapunov exponents"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  bool no_cache = false;
  std::size_t budget = default_orbit_budget;
  app.add_flag("--json", as_json, "print JSON instead of text");
  app.add_flag("--no-cache", no_cache, "ignore ORIGAMI_CACHE_DIR");
  app.add_option("--budget", budget, "orbit node budget");
  app.set_version_flag("--version", report::tool_version);

  Input in;
  auto* analyze = app.add_subcommand("analyze", "stratum, genus and vertex data");
  add_input(analyze, in);

  std::string dir_text = "1,0";
  auto* cylinders = app.add_subcommand("cylinders", "cylinder decomposition in a rational direction");
  add_input(cylinders, in);
  cylinders->add_option("--dir", dir_text, "primitive direction p,q");

  std::string from_json;
  bool show_words = false;
  auto* orbit_cmd = app.add_subcommand("orbit", "SL(2,Z)-orbit graph and cusps");
  add_input(orbit_cmd, in);
  orbit_cmd->add_option("--from-json", from_json, "reuse an orbit report written by `orbit --json`");
  orbit_cmd->add_flag("--words", show_words, "list stabilizer words");

  auto* ekz_cmd = app.add_subcommand("ekz-sum", "exact sum of Lyapunov exponents over the orbit");
  add_input(ekz_cmd, in);

  std::vector<std::string> known_text;
  std::string sum_text;
  int genus_opt = 0, sigma_opt = 0;
  std::string base_file, proj_text;
  auto* deduce = app.add_subcommand("deduce", "deduce the missing exponent from the sum");
  add_input(deduce, in);
  deduce->add_option("--known", known_text, "known exponents, e.g. 1,1/3");
  deduce->add_option("--sum", sum_text, "use this sum instead of computing the orbit");
  deduce->add_option("--genus", genus_opt, "genus when no origami is given");
  deduce->add_option("--zeros", sigma_opt, "number of zeros for the Teichmüller spectrum");
  deduce->add_option("--base", base_file, "base origami: inherit its exponents through --proj");
  deduce->add_option("--proj", proj_text, "covering map as a list of base squares");

  std::vector<std::string> extra_dirs;
  auto* homology = app.add_subcommand("homology", "H1 rank, waist spans, intersection matrix, parabolic check");
  add_input(homology, in);
  homology->add_option("--dir", extra_dirs, "extra directions p,q for homological dimension");

  std::int64_t max_denom = 3;
  auto* rank_cmd = app.add_subcommand("rank", "lower bound for the homological rank");
  add_input(rank_cmd, in);
  rank_cmd->add_option("--max-denom", max_denom, "direction search bound");

  std::string cover_base, incr_h_text, incr_v_text;
  int degree = 2;
  auto* cover = app.add_subcommand("cover", "verify a covering (cover base --proj) or build a cyclic cover");
  add_input(cover, in);
  cover->add_option("base", cover_base, "base origami file");
  cover->add_option("--proj", proj_text, "cover square -> base square, comma-separated");
  cover->add_option("--incr-h", incr_h_text, "build: horizontal increments per base square");
  cover->add_option("--incr-v", incr_v_text, "build: vertical increments per base square");
  cover->add_option("--degree", degree, "build: degree of the cyclic cover");

  std::vector<std::int64_t> cyclic_args;
  std::int64_t mq = 0;
  auto* cyclic = app.add_subcommand("cyclic", "eigenspace dimensions and exponents of a cyclic cover");
  cyclic->add_option("params", cyclic_args, "N a1 a2 a3 a4");
  cyclic->add_option("--mq", mq, "use the M_q parameters (q odd)");

  WalkConfig cfg;
  cfg.steps = 100'000;
  auto* lyap = app.add_subcommand("lyapunov", "Monte Carlo estimate of the exponents");
  add_input(lyap, in);
  lyap->add_option("--steps", cfg.steps, "continued-fraction digits per trajectory");
  lyap->add_option("--trajectories", cfg.trajectories, "independent trajectories");
  lyap->add_option("--seed", cfg.seed, "base seed");
  lyap->add_option("--digit-cap", cfg.digit_cap, "cap on continued-fraction digits");
  lyap->add_option("--renorm", cfg.renorm_interval, "digits between re-orthonormalizations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool use_cache = !no_cache;
  try {
    if (analyze->parsed()) {
      const Origami o = in.load();
      const json j = report::analyze(o);
      std::ostringstream t;
      t << "stratum " << j["stratum"].get<std::string>() << ", genus " << j["genus"].get<int>() << "\n";
      t << "squares " << o.squares() << ", vertices " << j["vertices"].size() << "\n";
      t << "horizontal cylinders " << j["horizontal_cylinders"] << ", vertical cylinders " << j["vertical_cylinders"] << "\n";
      emit(as_json, j, t.str());
    } else if (cylinders->parsed()) {
      const Origami o = in.load();
      const auto dec = decompose(o, parse_direction(dir_text));
      std::ostringstream t;
      t << "direction (" << dec.direction.p << "," << dec.direction.q << "), " << dec.cylinders.size() << " cylinders\n";
      for (const auto& c : dec.cylinders) {
        t << "  width " << c.width << " height " << c.height << " modulus " << c.modulus << "  rows";
        for (const auto& r : c.rows) {
          t << " (";
          for (std::size_t i = 0; i < r.size(); ++i) t << (i ? "," : "") << r[i];
          t << ")";
        }
        t << "\n";
      }
      emit(as_json, report::cylinders(dec), t.str());
    } else if (orbit_cmd->parsed()) {
      OrbitGraph g;
      bool cached = false;
      if (!from_json.empty()) {
        std::ifstream f(from_json);
        if (!f) throw Error(ErrorCode::invalid_argument, "cannot open '" + from_json + "'");
        json j;
        try {
          j = json::parse(f);
        } catch (const json::exception& e) {
          throw Error(ErrorCode::validation_failed, std::string("orbit json: ") + e.what());
        }
        g = orbit_from_json(j.contains("orbit") ? j.at("orbit") : j);
      } else {
        g = get_orbit(in.load(), budget, use_cache, &cached);
      }
      const auto words = stabilizer_words(g);
      json jw = json::array();
      for (const auto& w : words) jw.push_back(to_string(w.word));
      const json j{{"orbit", to_json(g)},
                   {"size", g.size()},
                   {"cusp_sizes", report::sorted_cusp_sizes(g)},
                   {"stabilizer_words", jw},
                   {"cached", cached}};
      std::ostringstream t;
      t << "orbit " << g.size() << ", cusps " << report::bracket_list(report::sorted_cusp_sizes(g)) << ", "
        << words.size() << " stabilizer words" << (cached ? " (cache hit)" : "") << "\n";
      if (show_words)
        for (const auto& w : words) t << "  " << to_string(w.word) << "\n";
      emit(as_json, j, t.str());
    } else if (ekz_cmd->parsed()) {
      const OrbitGraph g = get_orbit(in.load(), budget, use_cache);
      const auto b = ekz_breakdown(g);
      std::ostringstream t;
      t << "sum = " << b.sum << " (≈" << b.sum.decimal(5) << "), orbit " << b.orbit_size << ", cusps "
        << report::bracket_list(report::sorted_cusp_sizes(g)) << "\n";
      emit(as_json, report::ekz(b), t.str());
    } else if (deduce->parsed()) {
      ExponentReport rep;
      std::optional<int> genus;
      std::optional<Origami> o;
      if (!in.file.empty() || !in.h.empty()) o = in.load();
      if (o) genus = stratum(*o).genus;
      if (genus_opt > 0) genus = genus_opt;
      for (const auto& k : parse_rational_list(known_text))
        rep.exponents.push_back({k, k == Rational(1) ? Provenance::tautological : Provenance::ekz});
      if (!base_file.empty()) {
        if (!o) throw Error(ErrorCode::invalid_argument, "--base needs the cover origami as input");
        const CoveringMap c{load_origami(base_file), *o, parse_int_list(proj_text), o->squares() / load_origami(base_file).squares()};
        if (!rep.exponents.empty()) throw Error(ErrorCode::invalid_argument, "give either --known or --base, not both");
        for (const auto& k : inherited_exponents(c))
          rep.exponents.push_back({k, k == Rational(1) ? Provenance::tautological : Provenance::cover_inheritance});
      }
      if (!sum_text.empty())
        rep.sum = parse_rational(sum_text);
      else if (o)
        rep.sum = ekz_sum(get_orbit(*o, budget, use_cache));
      else
        throw Error(ErrorCode::invalid_argument, "deduce needs an origami or --sum");
      std::vector<Rational> known = rep.values();
      rep.deduced = deduce_exponent(rep.sum, known, genus);
      rep.exponents.push_back({*rep.deduced, Provenance::deduced});
      std::stable_sort(rep.exponents.begin(), rep.exponents.end(),
                       [](const ExponentEntry& a, const ExponentEntry& b) { return a.value > b.value; });
      json j = report::exponents(rep);
      std::ostringstream t;
      t << "sum = " << rep.sum << ", deduced " << *rep.deduced << ", spectrum " << join(rep.values()) << "\n";
      const int sigma = sigma_opt > 0 ? sigma_opt : (o ? static_cast<int>(stratum(*o).zero_orders.size()) : 0);
      if (sigma > 0) {
        const auto teich = teichmuller_spectrum(rep.values(), sigma);
        j["teichmuller_spectrum"] = report::rationals(teich);
        t << "Teichmüller flow spectrum " << join(teich) << "\n";
      }
      emit(as_json, j, t.str());
    } else if (homology->parsed()) {
      const Origami o = in.load();
      const HomologyModel m(o);
      std::vector<Direction> dirs{Direction::horizontal(), Direction::vertical()};
      for (const auto& d : extra_dirs) dirs.push_back(parse_direction(d));
      json dims = json::array();
      std::ostringstream t;
      t << "genus " << m.genus() << ", rank H1 " << m.rank() << "\n";
      for (const auto& d : dirs) {
        const int dim = homological_dimension(m, decompose(o, d));
        dims.push_back({{"direction", {d.p, d.q}}, {"dimension", dim}, {"lagrangian", dim == m.genus()}});
        t << "direction (" << d.p << "," << d.q << "): homological dimension " << dim << (dim == m.genus() ? " (Lagrangian)" : "") << "\n";
      }
      const IntMatrix e = intersection_matrix(m, Direction::horizontal(), Direction::vertical());
      const auto par = parabolic_eigen_check(m, Direction::horizontal(), Direction::vertical());
      t << "E(horizontal, vertical) = " << to_string(e) << ", rank " << rank(e) << "\n";
      t << "parabolic check " << (par.ok ? "ok" : "FAILED: " + par.failure) << ", a = " << par.a << ", b = " << par.b
        << ", t = " << par.t << "\n";
      const json j{{"genus", m.genus()},
                   {"rank", m.rank()},
                   {"gram", report::matrix(m.gram())},
                   {"directions", dims},
                   {"E", report::matrix(e)},
                   {"E_rank", rank(e)},
                   {"parabolic", report::parabolic(par)}};
      emit(as_json, j, t.str());
    } else if (rank_cmd->parsed()) {
      const HomologyModel m(in.load());
      const auto rb = homological_rank_lb(m, max_denom);
      std::ostringstream t;
      t << "homological rank >= " << rb.rank << " (directions (" << rb.a.p << "," << rb.a.q << ") and (" << rb.b.p << ","
        << rb.b.q << "), " << rb.pairs_checked << " pairs, max denominator " << max_denom << ")\n";
      const json j{{"lower_bound", rb.rank},
                   {"witness", {{rb.a.p, rb.a.q}, {rb.b.p, rb.b.q}}},
                   {"pairs_checked", rb.pairs_checked},
                   {"max_denom", max_denom},
                   {"genus", m.genus()}};
      emit(as_json, j, t.str());
    } else if (cover->parsed()) {
      CoveringMap c{Origami::torus(), Origami::torus(), {1}, 1};
      if (!incr_h_text.empty() || !incr_v_text.empty()) {
        const Origami base = in.load();
        c = cyclic_cover(base, parse_int_list(incr_h_text), parse_int_list(incr_v_text), degree);
      } else {
        if (cover_base.empty() || proj_text.empty()) throw Error(ErrorCode::invalid_argument, "cover needs: cover-file base-file --proj list");
        const Origami top = in.load();
        const Origami base = load_origami(cover_base);
        c = CoveringMap{base, top, parse_int_list(proj_text), base.squares() ? top.squares() / base.squares() : 0};
      }
      const auto check = verify_covering(c);
      json j{{"verified", check.ok}, {"reason", check.reason}, {"degree", c.degree}, {"cover", to_json(c.cover)}, {"proj", c.proj}};
      std::ostringstream t;
      t << "covering of degree " << c.degree << ": " << (check.ok ? "verified" : "NOT a covering (" + check.reason + ")") << "\n";
      if (check.ok) {
        const bool unram = is_unramified(c);
        const auto sb = stratum(c.base), sc = stratum(c.cover);
        j["unramified"] = unram;
        j["base_stratum"] = sb.name();
        j["cover_stratum"] = sc.name();
        t << (unram ? "unramified" : "ramified") << ", " << sb.name() << " -> " << sc.name() << "\n";
        t << "h = " << c.cover.h().to_cycle_string() << "\nv = " << c.cover.v().to_cycle_string() << "\n";
        try {
          const auto inh = inherited_exponents(c);
          j["inherited_exponents"] = report::rationals(inh);
          t << "inherited exponents " << join(inh) << "\n";
        } catch (const Error& e) {
          if (e.code() != ErrorCode::unsupported_stratum) throw;
          j["inherited_exponents"] = nullptr;
          t << "inherited exponents: " << e.what() << "\n";
        }
      }
      emit(as_json, j, t.str());
      if (!check.ok) return 1;
    } else if (cyclic->parsed()) {
      CyclicCoverSpec s;
      if (mq > 0) {
        if (!cyclic_args.empty()) throw Error(ErrorCode::invalid_argument, "give either N a1..a4 or --mq");
        s = mq_spec(mq);
      } else {
        if (cyclic_args.size() != 5) throw Error(ErrorCode::invalid_argument, "cyclic needs N a1 a2 a3 a4 or --mq q");
        s = CyclicCoverSpec{cyclic_args[0], {cyclic_args[1], cyclic_args[2], cyclic_args[3], cyclic_args[4]}};
      }
      const json j = report::cyclic(s);
      const auto pos = positive_exponent_count(s);
      std::vector<Rational> distinct;
      for (auto it = pos.distinct.rbegin(); it != pos.distinct.rend(); ++it) distinct.push_back(it->first);
      std::ostringstream t;
      t << "N = " << s.N << ", a = (" << s.a[0] << "," << s.a[1] << "," << s.a[2] << "," << s.a[3] << "), genus "
        << j["genus"].get<int>() << "\n";
      t << "positive exponents " << join(pos.values) << " (" << pos.with_multiplicity() << " with multiplicity), distinct "
        << join(distinct) << " (" << pos.distinct_count() << ")\n";
      emit(as_json, j, t.str());
    } else if (lyap->parsed()) {
      const OrbitGraph g = get_orbit(in.load(), budget, use_cache);
      const auto start = std::chrono::steady_clock::now();
      const auto est = estimate_exponents(g, cfg);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      json j = report::lyapunov(est, cfg);
      j["seconds"] = secs;
      std::ostringstream t;
      t.precision(4);
      t << std::fixed;
      for (std::size_t i = 0; i < est.estimates.size(); ++i)
        t << "lambda_" << i + 1 << " = " << est.estimates[i] << " +- " << est.stderrs[i] << "\n";
      t << "base rate " << est.base_rate << " per digit, " << cfg.trajectories << " x " << cfg.steps << " digits, " << est.kernel
        << " kernels, " << secs << " s\n";
      emit(as_json, j, t.str());
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
