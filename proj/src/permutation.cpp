#include "origami/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "origami/error.hpp"

namespace origami {

Permutation::Permutation(std::vector<int> images_one_based) {
  const int n = static_cast<int>(images_one_based.size());
  std::vector<bool> seen(images_one_based.size(), false);
  img_.reserve(images_one_based.size());
  for (int x : images_one_based) {
    if (x < 1 || x > n) throw Error(ErrorCode::label_out_of_range, "permutation image " + std::to_string(x) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(x - 1)]) throw Error(ErrorCode::not_a_bijection, "permutation image " + std::to_string(x) + " repeated");
    seen[static_cast<std::size_t>(x - 1)] = true;
    img_.push_back(x - 1);
  }
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.img_.resize(static_cast<std::size_t>(n));
  std::iota(p.img_.begin(), p.img_.end(), 0);
  return p;
}

Permutation Permutation::from_zero_based(std::vector<int> images) {
  for (auto& x : images) ++x;
  return Permutation(std::move(images));
}

Permutation Permutation::random(int n, std::mt19937_64& rng) {
  Permutation p = identity(n);
  std::shuffle(p.img_.begin(), p.img_.end(), rng);
  return p;
}

Permutation Permutation::parse_cycles(const std::string& text, int n) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::malformed_cycles, "malformed cycle notation '" + text + "': " + why);
  };

  skip_ws();
  if (i == text.size()) throw fail("empty");
  while (i < text.size()) {
    if (text[i] != '(') throw fail("expected '('");
    ++i;
    std::vector<int> cyc;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;  // "()" denotes the identity
      skip_ws();
      continue;
    }
    while (true) {
      skip_ws();
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) throw fail("expected a label");
      long long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 100000000) throw Error(ErrorCode::label_out_of_range, "label too large in '" + text + "'");
        ++i;
      }
      if (neg || value < 1) throw Error(ErrorCode::label_out_of_range, "labels must be positive in '" + text + "'");
      cyc.push_back(static_cast<int>(value));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw fail("expected ',' or ')'");
    }
    cycles.push_back(std::move(cyc));
    skip_ws();
  }

  int max_label = 0;
  for (const auto& c : cycles)
    for (int x : c) max_label = std::max(max_label, x);
  if (n == 0) n = max_label;
  if (max_label > n)
    throw Error(ErrorCode::label_out_of_range, "label " + std::to_string(max_label) + " exceeds n = " + std::to_string(n));

  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (const auto& c : cycles)
    for (std::size_t k = 0; k < c.size(); ++k) {
      const auto at = static_cast<std::size_t>(c[k] - 1);
      if (used[at]) throw Error(ErrorCode::not_a_bijection, "label " + std::to_string(c[k]) + " appears twice in '" + text + "'");
      used[at] = true;
      img[at] = c[(k + 1) % c.size()];
    }
  return Permutation(std::move(img));
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.img_.resize(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) p.img_[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t s = 0; s < img_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> cyc;
    for (auto x = s; !seen[x]; x = static_cast<std::size_t>(img_[x])) {
      seen[x] = true;
      cyc.push_back(static_cast<int>(x) + 1);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  if (img_.empty()) return "()";
  std::string s;
  for (const auto& c : cycles()) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw Error(ErrorCode::size_mismatch, "compose: sizes " + std::to_string(p.size()) + " and " + std::to_string(q.size()));
  std::vector<int> img(static_cast<std::size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i) img[static_cast<std::size_t>(i)] = p.at0(q.at0(i));
  return Permutation::from_zero_based(std::move(img));
}

Permutation conjugate(const Permutation& p, const Permutation& phi) {
  return compose(phi.inverse(), compose(p, phi));
}

bool is_transitive(const Permutation& h, const Permutation& v) {
  if (h.size() != v.size()) return false;
  const int n = h.size();
  if (n == 0) return false;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : {h.at0(x), v.at0(x)}) {
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = true;
        ++count;
        stack.push_back(y);
      }
    }
  }
  return count == n;
}

namespace {

// BFS labeling from `start`; returns order[new] = old (0-based).
void bfs_order(const Permutation& h, const Permutation& v, int start, std::vector<int>& order, std::vector<int>& label) {
  const auto n = static_cast<std::size_t>(h.size());
  order.clear();
  label.assign(n, -1);
  order.push_back(start);
  label[static_cast<std::size_t>(start)] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int x = order[head];
    for (int y : {h.at0(x), v.at0(x)}) {
      if (label[static_cast<std::size_t>(y)] < 0) {
        label[static_cast<std::size_t>(y)] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  }
}

}  // namespace

CanonicalPair canonical_pair(const Permutation& h, const Permutation& v) {
  if (h.size() != v.size())
    throw Error(ErrorCode::size_mismatch, "canonical_pair: sizes " + std::to_string(h.size()) + " and " + std::to_string(v.size()));
  if (!is_transitive(h, v)) throw Error(ErrorCode::not_transitive, "canonical_pair: pair does not act transitively");
  const int n = h.size();
  const auto un = static_cast<std::size_t>(n);

  std::vector<int> best_code, best_order, order, label, code(2 * un);
  for (int s = 0; s < n; ++s) {
    bfs_order(h, v, s, order, label);
    for (std::size_t k = 0; k < un; ++k) {
      code[k] = label[static_cast<std::size_t>(h.at0(order[k]))];
      code[un + k] = label[static_cast<std::size_t>(v.at0(order[k]))];
    }
    if (best_code.empty() || code < best_code) {
      best_code = code;
      best_order = order;
    }
  }
  return CanonicalPair{
      Permutation::from_zero_based(std::vector<int>(best_code.begin(), best_code.begin() + n)),
      Permutation::from_zero_based(std::vector<int>(best_code.begin() + n, best_code.end())),
      Permutation::from_zero_based(best_order),
  };
}

}  // namespace origami
