#include "ninf/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ninf/error.hpp"

namespace ninf {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[x])
      throw DomainError("image vector is not a permutation");
    seen[x] = true;
  }
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i))
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (std::size_t i = 0; i < images_.size(); ++i)
    r.images_[images_[i]] = static_cast<int>(i);
  return r;
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (int j = static_cast<int>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree <= this->degree())
    return *this;
  Permutation r(degree);
  std::copy(images_.begin(), images_.end(), r.images_.begin());
  return r;
}

std::string Permutation::cycles() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == static_cast<int>(i))
      continue;
    out += '(';
    for (int j = static_cast<int>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != static_cast<int>(i))
        out += ' ';
      out += std::to_string(j);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  const std::size_t n = std::max(a.degree(), b.degree());
  const Permutation &x = a.degree() == n ? a : a.extended(n);
  const Permutation &y = b.degree() == n ? b : b.extended(n);
  Permutation r(n);
  for (std::size_t i = 0; i < n; ++i)
    r.images_[i] = x.images_[y.images_[i]];
  return r;
}

namespace {

// Parses cycles starting at `text[begin]`, reporting positions relative to
// `offset` so callers can point into a larger string.
Permutation parse_cycles_at(std::string_view text, std::size_t offset,
                            std::size_t min_degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  int max_point = -1;
  skip_ws();
  if (i == text.size())
    throw ParseError("empty permutation", offset);
  while (i < text.size()) {
    if (text[i] != '(')
      throw ParseError("expected '('", offset + i);
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size())
        throw ParseError("unterminated cycle", offset + i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected a point index", offset + i);
      long value = 0;
      const std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1'000'000)
          throw ParseError("point index too large", offset + start);
        ++i;
      }
      if (std::find(cycle.begin(), cycle.end(), value) != cycle.end())
        throw ParseError("point repeated within a cycle", offset + start);
      cycle.push_back(static_cast<int>(value));
      max_point = std::max(max_point, static_cast<int>(value));
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  const std::size_t degree =
      std::max<std::size_t>(min_degree, static_cast<std::size_t>(max_point + 1));
  Permutation result(degree);
  for (const auto &cycle : cycles) {
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 0);
    for (std::size_t k = 0; k < cycle.size(); ++k)
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    // Right-to-left product: later cycles act first.
    result = result * Permutation(std::move(images));
  }
  return result;
}

} // namespace

Permutation parse_cycles(std::string_view text, std::size_t min_degree) {
  return parse_cycles_at(text, 0, min_degree);
}

std::vector<Permutation> parse_generator_list(std::string_view text) {
  std::vector<Permutation> gens;
  std::vector<std::size_t> starts;
  std::size_t depth = 0, start = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pieces;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(')
      ++depth;
    else if (i < text.size() && text[i] == ')') {
      if (depth == 0)
        throw ParseError("unbalanced ')'", i);
      --depth;
    }
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      pieces.emplace_back(start, i);
      start = i + 1;
    }
  }
  if (depth != 0)
    throw ParseError("unterminated cycle", text.size());
  for (auto [b, e] : pieces)
    gens.push_back(parse_cycles_at(text.substr(b, e - b), b, 0));
  std::size_t degree = 1;
  for (const auto &g : gens)
    degree = std::max(degree, g.degree());
  for (auto &g : gens)
    g = g.extended(degree);
  return gens;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  std::size_t h = p.degree();
  for (int x : p.images())
    h = h * 1000003u ^ static_cast<std::size_t>(x);
  return h;
}

} // namespace ninf
