#include "ninf/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>

#include "ninf/error.hpp"

namespace ninf {

namespace {

constexpr std::size_t kTableLimit = 1024;

std::size_t env_or(const char *var, std::size_t fallback) {
  const char *value = std::getenv(var);
  if (!value || !*value)
    return fallback;
  char *end = nullptr;
  const unsigned long long parsed = std::strtoull(value, &end, 10);
  if (*end != '\0' || parsed == 0)
    throw ParseError(std::string("invalid value for ") + var + ": " + value);
  return static_cast<std::size_t>(parsed);
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char &c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

Permutation cycle_on(std::size_t degree, std::initializer_list<int> points) {
  std::vector<int> images(degree);
  for (std::size_t i = 0; i < degree; ++i)
    images[i] = static_cast<int>(i);
  std::vector<int> pts(points);
  for (std::size_t k = 0; k < pts.size(); ++k)
    images[pts[k]] = pts[(k + 1) % pts.size()];
  return Permutation(std::move(images));
}

Permutation rotation(std::size_t n) {
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i)
    images[i] = static_cast<int>((i + 1) % n);
  return Permutation(std::move(images));
}

std::size_t factorial(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

} // namespace

Caps Caps::from_environment() {
  Caps caps;
  caps.order_cap = env_or("NINF_ORDER_CAP", caps.order_cap);
  caps.lattice_order_cap = env_or("NINF_LATTICE_CAP", caps.lattice_order_cap);
  caps.n_max = env_or("NINF_NMAX", caps.n_max);
  caps.transfer_subgroup_cap =
      env_or("NINF_TRANSFER_CAP", caps.transfer_subgroup_cap);
  return caps;
}

FiniteGroup FiniteGroup::generated_by(std::vector<Permutation> generators,
                                      std::string name, std::size_t order_cap) {
  FiniteGroup g;
  g.name_ = std::move(name);
  std::size_t degree = 1;
  for (const auto &p : generators)
    degree = std::max(degree, p.degree());
  for (auto &p : generators) {
    if (p.degree() != degree)
      throw DomainError("generators must share one degree");
  }
  g.degree_ = degree;
  g.generators_ = generators;

  // Breadth-first closure under right multiplication by generators.
  std::unordered_map<Permutation, ElementId, PermutationHash> seen;
  std::vector<Permutation> found{Permutation(degree)};
  seen.emplace(found.front(), 0);
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const auto &s : generators) {
      Permutation next = found[i] * s;
      if (seen.count(next))
        continue;
      if (found.size() >= order_cap)
        throw ResourceError("group order exceeds cap of " +
                            std::to_string(order_cap));
      seen.emplace(next, static_cast<ElementId>(found.size()));
      found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end());
  g.elements_ = std::move(found);
  for (std::size_t i = 0; i < g.elements_.size(); ++i)
    g.index_.emplace(g.elements_[i], static_cast<ElementId>(i));

  const std::size_t n = g.elements_.size();
  if (n <= kTableLimit) {
    g.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        g.table_[a * n + b] = g.index_.at(g.elements_[a] * g.elements_[b]);
  }
  g.inverses_.resize(n);
  g.element_orders_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    g.inverses_[a] = g.index_.at(g.elements_[a].inverse());
    g.element_orders_[a] = g.elements_[a].order();
  }
  return g;
}

std::optional<ElementId> FiniteGroup::find(const Permutation &p) const {
  const Permutation &q = p.degree() < degree_ ? p.extended(degree_) : p;
  auto it = index_.find(q);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

ElementId FiniteGroup::index_of(const Permutation &p) const {
  if (auto id = find(p))
    return *id;
  throw DomainError("permutation " + p.cycles() + " is not an element of " +
                    name_);
}

ElementId FiniteGroup::multiply(ElementId a, ElementId b) const {
  if (!table_.empty())
    return table_[static_cast<std::size_t>(a) * order() + b];
  return index_.at(elements_[a] * elements_[b]);
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] * generators_[j] != generators_[j] * generators_[i])
        return false;
  return true;
}

FiniteGroup catalog_group(std::string_view name, const Caps &caps) {
  const std::string key = lower(trim(name));
  const std::string display = [&] {
    std::string d = trim(name);
    if (!d.empty())
      d[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(d[0])));
    return d;
  }();
  if (key == "q8") {
    // Left-regular representation on {1, i, j, k, -1, -i, -j, -k}.
    return FiniteGroup::generated_by(
        {Permutation({1, 4, 3, 6, 5, 0, 7, 2}),
         Permutation({2, 7, 4, 1, 6, 3, 0, 5})},
        "Q8", caps.order_cap);
  }
  if (key.size() < 2 || !std::isdigit(static_cast<unsigned char>(key[1])))
    throw ParseError("unknown catalog group '" + std::string(name) + "'", 0);
  for (std::size_t i = 1; i < key.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(key[i])))
      throw ParseError("unknown catalog group '" + std::string(name) + "'", i);
  if (key.size() > 10)
    throw ResourceError("group order exceeds cap of " +
                        std::to_string(caps.order_cap));
  const std::size_t n = std::stoul(key.substr(1));
  if (n == 0)
    throw ParseError("catalog index must be positive", 1);
  auto check_order = [&](std::size_t order) {
    if (order > caps.order_cap)
      throw ResourceError("group order " + std::to_string(order) +
                          " exceeds cap of " + std::to_string(caps.order_cap));
  };
  switch (key[0]) {
  case 'c':
    check_order(n);
    return FiniteGroup::generated_by({rotation(n)}, display, caps.order_cap);
  case 'd': {
    check_order(2 * n);
    if (n == 1)
      return FiniteGroup::generated_by({cycle_on(2, {0, 1})}, display,
                                       caps.order_cap);
    if (n == 2)
      return FiniteGroup::generated_by(
          {parse_cycles("(0 1)(2 3)"), parse_cycles("(0 2)(1 3)")}, display,
          caps.order_cap);
    std::vector<int> reflection(n);
    for (std::size_t i = 0; i < n; ++i)
      reflection[i] = static_cast<int>((n - i) % n);
    return FiniteGroup::generated_by(
        {rotation(n), Permutation(std::move(reflection))}, display,
        caps.order_cap);
  }
  case 's':
  case 'a': {
    if (n > 5)
      throw ParseError("catalog provides " + std::string(1, key[0]) +
                           "n only for n <= 5",
                       1);
    const bool alternating = key[0] == 'a';
    check_order(alternating && n > 1 ? factorial(n) / 2 : factorial(n));
    std::vector<Permutation> gens;
    if (n == 1 || (alternating && n == 2)) {
      gens.push_back(Permutation(n));
    } else if (alternating) {
      // 3-cycles (0 1 k) generate An.
      for (std::size_t k = 2; k < n; ++k)
        gens.push_back(cycle_on(n, {0, 1, static_cast<int>(k)}));
    } else {
      gens.push_back(cycle_on(n, {0, 1}));
      if (n > 2)
        gens.push_back(rotation(n));
    }
    return FiniteGroup::generated_by(std::move(gens), display, caps.order_cap);
  }
  default:
    throw ParseError("unknown catalog group '" + std::string(name) + "'", 0);
  }
}

FiniteGroup parse_group(std::string_view spec, const Caps &caps) {
  const std::string text = trim(spec);
  if (text.empty())
    throw ParseError("empty group specification", 0);
  if (text.front() == '(') {
    auto gens = parse_generator_list(spec);
    return FiniteGroup::generated_by(std::move(gens), "G", caps.order_cap);
  }
  return catalog_group(text, caps);
}

std::vector<std::string> catalog_names(std::size_t max_order) {
  std::vector<std::string> names;
  for (std::size_t n = 1; n <= max_order; ++n)
    names.push_back("C" + std::to_string(n));
  for (std::size_t n = 1; 2 * n <= max_order; ++n)
    names.push_back("D" + std::to_string(n));
  for (std::size_t n = 1; n <= 5 && factorial(n) <= max_order; ++n)
    names.push_back("S" + std::to_string(n));
  for (std::size_t n = 1; n <= 5 && std::max<std::size_t>(1, factorial(n) / 2) <= max_order; ++n)
    names.push_back("A" + std::to_string(n));
  if (max_order >= 8)
    names.push_back("Q8");
  return names;
}

} // namespace ninf
