#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace ninf {

/// A permutation of {0, ..., degree-1}, stored as its image vector.
///
/// Products compose right to left: (a * b)(i) = a(b(i)).
class Permutation {
public:
  Permutation() = default;

  /// Identity on `degree` points.
  explicit Permutation(std::size_t degree);

  /// Throws DomainError unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<int> images);

  std::size_t degree() const { return images_.size(); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int> &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  std::size_t order() const;

  /// Extends to a larger degree by fixing the new points.
  Permutation extended(std::size_t degree) const;

  /// Disjoint-cycle notation, e.g. "(0 1 2)(3 4)"; identity prints as "()".
  std::string cycles() const;

  friend Permutation operator*(const Permutation &a, const Permutation &b);
  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  std::vector<int> images_;
};

/// Parses a product of disjoint (or overlapping) cycles such as "(0 1)(2 3)".
/// Cycles are multiplied right to left. The result has degree at least
/// `min_degree` and large enough to hold every point mentioned.
Permutation parse_cycles(std::string_view text, std::size_t min_degree = 0);

/// Splits "(0 1)(2 3), (0 2)(1 3)" into generator permutations of a common
/// degree. ParseError positions refer to `text`.
std::vector<Permutation> parse_generator_list(std::string_view text);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept;
};

} // namespace ninf
