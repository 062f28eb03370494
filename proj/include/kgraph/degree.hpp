#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace kgraph {

/// An element of N^k. Colour indices are 0-based internally; the i-th
/// standard generator is `Degree::unit(k, i)`.
class Degree {
 public:
  using value_type = std::uint32_t;

  Degree() = default;
  explicit Degree(std::size_t k) : coords_(k, 0) {}
  Degree(std::initializer_list<value_type> coords) : coords_(coords) {}
  explicit Degree(std::vector<value_type> coords) : coords_(std::move(coords)) {}

  static Degree zero(std::size_t k) { return Degree(k); }
  static Degree unit(std::size_t k, std::size_t i);
  /// (1, ..., 1)
  static Degree ones(std::size_t k);

  std::size_t k() const noexcept { return coords_.size(); }
  value_type operator[](std::size_t i) const { return coords_[i]; }
  value_type& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<value_type>& coords() const noexcept { return coords_; }

  /// |m| = sum of coordinates.
  std::uint64_t norm() const noexcept;
  bool is_zero() const noexcept;

  /// Coordinatewise partial order.
  bool leq(const Degree& other) const;
  /// Coordinatewise max.
  Degree join(const Degree& other) const;

  Degree operator+(const Degree& other) const;
  /// Requires other <= *this.
  Degree operator-(const Degree& other) const;
  Degree& operator+=(const Degree& other);

  friend bool operator==(const Degree&, const Degree&) = default;
  /// Lexicographic; used only for deterministic ordering.
  friend auto operator<=>(const Degree& a, const Degree& b) {
    return a.coords_ <=> b.coords_;
  }

  /// "(1,2,0)"
  std::string to_string() const;
  /// Parses "1,2,0" or "(1,2,0)".
  static Degree parse(const std::string& text);

 private:
  std::vector<value_type> coords_;
};

/// Every n with lower <= n <= upper, in lexicographic order.
std::vector<Degree> degrees_between(const Degree& lower, const Degree& upper);

/// Every n <= upper, ordered by increasing |n| then lexicographically.
std::vector<Degree> degrees_by_norm(const Degree& upper);

/// A word in the free monoid on k colours; letters are 0-based colours.
struct ColourWord {
  std::vector<std::uint32_t> letters;

  std::size_t size() const noexcept { return letters.size(); }
  friend bool operator==(const ColourWord&, const ColourWord&) = default;
  friend auto operator<=>(const ColourWord&, const ColourWord&) = default;
  /// "c1c2c1" using 1-based colour names.
  std::string to_string() const;
};

ColourWord concat(const ColourWord& a, const ColourWord& b);

/// The abelianization F_k^+ -> N^k: coordinatewise letter counts.
/// Throws ErrorKind::MalformedWord for letters outside 0..k-1.
Degree abelianize(const ColourWord& word, std::size_t k);

/// c1^m1 c2^m2 ... ck^mk, the lexicographically first staircase.
ColourWord canonical_word(const Degree& shape);

/// All words w with abelianize(w) == shape, in lexicographic order.
std::vector<ColourWord> staircases(const Degree& shape);

}  // namespace kgraph

template <>
struct std::hash<kgraph::Degree> {
  std::size_t operator()(const kgraph::Degree& d) const noexcept;
};
