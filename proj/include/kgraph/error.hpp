#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace kgraph {

enum class ErrorKind {
  MalformedWord,
  BadInterval,
  Composition,
  UnknownId,
  MalformedCollection,
  Domain,
  Precondition,
  MissingSquare,
  NonAssociative,
  EnumerationLimit,
  Inconclusive,
  Schema,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by path validation; `index` is the position of the second edge of
/// the first non-composable adjacent pair.
class CompositionError : public Error {
 public:
  CompositionError(std::size_t index, const std::string& what)
      : Error(ErrorKind::Composition, what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// A mixed-colour 2-path that has no owning square (or more than one).
class MissingSquareError : public Error {
 public:
  MissingSquareError(std::string first, std::string second, std::size_t owners)
      : Error(ErrorKind::MissingSquare,
              "2-path " + first + "," + second + " has " +
                  std::to_string(owners) + " owning squares, expected 1"),
        first_(std::move(first)),
        second_(std::move(second)),
        owners_(owners) {}

  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }
  std::size_t owners() const noexcept { return owners_; }

 private:
  std::string first_;
  std::string second_;
  std::size_t owners_;
};

/// Carries a tri-coloured path whose two rearrangements disagree.
class NonAssociativeError : public Error {
 public:
  NonAssociativeError(std::vector<std::string> triple, const std::string& what)
      : Error(ErrorKind::NonAssociative, what), triple_(std::move(triple)) {}
  const std::vector<std::string>& triple() const noexcept { return triple_; }

 private:
  std::vector<std::string> triple_;
};

}  // namespace kgraph
