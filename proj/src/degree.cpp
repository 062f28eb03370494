#include "kgraph/degree.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "kgraph/error.hpp"

namespace kgraph {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedWord: return "malformed-word";
    case ErrorKind::BadInterval: return "bad-interval";
    case ErrorKind::Composition: return "composition";
    case ErrorKind::UnknownId: return "unknown-id";
    case ErrorKind::MalformedCollection: return "malformed-collection";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::MissingSquare: return "missing-square";
    case ErrorKind::NonAssociative: return "non-associative";
    case ErrorKind::EnumerationLimit: return "enumeration-limit";
    case ErrorKind::Inconclusive: return "inconclusive";
    case ErrorKind::Schema: return "schema";
  }
  return "unknown";
}

Degree Degree::unit(std::size_t k, std::size_t i) {
  Degree d(k);
  d.coords_.at(i) = 1;
  return d;
}

Degree Degree::ones(std::size_t k) {
  Degree d(k);
  std::fill(d.coords_.begin(), d.coords_.end(), 1u);
  return d;
}

std::uint64_t Degree::norm() const noexcept {
  return std::accumulate(coords_.begin(), coords_.end(), std::uint64_t{0});
}

bool Degree::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](value_type c) { return c == 0; });
}

bool Degree::leq(const Degree& other) const {
  if (k() != other.k()) return false;
  for (std::size_t i = 0; i < k(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

Degree Degree::join(const Degree& other) const {
  Degree out(k());
  for (std::size_t i = 0; i < k(); ++i)
    out.coords_[i] = std::max(coords_[i], other.coords_.at(i));
  return out;
}

Degree Degree::operator+(const Degree& other) const {
  Degree out = *this;
  out += other;
  return out;
}

Degree& Degree::operator+=(const Degree& other) {
  if (other.k() != k())
    throw Error(ErrorKind::BadInterval, "degree rank mismatch");
  for (std::size_t i = 0; i < k(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Degree Degree::operator-(const Degree& other) const {
  if (!other.leq(*this))
    throw Error(ErrorKind::BadInterval,
                other.to_string() + " is not below " + to_string());
  Degree out = *this;
  for (std::size_t i = 0; i < k(); ++i) out.coords_[i] -= other.coords_[i];
  return out;
}

std::string Degree::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < k(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords_[i]);
  }
  return s + ")";
}

Degree Degree::parse(const std::string& text) {
  std::string body = text;
  if (!body.empty() && body.front() == '(') body.erase(body.begin());
  if (!body.empty() && body.back() == ')') body.pop_back();
  std::vector<value_type> coords;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (v < 0 || used != item.size()) throw std::invalid_argument(item);
      coords.push_back(static_cast<value_type>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Schema, "bad degree literal '" + text + "'");
    }
  }
  if (coords.empty()) throw Error(ErrorKind::Schema, "empty degree literal");
  return Degree(std::move(coords));
}

std::vector<Degree> degrees_between(const Degree& lower, const Degree& upper) {
  if (!lower.leq(upper))
    throw Error(ErrorKind::BadInterval,
                lower.to_string() + " is not below " + upper.to_string());
  std::vector<Degree> out;
  Degree cur = lower;
  const std::size_t k = lower.k();
  while (true) {
    out.push_back(cur);
    // odometer with the last coordinate fastest
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (cur[i] < upper[i]) {
        ++cur[i];
        for (std::size_t j = i + 1; j < k; ++j) cur[j] = lower[j];
        break;
      }
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

std::vector<Degree> degrees_by_norm(const Degree& upper) {
  auto all = degrees_between(Degree::zero(upper.k()), upper);
  std::stable_sort(all.begin(), all.end(), [](const Degree& a, const Degree& b) {
    return a.norm() < b.norm();
  });
  return all;
}

std::string ColourWord::to_string() const {
  std::string s;
  for (auto l : letters) s += "c" + std::to_string(l + 1);
  return s.empty() ? "1" : s;
}

ColourWord concat(const ColourWord& a, const ColourWord& b) {
  ColourWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Degree abelianize(const ColourWord& word, std::size_t k) {
  Degree d(k);
  for (auto l : word.letters) {
    if (l >= k)
      throw Error(ErrorKind::MalformedWord,
                  "letter c" + std::to_string(l + 1) + " outside colours 1.." +
                      std::to_string(k));
    ++d[l];
  }
  return d;
}

ColourWord canonical_word(const Degree& shape) {
  ColourWord w;
  for (std::size_t i = 0; i < shape.k(); ++i)
    w.letters.insert(w.letters.end(), shape[i], static_cast<std::uint32_t>(i));
  return w;
}

std::vector<ColourWord> staircases(const Degree& shape) {
  ColourWord w = canonical_word(shape);
  std::vector<ColourWord> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.letters.begin(), w.letters.end()));
  return out;
}

}  // namespace kgraph

std::size_t std::hash<kgraph::Degree>::operator()(
    const kgraph::Degree& d) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto c : d.coords()) h = (h ^ c) * 0x100000001b3ull;
  return h;
}
