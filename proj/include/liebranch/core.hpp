#pragma once

// Shared numeric types, error classes and the Weight value type.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace liebranch {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// num/den with the sign moved to the numerator (cpp_rational rejects a
/// negative denominator when both components are negative).
inline Rational ratio(long long num, long long den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// Malformed user input: bad weight syntax, wrong rank, non-dominant where
/// a dominant weight is required.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed (negative multiplicity, inconsistent linear
/// system, broken representation). Never recoverable by retrying the same call.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Weight in Dynkin-label coordinates, i.e. the integers lambda(h_i).
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::vector<int> labels) : labels_(std::move(labels)) {}
  Weight(std::initializer_list<int> labels) : labels_(labels) {}

  static Weight zero(std::size_t rank) { return Weight(std::vector<int>(rank, 0)); }
  static Weight unit(std::size_t rank, std::size_t i) {
    Weight w = zero(rank);
    w.labels_.at(i) = 1;
    return w;
  }

  std::size_t rank() const { return labels_.size(); }
  int operator[](std::size_t i) const { return labels_[i]; }
  int& operator[](std::size_t i) { return labels_[i]; }
  const std::vector<int>& labels() const { return labels_; }

  bool is_dominant() const {
    for (int v : labels_)
      if (v < 0) return false;
    return true;
  }
  bool is_zero() const {
    for (int v : labels_)
      if (v != 0) return false;
    return true;
  }

  Weight& operator+=(const Weight& o) {
    check_same_rank(o);
    for (std::size_t i = 0; i < labels_.size(); ++i) labels_[i] += o.labels_[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_same_rank(o);
    for (std::size_t i = 0; i < labels_.size(); ++i) labels_[i] -= o.labels_[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (int& v : a.labels_) v = -v;
    return a;
  }
  friend Weight operator*(int k, Weight a) {
    for (int& v : a.labels_) v *= k;
    return a;
  }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.labels_ <=> b.labels_; }

 private:
  void check_same_rank(const Weight& o) const {
    if (o.labels_.size() != labels_.size())
      throw InputError("weight rank mismatch: " + std::to_string(labels_.size()) + " vs " +
                       std::to_string(o.labels_.size()));
  }

  std::vector<int> labels_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int v : w.labels()) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

/// Formats with run-length compression of repeated labels: [0,0,0,1] -> "0^3,1".
inline std::string to_run_length(const Weight& w) {
  std::string out;
  const auto& l = w.labels();
  for (std::size_t i = 0; i < l.size();) {
    std::size_t j = i;
    while (j < l.size() && l[j] == l[i]) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(l[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << '[' << to_run_length(w) << ']';
}

namespace detail {

inline long long parse_integer_token(const std::string& text, const std::string& token) {
  if (text.empty()) throw InputError("malformed weight token '" + token + "'");
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(text, &pos);
  } catch (const std::exception&) {
    throw InputError("malformed weight token '" + token + "'");
  }
  if (pos != text.size()) throw InputError("malformed weight token '" + token + "'");
  return value;
}

}  // namespace detail

/// Parses comma-separated Dynkin labels with `k^n` run-length tokens
/// ("0^6,1"). Surrounding brackets and whitespace are accepted. When
/// expected_rank is nonzero the label count must match it.
inline Weight parse_weight(const std::string& spec, std::size_t expected_rank = 0) {
  std::string s;
  for (char c : spec)
    if (c != ' ' && c != '\t' && c != '[' && c != ']') s += c;
  if (s.empty()) throw InputError("empty weight specification");

  std::vector<int> labels;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    const std::string token = s.substr(start, comma - start);
    const std::size_t caret = token.find('^');
    long long value = 0;
    long long count = 1;
    if (caret == std::string::npos) {
      value = detail::parse_integer_token(token, token);
    } else {
      value = detail::parse_integer_token(token.substr(0, caret), token);
      count = detail::parse_integer_token(token.substr(caret + 1), token);
      if (count < 1 || count > 4096)
        throw InputError("bad repeat count in weight token '" + token + "'");
    }
    if (value < -1000000 || value > 1000000)
      throw InputError("label out of range in weight token '" + token + "'");
    labels.insert(labels.end(), static_cast<std::size_t>(count), static_cast<int>(value));
    start = comma + 1;
  }
  if (expected_rank != 0 && labels.size() != expected_rank)
    throw InputError("weight '" + spec + "' has " + std::to_string(labels.size()) +
                     " labels, expected " + std::to_string(expected_rank));
  return Weight(std::move(labels));
}

}  // namespace liebranch
