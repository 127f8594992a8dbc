#pragma once

// Reference tables stored as plain text under data/.
//
// Branching table (branching_c28_e7.txt), one row per line:
//   <C28 hw> | <C28 dim> | <mult>*<E7 hw>=<dim> ; <mult>*<E7 hw>=<dim> ; ...
// Tensor table (tensor_c28.txt):
//   <hw> x <hw> [x <hw> ...] | <product dim> | <mult>*<C28 hw>=<dim> ; ...
// Weights use the run-length label syntax of parse_weight. '#' starts a comment.

#include "liebranch/core.hpp"

#include <fstream>
#include <istream>
#include <string>
#include <vector>

namespace liebranch {

struct FixtureConstituent {
  Weight highest_weight;
  BigInt multiplicity;
  BigInt dimension;
};

struct BranchingFixture {
  Weight highest_weight;
  BigInt dimension;
  std::vector<FixtureConstituent> constituents;
};

struct TensorFixture {
  std::vector<Weight> factors;
  BigInt dimension;
  std::vector<FixtureConstituent> constituents;
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
    if (pos == std::string::npos) break;
    start = pos + sep.size();
  }
  return out;
}

inline BigInt parse_bigint(const std::string& s) {
  const std::string t = trim(s);
  if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("bad integer '" + t + "' in fixture");
  return BigInt(t);
}

inline std::vector<std::vector<std::string>> fixture_rows(std::istream& is) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    auto cols = split(line, "|");
    if (cols.size() != 3) throw InputError("fixture row needs three '|' separated columns: " + line);
    rows.push_back(std::move(cols));
  }
  return rows;
}

inline std::vector<FixtureConstituent> parse_constituents(const std::string& text, std::size_t rank) {
  std::vector<FixtureConstituent> out;
  for (const auto& item : split(text, ";")) {
    const auto star = item.find('*');
    const auto eq = item.find('=');
    if (star == std::string::npos || eq == std::string::npos || eq < star)
      throw InputError("fixture constituent '" + item + "' is not mult*hw=dim");
    out.push_back({parse_weight(item.substr(star + 1, eq - star - 1), rank), parse_bigint(item.substr(0, star)),
                   parse_bigint(item.substr(eq + 1))});
  }
  return out;
}

inline std::ifstream open_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open fixture file '" + path + "'");
  return in;
}

}  // namespace detail

inline std::vector<BranchingFixture> parse_branching_table(std::istream& is, std::size_t big_rank = 28,
                                                           std::size_t sub_rank = 7) {
  std::vector<BranchingFixture> out;
  for (const auto& cols : detail::fixture_rows(is))
    out.push_back({parse_weight(cols[0], big_rank), detail::parse_bigint(cols[1]),
                   detail::parse_constituents(cols[2], sub_rank)});
  return out;
}

inline std::vector<TensorFixture> parse_tensor_table(std::istream& is, std::size_t rank = 28) {
  std::vector<TensorFixture> out;
  for (const auto& cols : detail::fixture_rows(is)) {
    TensorFixture f;
    for (const auto& w : detail::split(cols[0], "x")) f.factors.push_back(parse_weight(w, rank));
    f.dimension = detail::parse_bigint(cols[1]);
    f.constituents = detail::parse_constituents(cols[2], rank);
    out.push_back(std::move(f));
  }
  return out;
}

inline std::vector<BranchingFixture> load_branching_table(const std::string& path) {
  auto in = detail::open_fixture(path);
  return parse_branching_table(in);
}

inline std::vector<TensorFixture> load_tensor_table(const std::string& path) {
  auto in = detail::open_fixture(path);
  return parse_tensor_table(in);
}

}  // namespace liebranch
