#pragma once

// Command-line front end. run() is the whole program; tools/liebranch.cpp
// only forwards argv.
//
// Exit codes: 0 success, 1 usage error, 2 verification mismatch,
// 3 internal consistency failure.

#include "liebranch/branching.hpp"
#include "liebranch/fixtures.hpp"
#include "liebranch/frobenius.hpp"
#include "liebranch/module_construction.hpp"
#include "liebranch/projection.hpp"
#include "liebranch/root_system.hpp"
#include "liebranch/tensor.hpp"
#include "liebranch/weight_system.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace liebranch::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kMismatch = 2, kInternal = 3 };

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline json to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return static_cast<std::uint64_t>(v);
  return v.str();
}

inline json constituents_json(const RootSystem& rs, const WeightSystem& d) {
  json arr = json::array();
  for (const auto& [hw, m] : d)
    arr.push_back({{"hw", to_run_length(hw)}, {"dim", to_json(weyl_dimension(rs, hw))}, {"mult", to_json(m)}});
  return arr;
}

inline json branching_json(const Weight& hw, const BigInt& dim, const BranchingResult& r) {
  json arr = json::array();
  for (const auto& c : r.constituents)
    arr.push_back({{"hw", to_run_length(c.highest_weight)}, {"dim", to_json(c.dimension)},
                   {"mult", to_json(c.multiplicity)}});
  return {{"highest_weight", to_run_length(hw)}, {"dimension", to_json(dim)}, {"constituents", arr}};
}

inline std::string render(const json& j) { return j.dump(2) + "\n"; }

inline void print_branching(std::ostream& out, const Weight& hw, const BigInt& dim, const BranchingResult& r) {
  out << "C28 " << hw << "  dim " << dim << '\n';
  out << "  " << std::left << std::setw(6) << "mult" << std::setw(16) << "E7 h.w." << "dim\n";
  for (const auto& c : r.constituents) {
    std::ostringstream w;
    w << c.highest_weight;
    out << "  " << std::left << std::setw(6) << c.multiplicity.str() << std::setw(16) << w.str()
        << c.dimension << '\n';
  }
  out << "  total " << r.total_dimension() << '\n';
}

inline void print_decomposition(std::ostream& out, const RootSystem& rs, const WeightSystem& d) {
  out << "  " << std::left << std::setw(6) << "mult" << std::setw(16) << "h.w." << "dim\n";
  for (const auto& [hw, m] : d) {
    std::ostringstream w;
    w << hw;
    out << "  " << std::left << std::setw(6) << m.str() << std::setw(16) << w.str() << weyl_dimension(rs, hw)
        << '\n';
  }
  out << "  total " << decomposition_dimension(rs, d) << '\n';
}

inline std::vector<Weight> parse_factor_list(const std::vector<std::string>& tokens, std::size_t rank) {
  std::string joined;
  for (const auto& t : tokens) joined += t + " ";
  std::vector<Weight> factors;
  for (const auto& piece : detail::split(joined, "x")) {
    if (piece.empty()) throw InputError("empty factor in tensor product '" + detail::trim(joined) + "'");
    factors.push_back(parse_weight(piece, rank));
  }
  return factors;
}

inline std::vector<long long> parse_parts(const std::string& text) {
  std::vector<long long> parts;
  for (const auto& tok : detail::split(text, ",")) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      throw InputError("bad part '" + tok + "'");
    }
    if (pos != tok.size()) throw InputError("bad part '" + tok + "'");
    parts.push_back(v);
  }
  return parts;
}

struct CheckLine {
  std::string name;
  bool ok;
};

inline int report_checks(std::ostream& out, const std::vector<CheckLine>& checks, bool as_json, json extra = {}) {
  bool all = true;
  json arr = json::array();
  for (const auto& c : checks) {
    all = all && c.ok;
    if (as_json)
      arr.push_back({{"check", c.name}, {"ok", c.ok}});
    else
      out << (c.ok ? "[ok]   " : "[FAIL] ") << c.name << '\n';
  }
  if (as_json) {
    json doc = extra.is_null() ? json::object() : extra;
    doc["checks"] = arr;
    doc["ok"] = all;
    out << render(doc);
  }
  return all ? kOk : kMismatch;
}

inline int verify_embedding(std::ostream& out, const std::string& dump_path, bool as_json) {
  const RootSystem& e7 = root_system(AlgebraType{Family::E, 7});
  const Weight hw{0, 0, 0, 0, 0, 0, 1};
  const RepMatrices rep = construct_56_rep();
  std::vector<CheckLine> checks;
  checks.push_back({"module dimension is 56", rep.dimension() == 56});

  const RelationReport rel = verify_canonical_relations(rep, e7.cartan_matrix());
  checks.push_back({"canonical relations hold exactly (" + std::to_string(rel.checks.size()) + " identities)",
                    rel.all_passed()});

  WeightSystem diag(e7.type());
  for (std::size_t b = 0; b < rep.dimension(); ++b) {
    std::vector<int> labels(e7.rank());
    for (std::size_t i = 0; i < e7.rank(); ++i) labels[i] = static_cast<int>(numerator(rep.h[i].get(b, b)));
    diag.add(Weight(labels), 1);
  }
  checks.push_back({"h-diagonals give the weights of [0^6,1]", diag == full_weight_system(e7, hw)});

  const BilinearForm form = invariant_antisymmetric_form(rep);
  checks.push_back({"invariant antisymmetric forms: dim M = 1", form.solution_dimension == 1});
  checks.push_back({"M0 has rank 56 (det M0 != 0)", form.rank == 56});
  const SparseMatrix m0 = form.to_sparse();
  checks.push_back({"M0^T = -M0", m0.transpose() == (Rational(-1) * m0)});
  bool invariant = true;
  for (std::size_t i = 0; i < rep.rank(); ++i)
    invariant = invariant && invariance_residual(rep.x[i], m0).is_zero() &&
                invariance_residual(rep.y[i], m0).is_zero() && invariance_residual(rep.h[i], m0).is_zero();
  checks.push_back({"rho(x)^T M0 + M0 rho(x) = 0 for all generators", invariant});
  bool opposite = true;
  for (std::size_t a = 0; a < rep.dimension(); ++a)
    for (const auto& [b, v] : m0.row(a))
      opposite = opposite && (rep.basis_weights[a] + rep.basis_weights[b]).is_zero();
  checks.push_back({"M0 pairs only opposite weights", opposite});

  const ProjectionMatrix a = derive_projection_by_weight_matching();
  WeightSystem images(e7.type());
  for (std::size_t k = 0; k < 28; ++k) {
    Weight eps = Weight::unit(28, k);
    if (k > 0) eps[k - 1] = -1;
    images.add(a.apply(eps), 1);
    images.add(a.apply(-eps), 1);
  }
  checks.push_back({"derived projection reproduces the h-diagonals", images == diag});

  if (!dump_path.empty()) {
    std::ofstream f(dump_path);
    if (!f) throw InputError("cannot write dump file '" + dump_path + "'");
    write_rep_dump(f, rep, &form);
  }
  return report_checks(out, checks, as_json,
                       json{{"dimension", rep.dimension()}, {"form_solution_dimension", form.solution_dimension},
                            {"form_rank", form.rank}});
}

inline bool matches(const std::vector<FixtureConstituent>& expected, const std::vector<Constituent>& got) {
  if (expected.size() != got.size()) return false;
  for (const auto& e : expected) {
    auto it = std::find_if(got.begin(), got.end(), [&](const Constituent& c) {
      return c.highest_weight == e.highest_weight && c.multiplicity == e.multiplicity && c.dimension == e.dimension;
    });
    if (it == got.end()) return false;
  }
  return true;
}

inline int reproduce_tables(std::ostream& out, const std::string& data_dir, bool use_reference_matrix, bool as_json) {
  const RootSystem& c28 = root_system(AlgebraType{Family::C, 28});
  const RootSystem& e7 = root_system(AlgebraType{Family::E, 7});
  const ProjectionMatrix a =
      use_reference_matrix ? reference_projection_fixture(data_dir) : derive_projection_by_weight_matching();
  const auto branching_rows = load_branching_table(data_dir + "/branching_c28_e7.txt");
  const auto tensor_rows = load_tensor_table(data_dir + "/tensor_c28.txt");
  WeightSystemCache cache;

  bool all = true;
  json t1 = json::array();
  if (!as_json) out << "Branching C28 -> E7 (" << (use_reference_matrix ? "paper-fixture" : "derived")
                    << " projection)\n";
  for (const auto& row : branching_rows) {
    const BigInt dim = weyl_dimension(c28, row.highest_weight);
    const BranchingResult r = branch(c28, e7, a, row.highest_weight, &cache);
    const bool ok = dim == row.dimension && matches(row.constituents, r.constituents);
    all = all && ok;
    if (as_json) {
      json j = branching_json(row.highest_weight, dim, r);
      j["matches_fixture"] = ok;
      t1.push_back(j);
    } else {
      std::ostringstream hw;
      hw << row.highest_weight;
      out << "  " << (ok ? "ok       " : "MISMATCH ") << std::left << std::setw(14) << hw.str() << std::setw(8)
          << dim.str();
      for (std::size_t k = 0; k < r.constituents.size(); ++k) {
        const auto& c = r.constituents[k];
        out << (k ? " + " : "") << (c.multiplicity != 1 ? c.multiplicity.str() + "*" : "") << c.highest_weight;
      }
      out << "  =";
      for (std::size_t k = 0; k < r.constituents.size(); ++k)
        out << (k ? " + " : " ") << r.constituents[k].dimension;
      out << '\n';
    }
  }

  json t2 = json::array();
  if (!as_json) out << "C28 tensor products\n";
  for (const auto& row : tensor_rows) {
    const Decomposition d = tensor_fold(c28, row.factors, &cache);
    BigInt product = 1;
    for (const auto& f : row.factors) product *= weyl_dimension(c28, f);
    std::vector<Constituent> got;
    for (const auto& [hw, m] : d) got.push_back({hw, m, weyl_dimension(c28, hw)});
    const bool ok = product == row.dimension && decomposition_dimension(c28, d) == product &&
                    matches(row.constituents, got);
    all = all && ok;
    std::string name;
    for (std::size_t k = 0; k < row.factors.size(); ++k)
      name += (k ? " x " : "") + weyl_dimension(c28, row.factors[k]).str();
    if (as_json) {
      json factors = json::array();
      for (const auto& f : row.factors) factors.push_back(to_run_length(f));
      t2.push_back({{"factors", factors},
                    {"dimension", to_json(product)},
                    {"constituents", constituents_json(c28, d)},
                    {"matches_fixture", ok}});
    } else {
      out << "  " << (ok ? "ok       " : "MISMATCH ") << std::left << std::setw(14) << name << std::setw(8)
          << product.str();
      bool first = true;
      for (auto it = got.rbegin(); it != got.rend(); ++it) {
        out << (first ? "" : " + ") << (it->multiplicity != 1 ? it->multiplicity.str() + "*" : "") << it->dimension;
        first = false;
      }
      out << '\n';
    }
  }
  if (as_json)
    out << render({{"branching", t1}, {"tensor", t2}, {"ok", all}});
  else
    out << (all ? "all fixtures reproduced\n" : "fixture mismatch\n");
  return all ? kOk : kMismatch;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact branching rules and tensor products for E7 in C28 = sp(56)", "liebranch"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string data_dir = default_data_dir();
  app.add_option("--data-dir", data_dir, "Directory with fixture files");
  bool as_json = false;
  app.add_flag("--json", as_json, "Structured JSON output");

  std::string dim_algebra, dim_hw;
  auto* dim_cmd = app.add_subcommand("dim", "Weyl dimension of an irreducible");
  dim_cmd->add_option("algebra", dim_algebra, "Algebra type, e.g. E7 or C28")->required();
  dim_cmd->add_option("hw", dim_hw, "Highest weight, e.g. 2,0^27")->required();
  dim_cmd->add_flag("--json", as_json);

  std::string branch_hw;
  bool branch_reference = false;
  auto* branch_cmd = app.add_subcommand("branch", "Branch a C28 irreducible to E7");
  branch_cmd->add_option("hw,--hw", branch_hw, "C28 highest weight");
  branch_cmd->add_flag("--paper", branch_reference, "Use the stored reference projection matrix");
  branch_cmd->add_flag("--derived", "Use the derived projection matrix (default)");
  branch_cmd->add_flag("--json", as_json);

  std::vector<std::string> factor_tokens;
  std::string tensor_algebra = "C28";
  auto* tensor_cmd = app.add_subcommand("tensor", "Decompose a tensor product");
  tensor_cmd->add_option("--factors", factor_tokens, "Factors separated by x, e.g. 1,0^27 x 1,0^27")
      ->required()
      ->expected(1, -1);
  tensor_cmd->add_option("--algebra", tensor_algebra, "Algebra type (default C28)");
  tensor_cmd->add_flag("--json", as_json);

  bool pm_reference = false;
  auto* pm_cmd = app.add_subcommand("project-matrix", "Print the E7 in C28 projection matrix");
  pm_cmd->add_flag("--paper", pm_reference, "Print the stored reference matrix");
  pm_cmd->add_flag("--derived", "Print the derived matrix (default)");
  pm_cmd->add_flag("--json", as_json);

  long long target = 0;
  std::string parts_text;
  auto* part_cmd = app.add_subcommand("partitions", "Count solutions of sum c_i n_i = N");
  part_cmd->add_option("--target", target, "N")->required();
  part_cmd->add_option("--parts", parts_text, "Comma-separated distinct positive parts")->required();
  part_cmd->add_flag("--json", as_json);

  std::string dump_path;
  auto* ver_cmd = app.add_subcommand("verify-embedding", "Build the 56 of E7 and its invariant symplectic form");
  ver_cmd->add_option("--dump", dump_path, "Write generator matrices and M0 to this file");
  ver_cmd->add_flag("--json", as_json);

  bool repro_reference = false;
  auto* repro_cmd = app.add_subcommand("reproduce-paper", "Recompute both reference tables and compare");
  repro_cmd->add_flag("--paper", repro_reference, "Use the stored reference projection matrix");
  repro_cmd->add_flag("--json", as_json);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("liebranch");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*dim_cmd) {
      const RootSystem& rs = root_system(dim_algebra);
      const Weight hw = parse_weight(dim_hw, rs.rank());
      const BigInt d = weyl_dimension(rs, hw);
      if (as_json)
        out << render({{"algebra", rs.type().name()}, {"highest_weight", to_run_length(hw)}, {"dimension", to_json(d)}});
      else
        out << d << '\n';
      return kOk;
    }
    if (*branch_cmd) {
      if (branch_hw.empty()) throw InputError("branch needs a C28 highest weight");
      const RootSystem& c28 = root_system(AlgebraType{Family::C, 28});
      const Weight hw = parse_weight(branch_hw, 28);
      const BigInt dim = weyl_dimension(c28, hw);
      const ProjectionMatrix a = branch_reference ? reference_projection_fixture(data_dir) : derive_projection_by_weight_matching();
      const BranchingResult r = branch(a, hw);
      if (as_json)
        out << render(branching_json(hw, dim, r));
      else
        print_branching(out, hw, dim, r);
      return kOk;
    }
    if (*tensor_cmd) {
      const RootSystem& rs = root_system(tensor_algebra);
      const auto factors = parse_factor_list(factor_tokens, rs.rank());
      const Decomposition d = tensor_fold(rs, factors);
      BigInt product = 1;
      for (const auto& f : factors) product *= weyl_dimension(rs, f);
      if (as_json) {
        json fj = json::array();
        for (const auto& f : factors) fj.push_back(to_run_length(f));
        out << render({{"algebra", rs.type().name()},
                       {"factors", fj},
                       {"dimension", to_json(product)},
                       {"constituents", constituents_json(rs, d)}});
      } else {
        out << rs.type().name() << " tensor product, dim " << product << '\n';
        print_decomposition(out, rs, d);
      }
      return kOk;
    }
    if (*pm_cmd) {
      const ProjectionMatrix a = pm_reference ? reference_projection_fixture(data_dir) : derive_projection_by_weight_matching();
      const std::string provenance = pm_reference ? "paper-fixture" : "derived";
      if (as_json) {
        out << render({{"provenance", provenance}, {"rows", a.data()}});
      } else {
        write_projection_matrix(out, a);
        out << "provenance: " << provenance << '\n';
      }
      return kOk;
    }
    if (*part_cmd) {
      const auto parts = parse_parts(parts_text);
      const BigInt n = count_partitions(target, parts);
      if (as_json)
        out << render({{"target", target}, {"parts", parts}, {"count", to_json(n)}});
      else
        out << n << '\n';
      return kOk;
    }
    if (*ver_cmd) return verify_embedding(out, dump_path, as_json);
    if (*repro_cmd) return reproduce_tables(out, data_dir, repro_reference, as_json);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace liebranch::cli
