// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef BLOCKAMG_TOOLS_HARNESS_HPP
#define BLOCKAMG_TOOLS_HARNESS_HPP

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <blockamg/hierarchy.hpp>
#include <blockamg/krylov.hpp>
#include <blockamg/problems.hpp>

namespace blockamg::harness
{

//
// Flat key/value configuration. One "key = value" per line, '#' starts a comment, keys are
// dotted (problem.kind, mg.clone_aggregates, smoother.omega, ...). Later assignments win, so
// command-line overrides are applied with set().
//
class KeyValueConfig
{
public:
  static KeyValueConfig parse(std::istream &in, std::string_view source = "<config>");
  static KeyValueConfig load(const std::filesystem::path &path);

  void set(const std::string &key, const std::string &value);
  // Accepts "key=value".
  void set_assignment(std::string_view assignment);

  bool has(const std::string &key) const { return values_.count(key) != 0; }
  std::optional<std::string> get(const std::string &key) const;
  const std::map<std::string, std::string> &values() const noexcept { return values_; }
  // Keys in first-assignment order.
  const std::vector<std::string> &order() const noexcept { return order_; }

private:
  std::map<std::string, std::string> values_;
  std::vector<std::string> order_;
};

enum class PreconditionerKind
{
  None,
  BlockDiagonal,
  MonolithicAmg,
};

std::string_view to_string(PreconditionerKind kind);

struct RunConfig
{
  ProblemSpec problem;
  // When set, the operator is read from this MatrixMarket file instead of generated.
  std::optional<std::filesystem::path> matrix_path;
  Index matrix_dofs_per_node = 1;

  SetupParams setup;
  GmresParams solver;
  PreconditionerKind preconditioner = PreconditionerKind::MonolithicAmg;

  std::optional<std::filesystem::path> csv_path;
  std::optional<std::filesystem::path> report_path;
  std::optional<std::filesystem::path> history_path;
  std::optional<std::filesystem::path> solution_path;
  std::optional<std::filesystem::path> dump_prefix;
  std::optional<std::filesystem::path> aggregates_path;
};

// Throws Error(Config) for unknown keys and malformed values.
RunConfig make_run_config(const KeyValueConfig &kv);

// Expands "sweep.<key> = v1, v2, ..." entries into the cartesian product of configs, the
// first sweep key varying slowest.
std::vector<RunConfig> expand_study(const KeyValueConfig &kv);

struct RunRecord
{
  std::string kind;
  Index n = 0;
  double gamma = 0.0;
  std::string preconditioner;
  Index levels = 0;
  double operator_complexity = 0.0;
  Index n_L = 0;
  double t_Se = 0.0;
  double t_So = 0.0;
  double t_Sigma = 0.0;
  bool converged = false;
  double final_relres = 0.0;
  std::string error;
};

struct RunOutput
{
  RunRecord record;
  DenseVector solution;
  SolveStats stats;
  std::string hierarchy_report;
};

// Builds the system and preconditioner, solves, and writes every configured output file.
RunOutput run_solve(const RunConfig &config);

// Runs each config in order. A failing run is recorded (converged = false, error set) and
// the study continues. Throws Error(Config) for an empty list.
std::vector<RunRecord> run_study(const std::vector<RunConfig> &configs,
                                 const std::optional<std::filesystem::path> &csv_path);

// Writes MatrixMarket files for the merged operator, each present block, the right-hand side
// and the manufactured solution, plus one JSON-lines metadata record.
void run_dump(const RunConfig &config);

inline constexpr std::string_view csv_header =
    "kind,n,gamma,preconditioner,levels,operator_complexity,n_L,t_Se,t_So,t_Sigma,converged";

std::string csv_row(const RunRecord &r);
// Appends rows, writing the header only when the file is new or empty.
void append_csv(const std::filesystem::path &path, const std::vector<RunRecord> &records);

}  // namespace blockamg::harness

#endif  // BLOCKAMG_TOOLS_HARNESS_HPP
