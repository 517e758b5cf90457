// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#include "harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

#include <blockamg/error.hpp>
#include <blockamg/matrix_market.hpp>

#include "json.hpp"

namespace blockamg::harness
{

namespace
{

[[noreturn]] void config_error(const std::string &what)
{
  throw Error(ErrorKind::Config, what);
}

std::string trim(std::string_view s)
{
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos)
  {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep)
{
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;)
  {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos)
    {
      return out;
    }
    start = pos + 1;
  }
}

bool parse_bool(const std::string &key, const std::string &v)
{
  if (v == "true" || v == "1" || v == "yes" || v == "on")
  {
    return true;
  }
  if (v == "false" || v == "0" || v == "no" || v == "off")
  {
    return false;
  }
  config_error(key + ": expected a boolean, got '" + v + "'");
}

double parse_real(const std::string &key, const std::string &v)
{
  std::size_t used = 0;
  double out = 0.0;
  try
  {
    out = std::stod(v, &used);
  }
  catch (const std::exception &)
  {
    used = 0;
  }
  if (used == 0 || used != v.size())
  {
    config_error(key + ": expected a number, got '" + v + "'");
  }
  return out;
}

Index parse_count(const std::string &key, const std::string &v)
{
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; }))
  {
    config_error(key + ": expected a non-negative integer, got '" + v + "'");
  }
  return static_cast<Index>(std::stoull(v));
}

Wind parse_wind(const std::string &key, std::string v)
{
  std::replace(v.begin(), v.end(), ',', ' ');
  std::istringstream ss(v);
  Wind w;
  std::string rest;
  if (!(ss >> w.x >> w.y) || (ss >> rest))
  {
    config_error(key + ": expected two numbers");
  }
  return w;
}

using Setter = std::function<void(RunConfig &, const std::string &, const std::string &)>;

void apply_sub(SmootherSpec &s, const std::string &field, const std::string &key,
               const std::string &v)
{
  if (field == "kind")
  {
    s.kind = parse_smoother_kind(v);
  }
  else if (field == "sweeps")
  {
    s.sweeps = parse_count(key, v);
  }
  else if (field == "omega")
  {
    s.damping = parse_real(key, v);
  }
  else if (field == "schwarz_domains")
  {
    s.schwarz_domains = parse_count(key, v);
  }
  else
  {
    config_error("unknown key '" + key + "'");
  }
}

const std::map<std::string, Setter> &setters()
{
  static const std::map<std::string, Setter> table = {
      {"problem.kind",
       [](RunConfig &c, const std::string &, const std::string &v)
       {
         if (v == "file")
         {
           return;
         }
         c.problem.kind = parse_problem_kind(v);
       }},
      {"problem.n", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.problem.n = parse_count(k, v); }},
      {"problem.epsilon", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.problem.epsilon = parse_real(k, v); }},
      {"problem.velocity", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.problem.velocity = parse_wind(k, v); }},
      {"problem.tau", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.problem.tau = parse_real(k, v); }},
      {"problem.gamma", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.problem.gamma = parse_real(k, v); }},
      {"problem.coupling",
       [](RunConfig &c, const std::string &k, const std::string &v)
       {
         if (v == "node_local")
         {
           c.problem.coupling = CouplingKind::NodeLocal;
         }
         else if (v == "convective")
         {
           c.problem.coupling = CouplingKind::Convective;
         }
         else
         {
           config_error(k + ": expected node_local or convective");
         }
       }},
      {"problem.seed", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.problem.seed = parse_count(k, v); }},
      {"problem.matrix", [](RunConfig &c, const std::string &, const std::string &v)
       { c.matrix_path = v; }},
      {"problem.dofs_per_node", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.matrix_dofs_per_node = parse_count(k, v); }},

      {"mg.max_levels", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.setup.max_levels = parse_count(k, v); }},
      {"mg.coarse_size", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.setup.coarse_size = parse_count(k, v); }},
      {"mg.target_size", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.setup.target_size = parse_count(k, v); }},
      {"mg.transfer",
       [](RunConfig &c, const std::string &k, const std::string &v)
       {
         if (v == "tentative")
         {
           c.setup.transfer = TransferKind::Tentative;
         }
         else if (v == "smoothed")
         {
           c.setup.transfer = TransferKind::Smoothed;
         }
         else
         {
           config_error(k + ": expected tentative or smoothed");
         }
       }},
      {"mg.prolongator_damping", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.setup.prolongator_damping = parse_real(k, v); }},
      {"mg.normalize_transfers", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.setup.normalize_transfers = parse_bool(k, v); }},
      {"mg.clone_aggregates", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.setup.clone_aggregates = parse_bool(k, v); }},
      {"mg.share_transfers", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.setup.share_transfers = parse_bool(k, v); }},
      {"mg.drop_tol", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.setup.drop_tol = parse_real(k, v); }},
      {"mg.pre_smooth", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.setup.pre_smooth = parse_count(k, v); }},
      {"mg.post_smooth", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.setup.post_smooth = parse_count(k, v); }},

      {"solver.tol", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.solver.tol = parse_real(k, v); }},
      {"solver.max_iter", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.solver.max_iter = parse_count(k, v); }},
      {"solver.restart", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.solver.restart = parse_count(k, v); }},
      {"solver.flexible", [](RunConfig &c, const std::string &k, const std::string &v)
       { c.solver.flexible = parse_bool(k, v); }},

      {"preconditioner",
       [](RunConfig &c, const std::string &k, const std::string &v)
       {
         if (v == "none")
         {
           c.preconditioner = PreconditionerKind::None;
         }
         else if (v == "block_diagonal")
         {
           c.preconditioner = PreconditionerKind::BlockDiagonal;
         }
         else if (v == "monolithic_amg")
         {
           c.preconditioner = PreconditionerKind::MonolithicAmg;
         }
         else
         {
           config_error(k + ": expected none, block_diagonal or monolithic_amg");
         }
       }},

      {"output.csv", [](RunConfig &c, const std::string &, const std::string &v)
       { c.csv_path = v; }},
      {"output.report", [](RunConfig &c, const std::string &, const std::string &v)
       { c.report_path = v; }},
      {"output.history", [](RunConfig &c, const std::string &, const std::string &v)
       { c.history_path = v; }},
      {"output.solution", [](RunConfig &c, const std::string &, const std::string &v)
       { c.solution_path = v; }},
      {"output.dump_prefix", [](RunConfig &c, const std::string &, const std::string &v)
       { c.dump_prefix = v; }},
      {"output.aggregates", [](RunConfig &c, const std::string &, const std::string &v)
       { c.aggregates_path = v; }},
  };
  return table;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Wall-clock seconds rounded to milliseconds.
double to_millis(double s)
{
  return std::round(s * 1000.0) / 1000.0;
}

struct LoadedSystem
{
  BlockSystem system;
  std::string kind;
};

LoadedSystem load_system(const RunConfig &config)
{
  if (config.matrix_path)
  {
    auto A = read_matrix_market(*config.matrix_path);
    if (A.n_rows() != A.n_cols())
    {
      config_error("problem.matrix must be square");
    }
    return {{as_block(std::move(A)), {config.matrix_dofs_per_node}}, "file"};
  }
  return {generate(config.problem), std::string(to_string(config.problem.kind))};
}

std::ofstream open_output(const std::filesystem::path &path, std::ios::openmode mode = std::ios::out)
{
  std::ofstream out(path, mode);
  if (!out)
  {
    throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  }
  return out;
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(std::istream &in, std::string_view source)
{
  KeyValueConfig kv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line))
  {
    ++lineno;
    const auto hash = line.find('#');
    const auto body = trim(std::string_view(line).substr(0, hash));
    if (body.empty())
    {
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos || trim(body.substr(0, eq)).empty())
    {
      config_error(std::string(source) + ":" + std::to_string(lineno) +
                   ": expected 'key = value'");
    }
    kv.set(trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
  }
  return kv;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    config_error("cannot open config file " + path.string());
  }
  return parse(in, path.string());
}

void KeyValueConfig::set(const std::string &key, const std::string &value)
{
  if (values_.count(key) == 0)
  {
    order_.push_back(key);
  }
  values_[key] = value;
}

void KeyValueConfig::set_assignment(std::string_view assignment)
{
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos)
  {
    config_error("override '" + std::string(assignment) + "' is not key=value");
  }
  set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
}

std::optional<std::string> KeyValueConfig::get(const std::string &key) const
{
  const auto it = values_.find(key);
  if (it == values_.end())
  {
    return std::nullopt;
  }
  return it->second;
}

std::string_view to_string(PreconditionerKind kind)
{
  switch (kind)
  {
    case PreconditionerKind::None:
      return "none";
    case PreconditionerKind::BlockDiagonal:
      return "block_diagonal";
    case PreconditionerKind::MonolithicAmg:
      return "monolithic_amg";
  }
  return "unknown";
}

RunConfig make_run_config(const KeyValueConfig &kv)
{
  RunConfig c;
  const auto &table = setters();
  std::vector<std::pair<std::string, std::string>> smoother_keys;
  for (const auto &key : kv.order())
  {
    const auto &value = kv.values().at(key);
    if (key.rfind("sweep.", 0) == 0)
    {
      continue;
    }
    if (key.rfind("smoother.", 0) == 0)
    {
      smoother_keys.emplace_back(key, value);
      continue;
    }
    const auto it = table.find(key);
    if (it == table.end())
    {
      config_error("unknown key '" + key + "'");
    }
    it->second(c, key, value);
  }
  if (kv.get("problem.kind") == std::optional<std::string>("file") && !c.matrix_path)
  {
    config_error("problem.kind = file needs problem.matrix");
  }
  if (c.matrix_path && kv.get("problem.kind") != std::optional<std::string>("file"))
  {
    config_error("problem.matrix is only valid with problem.kind = file");
  }

  // Smoother: block Gauss-Seidel with Schwarz ILU(0) sub-solves on block systems, point
  // Gauss-Seidel on scalar ones, unless configured.
  const Index n_blocks = c.matrix_path ? 1 : generate(c.problem).A.n_block_rows();
  SmootherSpec spec = n_blocks > 1 ? SmootherSpec::block_gauss_seidel(n_blocks)
                                   : SmootherSpec::point(SmootherKind::GaussSeidel);
  std::vector<std::pair<std::string, std::string>> sub_keys;
  for (const auto &[key, value] : smoother_keys)
  {
    const auto field = key.substr(std::string("smoother.").size());
    if (field.rfind("sub", 0) == 0)
    {
      sub_keys.emplace_back(key, value);
    }
    else
    {
      apply_sub(spec, field, key, value);
    }
  }
  if (spec.kind == SmootherKind::BlockGaussSeidel)
  {
    if (spec.sub_solvers.size() != n_blocks)
    {
      SmootherSpec sub;
      sub.kind = SmootherKind::SchwarzIlu0;
      spec.sub_solvers.assign(n_blocks, sub);
    }
    // smoother.sub.<field> applies to every block, smoother.sub<i>.<field> to block i.
    for (int pass = 0; pass < 2; ++pass)
    {
      for (const auto &[key, value] : sub_keys)
      {
        const auto rest = key.substr(std::string("smoother.sub").size());
        const auto dot = rest.find('.');
        if (dot == std::string::npos)
        {
          config_error("unknown key '" + key + "'");
        }
        const auto which = rest.substr(0, dot), field = rest.substr(dot + 1);
        if (which.empty() && pass == 0)
        {
          for (auto &s : spec.sub_solvers)
          {
            apply_sub(s, field, key, value);
          }
        }
        else if (!which.empty() && pass == 1)
        {
          const auto b = parse_count(key, which);
          if (b >= n_blocks)
          {
            config_error(key + ": block index out of range");
          }
          apply_sub(spec.sub_solvers[b], field, key, value);
        }
      }
    }
  }
  else if (!sub_keys.empty())
  {
    config_error("smoother.sub* keys need smoother.kind = block_gauss_seidel");
  }
  c.setup.smoother = spec;
  try
  {
    c.setup.validate(n_blocks);
  }
  catch (const Error &e)
  {
    config_error(e.what());
  }
  if (!(c.solver.tol > 0.0) || c.solver.restart < 1)
  {
    config_error("solver.tol must be positive and solver.restart at least 1");
  }
  return c;
}

std::vector<RunConfig> expand_study(const KeyValueConfig &kv)
{
  std::vector<std::pair<std::string, std::vector<std::string>>> sweeps;
  for (const auto &key : kv.order())
  {
    if (key.rfind("sweep.", 0) == 0)
    {
      auto values = split(kv.values().at(key), ',');
      if (values.empty() || std::any_of(values.begin(), values.end(),
                                        [](const std::string &v) { return v.empty(); }))
      {
        config_error(key + ": empty sweep value");
      }
      sweeps.emplace_back(key.substr(6), std::move(values));
    }
  }
  std::vector<KeyValueConfig> expanded{kv};
  for (const auto &[key, values] : sweeps)
  {
    std::vector<KeyValueConfig> next;
    for (const auto &base : expanded)
    {
      for (const auto &v : values)
      {
        auto copy = base;
        copy.set(key, v);
        next.push_back(std::move(copy));
      }
    }
    expanded = std::move(next);
  }
  std::vector<RunConfig> configs;
  for (const auto &e : expanded)
  {
    configs.push_back(make_run_config(e));
  }
  return configs;
}

RunOutput run_solve(const RunConfig &config)
{
  RunOutput out;
  auto &rec = out.record;
  const auto loaded = load_system(config);
  const auto &A = loaded.system.A;
  rec.kind = loaded.kind;
  rec.n = config.matrix_path ? A.total_rows() : config.problem.n;
  rec.gamma = config.matrix_path ? 0.0 : config.problem.gamma;
  rec.preconditioner = std::string(to_string(config.preconditioner));

  const auto merged = merge_blocks(A);
  const auto rhs = manufactured_rhs(merged, config.problem.seed);

  const auto setup_start = std::chrono::steady_clock::now();
  std::optional<Hierarchy> hierarchy;
  if (config.preconditioner != PreconditionerKind::None)
  {
    SetupParams params = config.setup;
    params.dofs_per_node = loaded.system.dofs_per_node;
    if (config.preconditioner == PreconditionerKind::BlockDiagonal)
    {
      BlockMatrix decoupled = A;
      for (Index i = 0; i < A.n_block_rows(); ++i)
      {
        for (Index j = 0; j < A.n_block_cols(); ++j)
        {
          if (i != j)
          {
            decoupled.clear(i, j);
          }
        }
      }
      hierarchy = setup_block_hierarchy(decoupled, params);
    }
    else
    {
      hierarchy = setup_block_hierarchy(A, params);
    }
  }
  rec.t_Se = to_millis(seconds_since(setup_start));

  LinearOperator precond;
  if (hierarchy)
  {
    precond = [&h = *hierarchy](std::span<const double> r, std::span<double> z)
    { h.apply_preconditioner(r, z); };
    rec.levels = hierarchy->n_levels();
    rec.operator_complexity = hierarchy->operator_complexity();
    out.hierarchy_report = hierarchy->report();
  }

  const auto solve_start = std::chrono::steady_clock::now();
  auto result = gmres(make_operator(merged), hierarchy ? &precond : nullptr, rhs.b, config.solver);
  rec.t_So = to_millis(seconds_since(solve_start));
  rec.t_Sigma = rec.t_Se + rec.t_So;
  rec.n_L = result.stats.iterations;
  rec.converged = result.stats.converged;
  rec.final_relres = result.stats.final_relative_residual();
  if (result.stats.status == SolveStatus::Breakdown)
  {
    rec.error = "GMRES breakdown";
  }
  result.stats.setup_seconds = rec.t_Se;
  result.stats.solve_seconds = rec.t_So;
  out.stats = result.stats;
  out.solution = std::move(result.x);

  if (config.csv_path)
  {
    append_csv(*config.csv_path, {rec});
  }
  if (config.report_path)
  {
    auto f = open_output(*config.report_path);
    f << (hierarchy ? out.hierarchy_report : std::string("no multigrid hierarchy\n"));
  }
  if (config.history_path)
  {
    auto f = open_output(*config.history_path);
    write_convergence_history(f, out.stats);
  }
  if (config.solution_path)
  {
    write_vector_market(*config.solution_path, out.solution);
  }
  if (config.aggregates_path && hierarchy && !hierarchy->finest().is_coarsest())
  {
    auto f = open_output(*config.aggregates_path);
    write_aggregation(f, hierarchy->finest().aggregates.front());
  }
  return out;
}

std::vector<RunRecord> run_study(const std::vector<RunConfig> &configs,
                                 const std::optional<std::filesystem::path> &csv_path)
{
  if (configs.empty())
  {
    config_error("study needs at least one run");
  }
  std::vector<RunRecord> records;
  for (auto config : configs)
  {
    config.csv_path.reset();
    try
    {
      records.push_back(run_solve(config).record);
    }
    catch (const Error &e)
    {
      RunRecord rec;
      rec.kind = config.matrix_path ? "file" : std::string(to_string(config.problem.kind));
      rec.n = config.problem.n;
      rec.gamma = config.problem.gamma;
      rec.preconditioner = std::string(to_string(config.preconditioner));
      rec.error = e.what();
      records.push_back(std::move(rec));
    }
  }
  if (csv_path)
  {
    append_csv(*csv_path, records);
  }
  return records;
}

void run_dump(const RunConfig &config)
{
  if (!config.dump_prefix)
  {
    config_error("dump needs output.dump_prefix");
  }
  const auto loaded = load_system(config);
  const auto &A = loaded.system.A;
  const std::string prefix = config.dump_prefix->string();
  const auto merged = merge_blocks(A);
  const auto rhs = manufactured_rhs(merged, config.problem.seed);
  write_matrix_market(prefix + ".mtx", merged);
  nlohmann::json blocks = nlohmann::json::array();
  for (Index i = 0; i < A.n_block_rows(); ++i)
  {
    for (Index j = 0; j < A.n_block_cols(); ++j)
    {
      if (const auto *B = A.block(i, j))
      {
        const auto name = prefix + "_A" + std::to_string(i) + std::to_string(j) + ".mtx";
        write_matrix_market(name, *B);
        blocks.push_back({{"block", {i, j}}, {"rows", B->n_rows()}, {"cols", B->n_cols()},
                          {"nnz", B->nnz()}, {"file", name}});
      }
    }
  }
  write_vector_market(prefix + "_b.mtx", rhs.b);
  write_vector_market(prefix + "_x_true.mtx", rhs.x_true);

  nlohmann::json meta = {
      {"kind", loaded.kind},
      {"n", config.problem.n},
      {"epsilon", config.problem.epsilon},
      {"velocity", {config.problem.velocity.x, config.problem.velocity.y}},
      {"tau", config.problem.tau},
      {"gamma", config.problem.gamma},
      {"coupling", config.problem.coupling == CouplingKind::NodeLocal ? "node_local" : "convective"},
      {"seed", config.problem.seed},
      {"rows", merged.n_rows()},
      {"nnz", merged.nnz()},
      {"block_sizes", A.row_sizes()},
      {"dofs_per_node", loaded.system.dofs_per_node},
      {"blocks", blocks},
  };
  auto f = open_output(prefix + ".meta.jsonl", std::ios::out | std::ios::app);
  f << meta.dump() << '\n';

  if (config.aggregates_path)
  {
    const auto &A00 = *A.block(0, 0);
    const auto dofs = loaded.system.dofs_per_node.front();
    const auto agg = aggregate_greedy(
        amalgamate(A00, dofs, DofLayout::Interleaved, config.setup.drop_tol),
        config.setup.target_size);
    auto g = open_output(*config.aggregates_path);
    write_aggregation(g, agg);
  }
}

std::string csv_row(const RunRecord &r)
{
  std::ostringstream ss;
  ss << r.kind << ',' << r.n << ',' << r.gamma << ',' << r.preconditioner << ',' << r.levels
     << ',' << std::fixed << std::setprecision(4) << r.operator_complexity << ',' << r.n_L << ','
     << std::setprecision(3) << r.t_Se << ',' << r.t_So << ',' << r.t_Sigma << ','
     << (r.converged ? "true" : "false");
  return ss.str();
}

void append_csv(const std::filesystem::path &path, const std::vector<RunRecord> &records)
{
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  auto out = open_output(path, std::ios::out | std::ios::app);
  if (fresh)
  {
    out << csv_header << '\n';
  }
  for (const auto &r : records)
  {
    out << csv_row(r) << '\n';
  }
}

}  // namespace blockamg::harness
