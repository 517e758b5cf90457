// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#include "blockamg/hierarchy.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "blockamg/error.hpp"
#include "blockamg/transfer.hpp"

namespace blockamg
{

void SetupParams::validate(Index n_blocks) const
{
  if (max_levels < 1)
  {
    throw Error(ErrorKind::InvalidArgument, "max_levels must be at least 1");
  }
  if (coarse_size < 1)
  {
    throw Error(ErrorKind::InvalidArgument, "coarse_size must be at least 1");
  }
  if (target_size < 1)
  {
    throw Error(ErrorKind::InvalidArgument, "target_size must be at least 1");
  }
  if (drop_tol < 0.0)
  {
    throw Error(ErrorKind::InvalidArgument, "drop_tol must be non-negative");
  }
  if (!dofs_per_node.empty() && dofs_per_node.size() != n_blocks)
  {
    throw Error(ErrorKind::InvalidArgument, "dofs_per_node needs one entry per block");
  }
  smoother.validate(n_blocks);
}

namespace
{

TransferPair build_transfer(const CsrMatrix &A, const Aggregation &agg, Index dofs,
                            const SetupParams &p)
{
  auto P = tentative_prolongator(agg, dofs, p.normalize_transfers);
  if (p.transfer == TransferKind::Smoothed)
  {
    const double omega =
        p.prolongator_damping > 0.0 ? p.prolongator_damping : default_prolongator_damping(A);
    P = smooth_prolongator(A, P, omega);
  }
  return TransferPair::from_prolongator(std::move(P));
}

}  // namespace

Hierarchy setup_scalar_hierarchy(const CsrMatrix &A, const SetupParams &p)
{
  if (A.n_rows() != A.n_cols())
  {
    throw Error(ErrorKind::DimensionMismatch, "hierarchy setup needs a square operator");
  }
  return setup_block_hierarchy(as_block(A), p);
}

Hierarchy setup_block_hierarchy(const BlockMatrix &A, const SetupParams &p)
{
  const Index nb = A.n_block_rows();
  if (nb == 0 || A.n_block_cols() != nb || A.row_sizes() != A.col_sizes())
  {
    throw Error(ErrorKind::DimensionMismatch, "hierarchy setup needs a square block operator");
  }
  p.validate(nb);
  std::vector<Index> dofs = p.dofs_per_node.empty() ? std::vector<Index>(nb, 1) : p.dofs_per_node;
  for (Index b = 0; b < nb; ++b)
  {
    if (!A.has(b, b))
    {
      throw Error(ErrorKind::ZeroDiagonal, "diagonal block " + std::to_string(b) + " is absent");
    }
    if (A.row_sizes()[b] % dofs[b] != 0)
    {
      throw Error(ErrorKind::DimensionMismatch,
                  "block " + std::to_string(b) + " size not divisible by its DoFs per node");
    }
  }

  Hierarchy h;
  h.pre_smooth_ = p.pre_smooth;
  h.post_smooth_ = p.post_smooth;
  BlockMatrix current = A;
  for (Index l = 0;; ++l)
  {
    Level level;
    level.index = l;
    level.A = current;
    level.dofs_per_node = dofs;

    const bool small = current.total_rows() <= p.coarse_size;
    if (!small && l + 1 < p.max_levels)
    {
      std::vector<Aggregation> aggs;
      std::vector<TransferPair> pairs;
      for (Index b = 0; b < nb; ++b)
      {
        const auto &Abb = *current.block(b, b);
        const Index nodes = Abb.n_rows() / dofs[b];
        if (b > 0 && p.clone_aggregates)
        {
          aggs.push_back(clone_aggregation(aggs.front(), nodes));
        }
        else
        {
          aggs.push_back(aggregate_greedy(
              amalgamate(Abb, dofs[b], DofLayout::Interleaved, p.drop_tol), p.target_size));
        }
        if (b > 0 && p.share_transfers)
        {
          if (dofs[b] != dofs[0])
          {
            throw Error(ErrorKind::DimensionMismatch,
                        "shared transfers need equal DoFs per node on every block");
          }
          pairs.push_back(shared_transfer(pairs.front(), std::vector<Index>{Abb.n_rows()}).diag[0]);
        }
        else
        {
          pairs.push_back(build_transfer(Abb, aggs.back(), dofs[b], p));
        }
      }

      auto [P, R] = block_diagonal_transfer(pairs);
      if (P.total_cols() < P.total_rows())
      {
        auto coarse = block_galerkin(R, current, P);
        level.P = std::move(P);
        level.R = std::move(R);
        level.aggregates = std::move(aggs);
        level.smoother = make_block_smoother(current, p.smoother);
        h.levels_.push_back(std::move(level));
        current = std::move(coarse);
        continue;
      }
      // Aggregation no longer reduces the problem: this level becomes the coarsest.
    }

    try
    {
      h.coarse_solver_ = DenseLu(merge_blocks(current));
    }
    catch (const Error &e)
    {
      if (e.kind() != ErrorKind::SingularCoarseOperator)
      {
        throw;
      }
      throw Error(ErrorKind::SingularCoarseOperator,
                  "coarsest operator on level " + std::to_string(l) + " is singular (" +
                      e.what() + ")");
    }
    h.levels_.push_back(std::move(level));
    break;
  }
  return h;
}

double Hierarchy::operator_complexity() const
{
  double total = 0.0;
  for (const auto &lvl : levels_)
  {
    total += static_cast<double>(lvl.A.nnz());
  }
  const auto fine = static_cast<double>(levels_.front().A.nnz());
  return fine > 0.0 ? total / fine : 1.0;
}

void Hierarchy::cycle(Index l, const BlockVector &b, BlockVector &x) const
{
  const auto &lvl = levels_[l];
  if (lvl.is_coarsest())
  {
    const auto flat = coarse_solver_.solve(concatenate(b));
    x = split_vector(flat, lvl.A.col_sizes());
    return;
  }
  for (Index s = 0; s < pre_smooth_; ++s)
  {
    lvl.smoother->smooth(b, x);
  }
  const auto r = block_residual(lvl.A, x, b);
  const auto rc = block_apply(lvl.R, r);
  BlockVector ec(levels_[l + 1].A.col_sizes());
  cycle(l + 1, rc, ec);
  axpy(1.0, block_apply(lvl.P, ec), x);
  for (Index s = 0; s < post_smooth_; ++s)
  {
    lvl.smoother->smooth(b, x);
  }
}

BlockVector Hierarchy::vcycle(const BlockVector &b, const BlockVector &x_in) const
{
  const auto &A = levels_.front().A;
  if (b.sizes() != A.row_sizes() || x_in.sizes() != A.col_sizes())
  {
    throw Error(ErrorKind::DimensionMismatch, "vcycle vector layout");
  }
  BlockVector x = x_in;
  cycle(0, b, x);
  return x;
}

BlockVector Hierarchy::apply_preconditioner(const BlockVector &r) const
{
  return vcycle(r, BlockVector(levels_.front().A.col_sizes()));
}

void Hierarchy::apply_preconditioner(std::span<const double> r, std::span<double> z) const
{
  const auto out = concatenate(apply_preconditioner(split_vector(r, levels_.front().A.row_sizes())));
  if (z.size() != out.size())
  {
    throw Error(ErrorKind::DimensionMismatch, "preconditioner output length");
  }
  std::copy(out.begin(), out.end(), z.begin());
}

void Hierarchy::write_report(std::ostream &out) const
{
  const auto nb = levels_.front().A.n_block_rows();
  out << "levels " << levels_.size() << ", blocks " << nb << ", operator complexity "
      << std::fixed << std::setprecision(4) << operator_complexity() << '\n';
  out.unsetf(std::ios::floatfield);
  for (const auto &lvl : levels_)
  {
    out << "level " << lvl.index << ": rows " << lvl.A.total_rows() << " [";
    for (Index b = 0; b < nb; ++b)
    {
      out << (b ? " " : "") << lvl.A.row_sizes()[b];
    }
    out << "] nnz " << lvl.A.nnz() << " [";
    for (Index i = 0; i < nb; ++i)
    {
      for (Index j = 0; j < nb; ++j)
      {
        out << (i + j ? " " : "") << 'A' << i << j << '=';
        if (const auto *B = lvl.A.block(i, j))
        {
          out << B->nnz();
        }
        else
        {
          out << '-';
        }
      }
    }
    out << ']';
    if (lvl.is_coarsest())
    {
      out << " direct solve";
    }
    else
    {
      out << " aggregates [";
      for (Index b = 0; b < lvl.aggregates.size(); ++b)
      {
        out << (b ? " " : "") << lvl.aggregates[b].n_aggregates;
      }
      out << ']';
    }
    out << '\n';
  }
}

std::string Hierarchy::report() const
{
  std::ostringstream ss;
  write_report(ss);
  return ss.str();
}

}  // namespace blockamg
