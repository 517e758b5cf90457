// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#include "blockamg/smoothers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "blockamg/error.hpp"

namespace blockamg
{

std::string_view to_string(SmootherKind kind)
{
  switch (kind)
  {
    case SmootherKind::Jacobi:
      return "jacobi";
    case SmootherKind::GaussSeidel:
      return "gauss_seidel";
    case SmootherKind::Ilu0:
      return "ilu0";
    case SmootherKind::SchwarzIlu0:
      return "schwarz_ilu0";
    case SmootherKind::BlockGaussSeidel:
      return "block_gauss_seidel";
  }
  return "unknown";
}

SmootherKind parse_smoother_kind(std::string_view name)
{
  for (auto k : {SmootherKind::Jacobi, SmootherKind::GaussSeidel, SmootherKind::Ilu0,
                 SmootherKind::SchwarzIlu0, SmootherKind::BlockGaussSeidel})
  {
    if (to_string(k) == name)
    {
      return k;
    }
  }
  throw Error(ErrorKind::Config, "unknown smoother kind '" + std::string(name) + "'");
}

void SmootherSpec::validate(Index n_diag_blocks) const
{
  if (sweeps < 1)
  {
    throw Error(ErrorKind::InvalidArgument, "smoother sweeps must be at least 1");
  }
  if (!(damping > 0.0))
  {
    throw Error(ErrorKind::InvalidArgument, "smoother damping must be positive");
  }
  if (kind == SmootherKind::SchwarzIlu0 && schwarz_domains < 1)
  {
    throw Error(ErrorKind::InvalidArgument, "schwarz_domains must be at least 1");
  }
  if (kind == SmootherKind::BlockGaussSeidel)
  {
    if (sub_solvers.size() != n_diag_blocks)
    {
      throw Error(ErrorKind::InvalidArgument,
                  "block Gauss-Seidel has " + std::to_string(sub_solvers.size()) +
                      " sub-solvers for " + std::to_string(n_diag_blocks) + " diagonal blocks");
    }
    for (const auto &s : sub_solvers)
    {
      if (s.kind == SmootherKind::BlockGaussSeidel)
      {
        throw Error(ErrorKind::InvalidArgument, "nested block Gauss-Seidel sub-solver");
      }
      s.validate(1);
    }
  }
}

SmootherSpec SmootherSpec::point(SmootherKind kind, double damping, Index sweeps)
{
  SmootherSpec s;
  s.kind = kind;
  s.damping = damping;
  s.sweeps = sweeps;
  return s;
}

SmootherSpec SmootherSpec::block_gauss_seidel(Index n_blocks, double damping, Index sweeps,
                                              Index schwarz_domains)
{
  SmootherSpec sub;
  sub.kind = SmootherKind::SchwarzIlu0;
  sub.schwarz_domains = schwarz_domains;
  SmootherSpec s;
  s.kind = SmootherKind::BlockGaussSeidel;
  s.damping = damping;
  s.sweeps = sweeps;
  s.sub_solvers.assign(n_blocks, sub);
  return s;
}

Ilu0Factors ilu0_factor(const CsrMatrix &A)
{
  if (A.n_rows() != A.n_cols())
  {
    throw Error(ErrorKind::DimensionMismatch, "ILU(0) of a non-square matrix");
  }
  const Index n = A.n_rows();
  const auto ptr = A.row_offsets();
  const auto col = A.col_indices();
  std::vector<double> lu(A.values().begin(), A.values().end());

  std::vector<Index> diag_pos(n);
  double max_diag = 0.0;
  for (Index i = 0; i < n; ++i)
  {
    const auto b = col.begin() + ptr[i], e = col.begin() + ptr[i + 1];
    const auto it = std::lower_bound(b, e, i);
    if (it == e || *it != i)
    {
      throw Error(ErrorKind::ZeroDiagonal,
                  "ILU(0): structurally missing diagonal in row " + std::to_string(i));
    }
    diag_pos[i] = it - col.begin();
    max_diag = std::max(max_diag, std::abs(lu[diag_pos[i]]));
  }
  const double pivot_tol = 1e-14 * max_diag;

  // IKJ elimination on the fixed pattern; pos[j] maps column j of row i to its slot.
  constexpr Index none = std::numeric_limits<Index>::max();
  std::vector<Index> pos(n, none);
  for (Index i = 0; i < n; ++i)
  {
    for (Index k = ptr[i]; k < ptr[i + 1]; ++k)
    {
      pos[col[k]] = k;
    }
    for (Index k = ptr[i]; k < diag_pos[i]; ++k)
    {
      const Index c = col[k];
      lu[k] /= lu[diag_pos[c]];
      const double lik = lu[k];
      for (Index m = diag_pos[c] + 1; m < ptr[c + 1]; ++m)
      {
        if (pos[col[m]] != none)
        {
          lu[pos[col[m]]] -= lik * lu[m];
        }
      }
    }
    if (!(std::abs(lu[diag_pos[i]]) >= pivot_tol) || lu[diag_pos[i]] == 0.0)
    {
      throw Error(ErrorKind::ZeroPivot, "ILU(0): zero pivot in row " + std::to_string(i));
    }
    for (Index k = ptr[i]; k < ptr[i + 1]; ++k)
    {
      pos[col[k]] = none;
    }
  }

  std::vector<Index> lp(n + 1, 0), lc, up(n + 1, 0), uc;
  std::vector<double> lv, uv;
  for (Index i = 0; i < n; ++i)
  {
    for (Index k = ptr[i]; k < ptr[i + 1]; ++k)
    {
      if (col[k] < i)
      {
        lc.push_back(col[k]);
        lv.push_back(lu[k]);
      }
      else
      {
        uc.push_back(col[k]);
        uv.push_back(lu[k]);
      }
    }
    lp[i + 1] = lc.size();
    up[i + 1] = uc.size();
  }
  return {CsrMatrix(n, n, std::move(lp), std::move(lc), std::move(lv)),
          CsrMatrix(n, n, std::move(up), std::move(uc), std::move(uv))};
}

void ilu0_apply(const Ilu0Factors &f, std::span<const double> r, std::span<double> z)
{
  const Index n = f.L.n_rows();
  if (r.size() != n || z.size() != n)
  {
    throw Error(ErrorKind::DimensionMismatch, "ILU(0) apply vector length");
  }
  for (Index i = 0; i < n; ++i)
  {
    const auto row = f.L.row(i);
    double s = r[i];
    for (Index k = 0; k < row.cols.size(); ++k)
    {
      s -= row.values[k] * z[row.cols[k]];
    }
    z[i] = s;
  }
  for (Index i = n; i-- > 0;)
  {
    const auto row = f.U.row(i);
    // The diagonal is the first stored entry of each U row.
    double s = z[i];
    for (Index k = 1; k < row.cols.size(); ++k)
    {
      s -= row.values[k] * z[row.cols[k]];
    }
    z[i] = s / row.values[0];
  }
}

DenseVector ilu0_apply(const Ilu0Factors &f, std::span<const double> r)
{
  DenseVector z(r.size());
  ilu0_apply(f, r, z);
  return z;
}

SchwarzIlu0::SchwarzIlu0(const CsrMatrix &A, Index n_domains)
{
  const Index n = A.n_rows();
  if (A.n_cols() != n)
  {
    throw Error(ErrorKind::DimensionMismatch, "Schwarz ILU(0) of a non-square matrix");
  }
  if (n_domains < 1 || n_domains > std::max<Index>(n, 1))
  {
    throw Error(ErrorKind::InvalidArgument,
                "Schwarz domain count " + std::to_string(n_domains) + " for " +
                    std::to_string(n) + " rows");
  }
  for (Index d = 0; d <= n_domains; ++d)
  {
    offsets_.push_back(d * n / n_domains);
  }
  for (Index d = 0; d < n_domains; ++d)
  {
    const auto b = offsets_[d], len = offsets_[d + 1] - b;
    factors_.push_back(n_domains == 1 ? ilu0_factor(A) : ilu0_factor(submatrix(A, b, len, b, len)));
  }
}

void SchwarzIlu0::apply(std::span<const double> r, std::span<double> z) const
{
  if (r.size() != offsets_.back() || z.size() != offsets_.back())
  {
    throw Error(ErrorKind::DimensionMismatch, "Schwarz ILU(0) apply vector length");
  }
  for (Index d = 0; d < factors_.size(); ++d)
  {
    const auto b = offsets_[d], len = offsets_[d + 1] - b;
    ilu0_apply(factors_[d], r.subspan(b, len), z.subspan(b, len));
  }
}

DenseVector SchwarzIlu0::apply(std::span<const double> r) const
{
  DenseVector z(r.size());
  apply(r, z);
  return z;
}

namespace
{

DenseVector checked_inverse_diagonal(const CsrMatrix &A)
{
  auto d = A.diagonal();
  for (Index i = 0; i < d.size(); ++i)
  {
    if (d[i] == 0.0)
    {
      throw Error(ErrorKind::ZeroDiagonal, "zero diagonal in row " + std::to_string(i));
    }
    d[i] = 1.0 / d[i];
  }
  return d;
}

class JacobiRelaxation : public Relaxation
{
public:
  JacobiRelaxation(std::shared_ptr<const CsrMatrix> A, double damping, Index sweeps)
    : A_(std::move(A)), dinv_(checked_inverse_diagonal(*A_)), damping_(damping), sweeps_(sweeps)
  {
  }

  void smooth(std::span<const double> b, std::span<double> x) const override
  {
    DenseVector r(x.size());
    for (Index s = 0; s < sweeps_; ++s)
    {
      residual(*A_, x, b, r);
      for (Index i = 0; i < x.size(); ++i)
      {
        x[i] += damping_ * dinv_[i] * r[i];
      }
    }
  }

private:
  std::shared_ptr<const CsrMatrix> A_;
  DenseVector dinv_;
  double damping_;
  Index sweeps_;
};

class GaussSeidelRelaxation : public Relaxation
{
public:
  GaussSeidelRelaxation(std::shared_ptr<const CsrMatrix> A, double damping, Index sweeps)
    : A_(std::move(A)), dinv_(checked_inverse_diagonal(*A_)), damping_(damping), sweeps_(sweeps)
  {
  }

  void smooth(std::span<const double> b, std::span<double> x) const override
  {
    if (b.size() != A_->n_rows() || x.size() != A_->n_cols())
    {
      throw Error(ErrorKind::DimensionMismatch, "Gauss-Seidel vector length");
    }
    for (Index s = 0; s < sweeps_; ++s)
    {
      for (Index i = 0; i < x.size(); ++i)
      {
        const auto row = A_->row(i);
        double r = b[i];
        for (Index k = 0; k < row.cols.size(); ++k)
        {
          r -= row.values[k] * x[row.cols[k]];
        }
        x[i] += damping_ * dinv_[i] * r;
      }
    }
  }

private:
  std::shared_ptr<const CsrMatrix> A_;
  DenseVector dinv_;
  double damping_;
  Index sweeps_;
};

// x += damping * M^{-1} (b - A x) with M the (Schwarz) ILU(0) factorization.
class IluRelaxation : public Relaxation
{
public:
  IluRelaxation(std::shared_ptr<const CsrMatrix> A, Index n_domains, double damping,
                Index sweeps)
    : A_(std::move(A)), M_(*A_, n_domains), damping_(damping), sweeps_(sweeps)
  {
  }

  void smooth(std::span<const double> b, std::span<double> x) const override
  {
    DenseVector r(x.size()), z(x.size());
    for (Index s = 0; s < sweeps_; ++s)
    {
      residual(*A_, x, b, r);
      M_.apply(r, z);
      axpy(damping_, z, x);
    }
  }

private:
  std::shared_ptr<const CsrMatrix> A_;
  SchwarzIlu0 M_;
  double damping_;
  Index sweeps_;
};

// Any scalar relaxation applied to the stacked merge of a block operator.
class MonolithicSmoother : public BlockSmoother
{
public:
  MonolithicSmoother(const BlockMatrix &A, const SmootherSpec &spec)
    : sizes_(A.row_sizes()),
      inner_(make_relaxation(std::make_shared<const CsrMatrix>(merge_blocks(A)), spec))
  {
  }

  void smooth(const BlockVector &b, BlockVector &x) const override
  {
    const auto flat_b = concatenate(b);
    auto flat_x = concatenate(x);
    inner_->smooth(flat_b, flat_x);
    x = split_vector(flat_x, sizes_);
  }

private:
  std::vector<Index> sizes_;
  std::unique_ptr<Relaxation> inner_;
};

}  // namespace

std::unique_ptr<Relaxation> make_relaxation(std::shared_ptr<const CsrMatrix> A,
                                            const SmootherSpec &spec)
{
  spec.validate(1);
  switch (spec.kind)
  {
    case SmootherKind::Jacobi:
      return std::make_unique<JacobiRelaxation>(std::move(A), spec.damping, spec.sweeps);
    case SmootherKind::GaussSeidel:
      return std::make_unique<GaussSeidelRelaxation>(std::move(A), spec.damping, spec.sweeps);
    case SmootherKind::Ilu0:
      return std::make_unique<IluRelaxation>(std::move(A), 1, spec.damping, spec.sweeps);
    case SmootherKind::SchwarzIlu0:
      return std::make_unique<IluRelaxation>(std::move(A), spec.schwarz_domains, spec.damping,
                                             spec.sweeps);
    case SmootherKind::BlockGaussSeidel:
      break;
  }
  throw Error(ErrorKind::InvalidArgument, "block Gauss-Seidel needs a block operator");
}

DenseVector point_sweep(SmootherKind kind, const CsrMatrix &A, std::span<const double> b,
                        std::span<const double> x, double damping, Index sweeps)
{
  if (kind != SmootherKind::Jacobi && kind != SmootherKind::GaussSeidel)
  {
    throw Error(ErrorKind::InvalidArgument, "point_sweep supports Jacobi and Gauss-Seidel only");
  }
  if (b.size() != A.n_rows() || x.size() != A.n_cols() || A.n_rows() != A.n_cols())
  {
    throw Error(ErrorKind::DimensionMismatch, "point_sweep shapes");
  }
  // A zero damping is a valid no-op here, unlike in a SmootherSpec.
  DenseVector out(x.begin(), x.end());
  if (damping == 0.0 || sweeps == 0)
  {
    checked_inverse_diagonal(A);
    return out;
  }
  auto shared = std::shared_ptr<const CsrMatrix>(&A, [](const CsrMatrix *) {});
  make_relaxation(shared, SmootherSpec::point(kind, damping, sweeps))->smooth(b, out);
  return out;
}

BlockGaussSeidel::BlockGaussSeidel(const BlockMatrix &A, const SmootherSpec &spec)
  : A_(A), sweeps_(spec.sweeps), damping_(spec.damping)
{
  if (A.n_block_rows() != A.n_block_cols() || A.row_sizes() != A.col_sizes())
  {
    throw Error(ErrorKind::DimensionMismatch, "block Gauss-Seidel needs a square block layout");
  }
  spec.validate(A.n_block_rows());
  for (Index i = 0; i < A.n_block_rows(); ++i)
  {
    if (!A.has(i, i))
    {
      throw Error(ErrorKind::ZeroDiagonal,
                  "block Gauss-Seidel: diagonal block " + std::to_string(i) + " is absent");
    }
    sub_.push_back(make_relaxation(A.shared_block(i, i), spec.sub_solvers[i]));
  }
}

void BlockGaussSeidel::smooth(const BlockVector &b, BlockVector &x) const
{
  const Index nb = A_.n_block_rows();
  if (b.sizes() != A_.row_sizes() || x.sizes() != A_.col_sizes())
  {
    throw Error(ErrorKind::DimensionMismatch, "block Gauss-Seidel vector layout");
  }
  DenseVector r, tmp, update;
  for (Index s = 0; s < sweeps_; ++s)
  {
    for (Index i = 0; i < nb; ++i)
    {
      const Index n = A_.row_sizes()[i];
      r.assign(b[i].begin(), b[i].end());
      tmp.resize(n);
      for (Index j = 0; j < nb; ++j)
      {
        if (const auto *Aij = A_.block(i, j))
        {
          spmv(*Aij, x[j], tmp);
          axpy(-1.0, tmp, r);
        }
      }
      update.assign(n, 0.0);
      sub_[i]->smooth(r, update);
      axpy(damping_, update, x[i]);
    }
  }
}

std::unique_ptr<BlockSmoother> make_block_smoother(const BlockMatrix &A, const SmootherSpec &spec)
{
  if (spec.kind == SmootherKind::BlockGaussSeidel)
  {
    return std::make_unique<BlockGaussSeidel>(A, spec);
  }
  return std::make_unique<MonolithicSmoother>(A, spec);
}

BlockVector block_gs_sweep(const BlockMatrix &A, const BlockVector &b, const SmootherSpec &spec)
{
  if (spec.kind != SmootherKind::BlockGaussSeidel)
  {
    throw Error(ErrorKind::InvalidArgument, "block_gs_sweep needs a block_gauss_seidel spec");
  }
  BlockVector x(A.col_sizes());
  // As in point_sweep, a zero damping is a valid no-op here: x stays at its zero start.
  if (spec.damping == 0.0)
  {
    auto checked = spec;
    checked.damping = 1.0;
    BlockGaussSeidel(A, checked);
    if (b.sizes() != A.row_sizes())
    {
      throw Error(ErrorKind::DimensionMismatch, "block Gauss-Seidel vector layout");
    }
    return x;
  }
  BlockGaussSeidel(A, spec).smooth(b, x);
  return x;
}

DenseVector smoother_as_iteration(const CsrMatrix &A, std::span<const double> b,
                                  std::span<const double> x_in, const SmootherSpec &spec)
{
  DenseVector x(x_in.begin(), x_in.end());
  if (x.size() != A.n_cols() || b.size() != A.n_rows())
  {
    throw Error(ErrorKind::DimensionMismatch, "smoother_as_iteration shapes");
  }
  if (spec.kind == SmootherKind::BlockGaussSeidel)
  {
    const auto Ab = as_block(A);
    BlockVector bx(std::vector<DenseVector>{x});
    BlockGaussSeidel(Ab, spec).smooth(BlockVector(std::vector<DenseVector>{DenseVector(b.begin(), b.end())}), bx);
    return bx[0];
  }
  auto shared = std::shared_ptr<const CsrMatrix>(&A, [](const CsrMatrix *) {});
  make_relaxation(shared, spec)->smooth(b, x);
  return x;
}

BlockVector smoother_as_iteration(const BlockMatrix &A, const BlockVector &b,
                                  const BlockVector &x_in, const SmootherSpec &spec)
{
  BlockVector x = x_in;
  make_block_smoother(A, spec)->smooth(b, x);
  return x;
}

}  // namespace blockamg
