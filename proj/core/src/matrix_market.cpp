// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#include "blockamg/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "blockamg/error.hpp"

namespace blockamg
{

namespace
{

std::string lower(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

struct Banner
{
  std::string format;
  std::string field;
  std::string symmetry;
};

Banner read_banner(std::istream &in)
{
  std::string line;
  if (!std::getline(in, line))
  {
    throw Error(ErrorKind::Io, "empty MatrixMarket stream");
  }
  std::istringstream ss(line);
  std::string tag, object;
  Banner b;
  ss >> tag >> object >> b.format >> b.field >> b.symmetry;
  if (tag != "%%MatrixMarket" || lower(object) != "matrix")
  {
    throw Error(ErrorKind::Io, "missing %%MatrixMarket matrix banner");
  }
  b.format = lower(b.format);
  b.field = lower(b.field);
  b.symmetry = lower(b.symmetry);
  if (b.field != "real" && b.field != "integer")
  {
    throw Error(ErrorKind::Io, "unsupported MatrixMarket field '" + b.field + "'");
  }
  return b;
}

// Skips comment lines and returns the first data line.
std::string next_data_line(std::istream &in)
{
  std::string line;
  while (std::getline(in, line))
  {
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string::npos && line[first] != '%')
    {
      return line;
    }
  }
  throw Error(ErrorKind::Io, "unexpected end of MatrixMarket stream");
}

std::ofstream open_out(const std::filesystem::path &path)
{
  std::ofstream out(path);
  if (!out)
  {
    throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  }
  return out;
}

std::ifstream open_in(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw Error(ErrorKind::Io, "cannot open " + path.string());
  }
  return in;
}

}  // namespace

CsrMatrix read_matrix_market(std::istream &in)
{
  const auto banner = read_banner(in);
  if (banner.format != "coordinate")
  {
    throw Error(ErrorKind::Io, "expected coordinate format, got '" + banner.format + "'");
  }
  const bool symmetric = banner.symmetry == "symmetric";
  if (!symmetric && banner.symmetry != "general")
  {
    throw Error(ErrorKind::Io, "unsupported symmetry '" + banner.symmetry + "'");
  }
  Index rows = 0, cols = 0, nnz = 0;
  if (!(std::istringstream(next_data_line(in)) >> rows >> cols >> nnz))
  {
    throw Error(ErrorKind::Io, "malformed MatrixMarket size line");
  }
  std::vector<Triplet> entries;
  entries.reserve(symmetric ? 2 * nnz : nnz);
  for (Index k = 0; k < nnz; ++k)
  {
    Index i = 0, j = 0;
    double v = 0.0;
    if (!(std::istringstream(next_data_line(in)) >> i >> j >> v) || i == 0 || j == 0 ||
        i > rows || j > cols)
    {
      throw Error(ErrorKind::Io, "malformed MatrixMarket entry " + std::to_string(k + 1));
    }
    entries.push_back({i - 1, j - 1, v});
    if (symmetric && i != j)
    {
      entries.push_back({j - 1, i - 1, v});
    }
  }
  return CsrMatrix::from_triplets(rows, cols, std::move(entries));
}

CsrMatrix read_matrix_market(const std::filesystem::path &path)
{
  auto in = open_in(path);
  return read_matrix_market(in);
}

void write_matrix_market(std::ostream &out, const CsrMatrix &A)
{
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << A.n_rows() << ' ' << A.n_cols() << ' ' << A.nnz() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (Index i = 0; i < A.n_rows(); ++i)
  {
    const auto r = A.row(i);
    for (Index k = 0; k < r.cols.size(); ++k)
    {
      out << i + 1 << ' ' << r.cols[k] + 1 << ' ' << r.values[k] << '\n';
    }
  }
}

void write_matrix_market(const std::filesystem::path &path, const CsrMatrix &A)
{
  auto out = open_out(path);
  write_matrix_market(out, A);
}

DenseVector read_vector_market(std::istream &in)
{
  const auto banner = read_banner(in);
  if (banner.format != "array")
  {
    throw Error(ErrorKind::Io, "expected array format for a vector");
  }
  Index rows = 0, cols = 0;
  if (!(std::istringstream(next_data_line(in)) >> rows >> cols) || cols != 1)
  {
    throw Error(ErrorKind::Io, "vector file must have exactly one column");
  }
  DenseVector x(rows);
  for (auto &v : x)
  {
    if (!(std::istringstream(next_data_line(in)) >> v))
    {
      throw Error(ErrorKind::Io, "malformed vector entry");
    }
  }
  return x;
}

DenseVector read_vector_market(const std::filesystem::path &path)
{
  auto in = open_in(path);
  return read_vector_market(in);
}

void write_vector_market(std::ostream &out, std::span<const double> x)
{
  out << "%%MatrixMarket matrix array real general\n";
  out << x.size() << " 1\n";
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto v : x)
  {
    out << v << '\n';
  }
}

void write_vector_market(const std::filesystem::path &path, std::span<const double> x)
{
  auto out = open_out(path);
  write_vector_market(out, x);
}

}  // namespace blockamg
