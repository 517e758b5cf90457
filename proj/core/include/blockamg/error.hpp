// Copyright The blockamg Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef BLOCKAMG_ERROR_HPP
#define BLOCKAMG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace blockamg
{

enum class ErrorKind
{
  DimensionMismatch,
  InvalidArgument,
  ZeroDiagonal,
  ZeroPivot,
  NotCoLocated,
  SingularCoarseOperator,
  Io,
  Config,
};

const char *to_string(ErrorKind kind);

// All library failures are reported through this exception. The kind lets callers (and
// the CLI exit-code mapping) distinguish failure classes without parsing messages.
class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, const std::string &what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
  {
  }

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace blockamg

#endif  // BLOCKAMG_ERROR_HPP
