#pragma once

#include <stdexcept>
#include <string>

namespace afa {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Incompatible tensor/layer shapes. Message names the primitive and shapes.
struct ShapeError : Error {
  using Error::Error;
};

// NaN/Inf surfaced by a primitive or probe point.
struct NonFiniteError : Error {
  explicit NonFiniteError(std::string op_name, const std::string& msg)
      : Error(msg), op(std::move(op_name)) {}
  std::string op;
};

// Graph misuse: non-scalar backward root, double backward, etc.
struct GraphError : Error {
  using Error::Error;
};

// Bad argument values: out-of-range labels, empty positive sets, ...
struct ValueError : Error {
  using Error::Error;
};

// On-disk format violations (checkpoints, IDX, CIFAR binaries).
struct FormatError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

// Experiment config validation; message lists every violation at once.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace afa
