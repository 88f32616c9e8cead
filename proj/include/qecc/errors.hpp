#pragma once

#include <stdexcept>

namespace qecc {

// Text input (Pauli strings, matrix files) that cannot be parsed.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand shapes disagree (qubit counts, matrix dimensions, vector lengths).
struct dimension_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A generator set violates the stabilizer group requirements.
struct validation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration guard (group size, dense qubit count) would be exceeded.
struct capacity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown catalog code or channel name.
struct lookup_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A file cannot be read.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qecc
