#pragma once

#include <stdexcept>
#include <string>

namespace cnplace {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (bad JSON, bad CSV row).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed document that violates the snapshot schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Bad argument to an operation (out-of-range index, invalid fraction, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

/// Inputs that disagree with each other (label map not covering the graph,
/// partition not covering the node set).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Required attributes absent and no way to synthesize them.
class MissingDataError : public Error {
 public:
  using Error::Error;
};

/// Degenerate samples, infeasible fits, non-finite parameters.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace cnplace
