#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turan {

enum class ErrorKind {
  UniformityTooSmall,
  QTooSmall,
  KTooSmall,
  IndexOutOfRange,
  EmptySelection,
  EmptyHypergraph,
  ParseError,
  UniformityMismatch,
  VertexOutOfRange,
  DuplicateEdge,
  BadProbability,
  TooLarge,
  NoSdr,
  DuplicateItem,
  NotApplicable,
  DegenerateParams,
  NoFeasibleC,
  EmptyGraph,
  NotFree,
  DisconnectedRoot,
  InfeasibleExact,
  InvariantViolation,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UniformityTooSmall: return "UniformityTooSmall";
    case ErrorKind::QTooSmall: return "QTooSmall";
    case ErrorKind::KTooSmall: return "KTooSmall";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptySelection: return "EmptySelection";
    case ErrorKind::EmptyHypergraph: return "EmptyHypergraph";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UniformityMismatch: return "UniformityMismatch";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::BadProbability: return "BadProbability";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoSdr: return "NoSDR";
    case ErrorKind::DuplicateItem: return "DuplicateItem";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::DegenerateParams: return "DegenerateParams";
    case ErrorKind::NoFeasibleC: return "NoFeasibleC";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::NotFree: return "NotFree";
    case ErrorKind::DisconnectedRoot: return "DisconnectedRoot";
    case ErrorKind::InfeasibleExact: return "InfeasibleExact";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parameter triple rejected. For QTooSmall the Turan number is known to be 0.
class ParamError : public Error {
 public:
  ParamError(ErrorKind kind, const std::string& what, bool ex_is_zero = false)
      : Error(kind, what), ex_is_zero_(ex_is_zero) {}

  bool ex_is_zero() const noexcept { return ex_is_zero_; }

 private:
  bool ex_is_zero_;
};

// Malformed hypergraph text. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t line, const std::string& what)
      : Error(kind, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A bound or certificate was requested outside its proven range.
class NotApplicable : public Error {
 public:
  explicit NotApplicable(std::string precondition)
      : Error(ErrorKind::NotApplicable, precondition), precondition_(std::move(precondition)) {}

  const std::string& precondition() const noexcept { return precondition_; }

 private:
  std::string precondition_;
};

// Retrieval request with no system of distinct representatives.
// violator() holds edge indices whose union is smaller than their count.
class NoSdrError : public Error {
 public:
  explicit NoSdrError(std::vector<std::size_t> violator)
      : Error(ErrorKind::NoSdr, "request violates Hall's condition"),
        violator_(std::move(violator)) {}

  const std::vector<std::size_t>& violator() const noexcept { return violator_; }

 private:
  std::vector<std::size_t> violator_;
};

}  // namespace turan
