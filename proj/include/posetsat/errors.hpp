#pragma once

#include <stdexcept>
#include <string>

namespace posetsat {

struct CycleError : std::runtime_error {
  explicit CycleError(const std::string& what) : std::runtime_error(what) {}
};

struct IndexError : std::runtime_error {
  explicit IndexError(const std::string& what) : std::runtime_error(what) {}
};

struct SizeError : std::runtime_error {
  explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

struct RangeError : std::runtime_error {
  explicit RangeError(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownNameError : std::runtime_error {
  explicit UnknownNameError(const std::string& what) : std::runtime_error(what) {}
};

struct MissingParameterError : std::runtime_error {
  explicit MissingParameterError(const std::string& what) : std::runtime_error(what) {}
};

struct BudgetExhaustedError : std::runtime_error {
  explicit BudgetExhaustedError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace posetsat
