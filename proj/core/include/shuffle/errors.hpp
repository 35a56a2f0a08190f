#ifndef SHUFFLE_ERRORS_HPP
#define SHUFFLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shuffle {

// Error taxonomy shared across the library. Everything derives from
// std::runtime_error so callers can catch broadly; the CLI maps usage
// errors to exit code 2.
struct VariableOutOfScope : std::runtime_error {
  explicit VariableOutOfScope(const std::string& m) : std::runtime_error(m) {}
};
struct InexactDivision : std::runtime_error {
  explicit InexactDivision(const std::string& m) : std::runtime_error(m) {}
};
struct SingularMatrix : std::runtime_error {
  explicit SingularMatrix(const std::string& m) : std::runtime_error(m) {}
};
struct CellOutsideDiagram : std::runtime_error {
  explicit CellOutsideDiagram(const std::string& m) : std::runtime_error(m) {}
};
struct SizeMismatch : std::runtime_error {
  explicit SizeMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct LengthMismatch : std::runtime_error {
  explicit LengthMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct IndexOutOfRange : std::runtime_error {
  explicit IndexOutOfRange(const std::string& m) : std::runtime_error(m) {}
};
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& m) : std::runtime_error(m) {}
};
struct SigmaNotDistinct : std::runtime_error {
  explicit SigmaNotDistinct(const std::string& m) : std::runtime_error(m) {}
};
struct WeightDomainMismatch : std::runtime_error {
  explicit WeightDomainMismatch(const std::string& m) : std::runtime_error(m) {}
};
struct LevelZero : std::runtime_error {
  explicit LevelZero(const std::string& m) : std::runtime_error(m) {}
};
struct AssertionFailure : std::logic_error {
  explicit AssertionFailure(const std::string& m) : std::logic_error(m) {}
};

}  // namespace shuffle

#endif
