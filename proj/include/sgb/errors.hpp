#pragma once

#include <stdexcept>
#include <string>

namespace sgb {

// Base class for all library errors. Subcommands map these to exit code 2
// (validation) or 1 (numeric), see tools/sgb.cpp.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionMismatch : public Error {
  public:
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

class SingularBlock : public Error {
  public:
    explicit SingularBlock(const std::string& msg) : Error(msg) {}
};

class InfeasibleDf : public Error {
  public:
    explicit InfeasibleDf(const std::string& msg) : Error(msg) {}
};

class MissingOutcome : public Error {
  public:
    explicit MissingOutcome(const std::string& msg) : Error(msg) {}
};

class NonNumericColumn : public Error {
  public:
    explicit NonNumericColumn(const std::string& msg) : Error(msg) {}
};

class ConstantColumn : public Error {
  public:
    explicit ConstantColumn(const std::string& msg) : Error(msg) {}
};

class NoLearners : public Error {
  public:
    explicit NoLearners(const std::string& msg) : Error(msg) {}
};

class OutOfRange : public Error {
  public:
    explicit OutOfRange(const std::string& msg) : Error(msg) {}
};

class FoldTooSmall : public Error {
  public:
    explicit FoldTooSmall(const std::string& msg) : Error(msg) {}
};

class EmptyModel : public Error {
  public:
    explicit EmptyModel(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
  public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace sgb
