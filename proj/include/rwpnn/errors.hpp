#pragma once

#include <stdexcept>
#include <string>

namespace rwpnn {

//! Thrown when a caller breaks a documented precondition.
class ContractViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

//! Model file does not start with the expected magic/kind bytes.
class FormatError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Model file was written by an incompatible format version.
class VersionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Model file ends before the declared payload does.
class TruncationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Payload checksum does not match the stored one.
class ChecksumError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! An input file is missing or cannot be opened.
class FileError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! Training produced a non-finite loss.
class DivergenceError : public std::runtime_error {
public:
  DivergenceError(int epoch, const std::string& what)
      : std::runtime_error(what), epoch_(epoch) {}
  explicit DivergenceError(int epoch)
      : DivergenceError(epoch, "training loss became non-finite at epoch " +
                                   std::to_string(epoch)) {}
  int epoch() const { return epoch_; }

private:
  int epoch_;
};

}  // namespace rwpnn
