#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace blip {

// Root of every error the library reports.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Image-space shape and kind errors.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

class DimensionTooSmall : public Error {
 public:
  using Error::Error;
};

class SamePixel : public Error {
 public:
  using Error::Error;
};

// Raster codec errors.
class FormatError : public Error {
 public:
  using Error::Error;
};

class MalformedHeader : public FormatError {
 public:
  using FormatError::FormatError;
};

class UnsupportedFormat : public FormatError {
 public:
  using FormatError::FormatError;
};

class TruncatedData : public FormatError {
 public:
  using FormatError::FormatError;
};

// Transform-expression errors.
class ExprError : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public ExprError {
 public:
  SyntaxError(std::size_t position, std::vector<std::string> expected,
              const std::string& detail);

  // 1-based character offset into the source text.
  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class UnboundVariable : public ExprError {
 public:
  explicit UnboundVariable(const std::string& name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class ShapeMismatch : public ExprError {
 public:
  ShapeMismatch(const std::string& name, const std::string& detail);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// Raised by the typechecker; carries the offending node's path in the tree.
class ExprKindMismatch : public ExprError {
 public:
  ExprKindMismatch(const std::string& path, const std::string& detail);
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace blip
