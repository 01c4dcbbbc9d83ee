#include "blip/error.hpp"

namespace blip {

namespace {

std::string describe_syntax(std::size_t position, const std::vector<std::string>& expected,
                            const std::string& detail) {
  std::string msg = "syntax error at position " + std::to_string(position) + ": " + detail;
  if (!expected.empty()) {
    msg += " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ")";
  }
  return msg;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t position, std::vector<std::string> expected,
                         const std::string& detail)
    : ExprError(describe_syntax(position, expected, detail)),
      position_(position),
      expected_(std::move(expected)) {}

UnboundVariable::UnboundVariable(const std::string& name)
    : ExprError("unbound variable '" + name + "'"), name_(name) {}

ShapeMismatch::ShapeMismatch(const std::string& name, const std::string& detail)
    : ExprError("image '" + name + "' " + detail), name_(name) {}

ExprKindMismatch::ExprKindMismatch(const std::string& path, const std::string& detail)
    : ExprError("kind mismatch at " + path + ": " + detail), path_(path) {}

}  // namespace blip
