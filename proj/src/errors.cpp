#include "opengames/errors.hpp"

#include <sstream>

namespace og {

namespace {

std::string describe_guard(const std::string& what, std::size_t requested,
                           std::size_t cap) {
  std::ostringstream out;
  out << "size guard exceeded while enumerating " << what << ": " << requested
      << " items requested, cap is " << cap;
  return out.str();
}

std::string describe_location(SourceLocation where, const std::string& msg) {
  std::ostringstream out;
  out << where.line << ":" << where.column << ": " << msg;
  return out.str();
}

std::string describe_parse(SourceLocation where, const std::string& found,
                           const std::vector<std::string>& expected) {
  std::ostringstream out;
  out << "unexpected " << found << ", expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out << (i + 1 == expected.size() ? " or " : ", ");
    out << expected[i];
  }
  return describe_location(where, out.str());
}

}  // namespace

SizeGuardExceeded::SizeGuardExceeded(std::string what, std::size_t requested,
                                     std::size_t cap)
    : Error(describe_guard(what, requested, cap)),
      requested_(requested),
      cap_(cap) {}

LexError::LexError(SourceLocation where, const std::string& message)
    : Error(describe_location(where, message)), where_(where) {}

ParseError::ParseError(SourceLocation where, const std::string& found,
                       std::vector<std::string> expected)
    : Error(describe_parse(where, found, expected)),
      where_(where),
      expected_(std::move(expected)) {}

}  // namespace og
