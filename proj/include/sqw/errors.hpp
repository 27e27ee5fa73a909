#pragma once

#include <stdexcept>
#include <string>

namespace sqw {

struct PoleError : std::domain_error {
  explicit PoleError(const std::string& what) : std::domain_error("pole: " + what) {}
};

struct HorizonError : std::out_of_range {
  explicit HorizonError(const std::string& what) : std::out_of_range("horizon exceeded: " + what) {}
};

struct ParseError : std::invalid_argument {
  explicit ParseError(const std::string& what) : std::invalid_argument("parse error: " + what) {}
};

struct PreconditionError : std::logic_error {
  explicit PreconditionError(const std::string& what) : std::logic_error("precondition: " + what) {}
};

struct BoxOverflow : std::out_of_range {
  explicit BoxOverflow(const std::string& what) : std::out_of_range("box overflow: " + what) {}
};

}  // namespace sqw
