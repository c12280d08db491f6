#pragma once

#include <stdexcept>
#include <string>

namespace cocite {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input bytes: bad citation strings, bad JSONL lines, bad TSV rows.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally valid input that violates a contract: duplicate ids, size
// mismatches, out-of-range parameters, missing upstream artifacts.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace cocite
