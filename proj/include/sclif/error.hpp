#pragma once

#include <stdexcept>
#include <string>

namespace sclif {

enum class Errc {
  DivisionByZero,
  FieldMismatch,
  InvalidBlade,
  TooLarge,
  AlgebraMismatch,
  NotIdempotent,
  DimMismatch,
  UnrecognizedBasic,
  UnknownTable,
  Syntax,
  GeneratorOutOfRange,
  OutOfScope,
  UnknownCheck,
  InvalidArgument,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Parse failures carry the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t position, const std::string& what)
      : Error(code, what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sclif
