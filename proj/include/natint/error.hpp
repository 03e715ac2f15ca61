#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace natint {

enum class ErrorKind {
  DomainMismatch,
  FlavorMismatch,
  ShapeMismatch,
  ModulusMismatch,
  FuzzyRangeOverflow,
  NotARing,
  NotAField,
  DivisorComponentZero,
  UnorderedDomain,
  InvalidArgument,
  TooLarge,
  InfiniteDomain,
  MissingTable,
  NotIntervalCarrier,
  NotAnIdeal,
  ParseError,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::FlavorMismatch: return "FlavorMismatch";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::FuzzyRangeOverflow: return "FuzzyRangeOverflow";
    case ErrorKind::NotARing: return "NotARing";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::DivisorComponentZero: return "DivisorComponentZero";
    case ErrorKind::UnorderedDomain: return "UnorderedDomain";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InfiniteDomain: return "InfiniteDomain";
    case ErrorKind::MissingTable: return "MissingTable";
    case ErrorKind::NotIntervalCarrier: return "NotIntervalCarrier";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by every text parser; `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::string expected, std::string_view input)
      : Error(ErrorKind::ParseError, "at position " + std::to_string(position) + " in \"" +
                                         std::string(input) + "\": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

}  // namespace natint
