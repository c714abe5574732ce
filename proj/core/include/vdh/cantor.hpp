#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "vdh/error.hpp"

namespace vdh {

/// Eventually periodic infinite word over the digits {0, ..., d-1}.
/// Stored in normal form: shortest period first, then shortest prefix
/// (trailing prefix digits equal to the last period digit are absorbed
/// into a rotated period). Digits are stored as the characters '0'+k.
class CantorPoint {
 public:
  CantorPoint(int arity, std::string prefix, std::string period);

  int arity() const { return arity_; }
  const std::string& prefix() const { return prefix_; }
  const std::string& period() const { return period_; }

  /// i-th digit of the infinite word, 0-based.
  int digit(std::size_t i) const;

  auto operator<=>(const CantorPoint&) const = default;

 private:
  int arity_ = 2;
  std::string prefix_;
  std::string period_;
};

/// Text form "prefix(period)", e.g. "0(10)" or "(0)".
CantorPoint parse_point(const std::string& text, int arity);
std::string format_point(const CantorPoint& c);

}  // namespace vdh
