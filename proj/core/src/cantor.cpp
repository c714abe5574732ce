#include "vdh/cantor.hpp"

#include <algorithm>

namespace vdh {

namespace {

void check_digits(const std::string& s, int arity, const char* what) {
  for (char c : s) {
    if (c < '0' || c >= static_cast<char>('0' + arity))
      fail(ErrorCode::ParseError,
           std::string(what) + " contains a digit outside 0.." +
               std::to_string(arity - 1));
  }
}

// Shortest u with period == u repeated.
std::string primitive_root(const std::string& period) {
  std::size_t n = period.size();
  for (std::size_t len = 1; len <= n / 2; ++len) {
    if (n % len != 0) continue;
    bool ok = true;
    for (std::size_t i = len; i < n && ok; ++i)
      ok = period[i] == period[i - len];
    if (ok) return period.substr(0, len);
  }
  return period;
}

}  // namespace

CantorPoint::CantorPoint(int arity, std::string prefix, std::string period)
    : arity_(arity), prefix_(std::move(prefix)), period_(std::move(period)) {
  if (arity_ < 2 || arity_ > 10)
    fail(ErrorCode::InvalidArity, "arity must be between 2 and 10");
  if (period_.empty())
    fail(ErrorCode::ParseError, "period of a point must be non-empty");
  check_digits(prefix_, arity_, "point prefix");
  check_digits(period_, arity_, "point period");
  period_ = primitive_root(period_);
  // Absorb prefix digits that already agree with the periodic tail.
  while (!prefix_.empty() && prefix_.back() == period_.back()) {
    prefix_.pop_back();
    period_.insert(period_.begin(), period_.back());
    period_.pop_back();
  }
}

int CantorPoint::digit(std::size_t i) const {
  if (i < prefix_.size()) return prefix_[i] - '0';
  return period_[(i - prefix_.size()) % period_.size()] - '0';
}

CantorPoint parse_point(const std::string& text, int arity) {
  auto open = text.find('(');
  auto close = text.find(')');
  if (open == std::string::npos || close == std::string::npos ||
      close < open || close + 1 != text.size())
    fail(ErrorCode::ParseError,
         "point must have the form prefix(period): " + text);
  std::string prefix = text.substr(0, open);
  std::string period = text.substr(open + 1, close - open - 1);
  return CantorPoint(arity, prefix, period);
}

std::string format_point(const CantorPoint& c) {
  return c.prefix() + "(" + c.period() + ")";
}

}  // namespace vdh
