#include "vdh/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vdh {

Perm::Perm(int degree) {
  if (degree < 0) fail(ErrorCode::InvalidArity, "permutation degree must be non-negative");
  images_.resize(static_cast<std::size_t>(degree));
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      fail(ErrorCode::ParseError, "image array is not a permutation");
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

Perm Perm::compose(const Perm& rhs) const {
  if (degree() != rhs.degree())
    fail(ErrorCode::ArityMismatch, "permutation degree mismatch");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = images_[static_cast<std::size_t>(rhs.images_[i])];
  return Perm(std::move(out));
}

Perm Perm::inverse() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Perm(std::move(out));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Perm parse_cycles(const std::string& text, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  bool any = false;
  while (i < text.size()) {
    if (text[i] != '(')
      fail(ErrorCode::ParseError, "expected '(' in cycle notation: " + text);
    ++i;
    any = true;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(ErrorCode::ParseError, "expected digit in cycle notation: " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v >= degree)
        fail(ErrorCode::ParseError, "cycle entry " + std::to_string(v) +
                                        " out of range for degree " +
                                        std::to_string(degree));
      cycle.push_back(v);
      skip_ws();
      if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
    }
    if (i >= text.size())
      fail(ErrorCode::ParseError, "unterminated cycle: " + text);
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (images[static_cast<std::size_t>(from)] != from)
        fail(ErrorCode::ParseError, "repeated entry in cycles: " + text);
      images[static_cast<std::size_t>(from)] = to;
    }
    skip_ws();
  }
  if (!any) fail(ErrorCode::ParseError, "empty cycle notation");
  return Perm(std::move(images));
}

std::string format_cycles(const Perm& p) {
  std::ostringstream out;
  std::vector<char> seen(static_cast<std::size_t>(p.degree()), 0);
  bool any = false;
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)] || p(start) == start) continue;
    any = true;
    out << '(';
    int v = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << v;
      seen[static_cast<std::size_t>(v)] = 1;
      v = p(v);
      first = false;
    } while (v != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace vdh
