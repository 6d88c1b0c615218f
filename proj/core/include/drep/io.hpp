// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

// Text formats.
//
// Algebra files:
//
//   # comment
//   algebra kxy;                 (optional)
//   generator x, y : 0;
//   generator t : -1;
//   d t = x*y - y*x;
//
// EXPR := [+|-] term {(+|-) term};  term := factor {'*' factor};
// factor := atom ['^' INT];  atom := INT ['/' INT] | NAME | '(' EXPR ')'.
// Differentials left out are zero.
//
// Representation files:
//
//   n = 2
//   x = [[1, 0], [0, 2]]
//   y = [[1/2, 0], [0, -1]]

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "drep/ncalg.hpp"
#include "drep/tangent.hpp"

namespace drep::io {

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
 public:
  ParseError(Position pos, const std::string& message);
  const Position& position() const { return pos_; }
  /// Message without the "line:column: " prefix.
  const std::string& detail() const { return detail_; }

 private:
  Position pos_;
  std::string detail_;
};

struct AlgebraFile {
  nc::Resolution resolution;
  std::vector<Position> declared_at;             // per generator
  std::vector<std::optional<Position>> diff_at;  // per generator, where d NAME appears
};

/// `name` is used when the text has no `algebra NAME;` line.
AlgebraFile parse_algebra_file(std::string_view text, const std::string& name = "algebra");
nc::Resolution parse_algebra(std::string_view text, const std::string& name = "algebra");

/// Canonical text: algebra line, one generator line per generator, then the
/// nonzero differentials in declaration order.
std::string print_algebra(const nc::Resolution& res);

tangent::Representation parse_rep(std::string_view text);
std::string print_rep(const tangent::Representation& rho);

}  // namespace drep::io
