// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace drep {

using Rational = mpq_class;
using Integer = mpz_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p", "-p", "p/q". Throws Error on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace drep
