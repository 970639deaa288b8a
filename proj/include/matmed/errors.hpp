// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MATMED_ERRORS_HPP_
#define MATMED_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace matmed {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed document, bad literal, or unknown tag.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Argument that violates an operation's precondition (unknown id, bad variant).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A brute-force routine was asked to run beyond its configured size cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

class InfeasibleError : public Error {
 public:
  using Error::Error;
};

class UnboundedError : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace matmed

#endif  // MATMED_ERRORS_HPP_
