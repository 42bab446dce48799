#pragma once

#include <stdexcept>
#include <string>

namespace treespec {

/// Root of every error the toolkit throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by the zero polynomial") {}
};

class NotDivisible : public Error {
 public:
  NotDivisible() : Error("polynomial division leaves a nonzero remainder") {}
};

class BothZero : public Error {
 public:
  BothZero() : Error("gcd of two zero polynomials is undefined") {}
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
};

class MultiplicityMismatch : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class TrivialTree : public Error {
 public:
  TrivialTree() : Error("operation requires a nontrivial tree") {}
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("at least one input tree is required") {}
};

/// Tree / polynomial text that does not follow the file format.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class CycleDetected : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

class MultipleRoots : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

class DisconnectedVertex : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

}  // namespace treespec
