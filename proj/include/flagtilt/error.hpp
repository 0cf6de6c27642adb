#pragma once

#include <stdexcept>
#include <string>

namespace flagtilt {

// Base class for every error raised by the engine. All of them signal bad
// input (a violated precondition), never an internal inconsistency.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidWeight : public Error {
 public:
  using Error::Error;
};

class InvalidShape : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidTower : public Error {
 public:
  using Error::Error;
};

}  // namespace flagtilt
