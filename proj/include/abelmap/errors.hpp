#pragma once

#include <stdexcept>
#include <string>

namespace abelmap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (files, parameters, invalid domain values).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class SearchExhausted : public Error {
 public:
  using Error::Error;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

class AmbiguousMaximalSubchain : public Error {
 public:
  using Error::Error;
};

class NotSmooth : public Error {
 public:
  using Error::Error;
};

class OrderIncomplete : public Error {
 public:
  using Error::Error;
};

class NotConstructible : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

}  // namespace abelmap
