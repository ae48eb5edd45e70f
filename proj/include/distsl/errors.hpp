#pragma once

#include <stdexcept>
#include <string>

namespace distsl {

// Base class for every error raised by the library. The CLI maps these to
// exit code 1 (domain error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// A pair of vertices has no connecting path, so D(G) is undefined.
class DistanceUndefined : public Error {
 public:
  DistanceUndefined(int u, int v)
      : Error("graph is disconnected: no path between vertex " +
              std::to_string(u) + " and vertex " + std::to_string(v)),
        u_(u),
        v_(v) {}

  int first() const { return u_; }
  int second() const { return v_; }

 private:
  int u_;
  int v_;
};

class InvalidMatrix : public Error {
 public:
  using Error::Error;
};

class InvalidPartition : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace distsl
