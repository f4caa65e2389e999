#pragma once

#include <stdexcept>
#include <string>

namespace rdfusion {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfGridError : Error {
  using Error::Error;
};
struct FormatError : Error {
  using Error::Error;
};
struct NotFoundError : Error {
  using Error::Error;
};
struct ShapeError : Error {
  using Error::Error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct NumericError : Error {
  using Error::Error;
};
struct InvalidTxIndexError : Error {
  using Error::Error;
};
struct IOError : Error {
  using Error::Error;
};
struct EmptyDatasetError : Error {
  using Error::Error;
};

}  // namespace rdfusion
