#pragma once

#include <stdexcept>
#include <string>

namespace entwine {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class NotSquare : public Error {
 public:
  using Error::Error;
};

class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class NotSubalgebra : public Error {
 public:
  using Error::Error;
};

class NotCoideal : public Error {
 public:
  using Error::Error;
};

class NotGroupLike : public Error {
 public:
  using Error::Error;
};

class NotCharacter : public Error {
 public:
  using Error::Error;
};

class NotGalois : public Error {
 public:
  using Error::Error;
};

class NotGaloisCoextension : public Error {
 public:
  using Error::Error;
};

/// The canonical map does not vanish on the balancing relations. Never
/// expected to fire; it signals an internal inconsistency.
class IllDefined : public Error {
 public:
  using Error::Error;
};

/// cocan left the cotensor product. Same severity as IllDefined.
class ImageEscape : public Error {
 public:
  using Error::Error;
};

/// A document does not match the file schema. `path` is a JSON pointer.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, const std::string& reason)
      : Error((path.empty() ? std::string("/") : path) + ": " + reason), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// A suite needs a section the document does not have.
class MissingSection : public Error {
 public:
  explicit MissingSection(std::string section)
      : Error("MissingSection: " + section), section_(std::move(section)) {}
  const std::string& section() const { return section_; }

 private:
  std::string section_;
};

class UnknownExample : public Error {
 public:
  using Error::Error;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

}  // namespace entwine
