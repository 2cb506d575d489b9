#pragma once

#include <stdexcept>
#include <string>

namespace corep {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Dimension or shape disagreement between arguments.
class InputShapeError : public Error {
  public:
    using Error::Error;
};

class NonAssociative : public Error {
  public:
    using Error::Error;
};
class NonUnital : public Error {
  public:
    using Error::Error;
};
class BadLeftAction : public Error {
  public:
    using Error::Error;
};
class BadRightAction : public Error {
  public:
    using Error::Error;
};
class ActionsDontCommute : public Error {
  public:
    using Error::Error;
};
class MiddleRingMismatch : public Error {
  public:
    using Error::Error;
};
class RingMismatch : public Error {
  public:
    using Error::Error;
};
class NotBimoduleMap : public Error {
  public:
    using Error::Error;
};

class NotCoassociative : public Error {
  public:
    using Error::Error;
};
class CounitLawFails : public Error {
  public:
    using Error::Error;
};
class NotRightLinear : public Error {
  public:
    using Error::Error;
};
class NotCoaction : public Error {
  public:
    using Error::Error;
};
class CoringMismatch : public Error {
  public:
    using Error::Error;
};

class NotInBulletHom : public Error {
  public:
    using Error::Error;
};
class NotBicolinear : public Error {
  public:
    using Error::Error;
};
class NotColinear : public Error {
  public:
    using Error::Error;
};

class UnverifiedWitness : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};
class ResolveError : public Error {
  public:
    using Error::Error;
};
class UnknownCommand : public Error {
  public:
    using Error::Error;
};

} // namespace corep
