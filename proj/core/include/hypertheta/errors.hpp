#pragma once

#include <stdexcept>
#include <string>

namespace hypertheta {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Imaginary part of the period matrix is not positive definite.
class InvalidPeriod : public Error {
public:
    using Error::Error;
};

class RadiusExceeded : public Error {
public:
    RadiusExceeded(const std::string& what, int required)
        : Error(what), required_radius(required) {}
    int required_radius;
};

class HalfIntegerParityUndefined : public Error {
public:
    using Error::Error;
};

// The point lies too close to the zero locus of theta[0 0; 0 0].
class DivisorHit : public Error {
public:
    using Error::Error;
};

class DegenerateDenominator : public Error {
public:
    using Error::Error;
};

class NoConsistentSign : public Error {
public:
    using Error::Error;
};

class CatalogError : public Error {
public:
    using Error::Error;
};

}  // namespace hypertheta
