#ifndef GRCAYLEY_ERROR_HPP
#define GRCAYLEY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace grc {

/// Invalid ring/graph/family parameters (bad prime, e < 2, size over the desk limit, ...).
class ParameterError : public std::invalid_argument {
   public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// A supplied modulus is not monic basic irreducible and primitive.
class ModulusError : public std::invalid_argument {
   public:
    explicit ModulusError(const std::string& what) : std::invalid_argument(what) {}
};

/// Elements from two different ring contexts were combined.
class ContextMismatch : public std::invalid_argument {
   public:
    explicit ContextMismatch(const std::string& what) : std::invalid_argument(what) {}
};

class RangeError : public std::out_of_range {
   public:
    explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

/// An internal consistency check failed (broken symmetry, non-scalar trace, ...).
class IntegrityError : public std::logic_error {
   public:
    explicit IntegrityError(const std::string& what) : std::logic_error(what) {}
};

/// The requested instance is too large for the chosen algorithm.
class SizeError : public std::length_error {
   public:
    explicit SizeError(const std::string& what) : std::length_error(what) {}
};

}  // namespace grc

#endif  // GRCAYLEY_ERROR_HPP
