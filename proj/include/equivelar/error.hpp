#ifndef EQUIVELAR_ERROR_HPP
#define EQUIVELAR_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace equivelar {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CycleTooShort : public Error {
public:
    using Error::Error;
};

class RepeatedVertexInCycle : public Error {
public:
    using Error::Error;
};

class DuplicateFace : public Error {
public:
    using Error::Error;
};

class UnknownVertex : public Error {
public:
    using Error::Error;
};

/// Two faces meet in something other than nothing, a vertex or a common edge.
class IntersectionViolation : public Error {
public:
    IntersectionViolation(std::uint32_t a, std::uint32_t b, std::vector<std::uint32_t> shared,
                          const std::string& what)
        : Error(what), face_a(a), face_b(b), shared_vertices(std::move(shared))
    {
    }

    std::uint32_t face_a;
    std::uint32_t face_b;
    std::vector<std::uint32_t> shared_vertices;
};

class NotAManifold : public Error {
public:
    using Error::Error;
};

class NotAPolyhedralMap : public Error {
public:
    using Error::Error;
};

class InvalidCombination : public Error {
public:
    using Error::Error;
};

class InvalidParameters : public Error {
public:
    using Error::Error;
};

class BadResidueClass : public Error {
public:
    using Error::Error;
};

class PPViolation : public Error {
public:
    using Error::Error;
};

/// Malformed JSON document or schema mismatch.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace equivelar

#endif // EQUIVELAR_ERROR_HPP
