/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DIGIRTH_GUARD_ERRORS_HH
#define DIGIRTH_GUARD_ERRORS_HH 1

#include <stdexcept>
#include <string>

namespace digirth
{
    class Error : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// Malformed input: bad arcs, bad maps, out-of-range parameters.
    class InvalidArgument : public Error
    {
        public:
            using Error::Error;
    };

    class ParseError : public Error
    {
        public:
            using Error::Error;
    };

    /// A configured size cap (automorphism brute force, solver, chi_c search) was exceeded.
    class LimitExceeded : public Error
    {
        public:
            using Error::Error;
    };

    /// The inputs violate a mathematical precondition of the operation.
    class PreconditionFailed : public Error
    {
        public:
            using Error::Error;
    };
}

#endif
