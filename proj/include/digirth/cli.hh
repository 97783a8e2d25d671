/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef DIGIRTH_GUARD_CLI_HH
#define DIGIRTH_GUARD_CLI_HH 1

#include <ostream>
#include <string>
#include <vector>

namespace digirth
{
    namespace exit_code
    {
        inline constexpr int success = 0;
        inline constexpr int failure = 1;
        inline constexpr int usage = 2;
    }

    /// Runs one digirth invocation; args excludes the program name. Results go to out, diagnostics to err.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
