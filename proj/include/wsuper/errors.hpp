#pragma once

#include <stdexcept>
#include <string>

namespace wsuper {

enum class Errc {
    DivisionByZero,
    PoleAtSpecialization,
    ModeMismatch,
    InvalidIndex,
    ParityError,
    SubspaceNotContained,
    InteriorTooLarge,
    InvalidForS,
    ConstraintViolated,
    ZeroParameter,
    NotInvertibleOnWindow,
    NotInJ,
    ConfigMismatch,
    ParseError,
};

const char* errc_name(Errc c);

class AlgebraError : public std::runtime_error {
public:
    AlgebraError(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw AlgebraError(code, what); }

// Parse failures carry the offset into the input text.
class ParseFailure : public AlgebraError {
public:
    ParseFailure(std::size_t pos, const std::string& what)
        : AlgebraError(Errc::ParseError, "at position " + std::to_string(pos) + ": " + what), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

} // namespace wsuper
