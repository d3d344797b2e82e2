#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kudef {

// Malformed expression text or malformed structured input (bad token,
// unbalanced parentheses, truncated JSON). Carries the offset where
// scanning stopped, when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, std::size_t position = npos)
        : std::runtime_error(what), position_(position) {}

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool has_position() const { return position_ != npos; }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Well-formed input denoting an object outside the supported domain
// (sphere, projective plane, rank-0 free group, moduli of a free group).
class SemanticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Numerical kernel failure: precondition residual too large, or an
// iteration exceeded its documented cap.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace kudef
