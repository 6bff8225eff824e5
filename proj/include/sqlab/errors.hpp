#pragma once

#include <stdexcept>
#include <string>

namespace sqlab {

// Malformed element or word text.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A computation would exceed the configured degree cap.
class DegreeCapExceeded : public std::runtime_error {
public:
    DegreeCapExceeded(int degree, int cap)
        : std::runtime_error("degree " + std::to_string(degree) + " exceeds degree cap " + std::to_string(cap)),
          degree_(degree), cap_(cap) {}
    int degree() const noexcept { return degree_; }
    int cap() const noexcept { return cap_; }

private:
    int degree_;
    int cap_;
};

// The rewriting step budget ran out before reaching a normal form.
class FuelExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sqlab
