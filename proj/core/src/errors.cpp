#include "suptor/errors.hpp"

namespace suptor {

NotAUnit::NotAUnit(int valuation)
    : Error("element is not a unit (lambda-adic valuation " + std::to_string(valuation) + ")"),
      valuation_(valuation) {}

ParseError::ParseError(const std::string &what, std::size_t position)
    : Error(what + " at position " + std::to_string(position)), position_(position) {}

} // namespace suptor
