#ifndef RIESZ_TERMS_HPP
#define RIESZ_TERMS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "riesz/basis.hpp"

// Shell-friendly spellings of basis functions and linear combinations:
//   const | C:3 | S:1,-2,3 | 2.5*C:3 | terms joined by '|'.
namespace riesz {

class TermSyntaxError : public std::invalid_argument {
 public:
  TermSyntaxError(const std::string& message, std::size_t offset)
      : std::invalid_argument(message + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Raw basis function. The index must already satisfy α ≻ 0. `dim` (if
/// positive) fixes the dimension of `const`, default 1.
BasisFunction parse_basis(std::string_view text, Eigen::Index dim = 0);

struct Term {
  double coefficient;
  BasisFunction function;
};

/// Coefficient defaults to 1. Indices are sign-normalized; a flipped 𝒮 index
/// negates its coefficient. Throws TermSyntaxError; mixed dimensions are
/// rejected.
std::vector<Term> parse_terms(std::string_view text);

}  // namespace riesz

#endif  // RIESZ_TERMS_HPP
