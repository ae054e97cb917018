/*
  This is common.hpp, part of qlie.
  Distributed under the MIT license; see the LICENSE file.
*/

#ifndef QLIE_COMMON_HPP
#define QLIE_COMMON_HPP

#include <stdexcept>
#include <string>

namespace qlie {

/* Thrown when a caller violates a documented precondition (bad type spec,
   non-reduced word, division by zero, evaluation at a pole, ...). */
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/* Thrown when an internal mathematical contract fails (rank-deficient
   linear solve, dimension mismatch against a classical bound, ...).
   These indicate that a computation cannot be trusted and must abort. */
class MathFault : public std::runtime_error {
 public:
  explicit MathFault(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qlie

#endif
