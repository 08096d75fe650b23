#ifndef GPEDIM_ERRORS_HPP
#define GPEDIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gpedim {

/// Parameter outside the documented domain of an operation (bad n, k, index, name...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// The operation is well defined but its closed form is not claimed for these parameters.
class UnsupportedRange : public std::out_of_range {
public:
    explicit UnsupportedRange(const std::string& what) : std::out_of_range(what) {}
};

/// An exhaustive search would exceed its documented work budget.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Two routes that must agree (formula vs BFS, table vs brute force) did not.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

} // namespace gpedim

#endif
