#pragma once

#include <stdexcept>
#include <string>

namespace ksc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

/// A hyperedge became empty (disjoint source edge, non-transversal node set).
class EmptyHyperedge : public InvalidArgument {
public:
    explicit EmptyHyperedge(const std::string& what) : InvalidArgument(what) {}
};

/// The graph has an isolated vertex, so no edge cover exists at all.
class NoCoverExists : public InvalidArgument {
public:
    explicit NoCoverExists(const std::string& what) : InvalidArgument(what) {}
};

/// An exhaustive search hit its configured expansion cap before finishing.
class BudgetExceeded : public Error {
public:
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

/// The weighted max-predictability is not defined for KS-colourable scenarios.
class UndefinedBeta : public Error {
public:
    explicit UndefinedBeta(const std::string& what) : Error(what) {}
};

} // namespace ksc
