#ifndef SIMBA_ERRORS_HPP
#define SIMBA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace simba {

// Base class for all simulator errors. Subcommands map these to exit code 2
// (config/usage) or propagate them with context.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Attempt to overwrite a stored 1 with 0; the shared film requires a global
// reset before any 1 -> 0 transition.
class WriteWithoutReset : public Error {
public:
    explicit WriteWithoutReset(const std::string& msg) : Error(msg) {}
};

// Compute requested while O1/O2 still hold a previous result.
class DirtyOutputs : public Error {
public:
    explicit DirtyOutputs(const std::string& msg) : Error(msg) {}
};

// Read requested above the configured disturb-safe voltage.
class ReadDisturbRisk : public Error {
public:
    explicit ReadDisturbRisk(const std::string& msg) : Error(msg) {}
};

// A write-class (nucleating) pulse handed to a compute-mode operation.
class NucleatePulseInCompute : public Error {
public:
    explicit NucleatePulseInCompute(const std::string& msg) : Error(msg) {}
};

class OverCapacity : public Error {
public:
    explicit OverCapacity(const std::string& msg) : Error(msg) {}
};

class UninitializedComparator : public Error {
public:
    explicit UninitializedComparator(const std::string& msg) : Error(msg) {}
};

class ShapeMismatch : public Error {
public:
    explicit ShapeMismatch(const std::string& msg) : Error(msg) {}
};

class OddDimensions : public Error {
public:
    explicit OddDimensions(const std::string& msg) : Error(msg) {}
};

class MissingCostEntry : public Error {
public:
    explicit MissingCostEntry(const std::string& msg) : Error(msg) {}
};

class Infeasible : public Error {
public:
    explicit Infeasible(const std::string& msg) : Error(msg) {}
};

class OutOfRange : public Error {
public:
    explicit OutOfRange(const std::string& msg) : Error(msg) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace simba

#endif  // SIMBA_ERRORS_HPP
