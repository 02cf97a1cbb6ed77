#pragma once

#include <stdexcept>
#include <string>

namespace ivif {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual const char* kind() const noexcept { return "error"; }
};

/// A value violates its domain (IVIFN bounds, weight vector, CPT range, ...).
class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "domain_error"; }
};

/// Operands have incompatible shapes or lengths.
class ShapeError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "shape_error"; }
};

/// The problem carries no information for the requested computation
/// (all alternatives identical, zero normalizer, ...).
class DegenerateError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "degenerate_problem"; }
};

/// Malformed input file. `location` names the line or field.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::string location)
        : Error(location.empty() ? what : location + ": " + what),
          message_(what),
          location_(std::move(location)) {}
    const char* kind() const noexcept override { return "parse_error"; }
    const std::string& message() const noexcept { return message_; }
    const std::string& location() const noexcept { return location_; }

private:
    std::string message_;
    std::string location_;
};

/// Wraps an error raised inside one stage of the pipeline.
class PipelineError : public Error {
public:
    PipelineError(std::string stage, const Error& cause)
        : Error(prefixed(stage, cause.what())), stage_(std::move(stage)), cause_kind_(cause.kind()) {}
    const char* kind() const noexcept override { return cause_kind_.c_str(); }
    const std::string& stage() const noexcept { return stage_; }

private:
    // Messages from the method stages already start with the method name.
    static std::string prefixed(const std::string& stage, const std::string& what) {
        return what.rfind(stage + ":", 0) == 0 ? what : stage + ": " + what;
    }

    std::string stage_;
    std::string cause_kind_;
};

}  // namespace ivif
