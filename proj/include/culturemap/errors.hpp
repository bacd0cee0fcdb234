#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace culturemap {

// Base class for all pipeline errors. Subclasses map onto the CLI exit-code
// contract: data/validation -> 1, I/O -> 2, backend -> 3.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class MissingFileError : public IoError {
public:
    explicit MissingFileError(const std::string& path)
        : IoError("file not found: " + path), path_(path) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    explicit ParseError(const std::string& what) : Error(what), line_(0) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<std::string> violations)
        : Error(join(violations)), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& vs) {
        std::string out = "catalog validation failed:";
        for (const auto& v : vs) out += "\n  - " + v;
        return out;
    }
    std::vector<std::string> violations_;
};

class UnknownEntityError : public Error {
public:
    explicit UnknownEntityError(const std::string& name)
        : Error("unknown entity: " + name) {}
};

class DegenerateScaleError : public Error {
public:
    using Error::Error;
};

class OutOfBoundsError : public Error {
public:
    using Error::Error;
};

class MissingLoadingError : public Error {
public:
    using Error::Error;
};

class IncompleteResponsesError : public Error {
public:
    IncompleteResponsesError(const std::string& entity, std::vector<std::string> missing)
        : Error("incomplete responses for " + entity + ": missing " + join(missing)),
          missing_(std::move(missing)) {}
    const std::vector<std::string>& missing_items() const { return missing_; }

private:
    static std::string join(const std::vector<std::string>& vs) {
        std::string out;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) out += ", ";
            out += vs[i];
        }
        return out;
    }
    std::vector<std::string> missing_;
};

// Gateway-side failures.
class BackendError : public Error {
public:
    using Error::Error;
};

class TransportError : public BackendError {
public:
    using BackendError::BackendError;
};

class AuthError : public BackendError {
public:
    using BackendError::BackendError;
};

class FixtureMissError : public BackendError {
public:
    explicit FixtureMissError(const std::string& job_id)
        : BackendError("fixture has no record for job " + job_id), job_id_(job_id) {}
    const std::string& job_id() const { return job_id_; }

private:
    std::string job_id_;
};

class BatchAbortedError : public BackendError {
public:
    BatchAbortedError(std::size_t completed_prefix, const std::string& cause)
        : BackendError("batch aborted after " + std::to_string(completed_prefix) +
                       " completed jobs: " + cause),
          completed_prefix_(completed_prefix) {}
    std::size_t completed_prefix() const { return completed_prefix_; }

private:
    std::size_t completed_prefix_;
};

class EmptyDatasetError : public Error {
public:
    using Error::Error;
};

class NoOverlapError : public Error {
public:
    using Error::Error;
};

class InsufficientRegionsError : public Error {
public:
    using Error::Error;
};

class GeometryError : public Error {
public:
    using Error::Error;
};

class UpstreamMissingError : public IoError {
public:
    using IoError::IoError;
};

class SchemaMismatchError : public Error {
public:
    using Error::Error;
};

}  // namespace culturemap
