#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace bibliolens {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input rejected before any analysis runs. The CLI maps these to exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

class SchemaError : public ValidationError {
public:
    SchemaError(std::string locator, const std::string& what)
        : ValidationError(locator.empty() ? what : locator + ": " + what),
          locator_(std::move(locator)) {}

    const std::string& locator() const noexcept { return locator_; }

private:
    std::string locator_;
};

class DuplicateId : public ValidationError {
public:
    explicit DuplicateId(const std::string& id)
        : ValidationError("duplicate article id '" + id + "'"), id_(id) {}
    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

class YearOutOfRange : public ValidationError {
public:
    YearOutOfRange(const std::string& id, int year, int first, int last)
        : ValidationError("article '" + id + "' year " + std::to_string(year) +
                          " outside " + std::to_string(first) + ".." + std::to_string(last)) {}
};

class NegativeCount : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DuplicateAuthorInArticle : public ValidationError {
public:
    DuplicateAuthorInArticle(const std::string& article_id, const std::string& name)
        : ValidationError("article '" + article_id + "' lists author '" + name + "' twice") {}
};

// A well-formed input that does not satisfy an analysis precondition. Exit code 3.
class AnalysisError : public Error {
public:
    using Error::Error;
};

class MissingBin : public AnalysisError {
public:
    using AnalysisError::AnalysisError;
};

class EmptyCorpus : public AnalysisError {
public:
    EmptyCorpus() : AnalysisError("corpus has no articles") {}
};

class TooFewJournals : public AnalysisError {
public:
    TooFewJournals(std::size_t journals, int zones)
        : AnalysisError(std::to_string(journals) + " journals cannot fill " +
                        std::to_string(zones) + " zones") {}
};

class ZeroDenominator : public AnalysisError {
public:
    using AnalysisError::AnalysisError;
};

class InsufficientYears : public AnalysisError {
public:
    using AnalysisError::AnalysisError;
};

class BadEdges : public AnalysisError {
public:
    using AnalysisError::AnalysisError;
};

class NoAuthors : public AnalysisError {
public:
    explicit NoAuthors(const std::string& article_id)
        : AnalysisError("article '" + article_id + "' has no authors") {}
};

}  // namespace bibliolens
