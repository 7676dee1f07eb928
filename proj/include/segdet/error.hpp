#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace segdet {

// Domain-level failure (bad shape, rank deficiency, degenerate input, ...).
// `code` is a stable machine-readable identifier; `detail` carries optional
// structured context (e.g. {"kernel_dim", "3"}).
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message,
                std::map<std::string, std::string> detail = {})
        : std::runtime_error(message), code_(std::move(code)), detail_(std::move(detail)) {}

    const std::string& code() const { return code_; }
    const std::map<std::string, std::string>& detail() const { return detail_; }

private:
    std::string code_;
    std::map<std::string, std::string> detail_;
};

// Input-text failure with position context, used by the file parsers.
class ParseError : public DomainError {
public:
    ParseError(const std::string& message, std::map<std::string, std::string> detail = {})
        : DomainError("parse_error", message, std::move(detail)) {}
};

}  // namespace segdet
