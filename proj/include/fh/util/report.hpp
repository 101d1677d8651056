#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fh {

// Validation outcome: empty means the checked structure is well formed.
struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string message) { violations.push_back(std::move(message)); }
    void merge(const ValidationReport& other)
    {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
    std::string summary() const;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

// Raised when a JSON document does not match the expected schema.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fh
