#pragma once

#include "kcr/exactnum.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace kcr {

struct ResourceExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckRecord {
    std::string id;
    std::string lemma;
    std::string inputs;
    bool pass = true;
    std::string margin;  // fe_summary of the deciding quantity
};

/*
 * Line oriented report.  Passing records are only stored when keep_passing
 * is set; counts are always aggregated per lemma tag.
 */
struct CertificateReport {
    static constexpr int kSchema = 1;

    std::string kind;
    bool verdict = true;
    std::string summary;
    std::vector<CheckRecord> records;
    std::map<std::string, std::pair<size_t, size_t>> counts;  // lemma -> (checks, failures)
    std::map<std::string, std::string> config;
    double seconds = 0;
    bool keep_passing = false;

    void add(CheckRecord r);
    void merge(const CertificateReport& o);
    size_t checks() const;
    size_t failures() const;
};

// Decimal approximation for humans, 12 significant digits.
std::string fe_summary(const FieldElem& a);

std::string write_report(const CertificateReport& r);
CertificateReport parse_report(const std::string& text);

}  // namespace kcr
