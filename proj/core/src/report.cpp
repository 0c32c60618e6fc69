#include "kcr/report.hpp"

#include <cstdio>
#include <sstream>

namespace kcr {

void CertificateReport::add(CheckRecord r) {
    auto& c = counts[r.lemma];
    ++c.first;
    if (!r.pass) {
        ++c.second;
        verdict = false;
    }
    if (!r.pass || keep_passing) records.push_back(std::move(r));
}

void CertificateReport::merge(const CertificateReport& o) {
    for (const auto& [k, v] : o.counts) {
        counts[k].first += v.first;
        counts[k].second += v.second;
    }
    records.insert(records.end(), o.records.begin(), o.records.end());
    verdict = verdict && o.verdict;
    seconds += o.seconds;
}

size_t CertificateReport::checks() const {
    size_t s = 0;
    for (const auto& [k, v] : counts) s += v.first;
    return s;
}

size_t CertificateReport::failures() const {
    size_t s = 0;
    for (const auto& [k, v] : counts) s += v.second;
    return s;
}

std::string fe_summary(const FieldElem& a) {
    if (a.is_zero()) return "0";
    // Cancellation between slots can be deep, so sum at a generous precision.
    const mp_bitcnt_t prec = 16384;
    mpf_class s(0, prec), t(0, prec);
    for (int k = 0; k < FieldElem::kDim; ++k) {
        if (!(a.mask() >> k & 1)) continue;
        mpf_class q(a.coeff(k), prec);
        mpf_class r(FieldElem::kRadicand[k], prec);
        t = sqrt(r);
        s += q * t;
    }
    char buf[64];
    gmp_snprintf(buf, sizeof buf, "%.11Fe", s.get_mpf_t());
    return buf;
}

namespace {

std::string rest(std::istringstream& in) {
    std::string r;
    std::getline(in, r);
    if (!r.empty() && r[0] == ' ') r.erase(0, 1);
    return r;
}

}  // namespace

std::string write_report(const CertificateReport& r) {
    std::ostringstream o;
    o << "kcr-report " << CertificateReport::kSchema << "\n";
    o << "kind " << r.kind << "\n";
    o << "verdict " << (r.verdict ? "pass" : "fail") << "\n";
    o << "summary " << r.summary << "\n";
    o << "seconds " << r.seconds << "\n";
    for (const auto& [k, v] : r.config) o << "config " << k << " " << v << "\n";
    for (const auto& [k, v] : r.counts) o << "count " << k << " " << v.first << " " << v.second << "\n";
    for (const auto& c : r.records)
        o << "record " << (c.pass ? "pass" : "fail") << " " << c.id << " " << c.lemma << " " << c.margin << " "
          << c.inputs << "\n";
    o << "end\n";
    return o.str();
}

CertificateReport parse_report(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    CertificateReport r;
    if (!std::getline(in, line) || line.rfind("kcr-report ", 0) != 0)
        throw std::invalid_argument("not a report");
    while (std::getline(in, line)) {
        std::istringstream l(line);
        std::string key;
        l >> key;
        if (key == "end") break;
        if (key == "kind") l >> r.kind;
        else if (key == "verdict") {
            std::string v;
            l >> v;
            r.verdict = v == "pass";
        } else if (key == "summary") r.summary = rest(l);
        else if (key == "seconds") l >> r.seconds;
        else if (key == "config") {
            std::string k;
            l >> k;
            r.config[k] = rest(l);
        } else if (key == "count") {
            std::string k;
            size_t a, b;
            l >> k >> a >> b;
            r.counts[k] = {a, b};
        } else if (key == "record") {
            CheckRecord c;
            std::string p;
            l >> p >> c.id >> c.lemma >> c.margin;
            c.pass = p == "pass";
            c.inputs = rest(l);
            r.records.push_back(c);
        } else {
            throw std::invalid_argument("bad report line: " + line);
        }
    }
    return r;
}

}  // namespace kcr
