#include "spectra/lattices/certificate.hpp"

#include <stdexcept>

namespace spectra::lattices {

std::string to_string(Verdict v) {
    return v == Verdict::kIsospectral ? "isospectral" : "not-isospectral";
}

CertificateReport certificate_isospectral(const GramMatrix& p, const GramMatrix& q) {
    if (p.n != q.n) throw std::domain_error("certificate requires forms of equal dimension");
    if (p.n % 2 != 0) throw std::domain_error("certificate requires even dimension 2k");
    if (!is_even(p) || !is_even(q))
        throw std::domain_error("certificate requires even positive definite forms");
    const Int k = p.n / 2;

    CertificateReport report;
    report.det_p = p.entries.determinant();
    report.det_q = q.entries.determinant();
    report.level_p = level(p);
    report.level_q = level(q);
    report.mu0_value = mu0(report.level_p);
    report.t_bound = report.mu0_value * k / 12 + 1;

    const Int t_top = floor_rat(report.t_bound);
    for (Int t = 0; t <= t_top; ++t) report.checked_ts.push_back(t);

    if (report.det_p != report.det_q) {
        report.verdict = Verdict::kNotIsospectral;
        report.first_discrepancy = "determinant";
        return report;
    }
    if (report.level_p != report.level_q) {
        report.verdict = Verdict::kNotIsospectral;
        report.first_discrepancy = "level";
        return report;
    }
    RepresentationTable tp = representation_table(p, t_top);
    RepresentationTable tq = representation_table(q, t_top);
    for (const Int& t : report.checked_ts) {
        if (tp.at(t) != tq.at(t)) {
            report.verdict = Verdict::kNotIsospectral;
            report.first_discrepancy = "R(" + t.str() + ")";
            return report;
        }
    }
    report.verdict = Verdict::kIsospectral;
    return report;
}

}  // namespace spectra::lattices
