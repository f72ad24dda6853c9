#include "spectra/lattices/lattice_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace spectra::lattices {
namespace {

using nlohmann::json;

Rational entry_to_rational(const json& v, const std::string& where) {
    if (v.is_number_integer()) return Rational(Int(v.get<long long>()));
    if (v.is_string()) {
        auto r = parse_rational(v.get<std::string>());
        if (r) return *r;
    }
    throw std::runtime_error("lattice file: " + where + " is not an exact rational");
}

}  // namespace

LatticeBasis read_lattice_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("lattice file: invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::runtime_error("lattice file: field \"n\" missing or not an integer");
    const int n = j["n"].get<int>();
    if (n < 1) throw std::runtime_error("lattice file: field \"n\" must be >= 1");
    if (!j.contains("basis") || !j["basis"].is_array() ||
        static_cast<int>(j["basis"].size()) != n)
        throw std::runtime_error("lattice file: field \"basis\" must be an array of n columns");
    RatMat m(n, n);
    for (int c = 0; c < n; ++c) {
        const json& col = j["basis"][c];
        if (!col.is_array() || static_cast<int>(col.size()) != n)
            throw std::runtime_error("lattice file: basis[" + std::to_string(c) +
                                     "] must be an array of n entries");
        for (int r = 0; r < n; ++r)
            m(r, c) = entry_to_rational(col[r], "basis[" + std::to_string(c) + "][" +
                                                    std::to_string(r) + "]");
    }
    return LatticeBasis::from_matrix(std::move(m));
}

std::string write_lattice_json(const LatticeBasis& b) {
    json j;
    j["n"] = b.n;
    json cols = json::array();
    for (int c = 0; c < b.n; ++c) {
        json col = json::array();
        for (int r = 0; r < b.n; ++r) col.push_back(spectra::to_string(b.columns(r, c)));
        cols.push_back(col);
    }
    j["basis"] = cols;
    return j.dump();
}

std::string certificate_report_json(const CertificateReport& r) {
    json j;
    j["det_p"] = spectra::to_string(r.det_p);
    j["det_q"] = spectra::to_string(r.det_q);
    j["level_p"] = r.level_p.str();
    j["level_q"] = r.level_q.str();
    j["mu0"] = spectra::to_string(r.mu0_value);
    j["t_bound"] = spectra::to_string(r.t_bound);
    json ts = json::array();
    for (const Int& t : r.checked_ts) ts.push_back(t.str());
    j["checked_ts"] = ts;
    j["verdict"] = to_string(r.verdict);
    if (r.first_discrepancy)
        j["first_discrepancy"] = *r.first_discrepancy;
    else
        j["first_discrepancy"] = nullptr;
    return j.dump();
}

}  // namespace spectra::lattices
