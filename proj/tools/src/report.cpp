#include "report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace bks::app {

namespace {

std::string g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string coords_field(const Coords& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].str();
    return s;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }
Json to_json(const BigRational& r) { return big_str(r); }

Json to_json(const Coords& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

Json to_json(const RationalMatrix& m) {
    Json out = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
        out.push_back(std::move(row));
    }
    return out;
}

Json to_json(std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json to_json(const RunConfig& c) {
    Json out;
    out["group"] = c.has_group() ? Json(std::string(1, c.type_letter) + std::to_string(c.rank)) : Json(nullptr);
    out["k"] = c.k > 0 ? Json(c.k) : Json(nullptr);
    out["conventions"] = {{"haar", to_string(c.conventions.haar)}, {"phase_k", c.conventions.phase_k}};
    out["seed"] = c.seed;
    out["output"] = c.output;
    out["max_weyl"] = c.max_weyl;
    out["trials"] = c.trials;
    out["suite"] = c.suite;
    return out;
}

Json to_json(const PairingResult& p) {
    Json out;
    out["k"] = p.k;
    out["beta"] = to_json(p.beta);
    out["beta_prime"] = to_json(p.beta_prime);
    out["conventions"] = {{"haar", to_string(p.conventions.haar)}, {"phase_k", p.conventions.phase_k}};
    out["n"] = p.n;
    out["r"] = p.r;
    out["m"] = p.m;
    out["kappa_sq"] = to_json(p.kappa_sq);
    out["rho_product"] = to_json(p.rho_product);
    out["product_sq"] = to_json(p.product_sq);
    out["c_gt"] = p.c_gt;
    out["prefactor"] = p.prefactor;
    out["product_term"] = p.product_term;
    Json terms = Json::array();
    for (const auto& t : p.weyl_terms) {
        terms.push_back({{"w", t.word},
                         {"length", t.length},
                         {"norm_sq", t.norm_sq.str()},
                         {"exponent", t.exponent.str()},
                         {"phase", to_json(t.phase)}});
    }
    out["weyl_terms"] = std::move(terms);
    out["weyl_sum"] = to_json(p.weyl_sum);
    out["total"] = to_json(p.total);
    return out;
}

Json to_json(const verify::CheckRecord& c) {
    return {{"suite", c.suite},         {"name", c.name},           {"pass", c.pass},
            {"instances", c.instances}, {"tolerance", c.tolerance}, {"max_deviation", c.max_deviation},
            {"failures", c.failures}};
}

Json make_report(const std::string& command, const RunConfig& config) {
    Json out;
    out["tool"] = "bks";
    out["version"] = kToolVersion;
    out["command"] = command;
    out["config"] = to_json(config);
    return out;
}

std::string report_digest(const Json& report) {
    Json copy = report;
    copy.erase("runtime");
    copy.erase("digest");
    const std::string text = copy.dump();

    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

std::string finalize_report(Json& report) {
    report["digest"] = report_digest(report);
    return report.dump(2) + "\n";
}

std::string pairing_csv(const std::vector<PairingResult>& rows) {
    std::ostringstream os;
    os << "k,beta,beta_prime,haar,phase_k,prefactor,product_term,weyl_sum_re,weyl_sum_im,total_re,total_im\n";
    for (const auto& p : rows) {
        os << p.k << ',' << coords_field(p.beta) << ',' << coords_field(p.beta_prime) << ','
           << to_string(p.conventions.haar) << ',' << (p.conventions.phase_k ? "true" : "false") << ','
           << g17(p.prefactor) << ',' << g17(p.product_term) << ',' << g17(p.weyl_sum.real()) << ','
           << g17(p.weyl_sum.imag()) << ',' << g17(p.total.real()) << ',' << g17(p.total.imag()) << '\n';
    }
    return os.str();
}

}  // namespace bks::app
