// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "bks/verify.hpp"
#include "commands.hpp"
#include "report.hpp"

using namespace bks;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void line(int id, const std::string& title, bool pass, const std::string& detail) {
    std::printf("criterion %d [%s] %s: %s\n", id, pass ? "PASS" : "FAIL", title.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string describe(const verify::CheckRecord& c) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%zu instances, max deviation %.3g (tol %.0e), %zu failures", c.instances,
                  c.max_deviation, c.tolerance, c.failures.size());
    return buf;
}

double timed(const std::function<void()>& f) {
    const auto t0 = Clock::now();
    f();
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main() {
    verify::Options o;  // seed 42, 200 trials

    {
        verify::CheckRecord c;
        const double s = timed([&] {
            c = verify::check_weyl_orders(o, {{'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'C', 3},
                                              {'D', 4}, {'G', 2}, {'F', 4}, {'E', 6}});
        });
        line(1, "Weyl orders A1-A4 B2 B3 C3 D4 G2 F4 E6", c.pass && s < 60.0,
             describe(c) + ", " + std::to_string(s) + " s (limit 60 s)");
    }
    {
        const auto c = verify::check_signs(o, 5);
        line(2, "sign identity, every type with |W| <= 1152", c.pass, describe(c));
    }
    {
        std::vector<verify::CheckRecord> checks;
        const double s = timed([&] {
            checks.push_back(verify::check_seq_iso_independence(o));
            checks.push_back(verify::check_scaling(o));
            checks.push_back(verify::check_direct_sum(o));
            checks.push_back(verify::check_phi_routes(o));
            checks.push_back(verify::check_seq_iso_exact(o));
        });
        bool pass = s < 30.0;
        std::string detail;
        for (const auto& c : checks) {
            pass = pass && c.pass && c.tolerance <= 1e-9;
            detail += c.name + " " + (c.pass ? "ok" : "FAILED") + "; ";
        }
        line(3, "density suite, 200 trials per check", pass, detail + std::to_string(s) + " s (limit 30 s)");
    }
    {
        const auto c = verify::check_pfaffians(o, 20, 1e-12);
        line(4, "Pfaffian oracle, rank <= 3", c.pass, describe(c));
    }
    {
        const auto c = verify::check_a1_closed_form(o, 1e-12);
        line(5, "A1 closed form, k = 2..6", c.pass, describe(c));
    }
    {
        const auto c = verify::check_weyl_sum_invariance(o, 'G', 2, 7, 1e-9);
        line(6, "G2 k = 7 Weyl-sum invariance", c.pass, describe(c));
    }
    {
        const auto c = verify::check_admissible_counts(o);
        line(7, "admissible counts against box scan", c.pass, describe(c));
    }
    {
        const auto c = verify::check_typeA(o, 1e-10);
        line(8, "type-A intersection matrices", c.pass, describe(c));
    }
    {
        app::RunConfig config;
        config.seed = 42;
        config.suite = "all";
        std::string d1, d2;
        bool suite_pass = false;
        const double s = timed([&] {
            const auto r1 = app::cmd_verify(config);
            const auto r2 = app::cmd_verify(config);
            d1 = app::report_digest(r1);
            d2 = app::report_digest(r2);
            suite_pass = r1["pass"].get<bool>();
        });
        line(9, "verify --suite all --seed 42 digest determinism", d1 == d2 && suite_pass,
             d1.substr(0, 16) + "... vs " + d2.substr(0, 16) + "..., " + std::to_string(s) + " s");
    }

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
