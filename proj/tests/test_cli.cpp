#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "commands.hpp"
#include "report.hpp"

using namespace bks::app;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args, const std::optional<std::string>& env = std::nullopt) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err, env);
    return {code, out.str(), err.str()};
}

Json parse(const Run& r) { return Json::parse(r.out); }

fs::path scratch_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("bks-cli-" + name + "-" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST(Cli, RootsysInfoG2) {
    const auto r = run({"rootsys", "info", "--type", "G", "--rank", "2"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const Json j = parse(r);
    EXPECT_EQ(j["results"]["group"], "G2");
    EXPECT_EQ(j["results"]["m"], 6);
    EXPECT_EQ(j["results"]["positive_roots"].size(), 6u);
    EXPECT_EQ(j["digest"], report_digest(j));
}

TEST(Cli, ValidationErrors) {
    EXPECT_EQ(run({"rootsys", "info", "--type", "Z", "--rank", "9"}).code, kExitValidation);
    EXPECT_EQ(run({"rootsys", "info", "--type", "D", "--rank", "3"}).code, kExitValidation);
    EXPECT_EQ(run({"rootsys", "info"}).code, kExitValidation);
    EXPECT_EQ(run({"verify", "--trials", "0"}).code, kExitValidation);
    EXPECT_EQ(run({"verify", "--suite", "everything"}).code, kExitValidation);
    EXPECT_EQ(run({"pairing", "--type", "A", "--rank", "1", "--k", "2", "--beta", "0"}).code, kExitValidation);
    EXPECT_EQ(run({"pairing", "--type", "A", "--rank", "1", "--k", "2", "--beta", "1/5"}).code, kExitValidation);
    EXPECT_EQ(run({"pairing", "--type", "A", "--rank", "1", "--k", "0", "--beta", "1/4"}).code, kExitValidation);
    EXPECT_EQ(run({"weyl", "enumerate", "--type", "A", "--rank", "2", "--output", "csv"}).code, kExitValidation);
    EXPECT_EQ(run({"frobnicate"}).code, kExitValidation);
    const auto bad = run({"rootsys", "info", "--type", "Z", "--rank", "9"});
    EXPECT_NE(bad.err.find("valid"), std::string::npos);
}

TEST(Cli, ResourceCap) {
    const auto r = run({"weyl", "enumerate", "--type", "E", "--rank", "6", "--max-weyl", "1000"});
    EXPECT_EQ(r.code, kExitResourceCap);
    EXPECT_NE(r.err.find("1000"), std::string::npos) << r.err;
}

TEST(Cli, WeylEnumerateHistogram) {
    const auto r = run({"weyl", "enumerate", "--type", "B", "--rank", "3"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const Json j = parse(r);
    EXPECT_EQ(j["results"]["order"], 48);
    EXPECT_EQ(j["results"]["longest_length"], 9);
    EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Cli, CacheIsByteStableAndReused) {
    const fs::path dir = scratch_dir("cache");
    const auto first = run({"weyl", "enumerate", "--type", "D", "--rank", "4", "--cache-dir", dir.string()});
    ASSERT_EQ(first.code, kExitOk) << first.err;
    EXPECT_FALSE(parse(first)["runtime"]["weyl_from_cache"].get<bool>());
    const fs::path file = parse(first)["runtime"]["cache_file"].get<std::string>();
    const std::string bytes = slurp(file);
    ASSERT_FALSE(bytes.empty());

    const auto second = run({"weyl", "enumerate", "--type", "D", "--rank", "4", "--cache-dir", dir.string()});
    EXPECT_TRUE(parse(second)["runtime"]["weyl_from_cache"].get<bool>());
    EXPECT_EQ(parse(first)["digest"], parse(second)["digest"]);

    fs::remove(file);
    run({"weyl", "enumerate", "--type", "D", "--rank", "4", "--cache-dir", dir.string()});
    EXPECT_EQ(slurp(file), bytes);
    fs::remove_all(dir);
}

TEST(Cli, EnvironmentCacheDirAndPrecedence) {
    const fs::path env_dir = scratch_dir("env");
    const fs::path flag_dir = scratch_dir("flag");
    const auto a = run({"weyl", "enumerate", "--type", "A", "--rank", "3"}, env_dir.string());
    ASSERT_EQ(a.code, kExitOk);
    EXPECT_EQ(fs::path(parse(a)["runtime"]["cache_file"].get<std::string>()).parent_path(), env_dir);

    const auto b = run({"weyl", "enumerate", "--type", "A", "--rank", "3", "--cache-dir", flag_dir.string()},
                       env_dir.string());
    EXPECT_EQ(fs::path(parse(b)["runtime"]["cache_file"].get<std::string>()).parent_path(), flag_dir);

    const fs::path cfg = env_dir / "run.conf";
    std::ofstream(cfg) << "# settings\ntype = A\nrank = 2\nk = 5\nhaar = unit-lattice\n";
    const auto c = run({"pairing", "--config", cfg.string(), "--weight", "1,1", "--haar", "probability"});
    ASSERT_EQ(c.code, kExitOk) << c.err;
    const Json jc = parse(c);
    EXPECT_EQ(jc["config"]["group"], "A2");
    EXPECT_EQ(jc["config"]["conventions"]["haar"], "probability");
    const auto d = run({"pairing", "--config", cfg.string(), "--weight", "1,1"});
    EXPECT_EQ(parse(d)["config"]["conventions"]["haar"], "unit-lattice");

    std::ofstream(cfg) << "colour = blue\n";
    EXPECT_EQ(run({"rootsys", "info", "--config", cfg.string(), "--type", "A", "--rank", "1"}).code, kExitValidation);
    fs::remove_all(env_dir);
    fs::remove_all(flag_dir);
}

TEST(Cli, PairingTableRowCount) {
    const auto r = run({"pairing", "--type", "A", "--rank", "2", "--k", "5", "--table"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const Json j = parse(r);
    // (k-1)(k-2)/2 = 6 admissible points.
    EXPECT_EQ(j["results"]["row_count"], 36);
    EXPECT_EQ(j["results"]["rows"].size(), 36u);

    const auto csv = run({"pairing", "--type", "A", "--rank", "2", "--k", "5", "--table", "--output", "csv"});
    ASSERT_EQ(csv.code, kExitOk);
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 37);
    EXPECT_EQ(csv.out.rfind("k,beta,beta_prime", 0), 0u);
}

TEST(Cli, PairingPointForms) {
    const auto by_beta = run({"pairing", "--type", "A", "--rank", "1", "--k", "4", "--beta", "1/8", "--beta-prime", "3/8"});
    const auto by_weight = run({"pairing", "--type", "A", "--rank", "1", "--k", "4", "--weight", "1", "--weight-prime", "3"});
    ASSERT_EQ(by_beta.code, kExitOk) << by_beta.err;
    ASSERT_EQ(by_weight.code, kExitOk) << by_weight.err;
    EXPECT_EQ(parse(by_beta)["results"], parse(by_weight)["results"]);
    EXPECT_EQ(run({"pairing", "--type", "A", "--rank", "1", "--k", "4", "--beta", "1/8", "--weight", "1"}).code,
              kExitValidation);
}

TEST(Cli, PhaseKChangesExponents) {
    const std::vector<std::string> base{"pairing", "--type", "A", "--rank", "2", "--k", "5", "--weight", "1,2", "--weight-prime", "2,1"};
    auto with_k = base;
    with_k.push_back("--phase-k");
    const Json a = parse(run(base)), b = parse(run(with_k));
    EXPECT_FALSE(a["config"]["conventions"]["phase_k"].get<bool>());
    EXPECT_TRUE(b["config"]["conventions"]["phase_k"].get<bool>());
    EXPECT_NE(a["results"]["rows"][0]["weyl_terms"], b["results"]["rows"][0]["weyl_terms"]);
    EXPECT_NE(a["digest"], b["digest"]);
}

TEST(Cli, DigestIgnoresRuntime) {
    const std::vector<std::string> args{"verify", "--suite", "signs", "--seed", "7", "--trials", "5"};
    const auto a = run(args), b = run(args);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(parse(a)["digest"], parse(b)["digest"]);
    Json j = parse(a);
    j["runtime"]["wall_seconds"] = 1234.5;
    EXPECT_EQ(report_digest(j), parse(a)["digest"]);
    const auto c = run({"verify", "--suite", "signs", "--seed", "8", "--trials", "5"});
    EXPECT_NE(parse(c)["config"]["seed"], parse(a)["config"]["seed"]);
}

TEST(Cli, VersionAndHelp) {
    EXPECT_EQ(run({"--version"}).out, std::string(kToolVersion) + "\n");
    const auto h = run({"--help"});
    EXPECT_EQ(h.code, kExitOk);
    EXPECT_NE(h.out.find("pairing"), std::string::npos);
}
