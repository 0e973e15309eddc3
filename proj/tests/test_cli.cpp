#include "walg/report.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace walg;

namespace {

RunConfig config(char type, int rank, const std::string &labels, Mode mode = Mode::Present) {
    RunConfig c;
    c.type = type;
    c.rank = rank;
    c.labels = labels;
    c.mode = mode;
    c.threads = 2;
    return c;
}

int run_cli(const std::string &args, const std::filesystem::path &out) {
    std::filesystem::create_directories(out);
    const std::string cmd = std::string(WALG_CLI) + " " + args + " --out " + out.string() + " -q 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path scratch(const std::string &name) {
    auto p = std::filesystem::temp_directory_path() / ("walg_test_cli_" + std::to_string(::getpid())) / name;
    std::filesystem::remove_all(p);
    return p;
}

std::set<std::string> prime_set(const Json &cert) {
    std::set<std::string> out;
    for (const auto &p : cert["primes"]) out.insert(p["prime"].get<std::string>());
    return out;
}

} // namespace

TEST(Report, SchemaAndRationals) {
    auto c = config('G', 2, "1,0");
    c.gap_signs = true;
    Json j = report_json(run_pipeline(c));
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["input"]["orbit"], "~A1");
    for (const char *key : {"input", "lie_algebra", "triple", "basis", "generators", "relations", "one_dimensional", "denominator"})
        EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["basis"]["r"], 6);
    EXPECT_EQ(j["basis"]["b"], 6);
    EXPECT_EQ(j["basis"]["s"], 1);
    EXPECT_EQ(j["basis"]["s_prime"], 1);
    EXPECT_EQ(j["basis"]["dim"], 14);
    EXPECT_EQ(j["basis"]["rows"].size(), 14u);
    EXPECT_EQ(j["basis"]["rows"][10]["expression"], "-1/2*b7");
    EXPECT_EQ(j["basis"]["rows"][9]["segment"], "z");
    EXPECT_EQ(j["basis"]["rows"][10]["segment"], "z*");
    EXPECT_EQ(j["triple"]["kappa_ef"], (Json{{"num", "24"}, {"den", "1"}}));
    EXPECT_EQ(j["relations"]["computed_pairs"], 15u);
    EXPECT_EQ(j["relations"]["nonzero"].size(), 12u);
    // Theta5 = x5 - 1/4 x10^2
    const auto &t5 = j["generators"][4]["terms"];
    ASSERT_EQ(t5.size(), 2u);
    EXPECT_EQ(t5[1]["exponents"], Json::parse("[[10, 2]]"));
    EXPECT_EQ(t5[1]["coefficient"], (Json{{"num", "-1"}, {"den", "4"}}));
    const auto &od = j["one_dimensional"];
    EXPECT_EQ(od["classification"], "finite");
    EXPECT_EQ(od["count"], 2u);
    EXPECT_EQ(od["I"], Json::parse("[6, 3]"));
    std::set<std::string> t3;
    for (const auto &s : od["solutions"]) {
        EXPECT_EQ(s["6"], (Json{{"num", "-1"}, {"den", "2"}}));
        t3.insert(s["3"]["num"].get<std::string>() + "/" + s["3"]["den"].get<std::string>());
    }
    EXPECT_EQ(t3, (std::set<std::string>{"-9/1", "-21/2"}));
}

TEST(Report, TextDisplay) {
    auto c = config('G', 2, "1,0");
    c.gap_signs = true;
    const std::string text = report_text(run_pipeline(c));
    EXPECT_NE(text.find("Theta5 = x5 - 1/4*x10^2"), std::string::npos);
    EXPECT_NE(text.find("[T4,T5] = T6 + 1/2"), std::string::npos);
    EXPECT_NE(text.find("t3 = -21/2"), std::string::npos);
    EXPECT_NE(text.find("\nd = 6\n"), std::string::npos);
}

TEST(Report, DeterministicAcrossThreadCounts) {
    auto a = config('G', 2, "0,1");
    auto b = a;
    a.threads = 1;
    b.threads = 4;
    const std::string ja = report_json(run_pipeline(a)).dump(2), jb = report_json(run_pipeline(b)).dump(2);
    EXPECT_EQ(ja, jb);
    EXPECT_EQ(ja, report_json(run_pipeline(a)).dump(2));
}

TEST(Certificate, G2Example) {
    auto c = config('G', 2, "1,0");
    Json cert = report_json(run_pipeline(c))["denominator"];
    EXPECT_EQ(cert["d"], "6");
    EXPECT_EQ(prime_set(cert), (std::set<std::string>{"2", "3"}));
    for (const auto &p : cert["primes"]) {
        EXPECT_EQ(p["exponent"], 1);
        EXPECT_FALSE(p["steps"].empty());
    }
}

TEST(Certificate, ZeroOrbitIsBadPrimesOnly) {
    for (auto [t, r, lab] : std::vector<std::tuple<char, int, std::string>>{{'G', 2, "0,0"}, {'A', 2, "0,0"}, {'A', 1, "0"}}) {
        Json cert = report_json(run_pipeline(config(t, r, lab)))["denominator"];
        std::set<std::string> bad;
        for (long p : bad_primes(t, r)) bad.insert(std::to_string(p));
        EXPECT_EQ(prime_set(cert), bad) << t << r;
    }
}

TEST(Certificate, Sl2Principal) {
    Json j = report_json(run_pipeline(config('A', 1, "2")));
    EXPECT_EQ(j["triple"]["kappa_ef"]["num"], "4");
    EXPECT_EQ(prime_set(j["denominator"]), (std::set<std::string>{"2"}));
    EXPECT_EQ(j["one_dimensional"]["classification"], "positive-dimensional");
    EXPECT_FALSE(j["one_dimensional"].contains("count"));
}

TEST(Pipeline, GeneratorsOnlyStopsEarly) {
    Json j = report_json(run_pipeline(config('G', 2, "1,0", Mode::GeneratorsOnly)));
    EXPECT_FALSE(j.contains("relations"));
    EXPECT_FALSE(j.contains("one_dimensional"));
    EXPECT_EQ(j["generators"].size(), 6u);
}

TEST(Pipeline, InputErrors) {
    auto both = config('G', 2, "1,0");
    both.orbit = "A1";
    EXPECT_THROW(run_pipeline(both), InvalidInput);
    EXPECT_THROW(run_pipeline(config('G', 2, "")), InvalidInput);
    EXPECT_THROW(run_pipeline(config('G', 2, "1,0,0")), InvalidInput);
    EXPECT_THROW(run_pipeline(config('G', 2, "2,0")), InvalidInput);
    EXPECT_THROW(run_pipeline(config('G', 2, "a,b")), InvalidInput);
    auto signs = config('F', 4, "1,0,0,0");
    signs.gap_signs = true;
    EXPECT_THROW(run_pipeline(signs), InvalidInput);
    EXPECT_THROW(parse_mode("fast"), InvalidInput);
}

TEST(Catalogue, Lookup) {
    EXPECT_EQ(find_orbit('G', 2, "~A1").labels, (std::vector<int>{1, 0}));
    EXPECT_EQ(find_orbit('G', 2, " A1 ").labels, (std::vector<int>{0, 1}));
    EXPECT_EQ(find_orbit('F', 4, "~A2 + A1").centralizer_dim, 16);
    try {
        find_orbit('G', 2, "G2(a1)");
        FAIL() << "expected InvalidInput";
    } catch (const InvalidInput &e) {
        EXPECT_NE(std::string(e.what()).find("~A1"), std::string::npos);
    }
    EXPECT_THROW(find_orbit('B', 3, "A1"), InvalidInput);
    int extended = 0;
    for (const auto &e : orbit_catalogue())
        if (e.extended_runtime) {
            ++extended;
            EXPECT_TRUE(e.type == 'E');
        }
    EXPECT_EQ(extended, 10);
}

TEST(Binary, WritesReportsAndIsReproducible) {
    auto d1 = scratch("a"), d2 = scratch("b");
    ASSERT_EQ(run_cli("present G 2 --labels 1,0 --gap-signs --threads 1", d1), 0);
    ASSERT_EQ(run_cli("G 2 --orbit ~A1 --mode present --gap-signs --threads 3", d2), 0);
    const std::string j1 = slurp(d1 / "report.json");
    EXPECT_FALSE(j1.empty());
    EXPECT_EQ(j1, slurp(d2 / "report.json"));
    EXPECT_EQ(slurp(d1 / "report.txt"), slurp(d2 / "report.txt"));
    Json j = Json::parse(j1);
    EXPECT_EQ(j["denominator"]["d"], "6");
}

TEST(Binary, ExitCodes) {
    auto d = scratch("codes");
    EXPECT_EQ(run_cli("onedim-fast G 2 --orbit A1", d), 0);
    EXPECT_EQ(Json::parse(slurp(d / "report.json"))["one_dimensional"]["count"], 1);
    EXPECT_EQ(run_cli("present G 2 --labels 2,0", d), 2);
    EXPECT_EQ(run_cli("present G 2 --orbit nonsense", d), 2);
    EXPECT_EQ(run_cli("present Q 2 --labels 1,0", d), 2);
    EXPECT_EQ(run_cli("present G two --labels 1,0", d), 2);
    EXPECT_EQ(run_cli("sideways G 2 --labels 1,0", d), 2);
    EXPECT_EQ(run_cli("present G 2 --labels 1,0 --bogus", d), 2);
    EXPECT_EQ(run_cli("present G 2 --labels 1,0 --solver-degree-bound 1", d), 3);
}
