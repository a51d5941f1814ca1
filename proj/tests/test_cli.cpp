#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(CLI_BINARY) + " " + args + " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    if (WIFEXITED(rc)) return WEXITSTATUS(rc);
    return -2;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void write_file(const fs::path& p, const std::string& body) {
    std::ofstream os(p, std::ios::binary);
    os << body;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& name) : path(fs::path("cli_scratch") / name) {
        fs::remove_all(path);
        fs::create_directories(path);
    }
};

} // namespace

TEST_CASE("coeffs writes a deterministic CSV with the documented columns") {
    TempDir dir("coeffs");
    auto out1 = (dir.path / "a").string();
    auto out2 = (dir.path / "b").string();
    REQUIRE(run("--out " + out1 + " --modes 16 coeffs") == 0);
    REQUIRE(run("--out " + out2 + " --modes 16 coeffs") == 0);
    std::string a = slurp(fs::path(out1) / "coefficients.csv");
    std::string b = slurp(fs::path(out2) / "coefficients.csv");
    CHECK(!a.empty());
    CHECK(a == b); // byte-identical across runs

    std::istringstream is(a);
    std::string line;
    std::getline(is, line);
    CHECK(line.rfind("# stringspec 0.1.0 config ", 0) == 0);
    std::getline(is, line);
    CHECK(line == "mode,value,bound,measured_ratio");
    int rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 16);
    CHECK(a.find("\r\n") == std::string::npos); // LF endings
}

TEST_CASE("decompose of the sine mode gives a negligible polynomial part") {
    TempDir dir("decomp");
    write_file(dir.path / "cfg.json",
               R"({"f0": {"name": "sine_mode", "params": [1]}, "order": 1, "out_dir": ")" +
                   (dir.path / "out").string() + R"("})");
    REQUIRE(run("--config " + (dir.path / "cfg.json").string() + " decompose") == 0);
    std::string rep = slurp(dir.path / "out" / "decompose.json");
    CHECK(!rep.empty());
    // every f1 coefficient prints as 0 or a sub-1e-10 value
    CHECK(rep.find("f1_coefficients") != std::string::npos);
    std::size_t pos = rep.find("\"f1_coefficients\": [");
    std::size_t end = rep.find(']', pos);
    std::string nums = rep.substr(pos, end - pos);
    std::istringstream tokens(nums.substr(nums.find('[') + 1));
    std::string tok;
    while (std::getline(tokens, tok, ',')) {
        double v = std::strtod(tok.c_str(), nullptr);
        CHECK(std::fabs(v) <= 1e-10);
    }
}

TEST_CASE("extend reports parity and seam classes") {
    TempDir dir("extend");
    REQUIRE(run("--out " + (dir.path / "out").string() + " extend") == 0);
    std::string rep = slurp(dir.path / "out" / "extend.json");
    CHECK(rep.find("\"parity\": \"odd\"") != std::string::npos);
    CHECK(rep.find("\"seam\": \"origin\"") != std::string::npos);
    CHECK(!slurp(dir.path / "out" / "extension.csv").empty());
}

TEST_CASE("default coeffs table has the documented 128 rows") {
    TempDir dir("coeffs_default");
    auto out = (dir.path / "out").string();
    REQUIRE(run("--out " + out + " coeffs") == 0);
    std::string a = slurp(fs::path(out) / "coefficients.csv");
    int rows = -2; // comment + header
    std::istringstream is(a);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 128);
}

TEST_CASE("solve produces the report and field files") {
    TempDir dir("solve");
    write_file(dir.path / "cfg.json",
               R"({"modes": [3, 9], "eps": [0.1, 0.01], "out_dir": ")" +
                   (dir.path / "out").string() + R"("})");
    REQUIRE(run("--config " + (dir.path / "cfg.json").string() + " solve") == 0);
    std::string rep = slurp(dir.path / "out" / "report.json");
    CHECK(rep.find("\"truncations\"") != std::string::npos);
    CHECK(rep.find("\"endpoint_trace_t0\"") != std::string::npos);
    CHECK(rep.find("\"config_hash\"") != std::string::npos);
    CHECK(rep.find("\"tail_bound_order\"") != std::string::npos);
    std::string field = slurp(dir.path / "out" / "field.csv");
    CHECK(field.find("x,t,value") != std::string::npos);
    std::string modes = slurp(dir.path / "out" / "modes.csv");
    CHECK(modes.find("mode,cos_amp,sin_amp") != std::string::npos);
}

TEST_CASE("invalid configs exit 2") {
    TempDir dir("bad");
    write_file(dir.path / "broken.json", "{ not json ]");
    CHECK(run("--config " + (dir.path / "broken.json").string() + " solve") == 2);

    write_file(dir.path / "unknown.json", R"({"f0": {"name": "wavelet", "params": [1]}})");
    CHECK(run("--config " + (dir.path / "unknown.json").string() + " coeffs") == 2);

    write_file(dir.path / "badmodes.json", R"({"modes": [9, 3]})");
    CHECK(run("--config " + (dir.path / "badmodes.json").string() + " solve") == 2);

    CHECK(run("") == 2); // missing subcommand
}

TEST_CASE("numerical failures exit 3") {
    TempDir dir("numfail");
    // f0 = x does not vanish at the right endpoint; decompose must refuse
    write_file(dir.path / "cfg.json",
               R"({"f0": {"name": "poly", "params": [0, 1]}, "out_dir": ")" +
                   (dir.path / "out").string() + R"("})");
    CHECK(run("--config " + (dir.path / "cfg.json").string() + " decompose") == 3);
}

TEST_CASE("verify exits zero and prints one line per criterion") {
    TempDir dir("verify");
    std::string log = (dir.path / "verify.log").string();
    std::string cmd = std::string(CLI_BINARY) + " --out " + (dir.path / "out").string() +
                      " verify > " + log + " 2>&1";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    CHECK(WEXITSTATUS(rc) == 0);
    std::string body = slurp(log);
    int pass_lines = 0;
    std::istringstream is(body);
    std::string line;
    while (std::getline(is, line))
        if (line.rfind("PASS", 0) == 0 || line.rfind("FAIL", 0) == 0) ++pass_lines;
    CHECK(pass_lines == 11);
    CHECK(body.find("all criteria passed") != std::string::npos);
    CHECK(!slurp(dir.path / "out" / "verify.json").empty());
}
