// End-to-end checks of the command line tool: exit codes, JSON-lines output,
// byte-identical reruns, and file exports.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunOut {
    int code = -1;
    std::string out;
};

RunOut run_cli(const std::string& args) {
    std::string cmd = std::string(SC3D_CLI_PATH) + " " + args + " 2>/dev/null";
    RunOut r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return r;
}

int failures = 0;

void expect(bool cond, const std::string& what) {
    if (cond) {
        std::cout << "ok: " << what << "\n";
    } else {
        std::cout << "FAILED: " << what << "\n";
        ++failures;
    }
}

// every stdout line must parse as a JSON object
bool json_lines(const std::string& out, std::size_t min_lines) {
    std::istringstream in(out);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) return false;
        ++n;
    }
    return n >= min_lines;
}

}  // namespace

int main() {
    expect(run_cli("build --d 1").code != 0, "build --d 1 is rejected");
    expect(run_cli("verify --suite bogus").code != 0, "unknown suite is rejected");
    expect(run_cli("verify --d 3 --suite fixture").code != 0,
           "fixture suite needs the distance-2 stack");

    auto counts = run_cli("verify --d 2 --suite counts");
    expect(counts.code == 0, "verify counts exits 0");
    expect(json_lines(counts.out, 1), "verify counts emits JSON lines");
    expect(counts.out.find("\"pass\":true") != std::string::npos, "counts report passes");

    auto all = run_cli("verify --d 2 --suite all");
    expect(all.code == 0, "verify all exits 0");
    expect(json_lines(all.out, 6), "verify all emits one JSON line per suite");

    auto s1 = run_cli("verify --d 2 --suite ccz --samples 64 --seed 7");
    auto s2 = run_cli("verify --d 2 --suite ccz --samples 64 --seed 7");
    expect(s1.code == 0, "sampled ccz exits 0");
    expect(!s1.out.empty() && s1.out == s2.out, "identical command and seed: identical bytes");
    auto s3 = run_cli("verify --d 2 --suite ccz --samples 64 --seed 8 --parallel");
    expect(s3.code == 0, "parallel sampled ccz exits 0");

    auto surgery = run_cli("surgery --d 2 --axis g");
    expect(surgery.code == 0, "surgery exits 0");
    expect(json_lines(surgery.out, 3), "surgery emits merge, split and sheet reports");
    expect(run_cli("surgery --d 2 --axis r").code == 0, "surgery along r");

    auto concat = run_cli("concat --d 2 --max-weight 2");
    expect(concat.code == 0, "concat exits 0");
    expect(json_lines(concat.out, 2), "concat emits code and certificate");

    auto circuits = run_cli("circuits");
    expect(circuits.code == 0, "circuits exits 0");
    expect(json_lines(circuits.out, 5), "circuits emits five reports");

    auto dir = std::filesystem::temp_directory_path() / "sc3d_cli_test";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    auto build = run_cli("build --d 2 --out " + dir.string() + " --format json");
    expect(build.code == 0, "build exits 0");
    expect(std::filesystem::exists(dir / "stack.json"), "build writes stack.json");
    auto build2 = run_cli("build --d 2 --out " + dir.string() + " --format alist");
    expect(build2.code == 0, "alist build exits 0");
    expect(std::filesystem::exists(dir / "sc_r_hx.alist") &&
               std::filesystem::exists(dir / "sc_g_hz.alist"),
           "build writes alist exports");
    std::filesystem::remove_all(dir);

    if (failures) {
        std::cout << failures << " CLI checks failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
