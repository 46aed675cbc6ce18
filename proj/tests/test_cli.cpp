// Integration tests driving the CLI binary; the path arrives as argv[1].

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

int g_failures = 0;
std::string g_cli;

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunResult run(const std::string& args) {
    RunResult result;
    std::string command = g_cli + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer{};
    std::size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        result.output.append(buffer.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

void check(bool cond, const std::string& what, const RunResult& r) {
    if (!cond) {
        std::cerr << "FAIL: " << what << "\n  exit=" << r.exit_code
                  << "\n  output:\n" << r.output << "\n";
        ++g_failures;
    }
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-cli>\n";
        return 2;
    }
    g_cli = argv[1];

    auto gen2 = run("gen 2");
    check(gen2.exit_code == 0, "gen 2 exits 0", gen2);
    check(contains(gen2.output, "<0,1,2> : <0,2> -> <1,2>*0<0,1>"),
          "gen 2 prints the triangle generator", gen2);

    auto gen0 = run("gen 0");
    check(gen0.exit_code == 0 && gen0.output == "<0>\n", "gen 0 prints <0>", gen0);

    auto gen2u = run("gen 2 --unicode");
    check(contains(gen2u.output, "⟨0,1,2⟩"), "gen 2 --unicode", gen2u);

    // JSON round trip through a pipe.
    auto piped = run("gen 3 --json | " + g_cli + " gen --import - --json");
    auto direct = run("gen 3 --json");
    check(piped.exit_code == 0 && piped.output == direct.output,
          "gen 3 --json | gen --import - round-trips", piped);

    auto verify2 = run("verify 2");
    check(verify2.exit_code == 0, "verify 2 exits 0", verify2);
    check(contains(verify2.output, "all checks passed"), "verify 2 passes", verify2);

    auto verify_only = run("verify 3 --only monad-laws");
    check(verify_only.exit_code == 0, "verify 3 --only monad-laws", verify_only);
    check(contains(verify_only.output, "monad-laws") &&
              !contains(verify_only.output, "atomicity"),
          "--only filters the pipeline", verify_only);

    auto verify_json = run("verify 2 --only compare --json");
    check(verify_json.exit_code == 0 &&
              contains(verify_json.output, "\"all_passed\": true"),
          "verify --json emits a JSON report", verify_json);

    auto big = run("verify 9");
    check(big.exit_code == 2 && contains(big.output, "force"),
          "verify 9 without --force exits 2", big);

    auto usage = run("gen");
    check(usage.exit_code == 2, "gen without arguments exits 2", usage);

    auto badcell = run("eval 2 --cell \"<0,1\"");
    check(badcell.exit_code == 2, "parse error exits 2", badcell);

    auto unknown = run("frobnicate");
    check(unknown.exit_code == 2, "unknown subcommand exits 2", unknown);

    auto mapped = run("map --phi 0,0,1 --cell \"<0,1,2>\"");
    check(mapped.exit_code == 0 && mapped.output == "1_(<0,1>)\n",
          "map --phi 0,0,1 collapses <0,1,2>", mapped);

    auto eval = run("eval 2 --cell \"<1,2>*0<0,1>\"");
    check(eval.exit_code == 0 &&
              eval.output == "0: <0> | <2>\n1: <0,1> + <1,2> | <0,1> + <1,2>\n",
          "eval prints the composed table", eval);

    auto cone = run("cone 2 --cell \"<1,2>\"");
    check(cone.exit_code == 0 && cone.output == "(<0,1>, <0,2>, <0,1,2>)\n",
          "cone prints the chevron sequence", cone);

    auto cone_json = run("cone 2 --cell \"<1,2>\" --json");
    check(cone_json.exit_code == 0 && contains(cone_json.output, "\"principal\""),
          "cone --json emits the schema", cone_json);

    auto adc = run("adc simplex 2");
    check(adc.exit_code == 0 && contains(adc.output, "\"0.1.2\""),
          "adc simplex 2 prints the complex", adc);

    // Determinism: two runs agree byte for byte.
    auto again = run("gen 4 --json");
    auto again2 = run("gen 4 --json");
    check(again.output == again2.output, "gen output is deterministic", again);

    // Corrupted polygraph import: static verification fails with exit 1.
    {
        std::string dir = std::filesystem::temp_directory_path().string();
        std::string path = dir + "/orientalis_corrupt.json";
        std::ofstream out(path);
        out << "{\"dims\": [[\"0\", \"1\"], [\"0.1\"]],"
            << " \"boundaries\": {\"0.1\": {\"src\": \"<1>\", \"tgt\": \"<0>\"}}}";
        out.close();
        auto bad = run("verify --import " + path);
        check(bad.exit_code == 1 && contains(bad.output, "FAIL"),
              "corrupted import fails verification with exit 1", bad);
        std::filesystem::remove(path);

        auto garbled = run("gen --import /nonexistent/file.json");
        check(garbled.exit_code == 2, "missing import file exits 2", garbled);
    }

    // The on-disk oriental cache.
    {
        std::string dir = std::filesystem::temp_directory_path().string() +
                          "/orientalis_cache_test";
        std::filesystem::create_directories(dir);
        std::string prefix = "ORIENTALIS_CACHE_DIR=" + dir + " " + g_cli;
        auto first = run("gen 2 --json");
        RunResult cached;
        {
            std::string command = prefix + " gen 2 --json 2>&1";
            FILE* pipe = popen(command.c_str(), "r");
            std::array<char, 4096> buffer{};
            std::size_t got = 0;
            while (pipe && (got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
                cached.output.append(buffer.data(), got);
            if (pipe) cached.exit_code = WEXITSTATUS(pclose(pipe));
        }
        check(cached.exit_code == 0 && cached.output == first.output,
              "cache miss produces normal output", cached);
        check(std::filesystem::exists(dir + "/oriental_2.json"),
              "cache file is written", cached);
        RunResult warm;
        {
            std::string command = prefix + " gen 2 --json 2>&1";
            FILE* pipe = popen(command.c_str(), "r");
            std::array<char, 4096> buffer{};
            std::size_t got = 0;
            while (pipe && (got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
                warm.output.append(buffer.data(), got);
            if (pipe) warm.exit_code = WEXITSTATUS(pclose(pipe));
        }
        check(warm.exit_code == 0 && warm.output == first.output,
              "cache hit reproduces the output", warm);
        std::filesystem::remove_all(dir);
    }

    if (g_failures == 0) {
        std::cout << "cli: ok\n";
        return 0;
    }
    return 1;
}
