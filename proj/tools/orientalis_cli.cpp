// Command-line driver for the orientalis shared library. Uses the C API only.

#include "orientalis/orientalis.h"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

[[noreturn]] void die(ori_status status) {
    std::cerr << "error: " << ori_last_error() << "\n";
    std::exit(status == ORI_OK ? kExitUsage : kExitUsage);
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { ori_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

struct OwnedPolygraph {
    ori_polygraph* ptr = nullptr;
    ~OwnedPolygraph() { ori_polygraph_free(ptr); }
};

std::string read_stream_or_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream out;
        out << std::cin.rdbuf();
        return out.str();
    }
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(kExitUsage);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string cache_path_for(int n) {
    const char* dir = std::getenv("ORIENTALIS_CACHE_DIR");
    if (!dir || !*dir) return "";
    return std::string(dir) + "/oriental_" + std::to_string(n) + ".json";
}

// Oriental handle, going through the on-disk JSON memo when enabled.
ori_polygraph* load_oriental(int n) {
    std::string cache = cache_path_for(n);
    if (!cache.empty()) {
        std::ifstream in(cache);
        if (in) {
            std::ostringstream text;
            text << in.rdbuf();
            ori_polygraph* p = nullptr;
            if (ori_polygraph_import_json(text.str().c_str(), &p) == ORI_OK)
                return p;
        }
    }
    ori_polygraph* p = nullptr;
    if (auto status = ori_oriental_create(n, &p); status != ORI_OK) die(status);
    if (!cache.empty()) {
        OwnedString json;
        if (ori_polygraph_to_json(p, &json.ptr) == ORI_OK) {
            std::ofstream out(cache);
            out << json.str();
        }
    }
    return p;
}

int cmd_gen(int n, const std::string& import_path, bool json, bool unicode) {
    OwnedPolygraph p;
    if (!import_path.empty()) {
        std::string text = read_stream_or_file(import_path);
        if (auto status = ori_polygraph_import_json(text.c_str(), &p.ptr);
            status != ORI_OK)
            die(status);
    } else {
        p.ptr = load_oriental(n);
    }
    OwnedString out;
    ori_status status = json ? ori_polygraph_to_json(p.ptr, &out.ptr)
                             : ori_polygraph_to_text(p.ptr, unicode, &out.ptr);
    if (status != ORI_OK) die(status);
    std::cout << out.str();
    if (json) std::cout << "\n";
    return 0;
}

int cmd_verify(int n, const std::string& only, bool force, bool json,
               const std::string& import_path) {
    OwnedString report;
    int all_passed = 0;
    if (!import_path.empty()) {
        std::string text = read_stream_or_file(import_path);
        OwnedPolygraph p;
        if (auto status = ori_polygraph_import_json(text.c_str(), &p.ptr);
            status != ORI_OK)
            die(status);
        if (auto status = ori_verify_polygraph(p.ptr, only.c_str(), json ? 1 : 0,
                                               &report.ptr, &all_passed);
            status != ORI_OK)
            die(status);
    } else if (auto status = ori_verify(n, only.c_str(), force ? 1 : 0, json ? 1 : 0,
                                        &report.ptr, &all_passed);
               status != ORI_OK) {
        die(status);
    }
    std::cout << report.str();
    if (json) std::cout << "\n";
    return all_passed ? 0 : kExitVerifyFailure;
}

int cmd_map(const std::string& phi, int from_n, int to_n, const std::string& cell,
            bool unicode) {
    OwnedString out;
    if (auto status =
            ori_cell_map(phi.c_str(), from_n, to_n, cell.c_str(), unicode, &out.ptr);
        status != ORI_OK)
        die(status);
    std::cout << out.str() << "\n";
    return 0;
}

int cmd_eval(int n, const std::string& cell, bool unicode, bool json) {
    OwnedPolygraph p;
    p.ptr = load_oriental(n);
    OwnedString out;
    if (auto status = ori_cell_eval(p.ptr, cell.c_str(), unicode, json, &out.ptr);
        status != ORI_OK)
        die(status);
    std::cout << out.str() << "\n";
    return 0;
}

int cmd_cone(int n, const std::string& cell, bool unicode, bool json) {
    OwnedString out;
    if (auto status = ori_cell_cone(n, cell.c_str(), unicode, json, &out.ptr);
        status != ORI_OK)
        die(status);
    std::cout << out.str() << "\n";
    return 0;
}

int cmd_adc_simplex(int n) {
    OwnedString out;
    if (auto status = ori_simplex_adc(n, &out.ptr); status != ORI_OK) die(status);
    std::cout << out.str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orientalis: orientals as free algebras of the expansion monad"};
    app.require_subcommand(1);

    int gen_n = -1;
    std::string gen_import;
    bool gen_json = false, gen_unicode = false;
    auto* gen = app.add_subcommand("gen", "print or export the oriental O_n");
    gen->add_option("n", gen_n, "oriental index (>= 0)");
    gen->add_option("--import", gen_import, "read a polygraph JSON file ('-' = stdin)");
    gen->add_flag("--json", gen_json, "JSON output");
    gen->add_flag("--unicode", gen_unicode, "unicode angle brackets");
    bool gen_text = false;
    gen->add_flag("--text", gen_text, "text output (default)");

    int verify_n = -1;
    std::string verify_only, verify_import;
    bool verify_force = false, verify_json = false;
    auto* verify = app.add_subcommand("verify", "run the verification pipeline on O_n");
    verify->add_option("n", verify_n, "oriental index (>= 0)");
    verify->add_option("--only", verify_only,
                       "comma-separated subset of checks (atomicity, loop-free, "
                       "lin-boundary, compare, monad-laws, simplicial, oplax, "
                       "chain-homotopy)");
    verify->add_flag("--force", verify_force, "allow n > 8");
    verify->add_flag("--json", verify_json, "JSON report");
    verify->add_option("--import", verify_import,
                       "verify a polygraph JSON file instead ('-' = stdin); runs "
                       "the static checks only");

    std::string map_phi, map_cell;
    int map_from = -2, map_to = -2;
    bool map_unicode = false;
    auto* map = app.add_subcommand("map", "apply a cosimplicial map to a cell");
    map->add_option("--phi", map_phi, "images phi(0),phi(1),... (comma separated)")
        ->required();
    map->add_option("--from", map_from, "source oriental (default: length of phi - 1)");
    map->add_option("--to", map_to, "target oriental (default: max of phi)");
    map->add_option("--cell", map_cell, "cell expression over O_from")->required();
    map->add_flag("--unicode", map_unicode, "unicode angle brackets");

    int eval_n = -1;
    std::string eval_cell;
    bool eval_unicode = false, eval_json = false;
    auto* eval = app.add_subcommand("eval", "Steiner table of a cell of O_n");
    eval->add_option("n", eval_n, "oriental index (>= 0)")->required();
    eval->add_option("--cell", eval_cell, "cell expression")->required();
    eval->add_flag("--unicode", eval_unicode, "unicode angle brackets");
    eval->add_flag("--json", eval_json, "JSON output");

    int cone_n = -1;
    std::string cone_cell;
    bool cone_unicode = false, cone_json = false;
    auto* cone = app.add_subcommand("cone", "expansion cone of a cell of O_n");
    cone->add_option("n", cone_n, "oriental index (>= 1)")->required();
    cone->add_option("--cell", cone_cell, "cell expression")->required();
    cone->add_flag("--unicode", cone_unicode, "unicode angle brackets");
    cone->add_flag("--json", cone_json, "JSON output");

    auto* adc = app.add_subcommand("adc", "augmented directed complexes");
    int adc_n = -1;
    auto* adc_simplex = adc->add_subcommand("simplex", "chain complex of the n-simplex");
    adc_simplex->add_option("n", adc_n, "simplex dimension (>= -1)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    if (gen->parsed()) {
        if (gen_import.empty() && gen_n < 0) {
            std::cerr << "gen: need an index or --import\n";
            return kExitUsage;
        }
        return cmd_gen(gen_n, gen_import, gen_json, gen_unicode);
    }
    if (verify->parsed()) {
        if (verify_import.empty() && verify_n < 0) {
            std::cerr << "verify: need an index or --import\n";
            return kExitUsage;
        }
        return cmd_verify(verify_n, verify_only, verify_force, verify_json,
                          verify_import);
    }
    if (map->parsed()) {
        int commas = 0;
        for (char c : map_phi)
            if (c == ',') ++commas;
        if (map_from == -2) map_from = commas;
        if (map_to == -2) {
            int best = 0;
            std::stringstream ss(map_phi);
            std::string item;
            while (std::getline(ss, item, ','))
                best = std::max(best, std::atoi(item.c_str()));
            map_to = best;
        }
        return cmd_map(map_phi, map_from, map_to, map_cell, map_unicode);
    }
    if (eval->parsed()) return cmd_eval(eval_n, eval_cell, eval_unicode, eval_json);
    if (cone->parsed()) return cmd_cone(cone_n, cone_cell, cone_unicode, cone_json);
    if (adc->parsed()) {
        if (adc_simplex->parsed()) return cmd_adc_simplex(adc_n);
        std::cerr << "adc: unknown subcommand\n";
        return kExitUsage;
    }
    return kExitUsage;
}
