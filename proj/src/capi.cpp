#include "orientalis/orientalis.h"

#include "orientalis/json_io.hpp"
#include "orientalis/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <sstream>

using namespace orientalis;

struct ori_polygraph {
    std::shared_ptr<const Polygraph> pg;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

ori_status fail(ori_status code, const std::string& message) {
    g_last_error = message;
    return code;
}

template <typename Fn>
ori_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const ParseError& e) {
        return fail(ORI_ERR_PARSE, std::string(e.what()) + " at position " +
                                       std::to_string(e.position));
    } catch (const CellError& e) {
        return fail(ORI_ERR_ARGUMENT, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(ORI_ERR_PARSE, e.what());
    } catch (const std::exception& e) {
        return fail(ORI_ERR_INTERNAL, e.what());
    }
}

nlohmann::json report_to_json(const VerifyReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name},
                          {"passed", c.passed},
                          {"detail", c.detail},
                          {"seconds", c.seconds}});
    return {{"n", report.n},
            {"all_passed", report.all_passed()},
            {"checks", std::move(checks)}};
}

} // namespace

extern "C" {

const char* ori_version(void) { return "0.1.0"; }

const char* ori_last_error(void) { return g_last_error.c_str(); }

void ori_string_free(char* s) { std::free(s); }

void ori_polygraph_free(ori_polygraph* p) { delete p; }

ori_status ori_oriental_create(int n, ori_polygraph** out) {
    return guarded([&]() -> ori_status {
        if (!out || n < 0) return fail(ORI_ERR_ARGUMENT, "need n >= 0 and an output");
        *out = new ori_polygraph{global_tower().oriental(n)};
        return ORI_OK;
    });
}

ori_status ori_polygraph_import_json(const char* json_text, ori_polygraph** out) {
    return guarded([&]() -> ori_status {
        if (!json_text || !out) return fail(ORI_ERR_ARGUMENT, "null argument");
        auto parsed = nlohmann::json::parse(json_text);
        *out = new ori_polygraph{polygraph_from_json(parsed)};
        return ORI_OK;
    });
}

ori_status ori_polygraph_to_json(const ori_polygraph* p, char** out) {
    return guarded([&]() -> ori_status {
        if (!p || !out) return fail(ORI_ERR_ARGUMENT, "null argument");
        *out = dup_string(polygraph_to_json(*p->pg).dump(2));
        return ORI_OK;
    });
}

ori_status ori_polygraph_to_text(const ori_polygraph* p, int unicode, char** out) {
    return guarded([&]() -> ori_status {
        if (!p || !out) return fail(ORI_ERR_ARGUMENT, "null argument");
        *out = dup_string(polygraph_to_text(*p->pg, unicode != 0));
        return ORI_OK;
    });
}

int ori_polygraph_max_dim(const ori_polygraph* p) {
    return p ? p->pg->max_dim() : -1;
}

ori_status ori_polygraph_generator_count(const ori_polygraph* p, int dim,
                                         size_t* out) {
    return guarded([&]() -> ori_status {
        if (!p || !out) return fail(ORI_ERR_ARGUMENT, "null argument");
        *out = dim < 0 ? p->pg->total_generators() : p->pg->generators(dim).size();
        return ORI_OK;
    });
}

ori_status ori_polygraph_validate(const ori_polygraph* p, char** report, int* ok) {
    return guarded([&]() -> ori_status {
        if (!p || !report || !ok) return fail(ORI_ERR_ARGUMENT, "null argument");
        ValidationReport r = validate_full(p->pg);
        *report = dup_string(r.summary());
        *ok = r.ok() ? 1 : 0;
        return ORI_OK;
    });
}

ori_status ori_cell_map(const char* phi_csv, int from_n, int to_n,
                        const char* cell_text, int unicode, char** out) {
    return guarded([&]() -> ori_status {
        if (!phi_csv || !cell_text || !out)
            return fail(ORI_ERR_ARGUMENT, "null argument");
        MonotoneMap phi{from_n, to_n, {}};
        std::stringstream ss(phi_csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty() ||
                item.find_first_not_of("0123456789") != std::string::npos)
                return fail(ORI_ERR_ARGUMENT, "phi entries must be integers");
            phi.image.push_back(std::stoi(item));
        }
        phi.check();
        auto& tower = global_tower();
        Cell cell = parse_cell(cell_text, *tower.oriental(from_n));
        GenMap f = cosimplicial_map(phi, tower);
        *out = dup_string(print_cell(apply(f, cell), unicode != 0));
        return ORI_OK;
    });
}

ori_status ori_cell_eval(const ori_polygraph* p, const char* cell_text, int unicode,
                         int as_json, char** out) {
    return guarded([&]() -> ori_status {
        if (!p || !cell_text || !out) return fail(ORI_ERR_ARGUMENT, "null argument");
        auto ctx = context_for(p->pg);
        Cell cell = parse_cell(cell_text, *p->pg);
        CellTable table;
        try {
            table = ctx->eval(cell);
        } catch (const CellError& e) {
            if (!ctx->strong_steiner()) return fail(ORI_ERR_CONTEXT, e.what());
            throw;
        }
        *out = dup_string(as_json ? table_to_json(table).dump(2)
                                  : table.to_string(unicode != 0));
        return ORI_OK;
    });
}

ori_status ori_cell_cone(int n, const char* cell_text, int unicode, int as_json,
                         char** out) {
    return guarded([&]() -> ori_status {
        if (!cell_text || !out || n < 1)
            return fail(ORI_ERR_ARGUMENT, "cone needs n >= 1 and a cell");
        auto& tower = global_tower();
        auto step = tower.step(n);
        Cell cell = parse_cell(cell_text, step->result());
        Cone cone = expansion_cone(cell, *step);
        if (as_json) {
            *out = dup_string(cone_to_json(cone).dump(2));
            return ORI_OK;
        }
        std::string text = "(";
        for (const auto& c : cone.aux) {
            text += print_cell(c, unicode != 0);
            text += ", ";
        }
        text += print_cell(cone.principal, unicode != 0);
        text += ")";
        *out = dup_string(text);
        return ORI_OK;
    });
}

ori_status ori_simplex_adc(int n, char** out) {
    return guarded([&]() -> ori_status {
        if (!out || n < -1) return fail(ORI_ERR_ARGUMENT, "need n >= -1");
        *out = dup_string(adc_to_json(simplex_adc(n)).dump(2));
        return ORI_OK;
    });
}

ori_status ori_verify(int n, const char* only_csv, int force, int as_json,
                      char** report, int* all_passed) {
    return guarded([&]() -> ori_status {
        if (!report || !all_passed || n < 0)
            return fail(ORI_ERR_ARGUMENT, "need n >= 0 and outputs");
        if (n > 8 && !force)
            return fail(ORI_ERR_ARGUMENT,
                        "verify for n > 8 grows combinatorially; pass force");
        std::vector<std::string> only;
        if (only_csv && *only_csv) {
            std::stringstream ss(only_csv);
            std::string item;
            while (std::getline(ss, item, ',')) {
                bool known = false;
                for (const auto& name : verify_check_names())
                    if (name == item) known = true;
                if (!known)
                    return fail(ORI_ERR_ARGUMENT, "unknown check: " + item);
                only.push_back(item);
            }
        }
        VerifyReport r = run_verify(n, only, global_tower());
        *report = dup_string(as_json ? report_to_json(r).dump(2) : r.to_text());
        *all_passed = r.all_passed() ? 1 : 0;
        return ORI_OK;
    });
}

ori_status ori_verify_polygraph(const ori_polygraph* p, const char* only_csv,
                                int as_json, char** report, int* all_passed) {
    return guarded([&]() -> ori_status {
        if (!p || !report || !all_passed)
            return fail(ORI_ERR_ARGUMENT, "null argument");
        std::vector<std::string> only;
        if (only_csv && *only_csv) {
            std::stringstream ss(only_csv);
            std::string item;
            while (std::getline(ss, item, ','))
                only.push_back(item);
        }
        VerifyReport r = run_verify_static(p->pg, only);
        *report = dup_string(as_json ? report_to_json(r).dump(2) : r.to_text());
        *all_passed = r.all_passed() ? 1 : 0;
        return ORI_OK;
    });
}

} // extern "C"
