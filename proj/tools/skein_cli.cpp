// Batch front-end: compute knot polynomials, compare pairs, build mutant
// diagrams from schemes, and browse the catalog.

#include "skein/catalog.hpp"
#include "skein/hecke.hpp"
#include "skein/serialize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace skein;

namespace {

enum ExitCode { ok = 0, usage = 2, invalid = 3, budget = 4, internal = 5 };

struct CommonOpts {
    std::string engine = "auto";
    double budget_seconds = 0;
    std::uint64_t budget_mem_mb = 0;
    std::string cache_dir;
    int truncation = 12;
    std::string format = "json";
    std::string out;
    int threads = 0;  // 0 = serial reference
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--engine", o.engine, "auto | brute | memo | hecke")
        ->check(CLI::IsMember({"auto", "brute", "memo", "hecke"}));
    cmd->add_option("--budget-seconds", o.budget_seconds, "time budget, 0 = unlimited");
    cmd->add_option("--budget-mem-mb", o.budget_mem_mb, "memo cache budget, 0 = unlimited");
    cmd->add_option("--cache-dir", o.cache_dir,
                    "cache directory (default: $SKEIN_CACHE_DIR, else ~/.cache/skein)");
    cmd->add_option("--truncation", o.truncation, "h-series truncation order")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", o.format, "json | table")
        ->check(CLI::IsMember({"json", "table"}));
    cmd->add_option("--out", o.out, "write the report to a file instead of stdout");
    cmd->add_option("--threads", o.threads, "parallel branch evaluation (0 = serial)");
}

std::string resolve_cache_dir(const CommonOpts& o) {
    if (!o.cache_dir.empty()) return o.cache_dir;
    if (const char* env = std::getenv("SKEIN_CACHE_DIR")) return env;
    if (const char* home = std::getenv("HOME"))
        return std::string(home) + "/.cache/skein";
    return ".skein-cache";
}

EngineKind parse_engine(const std::string& s, bool have_braid) {
    if (s == "brute") return EngineKind::brute;
    if (s == "memo") return EngineKind::memo;
    if (s == "hecke") return EngineKind::hecke;
    return have_braid ? EngineKind::hecke : EngineKind::memo;
}

EngineConfig make_config(const CommonOpts& o, MemoCache& cache) {
    EngineConfig cfg;
    cfg.cache = &cache;
    cfg.truncation = o.truncation;
    cfg.options.budget_seconds = o.budget_seconds;
    cfg.options.max_cache_bytes = o.budget_mem_mb * 1024 * 1024;
    cfg.options.parallel = o.threads != 0;
    return cfg;
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream os(o.out);
        os << text << "\n";
        if (!os) throw std::runtime_error("cannot write " + o.out);
    }
}

struct NamedInput {
    std::string name;
    OrientedDiagram diagram;
    std::optional<BraidWord> braid;
};

NamedInput load_input(const Catalog& cat, const std::string& catalog_name,
                      const std::string& braid_json, const std::string& diagram_file) {
    NamedInput in;
    if (!catalog_name.empty()) {
        const CatalogEntry& e = cat.lookup(catalog_name);
        in.name = catalog_name;
        in.diagram = e.as_diagram();
        if (e.kind == "braid") in.braid = e.as_braid();
        return in;
    }
    if (!braid_json.empty()) {
        in.name = "braid";
        in.braid = braid_from_json(Json::parse(braid_json));
        in.diagram = braid_closure(*in.braid);
        return in;
    }
    if (!diagram_file.empty()) {
        std::ifstream is(diagram_file);
        if (!is) throw diagram_error("cannot read " + diagram_file);
        in.name = diagram_file;
        in.diagram = diagram_from_json(Json::parse(is));
        validate(in.diagram);
        return in;
    }
    throw CLI::ValidationError("give one of --catalog, --braid, --diagram");
}

int cmd_compute(const Catalog& cat, const CommonOpts& o, const std::string& catalog_name,
                const std::string& braid_json, const std::string& diagram_file) {
    NamedInput in = load_input(cat, catalog_name, braid_json, diagram_file);
    MemoCache cache;
    std::string cache_file = resolve_cache_dir(o) + "/cache.bin";
    cache.load(cache_file);
    EngineConfig cfg = make_config(o, cache);
    cfg.engine = parse_engine(o.engine, in.braid.has_value());
    LaurentVZ ambient = compute_homfly(in.diagram, cfg, in.braid);
    int w = writhe(in.diagram);
    LaurentVZ framed = ambient.shifted(-w, 0);
    if (cfg.engine == EngineKind::memo) cache.save(cache_file);

    if (o.format == "table") {
        emit(o, to_lm_table(ambient).render(in.name));
        return ok;
    }
    Json j{{"name", in.name},
           {"writhe", w},
           {"homfly_framed", to_json(framed)},
           {"homfly_ambient", to_json(ambient)},
           {"p0", to_json(p0(ambient))},
           {"jones_v_s2", to_json(ambient.substitute_v_power(2))},
           {"sl3_v_s3", to_json(ambient.substitute_v_power(3))},
           {"lm_table", to_json(to_lm_table(ambient))}};
    emit(o, j.dump(2));
    return ok;
}

int cmd_compare(const Catalog& cat, const CommonOpts& o, const std::string& name_a,
                const std::string& name_b) {
    NamedInput a = load_input(cat, name_a, "", ""), b = load_input(cat, name_b, "", "");
    MemoCache cache;
    std::string cache_file = resolve_cache_dir(o) + "/cache.bin";
    cache.load(cache_file);
    EngineConfig cfg = make_config(o, cache);
    cfg.engine = parse_engine(o.engine, a.braid && b.braid);
    cfg.braid_a = a.braid;
    cfg.braid_b = b.braid;
    ComparisonReport r = compare(a.diagram, b.diagram, cfg, a.name, b.name);
    if (cfg.engine == EngineKind::memo || o.engine == "auto") cache.save(cache_file);
    if (!r.note.empty()) {
        emit(o, to_json(r).dump(2));
        return budget;
    }
    if (o.format == "table") {
        std::string txt = r.lm_a.render(a.name) + "\n" + r.lm_b.render(b.name);
        emit(o, txt);
        return ok;
    }
    emit(o, to_json(r).dump(2));
    return ok;
}

int cmd_mutate(const CommonOpts& o, const std::string& scheme_file,
               const std::string& out_prefix) {
    std::ifstream is(scheme_file);
    if (!is) throw diagram_error("cannot read " + scheme_file);
    MutationScheme s = scheme_from_json(Json::parse(is));
    auto [k1, k2] = mutant_pair(s);
    std::string p1 = out_prefix + ".a.json", p2 = out_prefix + ".b.json";
    std::ofstream(p1) << to_json(k1).dump(2) << "\n";
    std::ofstream(p2) << to_json(k2).dump(2) << "\n";
    std::cout << p1 << "\n" << p2 << "\n";
    (void)o;
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"knot invariant toolkit: framed Homfly engines, mutant pair "
                 "constructions and distinguisher reports"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string catalog_name, braid_json, diagram_file, name_b, scheme_file;
    std::string out_prefix = "mutant";
    std::string show_name;

    CLI::App* compute = app.add_subcommand("compute", "polynomials of one knot");
    add_common(compute, o);
    compute->add_option("--catalog", catalog_name, "catalog entry name");
    compute->add_option("--braid", braid_json, "braid word as JSON");
    compute->add_option("--diagram", diagram_file, "diagram JSON file");

    CLI::App* cmp = app.add_subcommand("compare", "distinguisher battery on a pair");
    add_common(cmp, o);
    cmp->add_option("--catalog", catalog_name, "first catalog entry")->required();
    cmp->add_option("second", name_b, "second catalog entry")->required();

    CLI::App* mut = app.add_subcommand("mutate", "build the mutant pair of a scheme");
    add_common(mut, o);
    mut->add_option("--scheme", scheme_file, "scheme JSON file")->required();
    mut->add_option("--out-prefix", out_prefix, "output file prefix");

    CLI::App* catcmd = app.add_subcommand("catalog", "list or show stored objects");
    CLI::App* list = catcmd->add_subcommand("list", "all entry names");
    CLI::App* show = catcmd->add_subcommand("show", "one entry as JSON");
    show->add_option("name", show_name)->required();
    catcmd->require_subcommand(1);

    CLI::App* cachecmd = app.add_subcommand("cache", "memo cache maintenance");
    add_common(cachecmd, o);
    CLI::App* stats = cachecmd->add_subcommand("stats", "entry count and size");
    CLI::App* clear = cachecmd->add_subcommand("clear", "delete the cache file");
    cachecmd->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        Catalog cat = Catalog::load(Catalog::default_dir());
        if (compute->parsed())
            return cmd_compute(cat, o, catalog_name, braid_json, diagram_file);
        if (cmp->parsed()) return cmd_compare(cat, o, catalog_name, name_b);
        if (mut->parsed()) return cmd_mutate(o, scheme_file, out_prefix);
        if (catcmd->parsed()) {
            if (list->parsed()) {
                for (const auto& n : cat.names()) std::cout << n << "\n";
                return ok;
            }
            if (show->parsed()) {
                const CatalogEntry& e = cat.lookup(show_name);
                Json j{{"name", e.name}, {"kind", e.kind}, {"note", e.note},
                       {"object", e.object}, {"expect", e.expect}};
                std::cout << j.dump(2) << "\n";
                return ok;
            }
        }
        if (cachecmd->parsed()) {
            std::string cache_file = resolve_cache_dir(o) + "/cache.bin";
            if (stats->parsed()) {
                MemoCache cache;
                bool loaded = cache.load(cache_file);
                Json j{{"file", cache_file},
                       {"present", loaded},
                       {"entries", cache.size()},
                       {"approx_bytes", cache.approx_bytes()}};
                std::cout << j.dump(2) << "\n";
                return ok;
            }
            if (clear->parsed()) {
                std::error_code ec;
                std::filesystem::remove(cache_file, ec);
                return ok;
            }
        }
        return usage;
    } catch (const budget_exceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return budget;
    } catch (const diagram_error& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return invalid;
    } catch (const Json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return invalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return internal;
    }
}
