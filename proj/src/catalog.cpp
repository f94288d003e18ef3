#include "skein/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#ifndef SKEIN_CATALOG_DEFAULT
#define SKEIN_CATALOG_DEFAULT "data/catalog"
#endif

namespace skein {

Tangle CatalogEntry::as_tangle() const {
    if (kind != "tangle") throw std::runtime_error("catalog entry " + name + " is not a tangle");
    return tangle_from_json(object);
}

BraidWord CatalogEntry::as_braid() const {
    if (kind != "braid") throw std::runtime_error("catalog entry " + name + " is not a braid");
    return braid_from_json(object);
}

MutationScheme CatalogEntry::as_scheme() const {
    if (kind != "scheme") throw std::runtime_error("catalog entry " + name + " is not a scheme");
    return scheme_from_json(object);
}

OrientedDiagram CatalogEntry::as_diagram() const {
    if (kind == "diagram") return diagram_from_json(object);
    if (kind == "scheme") return assemble(scheme_from_json(object));
    if (kind == "braid") return braid_closure(braid_from_json(object));
    throw std::runtime_error("catalog entry " + name + " has no diagram form");
}

Catalog Catalog::load(const std::string& dir) {
    namespace fs = std::filesystem;
    Catalog c;
    if (!fs::is_directory(dir))
        throw std::runtime_error("catalog directory not found: " + dir);
    for (const auto& de : fs::directory_iterator(dir)) {
        if (de.path().extension() != ".json") continue;
        std::ifstream is(de.path());
        Json j = Json::parse(is);
        CatalogEntry e;
        e.name = j.at("name").get<std::string>();
        e.kind = j.at("kind").get<std::string>();
        e.note = j.value("note", "");
        e.object = j.at("object");
        e.expect = j.value("expect", Json::object());
        // structural validation at load time
        if (e.kind == "tangle") validate_tangle(e.as_tangle());
        else if (e.kind == "braid") e.as_braid().check();
        else if (e.kind == "scheme") e.as_scheme().check();
        else if (e.kind == "diagram") validate(diagram_from_json(e.object));
        else throw std::runtime_error("catalog entry " + e.name + ": unknown kind " + e.kind);
        if (!c.entries_.emplace(e.name, std::move(e)).second)
            throw std::runtime_error("duplicate catalog name in " + de.path().string());
    }
    return c;
}

std::string Catalog::default_dir() {
    if (const char* env = std::getenv("SKEIN_CATALOG_DIR")) return env;
    return SKEIN_CATALOG_DEFAULT;
}

const CatalogEntry& Catalog::lookup(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw std::runtime_error("unknown catalog name: " + name);
    return it->second;
}

std::vector<std::string> Catalog::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& [k, v] : entries_) out.push_back(k);
    return out;
}

}  // namespace skein
