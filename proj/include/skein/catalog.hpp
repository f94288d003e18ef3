#pragma once

#include "skein/serialize.hpp"

#include <map>

namespace skein {

/// One named object from the data files: a tangle, braid word, mutation
/// scheme or diagram, together with the checks that certify it.
struct CatalogEntry {
    std::string name;
    std::string kind;  // tangle | braid | scheme | diagram
    std::string note;
    Json object;
    Json expect;  // machine-checked obligations (crossing counts, ...)

    Tangle as_tangle() const;
    BraidWord as_braid() const;
    MutationScheme as_scheme() const;
    OrientedDiagram as_diagram() const;
};

class Catalog {
public:
    /// Load every *.json entry in a directory; validates structural
    /// invariants of each stored object.
    static Catalog load(const std::string& dir);
    /// SKEIN_CATALOG_DIR when set, else the repository data directory.
    static std::string default_dir();

    const CatalogEntry& lookup(const std::string& name) const;
    bool contains(const std::string& name) const { return entries_.count(name) > 0; }
    std::vector<std::string> names() const;

private:
    std::map<std::string, CatalogEntry> entries_;
};

}  // namespace skein
