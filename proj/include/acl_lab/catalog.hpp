#ifndef ACL_LAB_CATALOG_HPP
#define ACL_LAB_CATALOG_HPP

#include <string>
#include <vector>

namespace acl_lab {

// Display-only table of known universality results and closure-growth
// bounds for forbidden-subgraph families; never consumed by the
// computations.
struct CatalogEntry {
    std::string family;   // constraint family description
    std::string verdict;  // "universal exists" | "no universal" | "open"
    std::string source;   // literature key or the oracle demonstrating it
    std::string bound;    // recorded closure/size bound, if any
};

const std::vector<CatalogEntry>& catalog_entries();

// Case-insensitive substring filter over all fields; empty matches all.
std::vector<CatalogEntry> catalog_lookup(const std::string& filter);

}  // namespace acl_lab

#endif
