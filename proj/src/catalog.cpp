#include "acl_lab/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace acl_lab {

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries{
        {"no constraints (all countable graphs)", "universal exists", "[Ra]", ""},
        {"single complete graph K_n", "universal exists", "[Ra]; hom-closure oracle", "acl(A)=A"},
        {"odd cycles C_3..C_{2N+1}", "universal exists", "[KMP]; hom-closure oracle", "acl(A)=A"},
        {"single 2-connected non-complete constraint C", "no universal", "[FK1]",
         "alpha <= 4(2k)^{2g}, k=2|V(C)|-1, g=|V(C)|+1"},
        {"complete bipartite K_{m,n}, m<=n", "no universal", "[KP1]", "alpha <= 8m-7"},
        {"single cycle C_nu, nu>=4", "no universal", "[ChK]",
         "alpha <= 4N+1, N=(14^nu-1)/13"},
        {"finite set of cycles (not all-odd case)", "no universal", "[CS2]",
         "alpha <= 4N+1, N=(14^nu-1)/13, nu=max order"},
        {"all cycles up to an even bound", "no universal", "[GK]", "alpha <= 5"},
        {"bushy tree (no degree-2 vertex), >=5 vertices", "no universal", "[CST]",
         "alpha < n; alpha = 1 whenever finite"},
        {"single path P_k", "universal exists", "[KMP]; path-closure oracles",
         "c_k(n)=c_k(1)n, k <= c_k(1) < k^{3k^2}"},
        {"path plus one pendant edge", "universal exists", "[Tallgren, unpublished]", ""},
        {"star S_3 (degree-3 star)", "universal exists", "[Tallgren]; see catalog notes",
         "not categorical; saturated model is largest"},
        {"bow-tie (two triangles at a vertex)", "universal exists", "[Ko]; verify prop1-bowtie",
         "|acl(A)| <= 4|A|"},
        {"bouquets of >=3 complete graphs of constant size", "no universal", "[Ko]",
         "only the bow-tie and single-clique bouquets work"},
        {"any family closed under homomorphic image", "universal exists", "verify homclosed",
         "acl(A)=A"},
        {"joins of odd cycles C_{2m+1}*C_{2n+1}, m<=M, n<=N", "universal exists",
         "hom-closure oracle", "acl(A)=A; wheels when M=0"},
        {"Mycielski substitution family M_n", "universal exists", "verify lemma7",
         "|H(M_n)|=n, chi(M_n)=n+1"},
        {"socketed clique bouquet G*(r,n,m)", "universal exists", "verify prop2",
         "H(G*)={G*,K_{n+1}}, chi(G*)=n+1"},
        {"two triangles plus a path (TTP(n))", "universal exists", "closure star oracle",
         "categorical via the tuned closure operator"},
        {"complete graph plus path K_n+P_k", "universal exists", "catalog notes",
         "components split into clique-free and short-path parts"},
        {"complete graph plus triangle K_n+K_3", "universal exists", "verify lemma12/lemma13",
         "|acl(A)| <= (n+1)|A|"},
        {"two complete graphs of order >=4 at a vertex", "open", "catalog notes", ""},
    };
    return entries;
}

std::vector<CatalogEntry> catalog_lookup(const std::string& filter) {
    auto lower = [](std::string s) {
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        return s;
    };
    std::string f = lower(filter);
    std::vector<CatalogEntry> out;
    for (const CatalogEntry& e : catalog_entries()) {
        if (f.empty() || lower(e.family).find(f) != std::string::npos ||
            lower(e.verdict).find(f) != std::string::npos ||
            lower(e.source).find(f) != std::string::npos ||
            lower(e.bound).find(f) != std::string::npos)
            out.push_back(e);
    }
    return out;
}

}  // namespace acl_lab
