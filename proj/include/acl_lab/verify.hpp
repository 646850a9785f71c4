#ifndef ACL_LAB_VERIFY_HPP
#define ACL_LAB_VERIFY_HPP

#include <string>
#include <vector>

#include "json.hpp"

namespace acl_lab {

struct OracleResult {
    std::string name;
    bool pass = false;
    nlohmann::ordered_json details;

    nlohmann::ordered_json to_json() const;
};

// Registered verification oracles, in run order.
std::vector<std::string> oracle_names();

// Runs one oracle; options tune sizes where the oracle supports it
// ("max-order" for the search oracles). Throws on an unknown name.
OracleResult run_oracle(const std::string& name,
                        const nlohmann::ordered_json& options = nlohmann::ordered_json::object());

std::vector<OracleResult> run_all_oracles();

}  // namespace acl_lab

#endif
