#include "acl_lab/caps.hpp"

#include <cstdlib>
#include <sstream>

namespace acl_lab {

static Caps parse_caps_env() {
    Caps c;
    const char* env = std::getenv("ACL_LAB_CAPS");
    if (!env) return c;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string name = item.substr(0, eq);
        int value = std::atoi(item.c_str() + eq + 1);
        if (value <= 0) continue;
        if (name == "code-cap") c.code_cap = value;
        else if (name == "image-cap") c.image_cap = value;
    }
    return c;
}

const Caps& caps() {
    static Caps c = parse_caps_env();
    return c;
}

}  // namespace acl_lab
