#ifndef ACL_LAB_CAPS_HPP
#define ACL_LAB_CAPS_HPP

#include <stdexcept>
#include <string>

namespace acl_lab {

// Thrown when a computation exceeds a named resource cap.
class cap_error : public std::runtime_error {
public:
    cap_error(const std::string& cap_name, const std::string& detail)
        : std::runtime_error(cap_name + " exceeded: " + detail), cap_(cap_name) {}
    const std::string& cap_name() const { return cap_; }

private:
    std::string cap_;
};

// Resource caps. Defaults may be overridden with the ACL_LAB_CAPS
// environment variable, format "name=value,name=value", e.g.
// ACL_LAB_CAPS="code-cap=14,image-cap=11".
struct Caps {
    int code_cap = 12;   // max order for canonical codes
    int image_cap = 10;  // max order for homomorphic-image enumeration
};

const Caps& caps();

}  // namespace acl_lab

#endif
