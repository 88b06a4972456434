#pragma once

#include <string>
#include <vector>

namespace ayh {

struct RelationCheck {
    std::string name;
    bool pass;
};

inline bool all_pass(const std::vector<RelationCheck>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

} // namespace ayh
