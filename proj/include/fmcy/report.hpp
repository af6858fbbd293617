#pragma once

#include <string>
#include <vector>

namespace fmcy {

/// One verified identity. Informational entries record a status that is
/// reported but not gated on (e.g. full-lattice behaviour of an identity
/// stated on a sublattice).
struct IdentityResult {
    std::string name;
    bool pass = false;
    bool informational = false;
    std::string detail;
};

struct Report {
    std::vector<IdentityResult> identities;

    void add(std::string name, bool pass, std::string detail = "") {
        identities.push_back({std::move(name), pass, false, std::move(detail)});
    }
    void add_status(std::string name, bool status, std::string detail = "") {
        identities.push_back({std::move(name), status, true, std::move(detail)});
    }
    bool pass() const {
        for (const auto& id : identities)
            if (!id.informational && !id.pass)
                return false;
        return true;
    }
};

} // namespace fmcy
