#include "qcoinv/report.hpp"

#include <json.hpp>

namespace qcoinv {

bool Report::pass() const { return failed() == 0; }

int Report::failed() const {
    int n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

void Report::add(std::string relation, std::string witness, bool ok, std::string lhs, std::string rhs) {
    checks.push_back({std::move(relation), std::move(witness), std::move(lhs), std::move(rhs), ok});
}

void Report::merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string Report::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
        arr.push_back({{"relation", c.relation},
                       {"witness", c.witness},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs},
                       {"pass", c.pass}});
    }
    return arr.dump(2);
}

}  // namespace qcoinv
