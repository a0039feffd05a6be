#pragma once

#include <string>
#include <vector>

namespace qcoinv {

/// One verified identity or relation instance.  lhs/rhs are filled on
/// failure so reports stay small when everything passes.
struct CheckRecord {
    std::string relation;
    std::string witness;
    std::string lhs;
    std::string rhs;
    bool pass = true;
};

struct Report {
    std::string name;
    std::vector<CheckRecord> checks;

    bool pass() const;
    int failed() const;
    void add(std::string relation, std::string witness, bool ok,
             std::string lhs = {}, std::string rhs = {});
    void merge(const Report& other);
    std::string to_json() const;  // JSON list of {relation, witness, lhs, rhs, pass}
};

}  // namespace qcoinv
