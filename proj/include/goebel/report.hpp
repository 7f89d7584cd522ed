#pragma once

// Shared verdict/counterexample reporting for the verification routines.

#include <cstdint>
#include <string>
#include <vector>

namespace goebel {

struct Counterexample {
    std::uint32_t k = 0;
    std::uint32_t l = 0;
    std::uint32_t n = 0;
    std::uint64_t p = 0;
    std::string note;  // claim-specific detail, empty when not needed
};

struct VerdictReport {
    std::string claim;
    bool pass = true;
    std::vector<Counterexample> counterexamples;

    void fail(Counterexample c) {
        pass = false;
        counterexamples.push_back(std::move(c));
    }
};

}  // namespace goebel
