// Build-time check: every label the classifier can emit has a packet-size rule.
#include <iostream>

#include "wdp/rules.hpp"

int main() {
    try {
        auto missing = wdp::RuleBook::builtin().missing_labels(wdp::classifier_labels());
        for (const auto& l : missing) std::cerr << "no rule for case label " << l << "\n";
        return missing.empty() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
