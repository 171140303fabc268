// Exact character tables (Dixon's modular method, lifted to Q(zeta_e)).
#pragma once

#include <memory>
#include <vector>

#include "wdp/cyclo.hpp"
#include "wdp/group.hpp"

namespace wdp {

class CharTable {
public:
    static CharTable compute(std::shared_ptr<const GroupTable> g);

    const GroupTable& group() const { return *group_; }
    std::shared_ptr<const GroupTable> group_ptr() const { return group_; }
    const ClassPartition& classes() const { return classes_; }

    int order() const { return group_->order(); }
    int num_classes() const { return classes_.count(); }
    int num_irreps() const { return static_cast<int>(rows_.size()); }
    int exponent() const { return group_->exponent(); }
    int degree(int i) const { return degrees_[i]; }
    const std::vector<int>& degrees() const { return degrees_; }
    const Cyclo& value(int i, int c) const { return rows_[i][c]; }
    const std::vector<Cyclo>& row(int i) const { return rows_[i]; }

    int class_size(int c) const { return classes_.size(c); }
    int centralizer_order(int c) const { return order() / classes_.size(c); }
    int class_of(int g) const { return classes_.class_of[g]; }
    int power_class(int c, long k) const;
    int inverse_class(int c) const { return power_class(c, -1); }

    // Prime used for the modular computation (diagnostics only).
    long prime() const { return prime_; }

private:
    std::shared_ptr<const GroupTable> group_;
    ClassPartition classes_;
    std::vector<std::vector<Cyclo>> rows_;
    std::vector<int> degrees_;
    std::vector<std::vector<int>> powmap_;  // [class][k mod exponent]
    long prime_ = 0;
};

}  // namespace wdp
