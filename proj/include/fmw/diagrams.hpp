#pragma once

#include <string>
#include <vector>

#include "fmw/formula.hpp"

namespace fmw {

// Partition of an ordered variable sequence into blocks. Blocks are numbered
// by first occurrence, so block_of() is a restricted growth string.
class VariablePartition {
public:
    VariablePartition(std::vector<std::string> vars, std::vector<int> block_of);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<int>& block_of() const { return block_of_; }
    int block_count() const { return blocks_; }
    int block(const std::string& v) const;  // throws ContractError for a foreign variable
    bool same_block(const std::string& a, const std::string& b) const { return block(a) == block(b); }
    // Variables of each block in sequence order.
    std::vector<std::vector<std::string>> blocks() const;
    // First variable of v's block.
    const std::string& representative(const std::string& v) const;
    // Restriction to a subsequence of the variables.
    VariablePartition restrict_to(const std::vector<std::string>& sub) const;

    // Conjunction over all pairs i<j of rel(v_i,v_j) or its negation.
    Formula render_with(const std::string& relation) const;

    std::string to_string() const;  // e.g. "{v1 v2}{w}"

    bool operator==(const VariablePartition&) const = default;

private:
    std::vector<std::string> vars_;
    std::vector<int> block_of_;
    int blocks_ = 0;
};

class EqualityDiagram : public VariablePartition {
public:
    using VariablePartition::VariablePartition;
    explicit EqualityDiagram(VariablePartition p) : VariablePartition(std::move(p)) {}
    // v_i=v_j / !v_i=v_j for every pair.
    Formula render() const { return render_with("="); }
};

class SDiagram : public VariablePartition {
public:
    using VariablePartition::VariablePartition;
    explicit SDiagram(VariablePartition p) : VariablePartition(std::move(p)) {}
    // s(v_i,v_j) / !s(v_i,v_j) for every pair.
    Formula render() const { return render_with("s"); }
};

// All set partitions of vars, blocks merged first: for (x,y) the order is
// {x y}, {x}{y}. Empty input yields the single empty partition.
std::vector<VariablePartition> set_partitions(const std::vector<std::string>& vars);

// Both throw InputError on an empty or repeated variable list.
std::vector<EqualityDiagram> enumerate_equality_diagrams(const std::vector<std::string>& vars);
std::vector<SDiagram> enumerate_s_diagrams(const std::vector<std::string>& vars);

}  // namespace fmw
