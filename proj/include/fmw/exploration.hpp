#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fmw/formula.hpp"
#include "fmw/product.hpp"
#include "fmw/structure.hpp"

namespace fmw {

// Finite stage of the symmetric, irreflexive, disjointly colored n-hypergraphs
// over R_1..R_c. complete: every n-set carries exactly one color, otherwise at
// most one.
struct HypergraphSpec {
    int arity = 2;
    int colors = 1;
    int size = 1;
    bool complete = false;
    std::uint64_t seed = 0;

    void validate() const;  // InputError
    Signature signature() const;
    static std::string color_symbol(int i) { return "R_" + std::to_string(i); }  // i in 1..colors
};

Structure gen_colored_hypergraph(const HypergraphSpec& spec);

struct AxiomVerdict {
    bool holds = true;
    std::string axiom;          // irreflexivity, symmetry, disjointness, completeness
    std::string symbol;         // offending symbol, when there is one
    std::vector<int> tuple;
};

// Checks every axiom in a fixed order and reports the first violation.
// InputError when the signature is not R_1..R_c of the given arity.
AxiomVerdict check_class_axioms(const Structure& m, const HypergraphSpec& spec);

enum class ExtensionProperty { with_none, colors_only };

// A demanded one-point extension: for each (n-1)-subset Y of X, the color of
// Y plus the witness (0 = no color).
struct ExtensionDemand {
    std::vector<int> x;
    std::vector<std::pair<std::vector<int>, int>> colors;
};

struct ExtensionVerdict {
    bool holds = true;
    std::optional<ExtensionDemand> unmet;
    std::size_t checked = 0;
};

inline constexpr std::size_t kDefaultDemandCap = 1000000;

// Every demand over every X of size <= x_size has a witness outside X.
ExtensionVerdict check_extension_property(const Structure& m, const HypergraphSpec& spec, int x_size,
                                          ExtensionProperty property, std::size_t cap = kDefaultDemandCap);

// First element outside d.x meeting the demand.
std::optional<int> find_extension_witness(const Structure& m, const HypergraphSpec& spec, const ExtensionDemand& d);

// Starts from gen_colored_hypergraph(spec) and adds one witness vertex per
// unmet demand until the extension property holds. ResourceError beyond max_size.
Structure build_extension_stage(const HypergraphSpec& spec, int x_size, ExtensionProperty property, int max_size);

struct Coloring {
    Structure structure;
    std::vector<std::string> colors;  // by element index
    std::vector<std::string> palette{"red", "blue"};

    const std::string& color_of(int e) const { return colors[static_cast<std::size_t>(e)]; }
    std::vector<int> class_of(const std::string& color) const;
    // InputError unless every element has a palette color.
    void validate() const;
};

Coloring uniform_coloring(const Structure& m, const std::string& color = "red");

// Blue where phi holds, red elsewhere. ContractError unless phi has one free variable.
Coloring color_by_formula(const Structure& m, const Formula& phi);

// Orbit index of each element under the automorphism group.
std::vector<int> orbit_rank(const Structure& n);

// (x_i|b) is red iff rank(b) <= i, where x_i is the i-th base element of
// base_order. InputError when rank or order is not total.
Coloring staircase_coloring(const ProductStructure& p, const std::vector<int>& fiber_rank,
                            const std::vector<int>& base_order);

inline constexpr int kDefaultSearchCap = 12;

enum class SearchMode { serial, parallel };

struct MonochromaticOptions {
    bool require_symmetric = false;
    std::optional<int> require_k_elementary;
    int tuple_bound = 2;
    int cap = kDefaultSearchCap;
    SearchMode mode = SearchMode::parallel;
    std::optional<std::string> only_color;
};

struct MonochromaticResult {
    std::optional<std::vector<int>> witness;  // element indices, ascending
    std::optional<std::string> color;
    std::vector<std::pair<std::string, std::size_t>> examined;  // per color searched
};

// Induced copies of target inside one color class, subsets in lexicographic
// order, colors in palette order. ResourceError when |M| exceeds the cap.
MonochromaticResult find_monochromatic_copy(const Coloring& c, const Structure& target,
                                            const MonochromaticOptions& options = {});

struct AssemblyResult {
    bool success = false;
    std::string failing_stage;                  // "fiber <a>" or "base"
    std::vector<std::vector<int>> fiber_pieces;  // fiber indices per base element (found so far)
    std::vector<std::string> base_colors;        // induced coloring of the base
    std::vector<int> base_piece;
    std::vector<int> assembled;                  // product element indices, ascending
    std::optional<StructureMap> f_map;           // base_target[fiber_target] -> assembled
    std::string color;
};

// Monochromatic fiber pieces induce a base coloring; a monochromatic base
// piece then assembles into a copy of base_target[fiber_target], verified
// through check_isomorphism. PreconditionError unless fibers are constant.
AssemblyResult product_of_monochromatic_pieces(const ProductStructure& p, const Coloring& c,
                                               const Structure& fiber_target, const Structure& base_target,
                                               int cap = kDefaultSearchCap);

struct OrbitCensus {
    std::vector<std::vector<int>> orbits;
    std::vector<int> fiber_class;                   // base index -> fiber isomorphism class
    std::vector<std::map<int, int>> classes_touched;  // per orbit: class -> element count
    bool consistent = true;  // no orbit meets two fiber classes
    bool transitive() const { return orbits.size() == 1; }
};

OrbitCensus orbit_census(const ProductStructure& p, int cap = kDefaultSearchCap);

}  // namespace fmw
