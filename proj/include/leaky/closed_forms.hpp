#ifndef LEAKY_CLOSED_FORMS_HPP
#define LEAKY_CLOSED_FORMS_HPP

#include <stdexcept>
#include <string>

#include "leaky/families.hpp"
#include "leaky/graph.hpp"

namespace leaky {

// Closed-form result: the value, which formula produced it, which of that
// formula's cases matched, and the constructive witness the case exhibits.
//
// Stable theorem identifiers:
//   tree-low-degree            trees, ell >= 1
//   unicyclic-girth3           unicyclic, girth 3, one leak
//   unicyclic-girth4plus       unicyclic, girth >= 4, one leak
//   unicyclic-two-leaks        unicyclic, two leaks
//   unicyclic-three-plus-leaks unicyclic, ell >= 3
//   path-basic / cycle-basic / complete-basic
//   one-leak-max-family        K_n - e and K_{n-1}+leaf at ell = 1
//   petersen-k1 / petersen-k2-one-leak / petersen-k3-one-leak /
//   petersen-three-plus-leaks
// Case labels are listed next to each classifier in closed_forms.cpp.
struct CaseReport {
    int value = 0;
    std::string theorem;
    std::string case_label;
    int base_count = -1;  // q (leaf count), r (degree<=2 count), or |U|; -1 when n/a
    VertexSet witness;
};

struct NotCovered : std::runtime_error {
    NotCovered(const std::string& what, const std::string& nearest_regime)
        : std::runtime_error(what + "; nearest covered regime: " + nearest_regime),
          nearest(nearest_regime) {}
    std::string nearest;
};

// Z_ell of a tree, ell >= 1: the number of vertices of degree at most ell.
CaseReport tree_value(const Graph& g, int ell);

// Z_1 of a unicyclic graph; girth-3 and girth->=4 case tables.
CaseReport unicyclic_z1(const Graph& g);

// Z_2 of a unicyclic graph.
CaseReport unicyclic_z2(const Graph& g);

// Z_ell of a unicyclic graph for ell >= 3.
CaseReport unicyclic_zl(const Graph& g, int ell);

// Dispatch on ell (1, 2, >= 3); ell = 0 is not covered.
CaseReport unicyclic_value(const Graph& g, int ell);

// Closed forms for named families; throws NotCovered for any (family, ell)
// combination without a published exact value (bounds are never returned).
CaseReport family_value(const FamilySpec& spec, int ell);

// CLI dispatcher for raw graphs: trees and unicyclic graphs only.
CaseReport formula_value(const Graph& g, int ell);

// Single-line JSON with stable field order:
// {"value":..,"theorem":..,"case":..,"base_count":..,"witness":[..]}
// (base_count omitted when not applicable).
std::string case_report_json(const CaseReport& report);

}  // namespace leaky

#endif
