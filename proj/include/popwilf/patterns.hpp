#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "popwilf/core.hpp"

namespace popwilf {

// Row and column index sets of a pattern occurrence, both strictly increasing.
// The full rows x cols grid lies inside the shape; for a Young diagram that is
// equivalent to its bottom-right corner lying inside.
struct OccurrenceWitness {
  std::vector<int> rows;
  std::vector<int> cols;

  friend bool operator==(const OccurrenceWitness&, const OccurrenceWitness&) = default;
};

// The chosen 1-cells of an occurrence, top row first.
using Occurrence = std::vector<Cell>;

// Pattern word read off a set of 1-cells: sort by column, rank the rows.
std::vector<int> word_of_cells(const std::vector<Cell>& cells);

bool is_occurrence(const Transversal& t, const std::vector<Cell>& cells, const Pattern& sigma);
bool matches_pop(const Transversal& t, const std::vector<Cell>& cells, const Pop& p);

// Deterministic witness search (row subsets in lexicographic order).
std::optional<OccurrenceWitness> find_occurrence(const Transversal& t, const Pattern& sigma);

bool occurrence_exists(const Transversal& t, const Pattern& sigma);
bool occurrence_exists(const Transversal& t, const Pop& p);
bool avoids(const Transversal& t, const Pop& p);

// Every occurrence of the POP, in row-subset lexicographic order.
std::vector<Occurrence> all_occurrences(const Transversal& t, const Pop& p);

// Fast containment predicates for the built-in families (k >= 3).
//
// contains_qk: some 1-cell has at least k-1 one-cells strictly above and to
// its left (the corner of such an occurrence is the cell itself, so the shape
// condition is automatic).
//
// contains_pk: some "top" 1-cell has k-2 one-cells strictly below-left and a
// "tail" 1-cell strictly below-right whose column fits the shape at the
// occurrence's lowest row. The k-2 highest below-left cells minimize that
// lowest row, so greedy choice is exact.
bool contains_qk(const Transversal& t, int k);
bool contains_pk(const Transversal& t, int k);

// Number of transversals of the shape avoiding every pattern of the POP
// (resp. every listed pattern). Streams the transversal enumerator.
std::uint64_t count_avoiders(const YoungDiagram& shape, const Pop& p);
std::uint64_t count_avoiders(const YoungDiagram& shape, const std::vector<Pattern>& sigmas);

}  // namespace popwilf
