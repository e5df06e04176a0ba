#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "popwilf/core.hpp"

namespace popwilf {

// All transversal-admitting shapes with n rows (lambda_1 = n and
// lambda_i >= n+1-i), in lexicographic order. There are Catalan(n) of them.
void for_each_shape(int n, const std::function<void(const YoungDiagram&)>& fn);
std::vector<YoungDiagram> shapes_with_transversals(int n);

// All transversals of the shape via backtracking, cols-sequence lexicographic.
// Throws ShapeHasNoTransversals when the shape admits none.
void for_each_transversal(const YoungDiagram& shape, const std::function<void(const Transversal&)>& fn);
std::vector<Transversal> transversals(const YoungDiagram& shape);
std::uint64_t count_transversals(const YoungDiagram& shape);

struct CensusRow {
  int n = 0;
  std::vector<int> shape;
  std::string pop;
  std::uint64_t count = 0;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

// Census label: "P3"/"Q4" for the built-in families, otherwise the canonical
// POP text with ',' replaced by '|' so the CSV stays unquoted.
std::string pop_census_label(const Pop& p);

// One row per (shape, pop), shapes ordered by n then lexicographically,
// pops in the given order.
void census(int n_max, const std::vector<Pop>& pops, const std::function<void(const CensusRow&)>& sink);

// CSV with header "n,shape,pop,count"; shape rendered "3|3|2". jobs > 1
// distributes shapes over worker threads; output order does not depend on it.
void write_census_csv(int n_max, const std::vector<Pop>& pops, int jobs, std::ostream& out);

}  // namespace popwilf
