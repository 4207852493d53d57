#ifndef EDGEREG_HOMOLOGY_INTERNAL_HPP
#define EDGEREG_HOMOLOGY_INTERNAL_HPP

#include <vector>

#include "edgereg/homology.hpp"

namespace edgereg::detail {

/// Rows: faces (sorted); columns: faces one smaller (sorted).
SparseMatrix boundary_matrix(const std::vector<VertexSet>& faces, const std::vector<VertexSet>& facets_below);

/// Reduced homology of the complex whose faces are listed by cardinality.
/// An empty list is the void complex. Checks the Euler characteristic.
HomologyRanks homology_from_faces(int ground, const std::vector<std::vector<VertexSet>>& faces, Field field);

}  // namespace edgereg::detail

#endif
