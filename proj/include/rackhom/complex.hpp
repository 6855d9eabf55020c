#ifndef RACKHOM_COMPLEX_HPP
#define RACKHOM_COMPLEX_HPP

#include <vector>

#include "rackhom/poset.hpp"

namespace rackhom {

/// Order complex of the proper part of a subrack poset: faces are the
/// chains of subracks strictly between the empty set and the full class.
/// Only facets (maximal chains) are stored; lower faces are generated on
/// demand. Every face of a chain is a chain, so closure under subsets is
/// structural.
///
/// The complex with no vertices still contains the empty face; its
/// reduced homology is Z in degree -1, read as the (-1)-sphere. The void
/// complex never arises here.
struct OrderComplex {
  int vertex_count = 0;
  std::vector<int> vertex_poset_index;       // vertex id -> poset index
  std::vector<std::vector<int>> facets;      // sorted vertex lists, lex order

  /// -1 for the empty complex.
  int dimension() const;
  /// f_vector[d] = number of d-faces, d = 0..dimension.
  std::vector<long long> f_vector() const;
  /// All d-faces as sorted vertex lists, lexicographic order.
  std::vector<std::vector<int>> faces(int d) const;
};

OrderComplex order_complex(const SubrackPoset& P);

/// Builds a complex directly from facet lists (used for synthetic
/// complexes and relabeling tests).
OrderComplex complex_from_facets(int vertex_count,
                                 std::vector<std::vector<int>> facets);

struct EulerCharacteristic {
  long long unreduced = 0;  // sum (-1)^i f_i
  long long reduced = 0;    // counts the empty face: unreduced - 1
};

EulerCharacteristic euler_characteristic(const OrderComplex& K);

}  // namespace rackhom

#endif
