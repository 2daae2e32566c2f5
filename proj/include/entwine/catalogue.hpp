#pragma once

#include <map>
#include <string>
#include <vector>

#include "entwine/document.hpp"

namespace entwine {

using Params = std::map<std::string, std::string>;

/// Names accepted by build().
const std::vector<std::string>& example_names();

/// Builds a validated example. Common parameters: field=Q|GF(p) and, for
/// group-based examples, group=Z2|Z3|Z4|S3 or table="0 1;1 0" (rows of a
/// Cayley table, identity anywhere). Throws UnknownExample or BadParams.
Document build_example(const std::string& name, const Params& params = {});

/// Cayley table for Z2, Z3, Z4 or S3, with element names. S3 is ordered
/// e, (01), (02), (12), (012), (021) under (st)(x) = s(t(x)).
struct GroupTable {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;

  std::size_t order() const { return table.size(); }
  std::size_t inverse(std::size_t g) const;
};

/// Throws BadParams for an unknown name or a table that is not a group.
GroupTable group_table(const std::string& spec);

/// k[G] with group-likes g and antipode g -> g^-1.
HopfAlgebra group_hopf_algebra(const Field& f, const GroupTable& g);
/// k^G: pointwise product on delta functions, Delta(p_x) = sum_{yz=x} p_y (x) p_z.
HopfAlgebra dual_group_hopf_algebra(const Field& f, const GroupTable& g);
/// span{g - gh : g in G, h in H}; k[G]/I = k[G/H]. Throws BadParams unless
/// h is a subgroup.
Subspace coset_coideal(const Field& f, const GroupTable& g, const std::vector<std::size_t>& h);

}  // namespace entwine
