#pragma once

#include "qfock/laurent.hpp"
#include "qfock/partition.hpp"

#include <map>

namespace qfock::detail {

// Bar involution of the basis vector |lambda> at charge 0, computed by
// reversing a finite semi-infinite wedge and straightening it back.
std::map<Partition, LaurentPoly> bar_basis(const Partition& lambda, int n);

}  // namespace qfock::detail
