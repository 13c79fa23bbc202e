#pragma once

#include <vector>

#include "arcstab/stability.hpp"

namespace arcstab::detail {

WeightedOrders weighted_orders(const std::vector<LaurentSeries>& coords, const std::vector<WeightVector>& weights);

} // namespace arcstab::detail
