#include "condorcet/domain.hpp"

#include <algorithm>

#include "condorcet/errors.hpp"

namespace condorcet {

Domain::Domain(AlternativeSet alternatives, std::vector<LinearOrder> orders)
    : alternatives_(std::move(alternatives)), orders_(std::move(orders)) {
  for (const auto& o : orders_)
    if (o.size() != alternatives_.size())
      throw invalid_argument_error("order length " + std::to_string(o.size()) +
                                   " does not match " + std::to_string(alternatives_.size()) +
                                   " alternatives");
  std::sort(orders_.begin(), orders_.end());
  orders_.erase(std::unique(orders_.begin(), orders_.end()), orders_.end());
}

namespace {
AlternativeSet standard_for(const std::vector<LinearOrder>& orders) {
  return AlternativeSet::standard(orders.empty() ? 1 : orders.front().size());
}
}  // namespace

Domain::Domain(std::vector<LinearOrder> orders) : Domain(standard_for(orders), {}) {
  *this = Domain(alternatives_, std::move(orders));
}

bool Domain::contains(const LinearOrder& order) const {
  return std::binary_search(orders_.begin(), orders_.end(), order);
}

Domain Domain::relabeled(AlternativeSet alternatives) const {
  if (alternatives.size() != m()) throw invalid_argument_error("relabel: size mismatch");
  Domain d = *this;
  d.alternatives_ = std::move(alternatives);
  return d;
}

}  // namespace condorcet
