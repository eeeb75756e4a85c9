#include "hgkit/budget.hpp"

#include <string>

#include "hgkit/errors.hpp"

namespace hgkit {

void SearchBudget::fail_nodes() const {
  throw LimitExceeded("node budget of " + std::to_string(*max_nodes_) + " exhausted");
}

void SearchBudget::fail_time() const { throw LimitExceeded("time budget exhausted"); }

}  // namespace hgkit
