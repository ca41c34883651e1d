#pragma once

#include "ppnl/prompts.hpp"

namespace ppnl::detail {

void add_stock_exemplars(ExemplarStore& store);

}  // namespace ppnl::detail
