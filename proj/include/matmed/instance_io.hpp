// Copyright 2026 The matmed Authors.
// SPDX-License-Identifier: Apache-2.0
//
// JSON instance documents. Rationals are "p/q" strings; facility and client
// sets are id lists.

#ifndef MATMED_INSTANCE_IO_HPP_
#define MATMED_INSTANCE_IO_HPP_

#include <string>
#include <string_view>

#include "matmed/instance.hpp"

namespace matmed {

// Throws ParseError naming the offending key or literal. Zero-demand clients
// are dropped.
MedianInstance parse_instance(std::string_view text);

// Canonical: keys sorted, two-space indent, trailing newline.
std::string serialize_instance(const MedianInstance& instance);

// Removes clients with zero demand together with their distances and penalties.
void drop_zero_demand_clients(MedianInstance& instance);

}  // namespace matmed

#endif  // MATMED_INSTANCE_IO_HPP_
