// Copyright 2026 The sconc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SCONC_CATALOG_HPP_
#define SCONC_CATALOG_HPP_

#include <string>
#include <vector>

#include "group.hpp"

namespace sconc {

// Table for <a, x | a^n, x^m = a^t, x a x^-1 = a^r>, element a^i x^j at
// index i + n*j. Requires r^m = 1 and r*t = t mod n.
GroupSpec metacyclic_spec(int n, int m, int r, int t, std::vector<std::string> names = {});
GroupSpec cyclic_spec(int n);
GroupSpec product_spec(const GroupSpec& g, const GroupSpec& h);

// Named models: "Z", "Z/n", "Z2xZ2", "Q8", "D4", "S3", "A4", "Q16", ...
GroupModel named_group(const std::string& name);
bool has_named_group(const std::string& name);
// Every finite table group of order <= 16 shipped for testing.
std::vector<std::string> small_group_names();

}  // namespace sconc

#endif  // SCONC_CATALOG_HPP_
