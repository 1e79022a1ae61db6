/*
 * Copyright (c) 2026, the pqforge authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>

#include "pqforge/types.hpp"

namespace pqforge {

/// Resolves row-group boundaries, per-chunk page row limits and
/// trial/gate modes before any data is touched. Pure and deterministic:
/// identical inputs yield identical plans.
RewritePlan derive_plan(const FileReport& report, const RewritePolicy& policy);

/// One-line digest plus per-column detail.
std::string plan_summary(const RewritePlan& plan);

}  // namespace pqforge
