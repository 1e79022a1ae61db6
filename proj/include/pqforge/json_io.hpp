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

#include <json.hpp>

#include "pqforge/inspector.hpp"
#include "pqforge/rewriter.hpp"
#include "pqforge/types.hpp"
#include "pqforge/verifier_bench.hpp"

namespace pqforge {

// JSON renderings are the compatibility contract: lower_snake_case keys,
// alphabetical key order (nlohmann default), schemas published under
// schemas/.

nlohmann::json to_json(const FileReport& r);
nlohmann::json to_json(const std::vector<Finding>& findings);
nlohmann::json to_json(const RewritePolicy& p);
nlohmann::json to_json(const RewritePlan& p);
nlohmann::json to_json(const RewriteReport& r);
nlohmann::json to_json(const EqualityReport& r);
nlohmann::json to_json(const BenchReport& r);
nlohmann::json to_json(const BenchDelta& d);

/// Inverses for the two types that travel back into the tool
/// (`rewrite --plan`, config-file policies). Throw std::invalid_argument
/// on malformed input.
RewritePolicy policy_from_json(const nlohmann::json& j);
RewritePlan plan_from_json(const nlohmann::json& j);

}  // namespace pqforge
