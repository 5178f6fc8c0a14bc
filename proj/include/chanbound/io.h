// Copyright 2026 The chanbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHANBOUND_IO_H
#define CHANBOUND_IO_H

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "chanbound/bounds.h"
#include "chanbound/channel.h"
#include "chanbound/metrics.h"
#include "chanbound/rb.h"

namespace chanbound::io {

/// {"dim": d, "basis": "pauli"|"gell-mann", "liouville": [[...], ...]}
nlohmann::json channel_to_json(const Channel &ch);

/// Accepts the Liouville form above or {"kraus": [matrix, ...]} where each
/// matrix is a list of rows and each entry is a number or [re, im].
/// Validates CPTP at `tol`.
Channel channel_from_json(const nlohmann::json &j, double tol = kCptpTol);

Channel read_channel(const std::string &path, double tol = kCptpTol);
void write_channel(const std::string &path, const Channel &ch);

nlohmann::json metrics_to_json(const ChannelMetrics &m);
nlohmann::json bound_to_json(const BoundInterval &b);
nlohmann::json fit_to_json(const rb::DecayFit &fit);

/// Shortest decimal that parses back to the same double, so CSV goldens
/// reproduce the values exactly.
std::string format_double(double x);

/// CSV with header m,p_surv,std_error.
void write_survival_csv(std::ostream &os, const std::vector<rb::SurvivalPoint> &points);
std::vector<rb::SurvivalPoint> read_survival_csv(std::istream &is);

}  // namespace chanbound::io

#endif  // CHANBOUND_IO_H
