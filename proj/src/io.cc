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

#include "chanbound/io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chanbound::io {

using nlohmann::json;

json channel_to_json(const Channel &ch) {
  json rows = json::array();
  const RMatrix &l = ch.liouville();
  for (Eigen::Index i = 0; i < l.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < l.cols(); ++k) row.push_back(l(i, k));
    rows.push_back(std::move(row));
  }
  return json{{"dim", ch.dim()}, {"basis", to_string(ch.basis().kind())}, {"liouville", std::move(rows)}};
}

namespace {

cplx parse_entry(const json &e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  throw std::invalid_argument("matrix entries must be numbers or [re, im] pairs");
}

CMatrix parse_matrix(const json &m) {
  if (!m.is_array() || m.empty()) throw std::invalid_argument("matrix must be a nonempty list of rows");
  const size_t rows = m.size();
  const size_t cols = m[0].size();
  CMatrix out(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    if (!m[i].is_array() || m[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (size_t k = 0; k < cols; ++k) out(i, k) = parse_entry(m[i][k]);
  }
  return out;
}

}  // namespace

Channel channel_from_json(const json &j, double tol) {
  if (j.contains("kraus")) {
    std::vector<CMatrix> kraus;
    for (const json &m : j.at("kraus")) kraus.push_back(parse_matrix(m));
    if (kraus.empty()) throw std::invalid_argument("empty Kraus list");
    const int d = static_cast<int>(kraus.front().rows());
    const OperatorBasis basis =
        j.contains("basis") ? make_basis(d, basis_kind_from_string(j.at("basis").get<std::string>()))
                            : default_basis(d);
    return from_kraus(kraus, basis, tol);
  }
  if (!j.contains("liouville")) throw std::invalid_argument("channel JSON needs \"liouville\" or \"kraus\"");
  const int d = j.at("dim").get<int>();
  const OperatorBasis basis = j.contains("basis")
                                  ? make_basis(d, basis_kind_from_string(j.at("basis").get<std::string>()))
                                  : default_basis(d);
  const json &rows = j.at("liouville");
  const int n = d * d;
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) throw std::invalid_argument("liouville must be d²×d²");
  RMatrix l(n, n);
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("liouville must be d²×d²");
    }
    for (int k = 0; k < n; ++k) l(i, k) = rows[i][k].get<double>();
  }
  return Channel::from_liouville(basis, std::move(l), tol);
}

Channel read_channel(const std::string &path, double tol) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error &e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return channel_from_json(j, tol);
}

void write_channel(const std::string &path, const Channel &ch) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << channel_to_json(ch).dump(2) << "\n";
}

json metrics_to_json(const ChannelMetrics &m) {
  return json{{"fidelity", m.fidelity},   {"infidelity", m.infidelity}, {"decay_rate", m.decay_rate},
              {"chi00", m.chi00},         {"unitarity", m.unitarity},   {"coherence_angle", m.coherence_angle}};
}

json bound_to_json(const BoundInterval &b) {
  return json{{"kind", to_string(b.kind)}, {"lower", b.lower},         {"upper", b.upper},
              {"source", b.source},        {"assumptions", b.assumptions}};
}

json fit_to_json(const rb::DecayFit &fit) {
  return json{{"A", fit.A},
              {"B", fit.B},
              {"p", fit.p},
              {"residual", fit.residual},
              {"p_std_error", fit.p_std_error},
              {"identifiable", fit.identifiable}};
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

void write_survival_csv(std::ostream &os, const std::vector<rb::SurvivalPoint> &points) {
  os << "m,p_surv,std_error\n";
  for (const auto &pt : points) {
    os << pt.m << "," << format_double(pt.p_surv) << "," << format_double(pt.std_error) << "\n";
  }
}

std::vector<rb::SurvivalPoint> read_survival_csv(std::istream &is) {
  std::vector<rb::SurvivalPoint> out;
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty CSV");
  if (line.rfind("m,p_surv", 0) != 0) throw std::invalid_argument("CSV header must start with m,p_surv");
  int lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string a, b, c;
    std::getline(ss, a, ',');
    std::getline(ss, b, ',');
    std::getline(ss, c, ',');
    try {
      rb::SurvivalPoint pt;
      pt.m = std::stoi(a);
      pt.p_surv = std::stod(b);
      pt.std_error = c.empty() ? 0.0 : std::stod(c);
      out.push_back(pt);
    } catch (const std::exception &) {
      throw std::invalid_argument("malformed CSV line " + std::to_string(lineno));
    }
  }
  return out;
}

}  // namespace chanbound::io
