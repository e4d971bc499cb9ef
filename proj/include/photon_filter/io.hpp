// Copyright 2026 The photon_filter Authors
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

#pragma once

// File formats: density matrices as JSON (nested [re, im] pairs plus
// mode_dims), tables as CSV or JSON. Numbers are written with the shortest
// round-trip representation and no locale, so equal values produce equal
// bytes on every platform.

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "photon_filter/error.hpp"
#include "photon_filter/fock.hpp"

namespace photon_filter::io {

using json = nlohmann::json;

inline std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

inline json density_to_json(const DensityMatrix& rho) {
  json entries = json::array();
  const Matrix& m = rho.entries();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    entries.push_back(std::move(row));
  }
  return json{{"mode_dims", rho.mode_dims()}, {"entries", std::move(entries)}};
}

inline DensityMatrix density_from_json(const json& doc) {
  try {
    const auto dims = doc.at("mode_dims").get<std::vector<std::size_t>>();
    const auto& entries = doc.at("entries");
    const auto n = static_cast<Eigen::Index>(entries.size());
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = entries.at(static_cast<std::size_t>(i));
      if (static_cast<Eigen::Index>(row.size()) != n) {
        throw Error(ErrorCode::kDimensionMismatch, "density matrix rows differ in length");
      }
      for (Eigen::Index j = 0; j < n; ++j) {
        const auto& z = row.at(static_cast<std::size_t>(j));
        m(i, j) = Complex{z.at(0).get<double>(), z.at(1).get<double>()};
      }
    }
    return DensityMatrix(std::move(m), dims);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kConfig, std::string("malformed density matrix: ") + e.what());
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json read_json(const std::filesystem::path& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kConfig, path.string() + ": " + e.what());
  }
}

/// Writes to a sibling temporary file, then renames over the target.
inline void atomic_write(const std::filesystem::path& path, const std::string& content) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out << content;
    if (!out) throw Error(ErrorCode::kIo, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot rename onto " + path.string() + ": " + ec.message());
}

inline void write_density(const std::filesystem::path& path, const DensityMatrix& rho) {
  atomic_write(path, density_to_json(rho).dump() + "\n");
}

inline DensityMatrix read_density(const std::filesystem::path& path) {
  return density_from_json(read_json(path));
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::string to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c) out += ',';
      out += columns[c];
    }
    out += '\n';
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += ',';
        out += format_number(row[c]);
      }
      out += '\n';
    }
    return out;
  }

  json to_json() const {
    json out = json::array();
    for (const auto& row : rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (std::isfinite(row[c])) obj[columns[c]] = row[c];
        else obj[columns[c]] = nullptr;
      }
      out.push_back(std::move(obj));
    }
    return out;
  }
};

}  // namespace photon_filter::io
