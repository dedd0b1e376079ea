// Copyright 2026 The Complearn Authors
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

#ifndef COMPLEARN_IO_HPP_
#define COMPLEARN_IO_HPP_

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "complearn/nnet.hpp"
#include "complearn/vec.hpp"

namespace complearn {

// Shortest decimal representation that round-trips the double exactly.
inline std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

struct NetworkFile {
  Network network;
  std::string activation;
};

// Schema: {"width_in": n,
//          "layers": [{"n_out": m, "connections": [[j, i], ...]}, ...],
//          "activation": "sigmoid"}
// Connection pairs are 1-indexed (output, input).
inline NetworkFile parse_network_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("network JSON: ") + err.what());
  }
  if (!doc.is_object() || !doc.contains("width_in") || !doc.contains("layers") ||
      !doc.contains("activation")) {
    throw std::invalid_argument(
        "network JSON: requires width_in, layers, activation");
  }
  std::size_t width = doc.at("width_in").get<std::size_t>();
  std::vector<Layer> layers;
  std::size_t cursor = width;
  for (const auto& layer_doc : doc.at("layers")) {
    std::size_t n_out = layer_doc.at("n_out").get<std::size_t>();
    std::vector<std::pair<std::size_t, std::size_t>> conns;
    for (const auto& pair : layer_doc.at("connections")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw std::invalid_argument(
            "network JSON: connections must be [j, i] pairs");
      }
      conns.push_back({pair[0].get<std::size_t>(), pair[1].get<std::size_t>()});
    }
    layers.emplace_back(cursor, n_out, std::move(conns));
    cursor = n_out;
  }
  std::string act = doc.at("activation").get<std::string>();
  builtin_activation(act);  // validate the name early
  return NetworkFile{Network(width, std::move(layers)), act};
}

inline std::string serialize_network_json(const NetworkFile& file) {
  nlohmann::ordered_json doc;
  doc["width_in"] = file.network.width_in;
  doc["layers"] = nlohmann::ordered_json::array();
  for (const Layer& layer : file.network.layers) {
    nlohmann::ordered_json layer_doc;
    layer_doc["n_out"] = layer.n_out;
    layer_doc["connections"] = nlohmann::ordered_json::array();
    for (const auto& [j, i] : layer.connections) {
      layer_doc["connections"].push_back({j, i});
    }
    doc["layers"].push_back(std::move(layer_doc));
  }
  doc["activation"] = file.activation;
  return doc.dump();
}

// Training rows (a, b) with uniform dimensions.
struct Dataset {
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  std::vector<std::pair<Vec, Vec>> rows;
};

// CSV, no header: the first in_dim columns are a, the next out_dim are b.
inline Dataset parse_dataset_csv(const std::string& text, std::size_t in_dim,
                                 std::size_t out_dim) {
  Dataset data;
  data.in_dim = in_dim;
  data.out_dim = out_dim;
  std::istringstream lines(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> values;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t consumed = 0;
        values.push_back(std::stod(cell, &consumed));
        if (consumed != cell.size()) throw std::invalid_argument(cell);
      } catch (const std::exception&) {
        throw std::invalid_argument("dataset CSV line " +
                                    std::to_string(line_no) +
                                    ": cannot parse \"" + cell + "\"");
      }
    }
    if (values.size() != in_dim + out_dim) {
      throw DimensionError("dataset CSV line " + std::to_string(line_no),
                           in_dim + out_dim, values.size());
    }
    Vec row(std::move(values));
    data.rows.push_back({slice(row, 0, in_dim), slice(row, in_dim, row.dim())});
  }
  return data;
}

inline std::string serialize_dataset_csv(const Dataset& data) {
  std::string out;
  for (const auto& [a, b] : data.rows) {
    Vec row = concat(a, b);
    for (std::size_t i = 0; i < row.dim(); ++i) {
      if (i > 0) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

inline std::string serialize_params_json(const Vec& params) {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["params"] = params.data();
  return doc.dump();
}

inline Vec parse_params_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("params JSON: ") + err.what());
  }
  if (!doc.contains("params") || !doc.at("params").is_array()) {
    throw std::invalid_argument("params JSON: requires a params array");
  }
  return Vec(doc.at("params").get<std::vector<double>>());
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

// Comma-separated scalars from the command line, e.g. "0.5,0.25".
inline Vec parse_vec_arg(const std::string& text) {
  if (text.empty()) return Vec{};
  std::vector<double> values;
  std::istringstream cells(text);
  std::string cell;
  while (std::getline(cells, cell, ',')) {
    try {
      values.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse \"" + cell + "\" as a number");
    }
  }
  return Vec(std::move(values));
}

}  // namespace complearn

#endif  // COMPLEARN_IO_HPP_
