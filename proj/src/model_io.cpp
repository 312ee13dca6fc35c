/*
 * Copyright 2026 The Albertine Authors
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

#include "albertine/model_io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

namespace albertine {

using nlohmann::json;

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

int positive_int(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1 || v.get<std::int64_t>() > 1000) {
    throw InputError(where + ": \"" + key + "\" must be a positive integer");
  }
  return v.get<int>();
}

Int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer, got " + v.dump());
  if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
  return Int(v.get<std::int64_t>());
}

AlbertType parse_type(const json& v, const std::string& where) {
  if (v == "I") return AlbertType::I;
  if (v == "II") return AlbertType::II;
  if (v == "III") return AlbertType::III;
  if (v == "IV") return AlbertType::IV;
  throw InputError(where + ": unknown Albert type " + v.dump());
}

template <class T, class F>
Matrix<T> parse_grid(const json& rows, const std::string& where, F&& entry) {
  if (!rows.is_array() || rows.empty() || !rows.front().is_array()) {
    throw InputError(where + ": block must be a nonempty array of rows");
  }
  const std::size_t r = rows.size();
  const std::size_t c = rows.front().size();
  Matrix<T> out(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) throw InputError(where + ": ragged block");
    for (std::size_t j = 0; j < c; ++j) out(i, j) = entry(rows[i][j]);
  }
  return out;
}

Block parse_block(const json& rows, const std::string& where) {
  const json* first = nullptr;
  if (rows.is_array() && !rows.empty() && rows.front().is_array() && !rows.front().empty()) {
    first = &rows.front().front();
  }
  if (first == nullptr) throw InputError(where + ": block must be a nonempty array of rows");
  if (first->is_number()) {
    return parse_grid<Int>(rows, where, [&](const json& v) { return integer(v, where); });
  }
  if (first->is_array() && first->size() == 2) {
    return parse_grid<GaussInt>(rows, where, [&](const json& v) {
      if (!v.is_array() || v.size() != 2) throw InputError(where + ": complex entries are [re, im]");
      return GaussInt(integer(v[0], where), integer(v[1], where));
    });
  }
  if (first->is_array() && first->size() == 4) {
    return parse_grid<QuatInt>(rows, where, [&](const json& v) {
      if (!v.is_array() || v.size() != 4) throw InputError(where + ": quaternion entries are [a, b, c, d]");
      return QuatInt(integer(v[0], where), integer(v[1], where), integer(v[2], where), integer(v[3], where));
    });
  }
  throw InputError(where + ": cannot tell the block kind from entry " + first->dump());
}

json block_to_json(const Block& b) {
  json rows = json::array();
  std::visit(
      [&](const auto& m) {
        using T = typename std::decay_t<decltype(m)>::value_type;
        for (std::size_t i = 0; i < m.rows(); ++i) {
          json row = json::array();
          for (std::size_t j = 0; j < m.cols(); ++j) {
            const T& x = m(i, j);
            if constexpr (std::is_same_v<T, Int>) {
              row.push_back(int_to_json(x));
            } else if constexpr (std::is_same_v<T, GaussInt>) {
              row.push_back({int_to_json(x.re), int_to_json(x.im)});
            } else {
              row.push_back({int_to_json(x.a), int_to_json(x.b), int_to_json(x.c), int_to_json(x.d)});
            }
          }
          rows.push_back(std::move(row));
        }
      },
      b);
  return rows;
}

void dump_value(std::string& out, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  switch (v.type()) {
    case json::value_t::number_float: {
      const double x = v.get<double>();
      out += std::isfinite(x) ? fmt17(x) : "null";
      return;
    }
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, value] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + json(key).dump() + ": ";
        dump_value(out, value, indent + 2);
      }
      out += "\n" + close + "}";
      return;
    }
    case json::value_t::array: {
      bool flat = true;
      for (const auto& x : v) flat = flat && !x.is_object() && !(x.is_array() && !x.empty() && x.front().is_structured());
      if (flat) {
        // scalars and arrays of scalars stay on one line
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += ", ";
          dump_value(out, v[i], indent);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        dump_value(out, v[i], indent + 2);
      }
      out += "\n" + close + "]";
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

ModelFile parse_model(const json& doc) {
  if (!doc.is_object()) throw InputError("model file must be a JSON object");
  ModelFile out;
  const json& ch = field(doc, "characteristic", "model");
  Characteristic characteristic;
  if (ch == "zero") {
    characteristic = Characteristic::Zero;
  } else if (ch == "positive") {
    characteristic = Characteristic::Positive;
  } else {
    throw InputError("characteristic must be \"zero\" or \"positive\", got " + ch.dump());
  }

  const json& factors = field(doc, "factors", "model");
  if (!factors.is_array() || factors.empty()) throw InputError("\"factors\" must be a nonempty array");
  for (std::size_t j = 0; j < factors.size(); ++j) {
    const std::string where = "factor " + std::to_string(j);
    const json& f = factors[j];
    SimpleFactor sf;
    sf.type = parse_type(field(f, "type", where), where);
    sf.dim_a = positive_int(f, "dim_A", where);
    sf.n = positive_int(f, "n", where);
    sf.e0 = positive_int(f, "e0", where);
    sf.d = positive_int(f, "d", where);
    sf.characteristic = characteristic;
    out.model.factors.push_back(sf);
  }
  if (out.model.dimension() > 12) throw InputError("models are limited to g <= 12");

  if (!doc.contains("endomorphism")) return out;
  const json& endo = doc.at("endomorphism");
  if (!endo.is_array() || endo.size() != factors.size()) {
    throw InputError("\"endomorphism\" needs one block list per factor");
  }
  for (std::size_t j = 0; j < endo.size(); ++j) {
    if (!endo[j].is_array() || endo[j].empty()) {
      throw InputError("endomorphism of factor " + std::to_string(j) + " must be a nonempty list of blocks");
    }
    std::vector<Block> blocks;
    for (std::size_t b = 0; b < endo[j].size(); ++b) {
      blocks.push_back(parse_block(endo[j][b], "factor " + std::to_string(j) + " block " + std::to_string(b)));
    }
    out.alpha.factors.push_back(std::move(blocks));
  }
  if (validate(out.model).empty()) {
    try {
      check_shape(out.model, out.alpha);
    } catch (const ShapeError& e) {
      throw InputError(e.what());
    }
  }
  return out;
}

ModelFile load_model(const std::filesystem::path& path) {
  ModelFile m = parse_model(load_json(path));
  m.alpha.label = path.filename().string();
  return m;
}

json model_to_json(const VarietyModel& model, const Endomorphism& alpha) {
  json doc;
  doc["characteristic"] =
      model.factors.empty() ? "zero" : to_string(model.factors.front().characteristic);
  doc["factors"] = json::array();
  for (const auto& f : model.factors) {
    doc["factors"].push_back({{"type", to_string(f.type)}, {"dim_A", f.dim_a}, {"n", f.n}, {"e0", f.e0}, {"d", f.d}});
  }
  if (!alpha.factors.empty()) {
    json endo = json::array();
    for (const auto& blocks : alpha.factors) {
      json list = json::array();
      for (const auto& b : blocks) list.push_back(block_to_json(b));
      endo.push_back(std::move(list));
    }
    doc["endomorphism"] = std::move(endo);
  }
  return doc;
}

MatC parse_matrix(const json& doc) {
  const MatC m = parse_grid<Complex>(doc, "matrix", [](const json& v) {
    if (v.is_number()) return Complex(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
      return Complex(v[0].get<double>(), v[1].get<double>());
    }
    throw InputError("matrix entries are numbers or [re, im], got " + v.dump());
  });
  if (!m.square()) throw InputError("matrix must be square, got " + m.shape());
  return m;
}

MatC load_matrix(const std::filesystem::path& path) { return parse_matrix(load_json(path)); }

json int_to_json(const Int& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

std::string dump_json(const json& doc) {
  std::string out;
  dump_value(out, doc, 0);
  out += "\n";
  return out;
}

void write_trace_csv(std::ostream& out, const ConvergenceTrace& trace) {
  out << "m,value,target\n";
  for (const auto& p : trace.points) out << p.m << ',' << fmt17(p.value) << ',' << fmt17(trace.target) << '\n';
}

}  // namespace albertine
