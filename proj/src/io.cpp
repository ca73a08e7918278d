#include "graphcalc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace graphcalc {

namespace {

double number_field(const Json& obj, const char* key, double fallback) {
  const auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number()) {
    throw InputError(std::string("field '") + key + "' must be a number");
  }
  return it->get<double>();
}

std::string string_field(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw InputError(std::string("field '") + key + "' must be a string");
  }
  return it->get<std::string>();
}

const Json& array_field(const Json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || !it->is_array()) {
    throw InputError(std::string("graph needs an array '") + key + "'");
  }
  return *it;
}

void write_string(std::string& out, const std::string& s) {
  out += Json(s).dump();
}

void write(std::string& out, const Json& j, int indent, int depth) {
  const auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write_string(out, k);
        out += indent < 0 ? ":" : ": ";
        write(out, v, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        write(out, v, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

WeightedGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("graph JSON must be an object");
  std::vector<VertexSpec> vs;
  for (const auto& v : array_field(j, "vertices")) {
    if (!v.is_object()) throw InputError("each vertex must be an object");
    VertexSpec s;
    s.id = string_field(v, "id");
    s.measure = number_field(v, "measure", 1.0);
    if (const auto it = v.find("boundary"); it != v.end()) {
      if (!it->is_boolean()) throw InputError("field 'boundary' must be a bool");
      s.boundary = it->get<bool>();
    }
    vs.push_back(std::move(s));
  }
  std::vector<EdgeSpec> es;
  for (const auto& e : array_field(j, "edges")) {
    if (!e.is_object()) throw InputError("each edge must be an object");
    es.push_back({string_field(e, "u"), string_field(e, "v"),
                  number_field(e, "a", 1.0), number_field(e, "length", 1.0)});
  }
  return WeightedGraph::build(std::move(vs), es);
}

Json graph_to_json(const WeightedGraph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertex_specs()) {
    vertices.push_back({{"id", v.id}, {"measure", v.measure},
                        {"boundary", v.boundary}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edge_specs()) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"a", e.a}, {"length", e.length}});
  }
  return {{"vertices", vertices}, {"edges", edges}};
}

VertexValues function_from_json(const WeightedGraph& g, const Json& j) {
  const auto it = j.find("values");
  if (!j.is_object() || it == j.end() || !it->is_object()) {
    throw InputError("function JSON needs an object 'values'");
  }
  VertexValues f(g.vertex_count(), 0.0);
  std::vector<char> seen(g.vertex_count(), 0);
  for (const auto& [id, value] : it->items()) {
    const int v = g.index(id);
    if (!value.is_number()) throw InputError("value of '" + id + "' must be a number");
    f[v] = value.get<double>();
    seen[v] = 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) throw InputError("function has no value at '" + g.id(v) + "'");
  }
  return f;
}

Json function_to_json(const WeightedGraph& g, std::span<const double> f) {
  Json values = Json::object();
  for (int v = 0; v < g.vertex_count(); ++v) values[g.id(v)] = f[v];
  return {{"values", values}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j, int indent) {
  std::string out;
  write(out, j, indent, 0);
  return out;
}

Json number_or_null(double x) {
  return std::isfinite(x) ? Json(x) : Json(nullptr);
}

}  // namespace graphcalc
