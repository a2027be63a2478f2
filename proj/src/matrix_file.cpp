#include "jcone/matrix_file.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace jcone {

using nlohmann::json;

Field field_of(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return std::decay_t<decltype(x)>::kField; }, m);
}

Index dimension_of(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return x.rows(); }, m);
}

AnyMatrix promote_to(const AnyMatrix& m, Field f) {
  if (f < field_of(m)) throw Error(ErrorKind::kInvalidArgument, "cannot narrow a matrix field");
  return std::visit(
      [f](const auto& x) -> AnyMatrix {
        switch (f) {
          case Field::kReal: return x;
          case Field::kComplex:
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, MatrixH>) return x;
            else return promote_matrix<Complex>(x);
          case Field::kQuaternion: return promote_matrix<Quaternion>(x);
        }
        return x;
      },
      m);
}

template <Scalar T>
json encode_scalar(const T& x) {
  if constexpr (std::is_same_v<T, double>) {
    return x;
  } else {
    json arr = json::array();
    for (double c : components(x)) arr.push_back(c);
    return arr;
  }
}

template <Scalar T>
T decode_scalar(const json& j) {
  constexpr int kDim = ScalarTraits<T>::kRealDim;
  std::array<double, kDim> c{};
  if constexpr (kDim == 1) {
    if (!j.is_number()) throw Error(ErrorKind::kParse, "R entries must be numbers");
    c[0] = j.get<double>();
  } else {
    if (!j.is_array() || j.size() != kDim) {
      throw Error(ErrorKind::kParse, std::string(field_name(ScalarTraits<T>::kField)) +
                                         " entries must be arrays of " + std::to_string(kDim) +
                                         " numbers");
    }
    for (int k = 0; k < kDim; ++k) {
      if (!j[k].is_number()) throw Error(ErrorKind::kParse, "scalar components must be numbers");
      c[k] = j[k].get<double>();
    }
  }
  return from_components<T>(c);
}

template <Scalar T>
json encode_matrix(const Matrix<T>& m) {
  json data = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(encode_scalar(m(i, j)));
    data.push_back(std::move(row));
  }
  return json{{"field", std::string(field_name(ScalarTraits<T>::kField))},
              {"rows", m.rows()},
              {"cols", m.cols()},
              {"data", std::move(data)}};
}

json encode_matrix(const AnyMatrix& m) {
  return std::visit([](const auto& x) { return encode_matrix(x); }, m);
}

namespace {

template <Scalar T>
Matrix<T> decode_entries(const json& data, Index rows, Index cols) {
  Matrix<T> m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = data[i];
    if (!row.is_array() || row.size() != cols) {
      throw Error(ErrorKind::kParse, "data row " + std::to_string(i) + " must have " +
                                         std::to_string(cols) + " entries");
    }
    for (Index j = 0; j < cols; ++j) m(i, j) = decode_scalar<T>(row[j]);
  }
  return m;
}

Index read_extent(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned() || j[key].get<Index>() == 0) {
    throw Error(ErrorKind::kParse, std::string("'") + key + "' must be a positive integer");
  }
  return j[key].get<Index>();
}

void dump_number(std::string& out, double v) {
  if (!std::isfinite(v)) throw Error(ErrorKind::kInvalidArgument, "non-finite number in output");
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

void dump(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ", ";
        first = false;
        out += json(key).dump();
        out += ": ";
        dump(value, out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ", ";
        dump(j[k], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: dump_number(out, j.get<double>()); break;
    default: out += j.dump(); break;
  }
}

}  // namespace

AnyMatrix decode_matrix(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::kParse, "matrix payload must be a JSON object");
  if (!j.contains("field") || !j["field"].is_string()) {
    throw Error(ErrorKind::kParse, "'field' must be one of \"R\", \"C\", \"H\"");
  }
  const Field f = parse_field(j["field"].get<std::string>());
  const Index rows = read_extent(j, "rows");
  const Index cols = read_extent(j, "cols");
  if (rows != cols) throw Error(ErrorKind::kParse, "matrix must be square (rows = cols)");
  if (!j.contains("data") || !j["data"].is_array() || j["data"].size() != rows) {
    throw Error(ErrorKind::kParse, "'data' must hold " + std::to_string(rows) + " rows");
  }
  switch (f) {
    case Field::kReal: return decode_entries<double>(j["data"], rows, cols);
    case Field::kComplex: return decode_entries<Complex>(j["data"], rows, cols);
    case Field::kQuaternion: return decode_entries<Quaternion>(j["data"], rows, cols);
  }
  throw Error(ErrorKind::kParse, "unknown field");
}

std::string canonical_dump(const json& j) {
  std::string out;
  dump(j, out);
  return out;
}

std::string serialize_matrix(const AnyMatrix& m) { return canonical_dump(encode_matrix(m)); }

AnyMatrix parse_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
  return decode_matrix(j);
}

AnyMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_matrix(ss.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.detail());
  }
}

#define JCONE_INSTANTIATE(T)                     \
  template json encode_scalar(const T&);         \
  template T decode_scalar(const json&);         \
  template json encode_matrix(const Matrix<T>&);

JCONE_INSTANTIATE(double)
JCONE_INSTANTIATE(Complex)
JCONE_INSTANTIATE(Quaternion)
#undef JCONE_INSTANTIATE

}  // namespace jcone
