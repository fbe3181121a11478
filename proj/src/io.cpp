#include "incoh/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace incoh {
namespace {

using nlohmann::json;

json matrix_to_obj(const Eigen::MatrixXcd& m) {
  json re = json::array();
  json im = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json re_row = json::array();
    json im_row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

Eigen::MatrixXcd matrix_from_obj(const json& obj) {
  if (!obj.is_object()) throw io_error("matrix: expected a JSON object");
  if (!obj.contains("rows") || !obj.contains("cols") || !obj.contains("re"))
    throw io_error("matrix: missing required field (rows, cols, re)");
  if (!obj["rows"].is_number_integer() || !obj["cols"].is_number_integer())
    throw io_error("matrix: rows and cols must be integers");
  const Eigen::Index rows = obj["rows"].get<Eigen::Index>();
  const Eigen::Index cols = obj["cols"].get<Eigen::Index>();
  if (rows <= 0 || cols <= 0) throw io_error("matrix: rows and cols must be positive");

  const auto read_part = [&](const char* key, bool required) {
    Eigen::MatrixXd part = Eigen::MatrixXd::Zero(rows, cols);
    if (!obj.contains(key)) {
      if (required) throw io_error(std::string("matrix: missing field ") + key);
      return part;
    }
    const json& grid = obj[key];
    if (!grid.is_array() || static_cast<Eigen::Index>(grid.size()) != rows)
      throw io_error(std::string("matrix: field ") + key + " must be an array of " +
                     std::to_string(rows) + " rows");
    for (Eigen::Index i = 0; i < rows; ++i) {
      const json& row = grid[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
        throw io_error(std::string("matrix: row ") + std::to_string(i) + " of " + key +
                       " must have " + std::to_string(cols) + " entries");
      for (Eigen::Index j = 0; j < cols; ++j) {
        const json& cell = row[static_cast<std::size_t>(j)];
        if (!cell.is_number()) throw io_error(std::string("matrix: non-numeric entry in ") + key);
        part(i, j) = cell.get<double>();
      }
    }
    return part;
  };

  const Eigen::MatrixXd re = read_part("re", true);
  const Eigen::MatrixXd im = read_part("im", false);
  return re.cast<cxd>() + cxd(0.0, 1.0) * im.cast<cxd>();
}

json parse(const std::string& text) {
  json obj = json::parse(text, nullptr, false);
  if (obj.is_discarded()) throw io_error("invalid JSON");
  return obj;
}

Dims dims_from_obj(const json& obj, Eigen::Index total) {
  Dims dims;
  if (obj.contains("dims")) {
    const json& arr = obj["dims"];
    if (!arr.is_array() || arr.empty()) throw io_error("state: dims must be a non-empty array");
    for (const json& d : arr) {
      if (!d.is_number_integer() || d.get<Eigen::Index>() < 2)
        throw io_error("state: dims entries must be integers >= 2");
      dims.push_back(d.get<Eigen::Index>());
    }
    if (total_dim(dims) != total) throw io_error("state: dims do not match the matrix size");
  } else {
    dims = {total};
  }
  return dims;
}

}  // namespace

std::string matrix_to_json(const Eigen::MatrixXcd& m) { return matrix_to_obj(m).dump(2); }

Eigen::MatrixXcd matrix_from_json(const std::string& text) { return matrix_from_obj(parse(text)); }

std::string state_to_json(const DensityMatrix& state) {
  json obj = matrix_to_obj(state.rho);
  obj["dims"] = state.dims;
  return obj.dump(2);
}

DensityMatrix state_from_json(const std::string& text, double tol) {
  const json obj = parse(text);
  const Eigen::MatrixXcd rho = matrix_from_obj(obj);
  if (rho.rows() != rho.cols()) throw io_error("state: matrix must be square");
  return make_density(rho, dims_from_obj(obj, rho.rows()), tol);
}

std::string povm_to_json(const Povm& m) {
  json arr = json::array();
  for (const Eigen::MatrixXcd& e : m.elements) arr.push_back(matrix_to_obj(e));
  return json{{"elements", std::move(arr)}}.dump(2);
}

Povm povm_from_json(const std::string& text, double tol) {
  const json obj = parse(text);
  if (!obj.is_object() || !obj.contains("elements") || !obj["elements"].is_array())
    throw io_error("povm: expected {\"elements\": [matrix, ...]}");
  std::vector<Eigen::MatrixXcd> elements;
  for (const json& e : obj["elements"]) elements.push_back(matrix_from_obj(e));
  if (elements.empty()) throw io_error("povm: elements must be non-empty");
  return make_povm(std::move(elements), tol);
}

std::string channel_to_json(const KrausChannel& ch) {
  json arr = json::array();
  for (const Eigen::MatrixXcd& k : ch.kraus) arr.push_back(matrix_to_obj(k));
  return json{{"dim_in", ch.dim_in}, {"dim_out", ch.dim_out}, {"kraus", std::move(arr)}}.dump(2);
}

KrausChannel channel_from_json(const std::string& text, double tol) {
  const json obj = parse(text);
  if (!obj.is_object() || !obj.contains("kraus") || !obj["kraus"].is_array())
    throw io_error("channel: expected {\"kraus\": [matrix, ...]}");
  std::vector<Eigen::MatrixXcd> kraus;
  for (const json& k : obj["kraus"]) kraus.push_back(matrix_from_obj(k));
  if (kraus.empty()) throw io_error("channel: kraus must be non-empty");
  try {
    return make_channel(std::move(kraus), tol);
  } catch (const std::invalid_argument& err) {
    throw io_error(std::string("channel: ") + err.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open file for writing: " + path);
  out << text;
}

DensityMatrix load_state(const std::string& spec, double tol) {
  const auto& catalog = named_state_catalog();
  if (std::find(catalog.begin(), catalog.end(), spec) != catalog.end()) return named_state(spec);
  return state_from_json(read_file(spec), tol);
}

Povm load_povm(const std::string& path, double tol) { return povm_from_json(read_file(path), tol); }

KrausChannel load_channel(const std::string& spec, double tol) {
  const auto& catalog = library_channel_catalog();
  if (std::find(catalog.begin(), catalog.end(), spec) != catalog.end())
    return library_channel(spec);
  return channel_from_json(read_file(spec), tol);
}

}  // namespace incoh
